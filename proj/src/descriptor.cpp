#include "proccat/descriptor.hpp"

#include <cctype>
#include <string>

namespace proccat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TimeScale& scale, std::uint64_t cap)
      : text_(text), scale_(scale), cap_(cap) {}

  TObj parse() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DescriptorError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string word() {
    skip();
    auto start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string number() {
    skip();
    auto start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  Time time() {
    auto n = number();
    try {
      return parse_time(n);
    } catch (const std::exception&) {
      fail("bad time '" + n + "'");
    }
  }

  WBound bound() {
    expect("[");
    skip();
    WBound w = WBound::infinity();
    if (eat("min")) {
      w = WBound::bound(scale_.min());
    } else if (eat("max")) {
      w = WBound::bound(scale_.max());
    } else if (!eat("inf")) {
      auto t = time();
      if (!scale_.contains(t)) fail("bound " + to_string(t) + " is not a point of " + scale_.to_string());
      w = WBound::bound(t);
    }
    expect("]");
    return w;
  }

  TObj expr() {
    auto lhs = prefix();
    // Longest operator first.
    int kind = eat("|>''") ? 2 : eat("|>'") ? 1 : eat("|>") ? 0 : -1;
    if (kind < 0) return lhs;
    auto w = bound();
    auto rhs = expr();
    if (kind == 2) return triangle_obj(w, lhs, rhs);
    if (kind == 1) return triangle_prime_obj(w, lhs, rhs);
    return triangle_full_obj(w, lhs, rhs);
  }

  std::vector<TObj> args() {
    expect("(");
    std::vector<TObj> out{expr()};
    while (eat(",")) out.push_back(expr());
    expect(")");
    return out;
  }

  TObj prefix() {
    skip();
    if (eat("(")) {
      auto e = expr();
      expect(")");
      return e;
    }
    auto start = pos_;
    auto w = word();
    if (w == "box'") return box_prime(prefix());
    if (w == "box") return box(prefix());
    if (w == "dia'") return dia_prime(prefix());
    if (w == "dia") return dia(prefix());
    if (w == "unit") return TemporalObj::terminal(scale_);
    if (w == "empty") return TemporalObj::initial(scale_);
    if (w == "flag") {
      expect("(");
      auto n = number();
      expect(")");
      try {
        return TemporalObj::flag(scale_, std::stoul(n));
      } catch (const std::logic_error&) {
        fail("bad flag size '" + n + "'");
      }
    }
    if (w == "before") {
      expect("(");
      auto t = time();
      expect(")");
      return before(scale_, t);
    }
    if (w == "prod" || w == "sum") {
      auto parts = args();
      if (w == "prod") return parts.size() == 2 ? prod2(parts[0], parts[1]) : pointwise_product(parts);
      return parts.size() == 2 ? sum2(parts[0], parts[1]) : pointwise_coproduct(parts);
    }
    if (w == "exp") {
      auto parts = args();
      if (parts.size() != 2) fail("exp takes two arguments");
      return exponential_end(parts[1], parts[0], cap_);
    }
    pos_ = start;
    fail(w.empty() ? "expected an object" : "unknown name '" + w + "'");
  }

  std::string_view text_;
  const TimeScale& scale_;
  std::uint64_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

TObj parse_descriptor(std::string_view text, const TimeScale& scale, std::uint64_t cap) {
  return Parser(text, scale, cap).parse();
}

}  // namespace proccat
