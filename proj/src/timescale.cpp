#include "proccat/timescale.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace proccat {

std::string to_string(const Time& t) {
  if (t.denominator() == 1) return std::to_string(t.numerator());
  return std::to_string(t.numerator()) + "/" + std::to_string(t.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a rational time: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Time parse_time(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Time(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den <= 0)
    throw std::invalid_argument("nonpositive denominator in '" + std::string(text) + "'");
  return Time(num, den);
}

IndexMorphism compose(const IndexMorphism& g, const IndexMorphism& f) {
  if (f.t != g.t || f.t0 != g.t0prime)
    throw std::invalid_argument("index morphisms " + to_string(g) + " and " + to_string(f) +
                                " are not composable");
  return {g.t, g.t0, f.t0prime};
}

std::string to_string(const IndexPair& i) {
  return "(" + to_string(i.t) + "," + to_string(i.t0) + ")";
}

std::string to_string(const IndexMorphism& m) {
  return "(" + to_string(m.t) + "," + to_string(m.t0) + "," + to_string(m.t0prime) + ")";
}

// ---------------------------------------------------------------------------

TimeScale::TimeScale(std::vector<Time> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("time scale must have at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i]))
      throw std::invalid_argument("time scale points must be strictly ascending");
  }
  row_offset_.resize(points_.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    row_offset_[i] = offset;
    offset += points_.size() - i;
  }
}

TimeScale TimeScale::range(std::size_t n) {
  std::vector<Time> pts;
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(static_cast<std::int64_t>(i));
  return TimeScale(std::move(pts));
}

std::optional<std::size_t> TimeScale::position(const Time& t) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), t);
  if (it == points_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::size_t TimeScale::require_position(const Time& t) const {
  auto p = position(t);
  if (!p) throw std::out_of_range("time " + proccat::to_string(t) + " is not in scale " + to_string());
  return *p;
}

std::size_t TimeScale::index_id(std::size_t i, std::size_t j) const {
  if (i > j || j >= size()) throw std::out_of_range("invalid index positions");
  return row_offset_[i] + (j - i);
}

std::size_t TimeScale::index_id(const IndexPair& p) const {
  return index_id(require_position(p.t), require_position(p.t0));
}

std::pair<std::size_t, std::size_t> TimeScale::index_positions(std::size_t id) const {
  if (id >= index_count()) throw std::out_of_range("index id out of range");
  auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), id);
  auto i = static_cast<std::size_t>(it - row_offset_.begin()) - 1;
  return {i, i + (id - row_offset_[i])};
}

IndexPair TimeScale::index_pair(std::size_t id) const {
  auto [i, j] = index_positions(id);
  return {points_[i], points_[j]};
}

bool TimeScale::valid(const IndexPair& p) const {
  return contains(p.t) && contains(p.t0) && p.t <= p.t0;
}

bool TimeScale::valid(const IndexMorphism& m) const {
  return contains(m.t) && contains(m.t0) && contains(m.t0prime) && m.t <= m.t0 &&
         m.t0 <= m.t0prime;
}

std::string TimeScale::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ",";
    s += proccat::to_string(points_[i]);
  }
  return s + "}";
}

std::vector<IndexPair> index_objects(const TimeScale& scale) {
  std::vector<IndexPair> out;
  out.reserve(scale.index_count());
  for (std::size_t id = 0; id < scale.index_count(); ++id) out.push_back(scale.index_pair(id));
  return out;
}

std::optional<IndexMorphism> hom(const TimeScale& scale, const IndexPair& from,
                                 const IndexPair& to) {
  if (!scale.valid(from) || !scale.valid(to)) return std::nullopt;
  if (from.t != to.t || !(to.t0 <= from.t0)) return std::nullopt;
  return IndexMorphism{to.t, to.t0, from.t0};
}

// ---------------------------------------------------------------------------

std::string WBound::to_string() const {
  return is_infinite() ? std::string("inf") : proccat::to_string(*bound_);
}

bool w_leq(const WBound& a, const WBound& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value();
}

bool w_lt(const WBound& a, const WBound& b) { return w_leq(a, b) && !(a == b); }

WBound w_meet(const WBound& a, const WBound& b) { return w_leq(a, b) ? a : b; }

bool before_bound(const Time& t, const WBound& w) { return w_lt(WBound::bound(t), w); }

// ---------------------------------------------------------------------------

ScaleExpr ScaleExpr::finite(std::vector<Time> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return ScaleExpr(Kind::Finite, std::move(points), {});
}

ScaleExpr ScaleExpr::desc_above(Time base) {
  return ScaleExpr(Kind::DescendingChainAbove, {base}, {});
}

ScaleExpr ScaleExpr::asc_below(Time limit) {
  return ScaleExpr(Kind::AscendingChainBelow, {limit}, {});
}

ScaleExpr ScaleExpr::union_of(std::vector<ScaleExpr> members) {
  return ScaleExpr(Kind::Union, {}, std::move(members));
}

std::string ScaleExpr::to_string() const {
  switch (kind_) {
    case Kind::Finite: {
      std::string s = "finite(";
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += ",";
        s += proccat::to_string(points_[i]);
      }
      return s + ")";
    }
    case Kind::DescendingChainAbove:
      return "desc_above(" + proccat::to_string(anchor()) + ")";
    case Kind::AscendingChainBelow:
      return "asc_below(" + proccat::to_string(anchor()) + ")";
    case Kind::Union: {
      std::string s = "union(";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ",";
        s += members_[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

class ScaleParser {
 public:
  explicit ScaleParser(std::string_view text) : text_(text) {}

  ScaleExpr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scale expression: " + what + " at offset " +
                                std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Time time() {
    skip_ws();
    auto start = pos_;
    // Whitespace is allowed around the slash of a rational.
    std::string compact;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) compact += text_[pos_++];
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      compact += text_[pos_++];
    auto save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      compact += text_[pos_++];
      skip_ws();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        compact += text_[pos_++];
    } else {
      pos_ = save;
    }
    if (compact.empty() || compact == "-" || compact == "+") {
      pos_ = start;
      fail("expected a rational number");
    }
    if (compact.front() == '+') compact.erase(0, 1);
    try {
      return parse_time(compact);
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed rational '" + compact + "'");
    }
  }

  ScaleExpr expr() {
    auto name = ident();
    expect('(');
    if (name == "finite") {
      std::vector<Time> pts;
      if (!accept(')')) {
        do pts.push_back(time());
        while (accept(','));
        expect(')');
      }
      if (pts.empty()) fail("finite() needs at least one point");
      return ScaleExpr::finite(std::move(pts));
    }
    if (name == "desc_above") {
      auto t = time();
      expect(')');
      return ScaleExpr::desc_above(t);
    }
    if (name == "asc_below") {
      auto t = time();
      expect(')');
      return ScaleExpr::asc_below(t);
    }
    if (name == "union") {
      std::vector<ScaleExpr> members;
      if (!accept(')')) {
        do members.push_back(expr());
        while (accept(','));
        expect(')');
      }
      if (members.empty()) fail("union() needs at least one member");
      return ScaleExpr::union_of(std::move(members));
    }
    fail("unknown constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// d == 1/n for some integer n ≥ 1.
bool is_unit_fraction(const Time& d) { return d > 0 && d.numerator() == 1; }

constexpr std::int64_t kOverlapSearchLimit = 10'000'000;

// ∃ n, m ≥ 1 with 1/n − 1/m = d, for d > 0.
bool unit_fraction_difference(const Time& d) {
  // 1/n = d + 1/m > d, hence n < 1/d.
  for (std::int64_t n = 1; Time(n) * d < 1; ++n) {
    if (n > kOverlapSearchLimit)
      throw ScaleStructureError("chain overlap check exceeds search budget");
    if (is_unit_fraction(Time(1, n) - d)) return true;
  }
  return false;
}

// ∃ n, m ≥ 1 with 1/n + 1/m = d.
bool unit_fraction_sum(const Time& d) {
  if (d <= 0 || d > 2) return false;
  // Assume n ≤ m: d/2 ≤ 1/n < d, i.e. 1/d < n ≤ 2/d.
  for (std::int64_t n = 1; Time(n) * d <= 2; ++n) {
    if (n > kOverlapSearchLimit)
      throw ScaleStructureError("chain overlap check exceeds search budget");
    if (Time(n) * d <= 1) continue;
    if (is_unit_fraction(d - Time(1, n))) return true;
  }
  return false;
}

bool point_in(const Time& p, const ScaleExpr& leaf) {
  switch (leaf.kind()) {
    case ScaleExpr::Kind::Finite:
      return std::binary_search(leaf.points().begin(), leaf.points().end(), p);
    case ScaleExpr::Kind::DescendingChainAbove:
      return is_unit_fraction(p - leaf.anchor());
    case ScaleExpr::Kind::AscendingChainBelow:
      return is_unit_fraction(leaf.anchor() - p);
    case ScaleExpr::Kind::Union:
      break;
  }
  throw std::logic_error("point_in expects a leaf expression");
}

void flatten(const ScaleExpr& e, std::vector<const ScaleExpr*>& out) {
  if (e.kind() == ScaleExpr::Kind::Union) {
    for (const auto& m : e.members()) flatten(m, out);
  } else {
    out.push_back(&e);
  }
}

}  // namespace

ScaleExpr parse_scale_expr(std::string_view text) { return ScaleParser(text).parse(); }

bool leaves_overlap(const ScaleExpr& a, const ScaleExpr& b) {
  using K = ScaleExpr::Kind;
  if (a.kind() == K::Union || b.kind() == K::Union)
    throw std::invalid_argument("leaves_overlap expects leaf expressions");
  if (a.kind() == K::Finite) {
    return std::any_of(a.points().begin(), a.points().end(),
                       [&](const Time& p) { return point_in(p, b); });
  }
  if (b.kind() == K::Finite) return leaves_overlap(b, a);
  if (a.kind() == b.kind()) {
    // base1 + 1/n = base2 + 1/m, or limit1 − 1/n = limit2 − 1/m.
    if (a.anchor() == b.anchor()) return true;
    auto d = a.anchor() - b.anchor();
    if (d < 0) d = -d;
    return unit_fraction_difference(d);
  }
  // base + 1/n = limit − 1/m.
  const auto& desc = a.kind() == K::DescendingChainAbove ? a : b;
  const auto& asc = a.kind() == K::DescendingChainAbove ? b : a;
  return unit_fraction_sum(asc.anchor() - desc.anchor());
}

std::string ScaleVerdict::to_string() const {
  if (accepted) return "Accept";
  return "Reject(witness limit " + proccat::to_string(*witness_limit) + ")";
}

ScaleVerdict validate_scale(const ScaleExpr& expr) {
  std::vector<const ScaleExpr*> leaves;
  flatten(expr, leaves);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (leaves_overlap(*leaves[i], *leaves[j]))
        throw ScaleStructureError("union members " + leaves[i]->to_string() + " and " +
                                  leaves[j]->to_string() + " overlap");
    }
  }
  for (const auto* leaf : leaves) {
    if (leaf->kind() == ScaleExpr::Kind::AscendingChainBelow)
      return {false, leaf->anchor()};
  }
  return {true, std::nullopt};
}

TimeScale to_time_scale(const ScaleExpr& expr) {
  if (expr.kind() != ScaleExpr::Kind::Finite)
    throw std::invalid_argument("only finite(...) scales are executable, got " + expr.to_string());
  return TimeScale(expr.points());
}

}  // namespace proccat
