#pragma once

#include <optional>
#include <string>

namespace proccat {

enum class Verdict { Pass, Fail, CapExceeded, Error };

std::string to_string(Verdict v);

/// Where and how two sides of an equation come apart.
struct Witness {
  std::string location;  // index pair or index morphism
  std::string element;   // the element both sides were applied to
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct LawReport {
  std::string suite;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::optional<double> millis;
  /// Free-form detail, e.g. the candidate count of a uniqueness check.
  std::string detail;

  bool passed() const { return verdict == Verdict::Pass; }
};

LawReport pass_report(std::string suite, std::string instance, std::string detail = {});
LawReport fail_report(std::string suite, std::string instance, Witness w);

}  // namespace proccat
