#pragma once

// Object descriptors for the command line:
//
//   expr   := prefix ( ("|>''" | "|>'" | "|>") "[" bound "]" expr )?
//   prefix := ("box'" | "box" | "dia'" | "dia") prefix | atom
//   atom   := unit | empty | flag(n) | before(t) | prod(expr, ...) | sum(expr, ...)
//           | exp(B, A) | "(" expr ")"
//   bound  := inf | integer | p/q
//
// The infix operators associate to the right. exp(B, A) is B^A.

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "proccat/process.hpp"

namespace proccat {

class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DescriptorError on syntax errors and on bounds outside the scale.
/// `cap` limits the end construction of exp.
TObj parse_descriptor(std::string_view text, const TimeScale& scale, std::uint64_t cap = 1000000);

}  // namespace proccat
