#pragma once

#include <stdexcept>
#include <string>

namespace cofree {

/// Raised when an operation receives input outside its structural contract
/// (alphabet mismatch, word too short, missing table entry, non-unital spec...).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Outcome of an axiom or identity check. On failure `witness` names the first
/// violating input and `lhs`/`rhs` hold both sides in canonical rendering.
struct CheckResult {
  bool passed = true;
  std::string witness;
  std::string lhs;
  std::string rhs;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string witness, std::string lhs = {}, std::string rhs = {}) {
    return {false, std::move(witness), std::move(lhs), std::move(rhs)};
  }

  explicit operator bool() const { return passed; }

  std::string describe() const {
    if (passed) return "pass";
    std::string out = "counterexample: " + witness;
    if (!lhs.empty() || !rhs.empty()) out += "\n  lhs: " + lhs + "\n  rhs: " + rhs;
    return out;
  }
};

}  // namespace cofree
