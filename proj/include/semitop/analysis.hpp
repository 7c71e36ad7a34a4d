#ifndef SEMITOP_ANALYSIS_HPP_
#define SEMITOP_ANALYSIS_HPP_

#include <array>
#include <optional>
#include <vector>

#include "semitop/core.hpp"

namespace semitop {

struct AssocResult {
  bool ok = true;
  Certainty certainty = Certainty::Window;
  // first violating triple (a, b, c) in lexicographic order
  std::optional<std::array<std::size_t, 3>> counterexample;
};

struct CancelResult {
  bool ok = true;
  Certainty certainty = Certainty::Window;
  // (a, b, x, y) with a*x*b = a*y*b and x != y
  std::optional<std::array<std::size_t, 4>> counterexample;
};

struct ShiftResult {
  enum class Status { VerifiedExhaustive, VerifiedOracle, WindowReport, Counterexample };
  Status status = Status::WindowReport;
  std::size_t max_fiber = 0;
  // for Counterexample: (a, b) whose fiber is infinite per the handle's oracle
  std::optional<std::array<std::size_t, 2>> witness;
};

struct RegularWitness {
  std::size_t element;
  std::size_t inverse;  // least y in the window with x = x*y*x
};

AssocResult check_associative(const Window& w);
CancelResult is_cancellative(const Window& w);
ShiftResult has_finite_to_one_shifts(const Window& w);

std::vector<std::size_t> idempotents(const Window& w);
std::vector<std::size_t> center(const Window& w);
std::vector<RegularWitness> regular_elements(const Window& w);

// Least n <= cap (default: the window size) such that x^n is idempotent for
// every window element; nullopt if no such n within the cap.
std::optional<std::size_t> boundedness_exponent(const Window& w,
                                                std::optional<std::size_t> cap = std::nullopt);

// x^e under the handle's operation, e >= 1.
std::size_t power(const Semigroup& s, std::size_t x, std::size_t e);

}  // namespace semitop

#endif  // SEMITOP_ANALYSIS_HPP_
