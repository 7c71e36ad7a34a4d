#ifndef SEMITOP_POLYNOMIAL_HPP_
#define SEMITOP_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include "semitop/core.hpp"

namespace semitop {

// A coefficient in X^1: either the adjoined identity or an element of X.
struct Coeff {
  bool is_one = true;
  std::size_t index = 0;

  static Coeff one() { return Coeff{true, 0}; }
  static Coeff elem(std::size_t i) { return Coeff{false, i}; }
  friend bool operator==(const Coeff&, const Coeff&) = default;
  friend auto operator<=>(const Coeff&, const Coeff&) = default;
};

// A semigroup polynomial a0 x a1 ... x an, n >= 1, coefficients in X^1.
// Equality is structural; extensional equality is only a window check.
struct PolyTerm {
  SemigroupPtr handle;
  std::vector<Coeff> coeffs;  // degree + 1 entries

  PolyTerm(SemigroupPtr h, std::vector<Coeff> cs);
  std::size_t degree() const { return coeffs.size() - 1; }

  friend bool operator==(const PolyTerm& a, const PolyTerm& b) {
    return a.handle->id() == b.handle->id() && a.coeffs == b.coeffs;
  }
};

// The degree-1 polynomial x (coefficients 1, 1).
PolyTerm identity_poly(SemigroupPtr h);

std::size_t eval(const PolyTerm& f, std::size_t x);

bool is_pruned(const PolyTerm& f);

struct PruneDecomposition {
  Coeff left;
  PolyTerm pruned;
  Coeff right;
};
PruneDecomposition prune_decompose(const PolyTerm& f);

// Substitution of g into every x-slot of f;
// degree(compose(f,g)) = degree(f) * degree(g).
PolyTerm compose(const PolyTerm& f, const PolyTerm& g);

// Product of two X^1 coefficients.
Coeff coeff_mul(const Semigroup& s, const Coeff& a, const Coeff& b);

// For (N,+)/(Z,+): f(x) = shift + slope * x with slope = degree(f).
struct AffineForm {
  long long shift = 0;
  std::size_t slope = 0;
};
AffineForm normalize_commutative(const PolyTerm& f);

// Textual syntax "a0 . x . a1 . x . a2"; each ai is an element index, "1"
// for the adjoined identity, or "e<i>" to force element index i.
PolyTerm parse_poly(SemigroupPtr h, const std::string& text);
std::string render_poly(const PolyTerm& f);

}  // namespace semitop

#endif  // SEMITOP_POLYNOMIAL_HPP_
