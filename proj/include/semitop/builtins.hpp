#ifndef SEMITOP_BUILTINS_HPP_
#define SEMITOP_BUILTINS_HPP_

#include <vector>

#include "semitop/core.hpp"

namespace semitop {

// Canonical enumerations (all deterministic):
//   N as 0,1,2,...; Z as 0,1,-1,2,-2,...; products by anti-diagonal
//   (Cantor) pairing with first coordinate ascending inside a diagonal.

SemigroupPtr make_nat_plus();
SemigroupPtr make_int_plus();
SemigroupPtr make_free_monoid(std::size_t generators);
SemigroupPtr make_cyclic(std::size_t n);
SemigroupPtr make_symmetric3();
// Z x {-1,1} with <x,i>*<y,j> = <x + i*y, i*j>; base must expose the
// additive view (make_int_plus does).
SemigroupPtr make_semidirect_pm(SemigroupPtr abelian_base);
SemigroupPtr make_zpm();  // make_semidirect_pm(make_int_plus())
// x*y = 1 if x = y > 1, else 0, on omega.
SemigroupPtr make_taimanov();
// x*y = x if x = y, else 0, on omega.
SemigroupPtr make_semilattice_omega();

SemigroupPtr from_cayley(const std::vector<std::vector<std::size_t>>& table,
                         std::string name = "cayley");

// Fresh identity / fresh zero at enumeration position 0; the base
// enumeration shifts up by one.
SemigroupPtr adjoin_identity(SemigroupPtr s);
SemigroupPtr adjoin_zero(SemigroupPtr s);

SemigroupPtr product(SemigroupPtr a, SemigroupPtr b);

// Pair <-> index helpers for the anti-diagonal product enumeration
// (exposed for tests).
std::size_t pair_index(std::size_t i, std::size_t j,
                       std::optional<std::size_t> na, std::optional<std::size_t> nb);
std::pair<std::size_t, std::size_t> pair_decompose(
    std::size_t idx, std::optional<std::size_t> na, std::optional<std::size_t> nb);

}  // namespace semitop

#endif  // SEMITOP_BUILTINS_HPP_
