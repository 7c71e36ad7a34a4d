#ifndef SEMITOP_CONGRUENCE_HPP_
#define SEMITOP_CONGRUENCE_HPP_

#include <utility>
#include <vector>

#include "semitop/core.hpp"

namespace semitop {

// A compatible partition of a finite handle.  Classes are kept sorted and
// are identified by their least member.
struct Congruence {
  SemigroupPtr handle;
  std::vector<std::vector<std::size_t>> classes;

  // class index of each element
  std::vector<std::size_t> class_of() const;
};

struct IdealSet {
  SemigroupPtr handle;
  std::vector<std::size_t> members;
};

// Validates disjointness/coverage and the compatibility law
// x ~ y  =>  xz ~ yz and zx ~ zy; throws Error::Kind::Invalid otherwise.
Congruence make_congruence(SemigroupPtr s, std::vector<std::vector<std::size_t>> classes);

// Window-checked for symbolic handles, exhaustive for finite ones.
bool is_ideal(const Window& w, const std::vector<std::size_t>& members);

struct QuotientResult {
  SemigroupPtr quotient;
  std::vector<std::size_t> map;  // element -> quotient element
};

QuotientResult quotient_by_congruence(const SemigroupPtr& s, const Congruence& c);

// Rees quotient by the congruence (I x I) + diagonal; the ideal class is the
// quotient element whose representative is the least member of I.
QuotientResult quotient_by_ideal(const SemigroupPtr& s, const IdealSet& ideal);

// Every congruence of a finite handle exactly once, generated by closing
// pair-identifications under compatibility (BFS over the congruence lattice).
// Ordered by number of classes descending, then by partition encoding.
std::vector<Congruence> enumerate_congruences(const SemigroupPtr& s, std::size_t order_guard = 7);

// Smallest congruence containing the given pairs.
Congruence congruence_closure(const SemigroupPtr& s,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace semitop

#endif  // SEMITOP_CONGRUENCE_HPP_
