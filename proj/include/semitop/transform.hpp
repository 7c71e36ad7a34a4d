#ifndef SEMITOP_TRANSFORM_HPP_
#define SEMITOP_TRANSFORM_HPP_

#include <array>
#include <optional>
#include <vector>

#include "semitop/cover.hpp"

namespace semitop {

// All polynomials pruned; constants become the per-pair fiber sets
// {t : a.t.b = constant}.  Finite handles compute fibers exhaustively;
// symbolic handles need a finite-to-one shift oracle and get window fibers.
Cover prune_cover(const Window& w, const Cover& c);

// Greedy constant-set shrinking; on return every constant is regular
// (re-verified by brute force).  Finite handles only.
Cover regularize_cover(const Window& w, const Cover& c);

// Push a verified cover through a surjective homomorphism q : X -> Y given
// as an index map (q[x] = image index).
Cover transport_quotient(const Cover& c, const SemigroupPtr& target,
                         const std::vector<std::size_t>& q);

// Pairwise product polynomials (x,y) -> (f(x)^deg g, g(y)^deg f) over all
// pair combinations; prod must be the product handle of the two covers'
// handles, in order.
Cover product_cover(const Cover& cx, const Cover& cy, const SemigroupPtr& prod);

struct GroupStructure {
  SemigroupPtr handle;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;  // per window index
};

// Unit + inverse extraction from a pruned cover on a cancellative window.
GroupStructure group_from_cover(const Window& w, const Cover& c);

// Rewrite every pair (a0 x a1 ... x an, b) to (x a1 ... x (an b^-1 a0), e).
Cover normalize_group_cover(const SemigroupPtr& g, const Cover& c);

struct CenterBoundReport {
  std::size_t max_degree = 0;   // p
  std::size_t fiber_size = 0;   // |F|
  std::size_t bound = 0;        // (1 + n|F|) * p
  bool verified = false;
  // per central element: (z, m, m') with z^m = z^m', m < m' <= bound
  std::vector<std::array<std::size_t, 3>> witnesses;
  std::optional<std::size_t> violation;  // least central z with no repeat
};

// Pigeonhole bound on power repetition over the window center.
CenterBoundReport center_bound_check(const Window& w, const Cover& c);

}  // namespace semitop

#endif  // SEMITOP_TRANSFORM_HPP_
