#ifndef SEMITOP_COVER_HPP_
#define SEMITOP_COVER_HPP_

#include <optional>
#include <vector>

#include "semitop/bitset.hpp"
#include "semitop/core.hpp"
#include "semitop/polynomial.hpp"

namespace semitop {

struct CoverPair {
  PolyTerm poly;
  std::size_t constant;
};

// A polybounded-cover certificate: the claim A `subset` U f_i^-1(b_i) for the
// designated target A (all of X when target is empty).
struct Cover {
  SemigroupPtr handle;
  std::vector<CoverPair> pairs;
  std::optional<std::vector<std::size_t>> target;  // nullopt: A = X

  void validate() const;
};

struct VerifyResult {
  bool ok = false;
  Certainty certainty = Certainty::Window;
  std::optional<std::size_t> counterexample;  // least uncovered target element
};

VerifyResult verify_cover(const Window& w, const Cover& c);

// |S| pairs (x, b); verifies exhaustively on any finite handle.
Cover trivial_finite_cover(SemigroupPtr s);

struct SearchBounds {
  std::size_t degree_bound = 1;
  std::vector<std::size_t> coeff_pool;  // the adjoined identity is always included
  std::size_t size_bound = 1;
  std::size_t candidate_guard = 1u << 21;  // max candidate polynomials
};

// Least verifying cover in the canonical candidate order (degree ascending,
// then lexicographic coefficients, then constants; covers explored
// depth-first over that list), or nullopt when the bounds are exhausted.
std::optional<Cover> search_cover(const Window& w, const SearchBounds& b,
                                  const std::optional<std::vector<std::size_t>>& target =
                                      std::nullopt);

// Shared candidate machinery (also used by the isolation search).
struct CandidatePair {
  PolyTerm poly;
  std::size_t constant;
  Bitset fiber;  // target positions where poly(x) == constant
};

// Candidates in canonical order, deduplicated by fiber (first representative
// kept); pairs whose polynomial maps avoid_point to the constant are dropped.
std::vector<CandidatePair> enumerate_candidates(const Window& w, const SearchBounds& b,
                                                const Bitset& target,
                                                std::optional<std::size_t> avoid_point);

// First (depth-first, skipping non-contributing pairs) subset of at most
// size_bound candidates whose fibers cover the target.
std::optional<std::vector<std::size_t>> least_cover_subset(
    const std::vector<CandidatePair>& cands, const Bitset& target, std::size_t size_bound);

Bitset window_target(const Window& w, const std::optional<std::vector<std::size_t>>& target);

}  // namespace semitop

#endif  // SEMITOP_COVER_HPP_
