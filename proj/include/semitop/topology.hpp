#ifndef SEMITOP_TOPOLOGY_HPP_
#define SEMITOP_TOPOLOGY_HPP_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semitop/polynomial.hpp"

namespace semitop {

// --- avoider sequences -----------------------------------------------------

struct AvoiderSequence {
  SemigroupPtr handle;
  std::vector<std::size_t> elements;           // x_0 .. x_m
  std::vector<std::size_t> constraint_counts;  // products checked per step
};

struct AvoiderOutcome {
  enum class Status { Ok, WindowExhausted, PolyboundedObstruction };
  Status status = Status::Ok;
  AvoiderSequence sequence;     // the prefix built so far (always valid)
  std::size_t failed_step = 0;  // meaningful unless Ok
  std::size_t candidates_exhausted = 0;
};

// Greedy least-index construction of x_0..x_m subject to (*_n); the
// enumeration b_1, b_2, ... is the handle's canonical enumeration (b_i is
// element index i-1).  op_guard bounds the number of semigroup products.
AvoiderOutcome build_avoider_sequence(const Window& w, std::size_t steps,
                                      std::size_t op_guard = 50'000'000);

// Exhaustive independent re-check of (*_n) at step n: enumerates every
// constrained polynomial over the word pool from scratch.
bool verify_avoider_step(const Window& w, const std::vector<std::size_t>& elements,
                         std::size_t n, std::size_t op_guard = 50'000'000);

// --- family K --------------------------------------------------------------

struct FamilyK {
  SemigroupPtr handle;
  std::vector<std::size_t> base;  // A
  std::vector<std::size_t> pool;  // coefficient pool (besides the identity)
  // tuples (a_0..a_n) denoting a_0 A a_1 ... A a_n, n = blocks
  std::vector<std::vector<Coeff>> entries;
};

FamilyK gen_family_K(const AvoiderSequence& a, const std::vector<std::size_t>& coeff_pool,
                     std::size_t max_blocks, std::size_t max_entries);

// Window expansion of one entry: all values a_0 z_1 a_1 ... z_n a_n with
// z_i ranging over the base (values may leave the window).
std::set<std::size_t> expand_entry(const FamilyK& k, std::size_t entry);

struct L0Report {
  // (1) K L subset M, M witnessed by tuple concatenation
  std::size_t pairs_checked = 0, pairs_witnessed = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_unwitnessed;
  // (2) a K b subset L for a, b in the pool (and identity)
  std::size_t shifts_checked = 0, shifts_witnessed = 0;
  // (3) max |{x in K : a x b = c}| over window expansions
  std::size_t max_fiber3 = 0;
  // (4) max |{(x,y) in K x L : x y = c}| over window expansions
  std::size_t max_fiber4 = 0;
  std::size_t threshold = 0;  // window-finiteness threshold
  bool ok3 = false, ok4 = false;
};

L0Report check_l0_conditions(const FamilyK& k, const Window& w);

struct TauZeroOracle {
  FamilyK family;
  Window window;
  std::size_t threshold;  // default ceil(N/10), set by make function

  TauZeroOracle(FamilyK f, Window w, std::optional<std::size_t> t = std::nullopt);
};

struct Tau0Result {
  bool is_neighborhood = false;
  std::vector<std::size_t> deficits;  // |K \ V| per entry, within the window
  std::size_t threshold = 0;
};

// V is given as its X-part (window indices); the adjoined zero of X^0 is
// required to be in V.
Tau0Result tau0_is_neighborhood(const std::vector<std::size_t>& v, bool contains_zero,
                                const TauZeroOracle& oracle);

// --- filter bases ----------------------------------------------------------

struct FilterBase {
  Window window;
  std::vector<std::vector<std::size_t>> sets;  // sorted, deduplicated
};

// Validates the filter-base law: sets nonempty, pairwise intersections
// nonempty.
FilterBase make_filter_base(Window w, std::vector<std::vector<std::size_t>> sets);

FilterBase filter_product(const FilterBase& e, const FilterBase& f);

struct FilterClass {
  bool free_on_window = false;       // intersection of base sets empty
  bool principal_on_window = false;  // some base set a singleton
};

FilterClass filter_classify(const FilterBase& f);

// Shifts a_0..a_n as X^1 coefficients; builds the base of
// a_0 F_1 a_1 ... F_n a_n over all base-set choices.
FilterBase shifted_product_base(const FilterBase& f, const std::vector<Coeff>& shifts,
                                std::size_t set_guard = 4096);

struct T1WitnessResult {
  FilterClass cls;
  bool witnessed = false;  // neither free nor principal
};

T1WitnessResult t1_witness_check(const Window& w, const FilterBase& f,
                                 const std::vector<Coeff>& shifts);

// Least distinct (u, v) lying in every shifted-product base set.
std::optional<std::pair<std::size_t, std::size_t>> it1_witness_check(
    const Window& w, const FilterBase& f, const std::vector<Coeff>& shifts);

std::size_t cofinite_threshold(std::size_t window_size);  // ceil(N/10)

}  // namespace semitop

#endif  // SEMITOP_TOPOLOGY_HPP_
