#ifndef SEMITOP_CATALOG_HPP_
#define SEMITOP_CATALOG_HPP_

#include <vector>

#include "semitop/core.hpp"

namespace semitop {

// All associative Cayley tables of the given order (labeled, i.e. not up to
// isomorphism), enumerated by backtracking in lexicographic cell order.
std::vector<std::vector<std::vector<std::size_t>>> labeled_semigroups(std::size_t n);

// Lexicographically least relabeling of a table over all permutations.
std::vector<std::vector<std::size_t>> canonical_table(
    const std::vector<std::vector<std::size_t>>& table);

// Representatives of the isomorphism classes of order exactly n (n <= 4),
// in canonical-table order.
std::vector<SemigroupPtr> semigroups_of_order(std::size_t n);

// The bundled catalog: all semigroups of order <= 4 up to isomorphism,
// plus C5, C6 and S3.
std::vector<SemigroupPtr> bundled_catalog();

}  // namespace semitop

#endif  // SEMITOP_CATALOG_HPP_
