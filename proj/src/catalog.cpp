#include "semitop/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semitop/builtins.hpp"

namespace semitop {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

// incremental associativity check after filling cell (i,j): every triple
// whose evaluation touches (i,j) and is fully determined must balance
bool consistent(const Table& t, std::size_t n, std::size_t filled) {
  auto known = [&](std::size_t a, std::size_t b) { return a * n + b < filled; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!known(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!known(b, c)) continue;
        std::size_t ab = t[a][b], bc = t[b][c];
        if (!known(ab, c) || !known(a, bc)) continue;
        if (t[ab][c] != t[a][bc]) return false;
      }
    }
  return true;
}

void search(Table& t, std::size_t n, std::size_t cell, std::vector<Table>& out) {
  if (cell == n * n) {
    out.push_back(t);
    return;
  }
  std::size_t i = cell / n, j = cell % n;
  for (std::size_t v = 0; v < n; ++v) {
    t[i][j] = v;
    if (consistent(t, n, cell + 1)) search(t, n, cell + 1, out);
  }
}

}  // namespace

std::vector<Table> labeled_semigroups(std::size_t n) {
  if (n == 0 || n > 4)
    throw Error(Error::Kind::Guard, "labeled_semigroups supports orders 1..4");
  Table t(n, std::vector<std::size_t>(n, 0));
  std::vector<Table> out;
  search(t, n, 0, out);
  return out;
}

Table canonical_table(const Table& table) {
  std::size_t n = table.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Table best;
  do {
    Table cur(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur[perm[i]][perm[j]] = perm[table[i][j]];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SemigroupPtr> semigroups_of_order(std::size_t n) {
  std::set<Table> canon;
  for (const auto& t : labeled_semigroups(n)) canon.insert(canonical_table(t));
  std::vector<SemigroupPtr> out;
  std::size_t idx = 0;
  for (const auto& t : canon)
    out.push_back(from_cayley(t, "cat" + std::to_string(n) + "." + std::to_string(idx++)));
  return out;
}

std::vector<SemigroupPtr> bundled_catalog() {
  std::vector<SemigroupPtr> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& s : semigroups_of_order(n)) out.push_back(std::move(s));
  out.push_back(make_cyclic(5));
  out.push_back(make_cyclic(6));
  out.push_back(make_symmetric3());
  return out;
}

}  // namespace semitop
