#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "semitop/analysis.hpp"
#include "semitop/builtins.hpp"
#include "semitop/catalog.hpp"

using namespace semitop;

namespace {

using Table = std::vector<std::vector<std::size_t>>;

// independent oracle: all 3^9 tables of order 3, filtered by associativity
std::vector<Table> brute_order3() {
  std::vector<Table> out;
  for (std::size_t code = 0; code < 19683; ++code) {
    Table t(3, std::vector<std::size_t>(3));
    std::size_t c = code;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        t[i][j] = c % 3;
        c /= 3;
      }
    bool ok = true;
    for (std::size_t a = 0; a < 3 && ok; ++a)
      for (std::size_t b = 0; b < 3 && ok; ++b)
        for (std::size_t d = 0; d < 3; ++d)
          if (t[t[a][b]][d] != t[a][t[b][d]]) {
            ok = false;
            break;
          }
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("labeled counts 1, 8, 113, 3492") {
  CHECK(labeled_semigroups(1).size() == 1);
  CHECK(labeled_semigroups(2).size() == 8);
  CHECK(labeled_semigroups(3).size() == 113);
  CHECK(labeled_semigroups(4).size() == 3492);
  CHECK_THROWS_AS(labeled_semigroups(5), Error);
  CHECK_THROWS_AS(labeled_semigroups(0), Error);
}

TEST_CASE("order-3 enumeration matches the full 3^9 sweep") {
  auto brute = brute_order3();
  auto fast = labeled_semigroups(3);
  REQUIRE(brute.size() == fast.size());
  std::set<Table> a(brute.begin(), brute.end()), b(fast.begin(), fast.end());
  CHECK(a == b);
}

TEST_CASE("every enumerated table is associative") {
  for (const auto& t : labeled_semigroups(3)) {
    auto s = from_cayley(t);
    CHECK(check_associative(Window(s, 3)).ok);
  }
}

TEST_CASE("canonical form is relabeling-invariant and idempotent") {
  // C3 relabeled by the cycle 0->1->2->0
  Table c3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  Table relab(3, std::vector<std::size_t>(3));
  std::size_t p[3] = {1, 2, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) relab[p[i]][p[j]] = p[c3[i][j]];
  CHECK(canonical_table(c3) == canonical_table(relab));
  CHECK(canonical_table(canonical_table(c3)) == canonical_table(c3));
  CHECK(canonical_table(c3) <= c3);
}

TEST_CASE("isomorphism class counts 1, 5, 24, 188") {
  CHECK(semigroups_of_order(1).size() == 1);
  CHECK(semigroups_of_order(2).size() == 5);
  CHECK(semigroups_of_order(3).size() == 24);
  CHECK(semigroups_of_order(4).size() == 188);
}

TEST_CASE("representatives are deterministic and named") {
  auto a = semigroups_of_order(2);
  auto b = semigroups_of_order(2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i]->name() == b[i]->name());
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) CHECK(a[i]->mul(x, y) == b[i]->mul(x, y));
  }
  CHECK(a[0]->name() == "cat2.0");
}

TEST_CASE("bundled catalog") {
  auto cat = bundled_catalog();
  CHECK(cat.size() == 1 + 5 + 24 + 188 + 3);
  CHECK(*cat.back()->size() == 6);        // s3
  CHECK(cat.back()->name() == "s3");
  CHECK(cat[cat.size() - 3]->name() == "cyclic:5");
  // no two catalog entries of equal order share a canonical table
  std::set<Table> seen;
  for (const auto& s : cat) {
    std::size_t n = *s->size();
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = s->mul(i, j);
    CHECK(seen.insert(canonical_table(t)).second);
  }
}
