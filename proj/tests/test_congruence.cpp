#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semitop/builtins.hpp"
#include "semitop/congruence.hpp"

using namespace semitop;

namespace {

// independent oracle: count compatible partitions by brute force over
// restricted-growth label strings
std::size_t brute_congruence_count(const SemigroupPtr& s) {
  std::size_t n = *s->size();
  std::vector<std::size_t> lab(n, 0);
  std::size_t count = 0;
  auto compatible = [&]() {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (lab[x] != lab[y]) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (lab[s->mul(x, z)] != lab[s->mul(y, z)] ||
              lab[s->mul(z, x)] != lab[s->mul(z, y)])
            return false;
      }
    return true;
  };
  // enumerate restricted growth strings: lab[0] = 0, lab[i] <= max + 1
  std::vector<std::size_t> maxi(n, 0);
  std::size_t i = 1;
  std::fill(lab.begin(), lab.end(), 0);
  while (true) {
    if (i == n) {
      if (compatible()) ++count;
      // backtrack
      while (i > 1 && lab[i - 1] == maxi[i - 1] + 1) --i;
      if (i == 1) break;
      ++lab[i - 1];
    } else {
      maxi[i] = std::max(maxi[i - 1], lab[i - 1]);
      lab[i] = 0;
      ++i;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("congruence counts for cyclic groups match the subgroup lattice") {
  CHECK(enumerate_congruences(make_cyclic(2)).size() == 2);
  CHECK(enumerate_congruences(make_cyclic(4)).size() == 3);   // 1, {0,2}, all
  CHECK(enumerate_congruences(make_cyclic(6)).size() == 4);   // divisors of 6
  CHECK(enumerate_congruences(make_cyclic(5)).size() == 2);   // prime order
}

TEST_CASE("enumerate_congruences agrees with the brute-force oracle") {
  std::vector<SemigroupPtr> samples = {
      make_cyclic(4),
      make_symmetric3(),
      from_cayley({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}),   // 3-element semilattice
      from_cayley({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}),   // finite taimanov-style
  };
  for (const auto& s : samples)
    CHECK(enumerate_congruences(s).size() == brute_congruence_count(s));
}

TEST_CASE("enumeration order: classes descending, diagonal first") {
  auto all = enumerate_congruences(make_cyclic(4));
  REQUIRE(all.size() == 3);
  CHECK(all.front().classes.size() == 4);
  CHECK(all.back().classes.size() == 1);
  CHECK(all[1].classes == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
}

TEST_CASE("order guard") {
  CHECK_THROWS_AS(enumerate_congruences(make_cyclic(8), 7), Error);
  try {
    enumerate_congruences(make_cyclic(8), 7);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Guard);
  }
}

TEST_CASE("make_congruence validates the partition") {
  auto c4 = make_cyclic(4);
  CHECK_NOTHROW(make_congruence(c4, {{0, 2}, {1, 3}}));
  CHECK_THROWS_AS(make_congruence(c4, {{0, 1}, {2, 3}}), Error);  // incompatible
  CHECK_THROWS_AS(make_congruence(c4, {{0, 1}, {1, 2, 3}}), Error);  // overlap
  CHECK_THROWS_AS(make_congruence(c4, {{0, 1}, {2}}), Error);  // misses 3
  CHECK_THROWS_AS(make_congruence(make_nat_plus(), {{0}}), Error);  // not finite
}

TEST_CASE("quotient by congruence") {
  auto c4 = make_cyclic(4);
  auto c = make_congruence(c4, {{0, 2}, {1, 3}});
  auto [q, map] = quotient_by_congruence(c4, c);
  CHECK(*q->size() == 2);
  CHECK(map == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(q->mul(1, 1) == 0);
  // the map is a homomorphism
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      CHECK(map[c4->mul(a, b)] == q->mul(map[a], map[b]));
  // congruence of a different handle is rejected
  CHECK_THROWS_AS(quotient_by_congruence(make_cyclic(4), c), Error);
}

TEST_CASE("ideals and Rees quotients") {
  auto sl = from_cayley({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  Window w(sl, 3);
  CHECK(is_ideal(w, {0}));
  CHECK(is_ideal(w, {0, 1}));
  CHECK_FALSE(is_ideal(w, {1}));  // 1*0 = 0 escapes
  auto [q, map] = quotient_by_ideal(sl, IdealSet{sl, {0, 1}});
  CHECK(*q->size() == 2);
  CHECK(map == std::vector<std::size_t>{0, 0, 1});  // ideal class is element 0
  CHECK(q->mul(1, 1) == 1);
  CHECK(q->mul(0, 1) == 0);
  CHECK_THROWS_AS(quotient_by_ideal(sl, IdealSet{sl, {}}), Error);
  CHECK_THROWS_AS(quotient_by_ideal(sl, IdealSet{sl, {1}}), Error);
}

TEST_CASE("window is_ideal on a symbolic handle is lenient off-window") {
  // in (N,+) the set {5} is not an ideal: 5 + 1 = 6 lands in-window outside it
  Window w(make_nat_plus(), 20);
  CHECK_FALSE(is_ideal(w, {5}));
  // {10..19}: every in-window sum stays inside the set, off-window sums are
  // inconclusive, so the window check passes
  std::vector<std::size_t> members;
  for (std::size_t i = 10; i < 20; ++i) members.push_back(i);
  CHECK(is_ideal(w, members));
}

TEST_CASE("congruence closure") {
  auto c4 = make_cyclic(4);
  auto c = congruence_closure(c4, {{0, 2}});
  CHECK(c.classes == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
  auto all = congruence_closure(c4, {{0, 1}});
  CHECK(all.classes.size() == 1);
  auto none = congruence_closure(c4, {});
  CHECK(none.classes.size() == 4);
}
