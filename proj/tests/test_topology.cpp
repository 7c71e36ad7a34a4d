#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "semitop/builtins.hpp"
#include "semitop/topology.hpp"

using namespace semitop;

TEST_CASE("greedy avoider on (N,+): 0, 1, 3, 10, 41, 206") {
  Window w(make_nat_plus(), 300);
  auto out = build_avoider_sequence(w, 5);
  CHECK(out.status == AvoiderOutcome::Status::Ok);
  // derived oracle: the greedy choice satisfies x_n = n * x_{n-1} + 1
  CHECK(out.sequence.elements == std::vector<std::size_t>{0, 1, 3, 10, 41, 206});
  CHECK(out.sequence.constraint_counts.size() == 6);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(verify_avoider_step(w, out.sequence.elements, n));
}

TEST_CASE("the re-verifier rejects a tampered sequence") {
  Window w(make_nat_plus(), 300);
  // greedy skipped 2 at step 2, so it must fail (*_2)
  CHECK_FALSE(verify_avoider_step(w, {0, 1, 2}, 2));
  CHECK(verify_avoider_step(w, {0, 1, 3}, 2));
  CHECK(verify_avoider_step(w, {0, 1, 3}, 0));  // (*_0) is vacuous
  CHECK_THROWS_AS(verify_avoider_step(w, {0, 1}, 5), Error);  // step out of range
}

TEST_CASE("avoider window exhaustion on a tiny window") {
  Window w(make_nat_plus(), 4);
  auto out = build_avoider_sequence(w, 5);
  CHECK(out.status != AvoiderOutcome::Status::Ok);
  CHECK(out.sequence.elements.size() >= 2);  // 0 and 1 fit
}

TEST_CASE("avoider obstruction on C4") {
  Window w(make_cyclic(4), 4);
  auto out = build_avoider_sequence(w, 10);
  CHECK(out.status == AvoiderOutcome::Status::PolyboundedObstruction);
  CHECK(out.failed_step == 2);
  CHECK(out.sequence.elements == std::vector<std::size_t>{0, 1});
  CHECK(out.candidates_exhausted == 2);  // both 2 and 3 were tried
}

TEST_CASE("avoider op guard") {
  Window w(make_nat_plus(), 2000);
  CHECK_THROWS_AS(build_avoider_sequence(w, 6, 100), Error);
}

TEST_CASE("family K enumeration and truncation") {
  AvoiderSequence a{make_nat_plus(), {0, 1, 3}, {}};
  auto k = gen_family_K(a, {0, 1}, 2, 10000);
  CHECK(k.base == std::vector<std::size_t>{0, 1, 3});
  CHECK(k.pool == std::vector<std::size_t>{0, 1});
  // 3 coefficient options, so 3^2 one-block + 3^3 two-block tuples
  CHECK(k.entries.size() == 9 + 27);
  CHECK(k.entries[0] == std::vector<Coeff>{Coeff::one(), Coeff::one()});  // A itself
  CHECK(k.entries[9].size() == 3);  // two-block tuples follow

  auto trunc = gen_family_K(a, {0, 1}, 2, 10);
  CHECK(trunc.entries.size() == 10);
}

TEST_CASE("entry expansion") {
  AvoiderSequence a{make_nat_plus(), {0, 1, 3}, {}};
  auto k = gen_family_K(a, {1}, 2, 10000);
  // options are [1, e1]: entry 0 = A, entry 1 = A.1, entry 2 = 1.A ... wait,
  // tuples are (a_0, a_1): entry 0 = (1,1) = A, 1 = (1,e1) = A+1,
  // 2 = (e1,1) = 1+A, 3 = (e1,e1) = 1+A+1
  CHECK(expand_entry(k, 0) == std::set<std::size_t>{0, 1, 3});
  CHECK(expand_entry(k, 1) == std::set<std::size_t>{1, 2, 4});
  CHECK(expand_entry(k, 2) == std::set<std::size_t>{1, 2, 4});
  CHECK(expand_entry(k, 3) == std::set<std::size_t>{2, 3, 5});
  // first two-block entry (1,1,1) = A + A
  CHECK(expand_entry(k, 4) == std::set<std::size_t>{0, 1, 2, 3, 4, 6});
  CHECK_THROWS_AS(expand_entry(k, k.entries.size()), Error);
}

TEST_CASE("l0 conditions on an (N,+) family") {
  Window w(make_nat_plus(), 100);
  AvoiderSequence a{w.handle, {0, 1, 3, 10}, {}};
  auto k = gen_family_K(a, {0, 1}, 2, 10000);
  auto rep = check_l0_conditions(k, w);
  CHECK(rep.threshold == 10);
  CHECK(rep.pairs_checked == k.entries.size() * k.entries.size());
  CHECK(rep.pairs_witnessed > 0);
  // concatenating two 2-block entries needs 4 blocks, which are truncated away
  CHECK(rep.first_unwitnessed.has_value());
  CHECK(rep.pairs_witnessed < rep.pairs_checked);
  // shifts of (N,+) are injective, so every window fiber of condition 3 is 1
  CHECK(rep.max_fiber3 == 1);
  CHECK(rep.ok3);
  CHECK(rep.ok4);
}

TEST_CASE("tau0 neighborhood oracle") {
  Window w(make_nat_plus(), 30);
  AvoiderSequence a{w.handle, {0, 1, 3}, {}};
  auto k = gen_family_K(a, {1}, 2, 10000);
  TauZeroOracle oracle(k, w);
  CHECK(oracle.threshold == 3);  // ceil(30/10)

  std::vector<std::size_t> all;
  for (std::size_t x = 0; x < 30; ++x) all.push_back(x);
  auto yes = tau0_is_neighborhood(all, true, oracle);
  CHECK(yes.is_neighborhood);
  for (std::size_t d : yes.deficits) CHECK(d == 0);

  auto no = tau0_is_neighborhood({}, true, oracle);
  CHECK_FALSE(no.is_neighborhood);
  CHECK(no.deficits[0] == 3);  // entry A = {0,1,3} entirely missing

  TauZeroOracle lax(k, w, 100);
  CHECK(tau0_is_neighborhood({}, true, lax).is_neighborhood);

  CHECK_THROWS_AS(tau0_is_neighborhood(all, false, oracle), Error);
}

TEST_CASE("filter base validation") {
  Window w(make_nat_plus(), 10);
  auto f = make_filter_base(w, {{3, 1, 2, 2}, {2, 5}});
  CHECK(f.sets[0] == std::vector<std::size_t>{1, 2, 3});  // sorted, deduplicated
  CHECK_THROWS_AS(make_filter_base(w, {}), Error);
  CHECK_THROWS_AS(make_filter_base(w, {{1}, {}}), Error);
  CHECK_THROWS_AS(make_filter_base(w, {{1, 2}, {3, 4}}), Error);  // disjoint
}

TEST_CASE("filter product on taimanov and the semilattice") {
  auto tai = make_taimanov();
  Window wt(tai, 10);
  std::vector<std::size_t> cof;
  for (std::size_t x = 2; x < 10; ++x) cof.push_back(x);
  auto ft = make_filter_base(wt, {cof});
  auto pt = filter_product(ft, ft);
  // C * C = {0, 1}: equal arguments give 1, distinct give 0
  CHECK(pt.sets == std::vector<std::vector<std::size_t>>{{0, 1}});

  auto sl = make_semilattice_omega();
  Window ws(sl, 10);
  auto fs = make_filter_base(ws, {cof});
  auto ps = filter_product(fs, fs);
  std::vector<std::size_t> expect = {0};
  expect.insert(expect.end(), cof.begin(), cof.end());
  CHECK(ps.sets == std::vector<std::vector<std::size_t>>{expect});
}

TEST_CASE("filter product is associative on single-set bases") {
  auto sl = make_semilattice_omega();
  Window w(sl, 12);
  auto e = make_filter_base(w, {{2, 3, 4}});
  auto f = make_filter_base(w, {{3, 4, 5}});
  auto g = make_filter_base(w, {{4, 5, 6}});
  CHECK(filter_product(filter_product(e, f), g).sets ==
        filter_product(e, filter_product(f, g)).sets);
}

TEST_CASE("filter classification") {
  Window w(make_nat_plus(), 10);
  auto fr = make_filter_base(w, {{1, 2}, {2, 3}, {1, 3}});
  auto c1 = filter_classify(fr);
  CHECK(c1.free_on_window);
  CHECK_FALSE(c1.principal_on_window);

  auto pr = make_filter_base(w, {{4}, {4, 5}});
  auto c2 = filter_classify(pr);
  CHECK_FALSE(c2.free_on_window);
  CHECK(c2.principal_on_window);
}

TEST_CASE("shifted product base") {
  auto sl = make_semilattice_omega();
  Window w(sl, 10);
  std::vector<std::size_t> cof;
  for (std::size_t x = 2; x < 10; ++x) cof.push_back(x);
  auto f = make_filter_base(w, {cof});
  // a single F block with identity shifts reproduces the base
  auto one = shifted_product_base(f, {Coeff::one(), Coeff::one()});
  CHECK(one.sets == f.sets);
  // two blocks: F F = {0} union C
  auto two = shifted_product_base(f, {Coeff::one(), Coeff::one(), Coeff::one()});
  std::vector<std::size_t> expect = {0};
  expect.insert(expect.end(), cof.begin(), cof.end());
  CHECK(two.sets == std::vector<std::vector<std::size_t>>{expect});

  CHECK_THROWS_AS(shifted_product_base(f, {Coeff::one()}), Error);  // n >= 1 needed
}

TEST_CASE("shifted product guard on the choice count") {
  Window w(make_nat_plus(), 20);
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t k = 1; k <= 8; ++k) sets.push_back({0, k});  // all share 0
  auto f = make_filter_base(w, sets);
  std::vector<Coeff> five(5, Coeff::one());   // 8^4 = 4096 choices: allowed
  CHECK_NOTHROW(shifted_product_base(f, five));
  std::vector<Coeff> six(6, Coeff::one());    // 8^5 choices: over the guard
  CHECK_THROWS_AS(shifted_product_base(f, six), Error);
}

TEST_CASE("t1 and it1 witnesses on taimanov") {
  auto tai = make_taimanov();
  Window w(tai, 10);
  std::vector<std::size_t> cof;
  for (std::size_t x = 2; x < 10; ++x) cof.push_back(x);
  auto f = make_filter_base(w, {cof});
  std::vector<Coeff> shifts(3, Coeff::one());  // F F
  auto t1 = t1_witness_check(w, f, shifts);
  CHECK(t1.witnessed);  // {0,1} is neither free nor principal
  auto it1 = it1_witness_check(w, f, shifts);
  REQUIRE(it1.has_value());
  CHECK(*it1 == std::pair<std::size_t, std::size_t>{0, 1});

  // the semilattice analogue keeps 0 and the least cofinite member
  auto sl = make_semilattice_omega();
  Window ws(sl, 10);
  auto fs = make_filter_base(ws, {cof});
  auto it2 = it1_witness_check(ws, fs, shifts);
  REQUIRE(it2.has_value());
  CHECK(*it2 == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("cofinite threshold is ceil(N/10)") {
  CHECK(cofinite_threshold(100) == 10);
  CHECK(cofinite_threshold(101) == 11);
  CHECK(cofinite_threshold(1) == 1);
  CHECK(cofinite_threshold(2000) == 200);
}
