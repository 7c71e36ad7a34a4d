#include "semitop/cover.hpp"

#include <algorithm>
#include <map>

namespace semitop {

void Cover::validate() const {
  if (!handle) throw Error(Error::Kind::Invalid, "cover over null handle");
  auto n = handle->size();
  for (const auto& p : pairs) {
    if (p.poly.handle->id() != handle->id())
      throw Error(Error::Kind::Foreign, "cover pair polynomial over a different handle");
    if (n && p.constant >= *n)
      throw Error(Error::Kind::Invalid, "cover constant out of range");
  }
  if (target && n)
    for (std::size_t a : *target)
      if (a >= *n) throw Error(Error::Kind::Invalid, "cover target element out of range");
}

VerifyResult verify_cover(const Window& w, const Cover& c) {
  c.validate();
  if (c.handle->id() != w.handle->id())
    throw Error(Error::Kind::Foreign, "cover belongs to a different handle");
  auto covered = [&](std::size_t x) {
    for (const auto& p : c.pairs)
      if (eval(p.poly, x) == p.constant) return true;
    return false;
  };
  VerifyResult r;
  if (c.target) {
    // explicit targets are checked member by member, hence exhaustively
    r.certainty = Certainty::Exhaustive;
    for (std::size_t a : *c.target)
      if (!covered(a)) {
        if (!r.counterexample || a < *r.counterexample) r.counterexample = a;
      }
  } else {
    r.certainty = w.exhaustive() ? Certainty::Exhaustive : Certainty::Window;
    for (std::size_t x = 0; x < w.size; ++x)
      if (!covered(x)) {
        r.counterexample = x;
        break;
      }
  }
  r.ok = !r.counterexample;
  return r;
}

Cover trivial_finite_cover(SemigroupPtr s) {
  auto n = s->size();
  if (!n) throw Error(Error::Kind::Unsupported, "trivial cover requires a finite handle");
  Cover c{s, {}, std::nullopt};
  for (std::size_t b = 0; b < *n; ++b) c.pairs.push_back({identity_poly(s), b});
  return c;
}

Bitset window_target(const Window& w, const std::optional<std::vector<std::size_t>>& target) {
  Bitset t(w.size);
  if (!target) {
    for (std::size_t x = 0; x < w.size; ++x) t.set(x);
  } else {
    for (std::size_t a : *target) {
      if (a >= w.size)
        throw Error(Error::Kind::Invalid, "target element outside the window");
      t.set(a);
    }
  }
  return t;
}

std::vector<CandidatePair> enumerate_candidates(const Window& w, const SearchBounds& b,
                                                const Bitset& target,
                                                std::optional<std::size_t> avoid_point) {
  std::vector<Coeff> opts;
  opts.push_back(Coeff::one());
  for (std::size_t i : b.coeff_pool)
    if (std::find(opts.begin(), opts.end(), Coeff::elem(i)) == opts.end())
      opts.push_back(Coeff::elem(i));

  // guard on the number of candidate polynomials
  std::size_t total = 0;
  for (std::size_t d = 1; d <= b.degree_bound; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      if (count > b.candidate_guard / opts.size() + 1) {
        count = b.candidate_guard + 1;
        break;
      }
      count *= opts.size();
    }
    total += count;
    if (total > b.candidate_guard)
      throw Error(Error::Kind::Guard, "candidate polynomial count exceeds guard");
  }

  std::vector<CandidatePair> out;
  std::map<Bitset, bool> seen;  // fiber dedup, first representative kept
  std::vector<std::size_t> vals(w.size);
  for (std::size_t d = 1; d <= b.degree_bound; ++d) {
    std::vector<std::size_t> pick(d + 1, 0);  // indices into opts, lexicographic
    for (;;) {
      std::vector<Coeff> cs(d + 1);
      for (std::size_t i = 0; i <= d; ++i) cs[i] = opts[pick[i]];
      PolyTerm f(w.handle, std::move(cs));
      for (std::size_t x = 0; x < w.size; ++x) vals[x] = eval(f, x);
      // constants ascending over values hit from the target
      std::vector<std::size_t> consts;
      for (std::size_t x = 0; x < w.size; ++x)
        if (target.test(x)) consts.push_back(vals[x]);
      std::sort(consts.begin(), consts.end());
      consts.erase(std::unique(consts.begin(), consts.end()), consts.end());
      for (std::size_t c : consts) {
        if (avoid_point && eval(f, *avoid_point) == c) continue;
        Bitset fiber(w.size);
        for (std::size_t x = 0; x < w.size; ++x)
          if (target.test(x) && vals[x] == c) fiber.set(x);
        if (fiber.none()) continue;
        if (!seen.emplace(fiber, true).second) continue;
        out.push_back({f, c, std::move(fiber)});
      }
      // next coefficient tuple
      std::size_t i = d + 1;
      while (i > 0) {
        if (++pick[i - 1] < opts.size()) break;
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return out;
}

namespace {

bool cover_dfs(const std::vector<CandidatePair>& cands,
               const std::vector<std::size_t>& suffix_max, const Bitset& target,
               std::size_t size_bound, std::size_t start, Bitset& covered,
               std::vector<std::size_t>& chosen) {
  if (covered.covers(target)) return true;
  if (chosen.size() == size_bound) return false;
  {
    Bitset both = target;
    both &= covered;
    std::size_t need = target.count() - both.count();
    std::size_t room = size_bound - chosen.size();
    if (start >= cands.size() || need > room * suffix_max[start]) return false;
  }
  for (std::size_t i = start; i < cands.size(); ++i) {
    if (covered.covers(cands[i].fiber)) continue;  // contributes nothing here
    Bitset saved = covered;
    covered |= cands[i].fiber;
    chosen.push_back(i);
    if (cover_dfs(cands, suffix_max, target, size_bound, i + 1, covered, chosen)) return true;
    chosen.pop_back();
    covered = std::move(saved);
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> least_cover_subset(
    const std::vector<CandidatePair>& cands, const Bitset& target, std::size_t size_bound) {
  std::vector<std::size_t> suffix_max(cands.size() + 1, 0);
  for (std::size_t i = cands.size(); i-- > 0;)
    suffix_max[i] = std::max(suffix_max[i + 1], cands[i].fiber.count());
  Bitset covered(target.size());
  std::vector<std::size_t> chosen;
  if (cover_dfs(cands, suffix_max, target, size_bound, 0, covered, chosen)) return chosen;
  return std::nullopt;
}

std::optional<Cover> search_cover(const Window& w, const SearchBounds& b,
                                  const std::optional<std::vector<std::size_t>>& target) {
  Bitset t = window_target(w, target);
  auto cands = enumerate_candidates(w, b, t, std::nullopt);
  auto subset = least_cover_subset(cands, t, b.size_bound);
  if (!subset) return std::nullopt;
  Cover c{w.handle, {}, target};
  for (std::size_t i : *subset) c.pairs.push_back({cands[i].poly, cands[i].constant});
  return c;
}

}  // namespace semitop
