#include "semitop/topology.hpp"

#include <algorithm>
#include <map>

namespace semitop {

std::size_t cofinite_threshold(std::size_t window_size) { return (window_size + 9) / 10; }

namespace {

// a finite subset of X^1: the adjoined identity plus element values
struct WordSet {
  bool has_one = false;
  std::set<std::size_t> vals;
};

struct OpBudget {
  std::size_t used = 0, guard;
  explicit OpBudget(std::size_t g) : guard(g) {}
  void spend(std::size_t k = 1) {
    used += k;
    if (used > guard)
      throw Error(Error::Kind::Guard, "avoider search: product budget exceeded");
  }
};

// word products of length <= n over pool (pool includes the identity, so
// these are exactly the n-fold products)
WordSet word_products(const Semigroup& s, const std::vector<std::size_t>& pool,
                      std::size_t n, OpBudget& ops) {
  WordSet frontier;
  frontier.has_one = true;
  for (std::size_t round = 0; round < n; ++round) {
    WordSet next = frontier;  // multiplying by the identity keeps everything
    for (std::size_t p : pool) {
      if (frontier.has_one) next.vals.insert(p);
      for (std::size_t v : frontier.vals) {
        ops.spend();
        next.vals.insert(s.mul(v, p));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

// condition (*_n) for a single candidate: no degree-k polynomial with
// coefficients in wn maps x into wn's element values, for any k <= n
bool candidate_ok(const Semigroup& s, std::size_t x, const WordSet& wn, std::size_t n,
                  OpBudget& ops) {
  // r-values after k occurrences of x: values of a_0 x a_1 ... a_{k-1} x
  std::set<std::size_t> r;
  if (wn.has_one) r.insert(x);
  for (std::size_t a0 : wn.vals) {
    ops.spend();
    r.insert(s.mul(a0, x));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<std::size_t> fvals;
    if (wn.has_one) fvals = r;
    for (std::size_t rv : r)
      for (std::size_t a : wn.vals) {
        ops.spend();
        fvals.insert(s.mul(rv, a));
      }
    for (std::size_t f : fvals)
      if (wn.vals.count(f)) return false;  // f(x) = a_{k+1} is achievable
    if (k < n) {
      std::set<std::size_t> next;
      for (std::size_t f : fvals) {
        ops.spend();
        next.insert(s.mul(f, x));
      }
      r = std::move(next);
    }
  }
  return true;
}

std::vector<std::size_t> step_pool(const std::vector<std::size_t>& elements, std::size_t n) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 1; i <= n; ++i) pool.push_back(i - 1);  // b_i
  for (std::size_t i = 0; i < n; ++i) pool.push_back(elements[i]);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

}  // namespace

AvoiderOutcome build_avoider_sequence(const Window& w, std::size_t steps,
                                      std::size_t op_guard) {
  const Semigroup& s = *w.handle;
  AvoiderOutcome out;
  out.sequence.handle = w.handle;
  out.sequence.elements.push_back(0);  // x_0: least element, (*_0) vacuous
  out.sequence.constraint_counts.push_back(0);
  OpBudget ops(op_guard);
  for (std::size_t n = 1; n <= steps; ++n) {
    auto pool = step_pool(out.sequence.elements, n);
    WordSet wn = word_products(s, pool, n, ops);
    std::size_t before = ops.used;
    std::optional<std::size_t> pick;
    std::size_t tried = 0;
    for (std::size_t x = 0; x < w.size; ++x) {
      if (std::find(out.sequence.elements.begin(), out.sequence.elements.end(), x) !=
          out.sequence.elements.end())
        continue;
      ++tried;
      if (candidate_ok(s, x, wn, n, ops)) {
        pick = x;
        break;
      }
    }
    if (!pick) {
      out.status = tried == 0 ? AvoiderOutcome::Status::WindowExhausted
                              : AvoiderOutcome::Status::PolyboundedObstruction;
      out.failed_step = n;
      out.candidates_exhausted = tried;
      return out;
    }
    out.sequence.elements.push_back(*pick);
    out.sequence.constraint_counts.push_back(ops.used - before);
  }
  return out;
}

bool verify_avoider_step(const Window& w, const std::vector<std::size_t>& elements,
                         std::size_t n, std::size_t op_guard) {
  if (n == 0) return true;  // (*_0) vacuous
  if (n >= elements.size()) throw Error(Error::Kind::Invalid, "avoider step out of range");
  const Semigroup& s = *w.handle;
  OpBudget ops(op_guard);
  auto pool = step_pool(elements, n);

  // independent word enumeration: explicit depth-first over sequences
  WordSet wn;
  std::vector<std::size_t> stack;
  auto value_of = [&]() {
    std::size_t v = stack[0];
    for (std::size_t i = 1; i < stack.size(); ++i) {
      ops.spend();
      v = s.mul(v, stack[i]);
    }
    return v;
  };
  auto dfs = [&](auto&& self) -> void {
    if (!stack.empty()) wn.vals.insert(value_of());
    if (stack.size() == n) return;
    for (std::size_t p : pool) {
      stack.push_back(p);
      self(self);
      stack.pop_back();
    }
  };
  wn.has_one = true;  // the empty word / all-identity coefficients
  dfs(dfs);

  // suffix values of x a_j x a_{j+1} ... x a_k, built right-to-left
  std::size_t x = elements[n];
  std::set<std::size_t> t;  // values of x * (word)
  if (wn.has_one) t.insert(x);
  for (std::size_t a : wn.vals) {
    ops.spend();
    t.insert(s.mul(x, a));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    // f-values for degree k: a_0 * t with a_0 in wn (a_0 = 1 included)
    for (std::size_t tv : t) {
      if (wn.vals.count(tv)) return false;
      for (std::size_t a0 : wn.vals) {
        ops.spend();
        if (wn.vals.count(s.mul(a0, tv))) return false;
      }
    }
    if (k < n) {
      std::set<std::size_t> next;
      for (std::size_t a : wn.vals)
        for (std::size_t tv : t) {
          ops.spend(2);
          next.insert(s.mul(s.mul(x, a), tv));
        }
      for (std::size_t tv : t) {
        ops.spend();
        next.insert(s.mul(x, tv));  // interior coefficient = 1
      }
      t = std::move(next);
    }
  }
  return true;
}

FamilyK gen_family_K(const AvoiderSequence& a, const std::vector<std::size_t>& coeff_pool,
                     std::size_t max_blocks, std::size_t max_entries) {
  FamilyK k;
  k.handle = a.handle;
  k.base = a.elements;
  k.pool = coeff_pool;
  std::sort(k.pool.begin(), k.pool.end());
  k.pool.erase(std::unique(k.pool.begin(), k.pool.end()), k.pool.end());
  std::vector<Coeff> opts;
  opts.push_back(Coeff::one());
  for (std::size_t p : k.pool) opts.push_back(Coeff::elem(p));
  for (std::size_t blocks = 1; blocks <= max_blocks; ++blocks) {
    std::vector<std::size_t> pick(blocks + 1, 0);
    for (;;) {
      if (k.entries.size() == max_entries) return k;
      std::vector<Coeff> tuple(blocks + 1);
      for (std::size_t i = 0; i <= blocks; ++i) tuple[i] = opts[pick[i]];
      k.entries.push_back(std::move(tuple));
      std::size_t i = blocks + 1;
      while (i > 0) {
        if (++pick[i - 1] < opts.size()) break;
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return k;
}

std::set<std::size_t> expand_entry(const FamilyK& k, std::size_t entry) {
  if (entry >= k.entries.size())
    throw Error(Error::Kind::Invalid, "family entry out of range");
  const Semigroup& s = *k.handle;
  const auto& tuple = k.entries[entry];
  // states are elements of X^1; only the initial state can be the identity
  WordSet cur;
  if (tuple[0].is_one)
    cur.has_one = true;
  else
    cur.vals.insert(tuple[0].index);
  for (std::size_t blk = 1; blk < tuple.size(); ++blk) {
    WordSet next;
    for (std::size_t z : k.base) {
      std::size_t zc = tuple[blk].is_one ? z : s.mul(z, tuple[blk].index);
      if (cur.has_one) next.vals.insert(zc);
      for (std::size_t v : cur.vals) next.vals.insert(s.mul(v, zc));
    }
    cur = std::move(next);
  }
  return cur.vals;
}

namespace {

std::vector<Coeff> concat_tuple(const Semigroup& s, const std::vector<Coeff>& a,
                                const std::vector<Coeff>& b) {
  std::vector<Coeff> out(a.begin(), a.end() - 1);
  out.push_back(coeff_mul(s, a.back(), b.front()));
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

std::optional<std::size_t> find_entry(const FamilyK& k, const std::vector<Coeff>& tuple) {
  for (std::size_t i = 0; i < k.entries.size(); ++i)
    if (k.entries[i] == tuple) return i;
  return std::nullopt;
}

bool subset_of(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

L0Report check_l0_conditions(const FamilyK& k, const Window& w) {
  const Semigroup& s = *k.handle;
  L0Report rep;
  rep.threshold = cofinite_threshold(w.size);

  std::vector<std::set<std::size_t>> full, win;
  for (std::size_t i = 0; i < k.entries.size(); ++i) {
    full.push_back(expand_entry(k, i));
    std::set<std::size_t> r;
    for (std::size_t v : full.back())
      if (v < w.size) r.insert(v);
    win.push_back(std::move(r));
  }

  std::vector<Coeff> opts;
  opts.push_back(Coeff::one());
  for (std::size_t p : k.pool) opts.push_back(Coeff::elem(p));

  // (1) K L subset M via tuple concatenation
  for (std::size_t i = 0; i < k.entries.size(); ++i)
    for (std::size_t j = 0; j < k.entries.size(); ++j) {
      ++rep.pairs_checked;
      auto m = find_entry(k, concat_tuple(s, k.entries[i], k.entries[j]));
      bool ok = false;
      if (m) {
        std::set<std::size_t> prod;
        for (std::size_t x : win[i])
          for (std::size_t y : win[j]) prod.insert(s.mul(x, y));
        ok = subset_of(prod, full[*m]);
      }
      if (ok)
        ++rep.pairs_witnessed;
      else if (!rep.first_unwitnessed)
        rep.first_unwitnessed = {i, j};
    }

  // (2) a K b subset L, a and b from the pool (and identity)
  for (std::size_t i = 0; i < k.entries.size(); ++i)
    for (const auto& a : opts)
      for (const auto& b : opts) {
        ++rep.shifts_checked;
        std::vector<Coeff> shifted = k.entries[i];
        shifted.front() = coeff_mul(s, a, shifted.front());
        shifted.back() = coeff_mul(s, shifted.back(), b);
        auto l = find_entry(k, shifted);
        if (!l) continue;
        std::set<std::size_t> img;
        for (std::size_t x : win[i]) {
          std::size_t v = a.is_one ? x : s.mul(a.index, x);
          if (!b.is_one) v = s.mul(v, b.index);
          img.insert(v);
        }
        if (subset_of(img, full[*l])) ++rep.shifts_witnessed;
      }

  // (3) fibers {x in K : a x b = c} on the window
  for (std::size_t i = 0; i < k.entries.size(); ++i)
    for (const auto& a : opts)
      for (const auto& b : opts) {
        std::map<std::size_t, std::size_t> fiber;
        for (std::size_t x : win[i]) {
          std::size_t v = a.is_one ? x : s.mul(a.index, x);
          if (!b.is_one) v = s.mul(v, b.index);
          rep.max_fiber3 = std::max(rep.max_fiber3, ++fiber[v]);
        }
      }

  // (4) fibers {(x,y) in K x L : x y = c} on the window
  for (std::size_t i = 0; i < k.entries.size(); ++i)
    for (std::size_t j = 0; j < k.entries.size(); ++j) {
      std::map<std::size_t, std::size_t> fiber;
      for (std::size_t x : win[i])
        for (std::size_t y : win[j])
          rep.max_fiber4 = std::max(rep.max_fiber4, ++fiber[s.mul(x, y)]);
    }

  rep.ok3 = rep.max_fiber3 <= rep.threshold;
  rep.ok4 = rep.max_fiber4 <= rep.threshold;
  return rep;
}

TauZeroOracle::TauZeroOracle(FamilyK f, Window w, std::optional<std::size_t> t)
    : family(std::move(f)),
      window(std::move(w)),
      threshold(t ? *t : cofinite_threshold(window.size)) {
  if (family.handle->id() != window.handle->id())
    throw Error(Error::Kind::Foreign, "family and window on different handles");
}

Tau0Result tau0_is_neighborhood(const std::vector<std::size_t>& v, bool contains_zero,
                                const TauZeroOracle& oracle) {
  if (!contains_zero)
    throw Error(Error::Kind::Usage, "tau0_is_neighborhood: V must contain 0");
  std::set<std::size_t> vset(v.begin(), v.end());
  Tau0Result r;
  r.threshold = oracle.threshold;
  r.is_neighborhood = true;
  for (std::size_t i = 0; i < oracle.family.entries.size(); ++i) {
    std::size_t deficit = 0;
    for (std::size_t x : expand_entry(oracle.family, i))
      if (x < oracle.window.size && !vset.count(x)) ++deficit;
    r.deficits.push_back(deficit);
    if (deficit >= oracle.threshold) r.is_neighborhood = false;
  }
  return r;
}

FilterBase make_filter_base(Window w, std::vector<std::vector<std::size_t>> sets) {
  if (sets.empty()) throw Error(Error::Kind::Invalid, "filter base with no sets");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw Error(Error::Kind::Invalid, "filter base contains an empty set");
  }
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<std::size_t> inter;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(inter));
      if (inter.empty())
        throw Error(Error::Kind::Invalid,
                    "filter-base law violated: disjoint base sets " + std::to_string(i) +
                        " and " + std::to_string(j));
    }
  return FilterBase{std::move(w), std::move(sets)};
}

FilterBase filter_product(const FilterBase& e, const FilterBase& f) {
  if (e.window.handle->id() != f.window.handle->id())
    throw Error(Error::Kind::Foreign, "filter product across different handles");
  const Semigroup& s = *e.window.handle;
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& a : e.sets)
    for (const auto& b : f.sets) {
      std::vector<std::size_t> p;
      for (std::size_t x : a)
        for (std::size_t y : b) p.push_back(s.mul(x, y));
      sets.push_back(std::move(p));
    }
  return make_filter_base(e.window, std::move(sets));
}

FilterClass filter_classify(const FilterBase& f) {
  FilterClass c;
  std::vector<std::size_t> inter = f.sets.front();
  for (std::size_t i = 1; i < f.sets.size(); ++i) {
    std::vector<std::size_t> next;
    std::set_intersection(inter.begin(), inter.end(), f.sets[i].begin(), f.sets[i].end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  c.free_on_window = inter.empty();
  c.principal_on_window =
      std::any_of(f.sets.begin(), f.sets.end(), [](const auto& s) { return s.size() == 1; });
  return c;
}

FilterBase shifted_product_base(const FilterBase& f, const std::vector<Coeff>& shifts,
                                std::size_t set_guard) {
  if (shifts.size() < 2)
    throw Error(Error::Kind::Usage, "shifted product needs shifts a_0 .. a_n with n >= 1");
  const Semigroup& s = *f.window.handle;
  std::size_t n = shifts.size() - 1;
  std::size_t choices = 1;
  for (std::size_t i = 0; i < n; ++i) {
    choices *= f.sets.size();
    if (choices > set_guard)
      throw Error(Error::Kind::Guard, "shifted product: base-set choice count exceeds guard");
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    // value set of a_0 F_1 a_1 ... F_n a_n for this choice of sets
    WordSet cur;
    if (shifts[0].is_one)
      cur.has_one = true;
    else
      cur.vals.insert(shifts[0].index);
    for (std::size_t blk = 0; blk < n; ++blk) {
      WordSet next;
      for (std::size_t x : f.sets[pick[blk]]) {
        std::size_t xc = shifts[blk + 1].is_one ? x : s.mul(x, shifts[blk + 1].index);
        if (cur.has_one) next.vals.insert(xc);
        for (std::size_t v : cur.vals) next.vals.insert(s.mul(v, xc));
      }
      cur = std::move(next);
    }
    out.emplace_back(cur.vals.begin(), cur.vals.end());
    std::size_t i = n;
    while (i > 0) {
      if (++pick[i - 1] < f.sets.size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return make_filter_base(f.window, std::move(out));
}

T1WitnessResult t1_witness_check(const Window& w, const FilterBase& f,
                                 const std::vector<Coeff>& shifts) {
  if (w.handle->id() != f.window.handle->id())
    throw Error(Error::Kind::Foreign, "filter base on a different handle");
  T1WitnessResult r;
  r.cls = filter_classify(shifted_product_base(f, shifts));
  r.witnessed = !r.cls.free_on_window && !r.cls.principal_on_window;
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> it1_witness_check(
    const Window& w, const FilterBase& f, const std::vector<Coeff>& shifts) {
  if (w.handle->id() != f.window.handle->id())
    throw Error(Error::Kind::Foreign, "filter base on a different handle");
  auto base = shifted_product_base(f, shifts);
  std::vector<std::size_t> inter = base.sets.front();
  for (std::size_t i = 1; i < base.sets.size(); ++i) {
    std::vector<std::size_t> next;
    std::set_intersection(inter.begin(), inter.end(), base.sets[i].begin(),
                          base.sets[i].end(), std::back_inserter(next));
    inter = std::move(next);
  }
  if (inter.size() < 2) return std::nullopt;
  return std::make_pair(inter[0], inter[1]);
}

}  // namespace semitop
