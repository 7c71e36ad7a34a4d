#include "semitop/transform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "semitop/analysis.hpp"
#include "semitop/builtins.hpp"

namespace semitop {

namespace {

void require_verified(const Window& w, const Cover& c, const char* who) {
  auto r = verify_cover(w, c);
  if (!r.ok)
    throw Error(Error::Kind::Invalid, std::string(who) + ": input cover fails verification");
}

std::vector<CoverPair> dedup_pairs(std::vector<CoverPair> pairs) {
  std::vector<CoverPair> out;
  for (auto& p : pairs) {
    bool dup = false;
    for (const auto& q : out)
      if (q.constant == p.constant && q.poly == p.poly) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Cover prune_cover(const Window& w, const Cover& c) {
  require_verified(w, c, "prune_cover");
  const Semigroup& s = *w.handle;
  bool finite = s.is_finite();
  if (!finite) {
    auto oracle = s.shift_oracle();
    if (!oracle || !oracle->finite_to_one)
      throw Error(Error::Kind::Unsupported,
                  "prune_cover: symbolic handle without a finite-to-one shift oracle");
  }
  std::size_t scan = finite ? *s.size() : w.size;
  Cover out{c.handle, {}, c.target};
  for (const auto& p : c.pairs) {
    auto dec = prune_decompose(p.poly);
    if (is_pruned(p.poly)) {
      out.pairs.push_back(p);
      continue;
    }
    // fiber set B = {t : a t b = constant}
    for (std::size_t t = 0; t < scan; ++t) {
      std::size_t v = t;
      if (!dec.left.is_one) v = s.mul(dec.left.index, v);
      if (!dec.right.is_one) v = s.mul(v, dec.right.index);
      if (v == p.constant) out.pairs.push_back({dec.pruned, t});
    }
  }
  out.pairs = dedup_pairs(std::move(out.pairs));
  require_verified(w, out, "prune_cover (output)");
  return out;
}

namespace {

// does F' x B' cover all of X (finite, exhaustive)?
bool fb_covers(std::size_t n, const std::vector<PolyTerm>& fs,
               const std::vector<std::size_t>& bs) {
  std::set<std::size_t> bset(bs.begin(), bs.end());
  for (std::size_t x = 0; x < n; ++x) {
    bool hit = false;
    for (const auto& f : fs)
      if (bset.count(eval(f, x))) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

Cover regularize_cover(const Window& w, const Cover& c) {
  if (!w.handle->is_finite())
    throw Error(Error::Kind::Unsupported,
                "regularize_cover requires a finite handle (the minimization loop "
                "needs exhaustive verification)");
  require_verified(w, c, "regularize_cover");
  for (const auto& p : c.pairs)
    if (!is_pruned(p.poly))
      throw Error(Error::Kind::Invalid, "regularize_cover: cover is not pruned");
  const Semigroup& s = *w.handle;
  std::size_t n = *s.size();

  std::vector<PolyTerm> fs;
  std::vector<std::size_t> bs;
  for (const auto& p : c.pairs) {
    if (std::find(fs.begin(), fs.end(), p.poly) == fs.end()) fs.push_back(p.poly);
    if (std::find(bs.begin(), bs.end(), p.constant) == bs.end()) bs.push_back(p.constant);
  }
  std::sort(bs.begin(), bs.end());

  PolyTerm square(c.handle, {Coeff::one(), Coeff::one(), Coeff::one()});  // s: x -> xx
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t bi = 0; bi < bs.size() && !changed; ++bi) {
      std::size_t b = bs[bi];
      std::size_t b2 = s.mul(b, b);
      for (const auto& phi : fs) {
        std::size_t v = eval(phi, b2);
        if (v == b || std::find(bs.begin(), bs.end(), v) == bs.end()) continue;
        // the lemma's replacement: F' = F + phi.s.phi, drop b if still covering
        std::vector<PolyTerm> fs2 = fs;
        PolyTerm repl = compose(phi, compose(square, phi));
        if (std::find(fs2.begin(), fs2.end(), repl) == fs2.end()) fs2.push_back(repl);
        std::vector<std::size_t> bs2 = bs;
        bs2.erase(bs2.begin() + static_cast<std::ptrdiff_t>(bi));
        if (fb_covers(n, fs2, bs2)) {
          fs = std::move(fs2);
          bs = std::move(bs2);
          changed = true;
          break;
        }
      }
    }
  }

  // a posteriori: every surviving constant must be regular
  auto regs = regular_elements(Window(w.handle, n));
  for (std::size_t b : bs) {
    bool ok = std::any_of(regs.begin(), regs.end(),
                          [&](const RegularWitness& r) { return r.element == b; });
    if (!ok)
      throw Error(Error::Kind::Invalid,
                  "regularize_cover: constant " + s.render(b) + " is not regular");
  }

  Cover out{c.handle, {}, c.target};
  for (const auto& f : fs)
    for (std::size_t b : bs) {
      bool empty = true;
      for (std::size_t x = 0; x < n && empty; ++x)
        if (eval(f, x) == b) empty = false;
      if (!empty) out.pairs.push_back({f, b});
    }
  require_verified(w, out, "regularize_cover (output)");
  return out;
}

Cover transport_quotient(const Cover& c, const SemigroupPtr& target,
                         const std::vector<std::size_t>& q) {
  const Semigroup& x = *c.handle;
  const Semigroup& y = *target;
  auto nx = x.size();
  auto ny = y.size();
  if (!nx || !ny || q.size() != *nx)
    throw Error(Error::Kind::Unsupported, "transport_quotient requires finite handles");
  Window wx(c.handle, *nx);
  require_verified(wx, c, "transport_quotient");
  std::vector<bool> hit(*ny, false);
  for (std::size_t a = 0; a < *nx; ++a) {
    if (q[a] >= *ny) throw Error(Error::Kind::Invalid, "quotient map image out of range");
    hit[q[a]] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw Error(Error::Kind::Invalid, "quotient map is not surjective");
  for (std::size_t a = 0; a < *nx; ++a)
    for (std::size_t b = 0; b < *nx; ++b)
      if (q[x.mul(a, b)] != y.mul(q[a], q[b]))
        throw Error(Error::Kind::Invalid, "quotient map is not a homomorphism");

  Cover out{target, {}, std::nullopt};
  if (c.target) {
    std::vector<std::size_t> t;
    for (std::size_t a : *c.target) t.push_back(q[a]);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    out.target = std::move(t);
  }
  for (const auto& p : c.pairs) {
    std::vector<Coeff> cs;
    for (const auto& co : p.poly.coeffs)
      cs.push_back(co.is_one ? Coeff::one() : Coeff::elem(q[co.index]));
    out.pairs.push_back({PolyTerm(target, std::move(cs)), q[p.constant]});
  }
  out.pairs = dedup_pairs(std::move(out.pairs));
  Window wy(target, *ny);
  require_verified(wy, out, "transport_quotient (output)");
  return out;
}

namespace {

// coefficient sequence of f^m (concatenation with junction products), m >= 1
std::vector<Coeff> power_coeffs(const Semigroup& s, const PolyTerm& f, std::size_t m) {
  std::vector<Coeff> out = f.coeffs;
  for (std::size_t k = 1; k < m; ++k) {
    out.back() = coeff_mul(s, out.back(), f.coeffs.front());
    out.insert(out.end(), f.coeffs.begin() + 1, f.coeffs.end());
  }
  return out;
}

std::size_t factor_coeff_index(const Semigroup& s, const Coeff& c, const char* side) {
  if (!c.is_one) return c.index;
  if (auto e = s.identity()) return *e;
  throw Error(Error::Kind::Unsupported,
              std::string("product_cover: mixed coefficient needs an identity in the ") +
                  side + " factor");
}

}  // namespace

Cover product_cover(const Cover& cx, const Cover& cy, const SemigroupPtr& prod) {
  const Semigroup& x = *cx.handle;
  const Semigroup& y = *cy.handle;
  auto na = x.size();
  auto nb = y.size();
  {
    // prod must actually be the product of the two handles (componentwise)
    std::size_t probe = prod->size() ? std::min<std::size_t>(*prod->size(), 4) : 4;
    for (std::size_t i = 0; i < probe; ++i)
      for (std::size_t j = 0; j < probe; ++j) {
        auto [ai, bi] = pair_decompose(i, na, nb);
        auto [aj, bj] = pair_decompose(j, na, nb);
        std::size_t expect = pair_index(x.mul(ai, aj), y.mul(bi, bj), na, nb);
        if (prod->mul(i, j) != expect)
          throw Error(Error::Kind::Foreign,
                      "product_cover: handle is not the product of the cover handles");
      }
  }
  if (cx.target || cy.target)
    throw Error(Error::Kind::Unsupported, "product_cover expects full covers (target = X)");
  {
    Window wx(cx.handle, na ? *na : 64), wy(cy.handle, nb ? *nb : 64);
    require_verified(wx, cx, "product_cover");
    require_verified(wy, cy, "product_cover");
  }

  Cover out{prod, {}, std::nullopt};
  for (const auto& pf : cx.pairs)
    for (const auto& pg : cy.pairs) {
      std::size_t n = pf.poly.degree(), m = pg.poly.degree();
      auto fc = power_coeffs(x, pf.poly, m);  // degree n*m in x
      auto gc = power_coeffs(y, pg.poly, n);  // degree n*m in y
      std::vector<Coeff> cs(fc.size());
      for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i].is_one && gc[i].is_one) {
          cs[i] = Coeff::one();
        } else {
          std::size_t u = factor_coeff_index(x, fc[i], "left");
          std::size_t v = factor_coeff_index(y, gc[i], "right");
          cs[i] = Coeff::elem(pair_index(u, v, na, nb));
        }
      }
      std::size_t bx = power(x, pf.constant, m);
      std::size_t by = power(y, pg.constant, n);
      out.pairs.push_back({PolyTerm(prod, std::move(cs)), pair_index(bx, by, na, nb)});
    }
  out.pairs = dedup_pairs(std::move(out.pairs));
  return out;
}

GroupStructure group_from_cover(const Window& w, const Cover& c) {
  require_verified(w, c, "group_from_cover");
  const Semigroup& s = *w.handle;
  auto canc = is_cancellative(w);
  if (!canc.ok)
    throw Error(Error::Kind::Invalid, "group_from_cover: window is not cancellative");
  for (const auto& p : c.pairs)
    if (!is_pruned(p.poly))
      throw Error(Error::Kind::Invalid,
                  "group_from_cover: cover must be normalized (pruned) first");

  auto idem = idempotents(w);
  if (idem.empty())
    throw Error(Error::Kind::Invalid,
                "group_from_cover: no idempotent found (non-polybounded or "
                "non-cancellative input)");
  std::size_t e = idem.front();
  for (std::size_t x = 0; x < w.size; ++x)
    if (s.mul(e, x) != x || s.mul(x, e) != x)
      throw Error(Error::Kind::Invalid, "group_from_cover: unit law fails at " + s.render(x));

  // least regular witness per constant: b * w * b = b, then b * w = e
  std::map<std::size_t, std::size_t> binv;
  for (const auto& p : c.pairs) {
    if (binv.count(p.constant)) continue;
    for (std::size_t y = 0; y < w.size; ++y)
      if (s.mul(s.mul(p.constant, y), p.constant) == p.constant) {
        binv[p.constant] = y;
        break;
      }
    if (!binv.count(p.constant))
      throw Error(Error::Kind::Invalid, "group_from_cover: constant " +
                                            s.render(p.constant) + " has no window inverse");
  }

  GroupStructure g{w.handle, e, std::vector<std::size_t>(w.size)};
  for (std::size_t x = 0; x < w.size; ++x) {
    std::optional<std::size_t> inv;
    for (const auto& p : c.pairs) {
      if (eval(p.poly, x) != p.constant) continue;
      // pruned f(x) = x * y: y is the product of all factors after the
      // leading x (empty tail means f = id, so x = b and inverse = b^-1)
      std::optional<std::size_t> y;
      const auto& cs = p.poly.coeffs;
      for (std::size_t i = 1; i < cs.size(); ++i) {
        if (!cs[i].is_one) y = y ? s.mul(*y, cs[i].index) : cs[i].index;
        if (i + 1 < cs.size()) y = y ? s.mul(*y, x) : x;
      }
      std::size_t w_b = binv.at(p.constant);
      inv = y ? s.mul(*y, w_b) : w_b;
      break;
    }
    if (!inv)
      throw Error(Error::Kind::Invalid,
                  "group_from_cover: window element not covered: " + s.render(x));
    if (s.mul(x, *inv) != e || s.mul(*inv, x) != e)
      throw Error(Error::Kind::Invalid,
                  "group_from_cover: extracted inverse fails at " + s.render(x));
    g.inverse[x] = *inv;
  }

  if (w.exhaustive()) {
    // with identity, total inverses and associativity this is a group table;
    // re-check rows and columns are permutations
    for (std::size_t a = 0; a < w.size; ++a) {
      std::vector<bool> row(w.size, false), col(w.size, false);
      for (std::size_t b = 0; b < w.size; ++b) {
        row[s.mul(a, b)] = true;
        col[s.mul(b, a)] = true;
      }
      for (std::size_t b = 0; b < w.size; ++b)
        if (!row[b] || !col[b])
          throw Error(Error::Kind::Invalid, "group_from_cover: table is not a group");
    }
  }
  return g;
}

Cover normalize_group_cover(const SemigroupPtr& g, const Cover& c) {
  const Semigroup& s = *g;
  auto e = s.group_identity();
  if (!e)
    throw Error(Error::Kind::Unsupported, "normalize_group_cover: missing inverses");
  if (c.handle->id() != s.id())
    throw Error(Error::Kind::Foreign, "normalize_group_cover: cover on a different handle");
  Cover out{c.handle, {}, c.target};
  for (const auto& p : c.pairs) {
    auto binv = s.group_inverse(p.constant);
    if (!binv)
      throw Error(Error::Kind::Unsupported, "normalize_group_cover: missing inverses");
    std::vector<Coeff> cs = p.poly.coeffs;
    Coeff a0 = cs.front();
    Coeff tail = coeff_mul(s, cs.back(), Coeff::elem(*binv));
    tail = coeff_mul(s, tail, a0);
    cs.front() = Coeff::one();
    cs.back() = tail;
    out.pairs.push_back({PolyTerm(c.handle, std::move(cs)), *e});
  }
  out.pairs = dedup_pairs(std::move(out.pairs));
  return out;
}

CenterBoundReport center_bound_check(const Window& w, const Cover& c) {
  const Semigroup& s = *w.handle;
  auto z = center(w);
  std::set<std::size_t> zset(z.begin(), z.end());
  if (c.target) {
    // the cover must target (a subset of) the window center
    for (std::size_t a : *c.target)
      if (!zset.count(a))
        throw Error(Error::Kind::Invalid,
                    "center_bound_check: cover target is not central: " + s.render(a));
  }

  CenterBoundReport rep;
  // on central x: f(x) = (a_0 a_1 ... a_n) x^p; collect (a_i, p_i, b_i)
  struct Reduced {
    std::optional<std::size_t> a;
    std::size_t p;
    std::size_t b;
  };
  std::vector<Reduced> reduced;
  for (const auto& pr : c.pairs) {
    std::optional<std::size_t> a;
    for (const auto& co : pr.poly.coeffs)
      if (!co.is_one) a = a ? s.mul(*a, co.index) : co.index;
    reduced.push_back({a, pr.poly.degree(), pr.constant});
    rep.max_degree = std::max(rep.max_degree, pr.poly.degree());
  }
  // F = union of the linear fibers {x in Z : a_i x = b_i}
  std::set<std::size_t> fset;
  for (const auto& r : reduced)
    for (std::size_t x : z) {
      std::size_t v = r.a ? s.mul(*r.a, x) : x;
      if (v == r.b) fset.insert(x);
    }
  rep.fiber_size = fset.size();
  rep.bound = (1 + c.pairs.size() * rep.fiber_size) * rep.max_degree;

  rep.verified = true;
  for (std::size_t zx : z) {
    // least m < m' <= bound with z^m = z^m'
    std::vector<std::size_t> pw;
    pw.push_back(zx);
    std::optional<std::array<std::size_t, 3>> found;
    for (std::size_t m2 = 2; m2 <= rep.bound && !found; ++m2) {
      pw.push_back(s.mul(pw.back(), zx));
      for (std::size_t m = 1; m < m2; ++m)
        if (pw[m - 1] == pw[m2 - 1]) {
          found = std::array<std::size_t, 3>{zx, m, m2};
          break;
        }
    }
    if (found) {
      rep.witnesses.push_back(*found);
    } else {
      rep.verified = false;
      rep.violation = zx;
      break;
    }
  }
  return rep;
}

}  // namespace semitop
