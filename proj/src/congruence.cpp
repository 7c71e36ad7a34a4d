#include "semitop/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semitop/builtins.hpp"

namespace semitop {

namespace {

std::size_t finite_order(const SemigroupPtr& s) {
  auto c = s->size();
  if (!c) throw Error(Error::Kind::Unsupported, "operation requires a finite handle");
  return *c;
}

// partition as restricted-growth-style class labels, classes ordered by
// least member
std::vector<std::size_t> labels_of(const std::vector<std::vector<std::size_t>>& classes,
                                   std::size_t n) {
  std::vector<std::size_t> lab(n, n);
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (least member, class idx)
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error(Error::Kind::Invalid, "empty congruence class");
    order.emplace_back(*std::min_element(classes[c].begin(), classes[c].end()), c);
  }
  std::sort(order.begin(), order.end());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    for (std::size_t x : classes[order[rank].second]) {
      if (x >= n || lab[x] != n)
        throw Error(Error::Kind::Invalid, "classes do not partition the semigroup");
      lab[x] = rank;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (lab[x] == n) throw Error(Error::Kind::Invalid, "classes do not cover the semigroup");
  return lab;
}

std::vector<std::vector<std::size_t>> classes_of(const std::vector<std::size_t>& lab) {
  std::size_t k = lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
  std::vector<std::vector<std::size_t>> classes(k);
  for (std::size_t x = 0; x < lab.size(); ++x) classes[lab[x]].push_back(x);
  return classes;
}

bool compatible(const Semigroup& s, const std::vector<std::size_t>& lab) {
  std::size_t n = lab.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (lab[x] != lab[y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (lab[s.mul(x, z)] != lab[s.mul(y, z)]) return false;
        if (lab[s.mul(z, x)] != lab[s.mul(z, y)]) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<std::size_t> Congruence::class_of() const {
  return labels_of(classes, finite_order(handle));
}

Congruence make_congruence(SemigroupPtr s, std::vector<std::vector<std::size_t>> classes) {
  std::size_t n = finite_order(s);
  auto lab = labels_of(classes, n);
  if (!compatible(*s, lab))
    throw Error(Error::Kind::Invalid, "partition is not compatible with the operation");
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return Congruence{std::move(s), std::move(classes)};
}

bool is_ideal(const Window& w, const std::vector<std::size_t>& members) {
  std::set<std::size_t> m(members.begin(), members.end());
  for (std::size_t x : members)
    for (std::size_t y = 0; y < w.size; ++y) {
      if (w.exhaustive()) {
        if (!m.count(w.handle->mul(x, y)) || !m.count(w.handle->mul(y, x))) return false;
      } else {
        // window check: a product landing outside the window is inconclusive,
        // one landing inside must be a member
        std::size_t xy = w.handle->mul(x, y), yx = w.handle->mul(y, x);
        if ((xy < w.size && !m.count(xy)) || (yx < w.size && !m.count(yx))) return false;
      }
    }
  return true;
}

QuotientResult quotient_by_congruence(const SemigroupPtr& s, const Congruence& c) {
  if (c.handle->id() != s->id())
    throw Error(Error::Kind::Foreign, "congruence belongs to a different handle");
  std::size_t n = finite_order(s);
  auto lab = labels_of(c.classes, n);
  if (!compatible(*s, lab))
    throw Error(Error::Kind::Invalid, "partition is not compatible with the operation");
  std::size_t k = *std::max_element(lab.begin(), lab.end()) + 1;
  // least-index representative of each class
  std::vector<std::size_t> rep(k, n);
  for (std::size_t x = 0; x < n; ++x) rep[lab[x]] = std::min(rep[lab[x]], x);
  std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a][b] = lab[s->mul(rep[a], rep[b])];
  auto q = from_cayley(table, s->name() + "/~");
  // re-verify the quotient map is a homomorphism
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lab[s->mul(a, b)] != q->mul(lab[a], lab[b]))
        throw Error(Error::Kind::Invalid, "quotient map failed homomorphism re-verification");
  return {q, lab};
}

QuotientResult quotient_by_ideal(const SemigroupPtr& s, const IdealSet& ideal) {
  if (ideal.handle->id() != s->id())
    throw Error(Error::Kind::Foreign, "ideal belongs to a different handle");
  std::size_t n = finite_order(s);
  if (ideal.members.empty()) throw Error(Error::Kind::Invalid, "Rees quotient by empty ideal");
  Window w(s, n);
  if (!is_ideal(w, ideal.members))
    throw Error(Error::Kind::Invalid, "member set is not an ideal");
  std::vector<bool> in(n, false);
  for (std::size_t x : ideal.members) in.at(x) = true;
  std::vector<std::vector<std::size_t>> classes;
  classes.push_back({});
  for (std::size_t x = 0; x < n; ++x)
    if (in[x])
      classes[0].push_back(x);
    else
      classes.push_back({x});
  return quotient_by_congruence(s, make_congruence(s, classes));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<std::size_t> closure_labels(const Semigroup& s, std::size_t n,
                                        std::vector<std::pair<std::size_t, std::size_t>> work) {
  UnionFind uf(n);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (std::size_t z = 0; z < n; ++z) {
      work.emplace_back(s.mul(a, z), s.mul(b, z));
      work.emplace_back(s.mul(z, a), s.mul(z, b));
    }
  }
  // normalize roots to class ranks ordered by least member
  std::vector<std::size_t> lab(n);
  std::map<std::size_t, std::size_t> rank;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = uf.find(x);
    auto [it, fresh] = rank.emplace(r, rank.size());
    lab[x] = it->second;
  }
  return lab;
}

}  // namespace

Congruence congruence_closure(const SemigroupPtr& s,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::size_t n = finite_order(s);
  auto lab = closure_labels(*s, n, pairs);
  return Congruence{s, classes_of(lab)};
}

std::vector<Congruence> enumerate_congruences(const SemigroupPtr& s, std::size_t order_guard) {
  std::size_t n = finite_order(s);
  if (n > order_guard)
    throw Error(Error::Kind::Guard, "enumerate_congruences: order exceeds guard");
  // BFS from the diagonal: closing any congruence with one extra pair stays a
  // congruence, and every congruence is reachable this way
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> frontier;
  std::vector<std::size_t> diag(n);
  std::iota(diag.begin(), diag.end(), 0);
  seen.insert(diag);
  frontier.push_back(diag);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& lab : frontier)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          if (lab[a] == lab[b]) continue;
          std::vector<std::pair<std::size_t, std::size_t>> pairs{{a, b}};
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
              if (lab[x] == lab[y]) pairs.emplace_back(x, y);
          auto closed = closure_labels(*s, n, pairs);
          if (seen.insert(closed).second) next.push_back(closed);
        }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::size_t>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    std::size_t ka = *std::max_element(a.begin(), a.end());
    std::size_t kb = *std::max_element(b.begin(), b.end());
    if (ka != kb) return ka > kb;
    return a < b;
  });
  std::vector<Congruence> out;
  out.reserve(all.size());
  for (auto& lab : all) out.push_back(Congruence{s, classes_of(lab)});
  return out;
}

}  // namespace semitop
