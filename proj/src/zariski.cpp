#include "semitop/zariski.hpp"

namespace semitop {

SubbasicSet SubbasicSet::not_equal_const(PolyTerm f, std::size_t b) {
  if (auto n = f.handle->size(); n && b >= *n)
    throw Error(Error::Kind::Invalid, "subbasic constant out of range");
  return SubbasicSet{std::move(f), std::nullopt, b};
}

SubbasicSet SubbasicSet::not_equal_poly(PolyTerm f, PolyTerm g) {
  if (f.handle->id() != g.handle->id())
    throw Error(Error::Kind::Foreign, "subbasic polynomials over different handles");
  return SubbasicSet{std::move(f), std::move(g), 0};
}

bool membership(const SubbasicSet& s, std::size_t x) {
  std::size_t lhs = eval(s.f, x);
  return s.g ? lhs != eval(*s.g, x) : lhs != s.b;
}

IsolationVerify verify_isolation(const Window& w, const IsolationCertificate& cert) {
  if (cert.handle->id() != w.handle->id())
    throw Error(Error::Kind::Foreign, "certificate belongs to a different handle");
  // X \ {a} is empty on a one-point window, so an empty union suffices there
  if (cert.pairs.empty() && w.size > 1)
    throw Error(Error::Kind::Invalid, "isolation certificate needs at least one pair");
  auto in_union = [&](std::size_t x) {
    for (const auto& p : cert.pairs)
      if (eval(p.poly, x) == p.constant) return true;
    return false;
  };
  IsolationVerify r;
  r.certainty = w.exhaustive() ? Certainty::Exhaustive : Certainty::Window;
  r.point_in_union = in_union(cert.point);
  for (std::size_t x = 0; x < w.size; ++x) {
    if (x == cert.point) continue;
    if (!in_union(x)) {
      r.uncovered = x;
      break;
    }
  }
  r.ok = !r.point_in_union && !r.uncovered;
  return r;
}

std::optional<IsolationCertificate> search_isolation(const Window& w, std::size_t a,
                                                     const SearchBounds& b) {
  if (a >= w.size)
    throw Error(Error::Kind::Invalid, "isolation point outside the window");
  Bitset target(w.size);
  for (std::size_t x = 0; x < w.size; ++x)
    if (x != a) target.set(x);
  auto cands = enumerate_candidates(w, b, target, a);
  auto subset = least_cover_subset(cands, target, b.size_bound);
  if (!subset) return std::nullopt;
  IsolationCertificate cert{w.handle, a, {}};
  for (std::size_t i : *subset) cert.pairs.push_back({cands[i].poly, cands[i].constant});
  return cert;
}

Cover isolation_to_cover(const Window& w, const IsolationCertificate& cert) {
  auto check = verify_isolation(w, cert);
  if (!check.ok)
    throw Error(Error::Kind::Invalid, "isolation_to_cover: certificate fails verification");
  Cover c{cert.handle, {}, std::nullopt};
  c.pairs.push_back({identity_poly(cert.handle), cert.point});
  c.pairs.insert(c.pairs.end(), cert.pairs.begin(), cert.pairs.end());
  return c;
}

DiscretenessReport discreteness_report(const Window& w, const SearchBounds& b) {
  DiscretenessReport rep;
  rep.certainty = w.exhaustive() ? Certainty::Exhaustive : Certainty::Window;
  rep.all_isolated = true;
  for (std::size_t a = 0; a < w.size; ++a) {
    auto cert = search_isolation(w, a, b);
    if (!cert) rep.all_isolated = false;
    rep.per_element.push_back(std::move(cert));
  }
  if (rep.all_isolated && rep.certainty == Certainty::Exhaustive) {
    rep.note =
        "all points isolated (exhaustive): the Zariski T1 topology is discrete, "
        "consistent with T1S-nontopologizability; with finite-to-one shifts this "
        "also implies injective T1S-closedness";
  } else if (rep.all_isolated) {
    rep.note =
        "all window points isolated within bounds: consistent with a discrete "
        "Zariski T1 topology (window evidence only, not a proof)";
  } else {
    rep.note =
        "some points unknown-within-bounds: inconclusive (absence of a bounded "
        "certificate is not a refutation of isolation)";
  }
  return rep;
}

}  // namespace semitop
