#ifndef SEMITOP_ZARISKI_HPP_
#define SEMITOP_ZARISKI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semitop/cover.hpp"

namespace semitop {

// A subbasic open set of the Zariski topology: {x : f(x) != b} or
// {x : f(x) != g(x)}.
struct SubbasicSet {
  PolyTerm f;
  std::optional<PolyTerm> g;       // set iff the NotEqualPoly variant
  std::size_t b = 0;               // used iff g is empty

  static SubbasicSet not_equal_const(PolyTerm f, std::size_t b);
  static SubbasicSet not_equal_poly(PolyTerm f, PolyTerm g);
};

bool membership(const SubbasicSet& s, std::size_t x);

// The claim {a} = X \ U f_i^-1(b_i).
struct IsolationCertificate {
  SemigroupPtr handle;
  std::size_t point = 0;
  std::vector<CoverPair> pairs;
};

struct IsolationVerify {
  bool ok = false;
  Certainty certainty = Certainty::Window;
  bool point_in_union = false;          // a itself hit by some pair
  std::optional<std::size_t> uncovered; // least window element != a missed by all pairs
};

IsolationVerify verify_isolation(const Window& w, const IsolationCertificate& cert);

std::optional<IsolationCertificate> search_isolation(const Window& w, std::size_t a,
                                                     const SearchBounds& b);

// Lemma-style round trip: the certificate pairs prefixed with (x, a)
// cover the whole window.
Cover isolation_to_cover(const Window& w, const IsolationCertificate& cert);

struct DiscretenessReport {
  std::vector<std::optional<IsolationCertificate>> per_element;  // by window index
  bool all_isolated = false;
  Certainty certainty = Certainty::Window;
  std::string note;
};

DiscretenessReport discreteness_report(const Window& w, const SearchBounds& b);

}  // namespace semitop

#endif  // SEMITOP_ZARISKI_HPP_
