#ifndef SEMITOP_IO_HPP_
#define SEMITOP_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "semitop/cover.hpp"
#include "semitop/topology.hpp"
#include "semitop/zariski.hpp"

namespace semitop {

// `builtin:nat-plus`, `builtin:int-plus`, `builtin:zpm`, `builtin:taimanov`,
// `builtin:semilattice-omega`, `builtin:cyclic:<n>`, `builtin:free:<k>`,
// `builtin:s3`, `cayley:<path>`, `product(<spec>,<spec>)`, `adjoin0(<spec>)`,
// `adjoin1(<spec>)`.  Parse errors carry the offending position.
SemigroupPtr parse_spec(const std::string& spec);

// Cayley table file: line 1 is n, then n rows of n indices; optional
// trailing `identity=<i>` / `zero=<i>` metadata lines (validated).
SemigroupPtr load_cayley(const std::string& path);

// Cover file: one `<poly> = <index>` line per pair.
Cover load_cover(const std::string& path, SemigroupPtr handle);
std::string render_cover(const Cover& c);

// Certificate file: `point=<index>`, then one pair line per entry.
IsolationCertificate load_certificate(const std::string& path, SemigroupPtr handle);
std::string render_certificate(const IsolationCertificate& cert);

// Scenario file: one base set per line —
//   `cofinite exclude 3 5 7` | `singleton 4` | `explicit 1 2 3`
FilterBase load_scenario(const std::string& path, const Window& w);
std::vector<std::vector<std::size_t>> parse_scenario_lines(
    const std::vector<std::string>& lines, const Window& w);

// Ordered key/value report with text and JSON rendering; identical inputs
// produce byte-identical output (no timestamps unless explicitly added).
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value);
  void add(std::string key, std::size_t value);
  std::string text() const;
  std::string json() const;
};

}  // namespace semitop

#endif  // SEMITOP_IO_HPP_
