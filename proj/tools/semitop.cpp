// semitop: workbench CLI for semigroup covers, Zariski isolation and the
// filter/topology lab.  Exit codes: 0 verified/complete, 1 counterexample,
// 2 inconclusive within bounds, 3 usage/parse/guard error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "semitop/analysis.hpp"
#include "semitop/builtins.hpp"
#include "semitop/catalog.hpp"
#include "semitop/congruence.hpp"
#include "semitop/cover.hpp"
#include "semitop/io.hpp"
#include "semitop/topology.hpp"
#include "semitop/transform.hpp"
#include "semitop/zariski.hpp"

namespace {

using namespace semitop;

constexpr int kOk = 0, kCounterexample = 1, kInconclusive = 2, kUsage = 3;

std::size_t default_window() {
  if (const char* env = std::getenv("SEMITOP_WINDOW")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw Error(Error::Kind::Usage, "SEMITOP_WINDOW must be a positive integer");
  }
  return 100;
}

struct Output {
  std::string format = "text";
  void emit(const Report& r) const {
    std::cout << (format == "json" ? r.json() : r.text());
  }
};

std::vector<std::size_t> expand_coeffs(const std::vector<std::string>& specs) {
  std::vector<std::size_t> out;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto dots = item.find("..");
      try {
        if (dots == std::string::npos) {
          out.push_back(std::stoull(item));
        } else {
          std::size_t lo = std::stoull(item.substr(0, dots));
          std::size_t hi = std::stoull(item.substr(dots + 2));
          if (hi < lo) throw std::invalid_argument(item);
          for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
        }
      } catch (const std::exception&) {
        throw Error(Error::Kind::Usage, "bad coefficient list item: '" + item + "'");
      }
    }
  }
  return out;
}

std::vector<Coeff> parse_shifts(const std::vector<std::string>& items, std::size_t blocks) {
  // "none" (or empty): all-identity shifts around `blocks` filter slots
  if (items.empty() || (items.size() == 1 && items[0] == "none"))
    return std::vector<Coeff>(blocks + 1, Coeff::one());
  std::vector<Coeff> out;
  for (const auto& it : items) {
    if (it == "1") {
      out.push_back(Coeff::one());
    } else {
      try {
        out.push_back(Coeff::elem(std::stoull(it)));
      } catch (const std::exception&) {
        throw Error(Error::Kind::Usage, "bad shift element: '" + it + "'");
      }
    }
  }
  return out;
}

std::string join(const std::vector<std::size_t>& xs, const Semigroup& s,
                 std::size_t limit = 32) {
  std::string out;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
    if (i) out += " ";
    out += s.render(xs[i]);
  }
  if (xs.size() > limit) out += " ...";
  return out;
}

const char* certainty_str(Certainty c) {
  return c == Certainty::Exhaustive ? "exhaustive" : "window";
}

void echo(Report& r, const std::string& command, const std::string& spec,
          std::size_t window) {
  r.add("command", command);
  r.add("spec", spec);
  r.add("window", window);
}

// ---- analyze --------------------------------------------------------------

int run_analyze(const Output& out, const std::string& spec, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Report r;
  echo(r, "analyze", spec, w.size);
  r.add("kind", s->is_finite() ? "finite" : "symbolic");
  if (auto n = s->size()) r.add("cardinality", *n);

  auto assoc = check_associative(w);
  r.add("associative", assoc.ok ? std::string("Verified(") + certainty_str(assoc.certainty) + ")"
                                : "Counterexample");
  if (assoc.counterexample) {
    const auto& [a, b, c] = *assoc.counterexample;
    r.add("associative.witness", s->render(a) + " " + s->render(b) + " " + s->render(c));
  }

  auto canc = is_cancellative(w);
  r.add("cancellative", canc.ok ? std::string("Verified(") + certainty_str(canc.certainty) + ")"
                                : "Counterexample");
  if (canc.counterexample) {
    const auto& x = *canc.counterexample;
    r.add("cancellative.witness", "a=" + s->render(x[0]) + " b=" + s->render(x[1]) + " x=" +
                                      s->render(x[2]) + " y=" + s->render(x[3]));
  }

  auto shifts = has_finite_to_one_shifts(w);
  switch (shifts.status) {
    case ShiftResult::Status::VerifiedExhaustive:
      r.add("finite_to_one_shifts", "Verified(exhaustive)");
      break;
    case ShiftResult::Status::VerifiedOracle:
      r.add("finite_to_one_shifts", "Verified(oracle)");
      break;
    case ShiftResult::Status::WindowReport:
      r.add("finite_to_one_shifts", "WindowReport");
      r.add("finite_to_one_shifts.max_fiber", shifts.max_fiber);
      break;
    case ShiftResult::Status::Counterexample:
      r.add("finite_to_one_shifts", "Counterexample");
      if (shifts.witness)
        r.add("finite_to_one_shifts.witness",
              "a=" + s->render((*shifts.witness)[0]) + " b=" + s->render((*shifts.witness)[1]));
      break;
  }

  auto idem = idempotents(w);
  r.add("idempotents.count", idem.size());
  r.add("idempotents", join(idem, *s));
  auto z = center(w);
  r.add("center.count", z.size());
  r.add("center", join(z, *s));
  auto regs = regular_elements(w);
  r.add("regular.count", regs.size());
  if (auto bexp = boundedness_exponent(w))
    r.add("boundedness_exponent", *bexp);
  else
    r.add("boundedness_exponent", "NotBoundedWithin(" + std::to_string(w.size) + ")");
  out.emit(r);
  // structural findings (non-cancellative etc.) are results, not failures;
  // only a broken operation refutes the input itself
  return assoc.ok ? kOk : kCounterexample;
}

// ---- cover ----------------------------------------------------------------

Cover input_cover(const SemigroupPtr& s, const std::string& file, bool trivial) {
  if (trivial != file.empty())
    throw Error(Error::Kind::Usage, "provide exactly one of --file and --trivial");
  return trivial ? trivial_finite_cover(s) : load_cover(file, s);
}

int emit_verify(const Output& out, Report& r, const Window& w, const Cover& c,
                const char* prefix) {
  auto v = verify_cover(w, c);
  r.add(std::string(prefix) + ".status",
        v.ok ? std::string("Verified(") + certainty_str(v.certainty) + ")" : "Counterexample");
  if (v.counterexample)
    r.add(std::string(prefix) + ".witness", w.handle->render(*v.counterexample));
  out.emit(r);
  return v.ok ? kOk : kCounterexample;
}

int run_cover_verify(const Output& out, const std::string& spec, const std::string& file,
                     bool trivial, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Cover c = input_cover(s, file, trivial);
  Report r;
  echo(r, "cover verify", spec, w.size);
  r.add("pairs", c.pairs.size());
  return emit_verify(out, r, w, c, "verify");
}

int run_cover_search(const Output& out, const std::string& spec, std::size_t window,
                     const SearchBounds& b) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Report r;
  echo(r, "cover search", spec, w.size);
  r.add("degree_bound", b.degree_bound);
  r.add("size_bound", b.size_bound);
  auto c = search_cover(w, b);
  if (!c) {
    r.add("status", "NoneWithinBounds");
    out.emit(r);
    return kInconclusive;
  }
  r.add("status", "Found");
  r.add("cover", "\n" + render_cover(*c));
  return emit_verify(out, r, w, *c, "reverify");
}

int run_cover_prune(const Output& out, const std::string& spec, const std::string& file,
                    bool trivial, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Cover c = prune_cover(w, input_cover(s, file, trivial));
  Report r;
  echo(r, "cover prune", spec, w.size);
  r.add("cover", "\n" + render_cover(c));
  return emit_verify(out, r, w, c, "reverify");
}

int run_cover_regularize(const Output& out, const std::string& spec, const std::string& file,
                         bool trivial, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Cover c = regularize_cover(w, prune_cover(w, input_cover(s, file, trivial)));
  Report r;
  echo(r, "cover regularize", spec, w.size);
  r.add("cover", "\n" + render_cover(c));
  return emit_verify(out, r, w, c, "reverify");
}

std::vector<std::vector<std::size_t>> parse_classes(const std::string& text) {
  std::vector<std::vector<std::size_t>> classes;
  std::stringstream ss(text);
  std::string cls;
  while (std::getline(ss, cls, '|')) {
    std::istringstream in(cls);
    std::vector<std::size_t> members;
    std::string tok;
    while (in >> tok) {
      try {
        members.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw Error(Error::Kind::Usage, "bad class member: '" + tok + "'");
      }
    }
    if (!members.empty()) classes.push_back(std::move(members));
  }
  if (classes.empty()) throw Error(Error::Kind::Usage, "empty class list");
  return classes;
}

int run_cover_transport(const Output& out, const std::string& spec, const std::string& file,
                        bool trivial, const std::string& classes_text) {
  auto s = parse_spec(spec);
  auto n = s->size();
  if (!n) throw Error(Error::Kind::Unsupported, "transport requires a finite semigroup");
  Cover c = input_cover(s, file, trivial);
  auto cong = make_congruence(s, parse_classes(classes_text));
  auto q = quotient_by_congruence(s, cong);
  Cover tc = transport_quotient(c, q.quotient, q.map);
  Report r;
  echo(r, "cover transport", spec, *n);
  r.add("quotient.order", *q.quotient->size());
  r.add("cover", "\n" + render_cover(tc));
  Window wq(q.quotient, *q.quotient->size());
  return emit_verify(out, r, wq, tc, "reverify");
}

int run_cover_product(const Output& out, const std::string& spec_a, const std::string& spec_b,
                      const std::string& file_a, const std::string& file_b, bool trivial) {
  auto a = parse_spec(spec_a);
  auto b = parse_spec(spec_b);
  Cover ca = input_cover(a, file_a, trivial);
  Cover cb = input_cover(b, file_b, trivial);
  auto prod = product(a, b);
  Cover pc = product_cover(ca, cb, prod);
  auto np = prod->size();
  Window wp(prod, np ? *np : 256);
  Report r;
  echo(r, "cover product", spec_a + " x " + spec_b, wp.size);
  r.add("pairs", pc.pairs.size());
  r.add("cover", "\n" + render_cover(pc));
  return emit_verify(out, r, wp, pc, "reverify");
}

int run_cover_group_extract(const Output& out, const std::string& spec,
                            const std::string& file, bool trivial, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Cover c = regularize_cover(w, prune_cover(w, input_cover(s, file, trivial)));
  auto g = group_from_cover(w, c);
  Report r;
  echo(r, "cover group-extract", spec, w.size);
  r.add("identity", s->render(g.identity));
  std::string inv;
  for (std::size_t x = 0; x < w.size; ++x) {
    if (x) inv += " ";
    inv += s->render(x) + "->" + s->render(g.inverse[x]);
  }
  r.add("inverses", inv);
  out.emit(r);
  return kOk;
}

// ---- zariski --------------------------------------------------------------

int run_zariski_isolate(const Output& out, const std::string& spec, std::size_t point,
                        std::size_t window, const SearchBounds& b) {
  auto s = parse_spec(spec);
  Window w(s, window);
  Report r;
  echo(r, "zariski isolate", spec, w.size);
  r.add("point", s->render(point));
  auto cert = search_isolation(w, point, b);
  if (!cert) {
    r.add("status", "NoneWithinBounds");
    out.emit(r);
    return kInconclusive;
  }
  auto v = verify_isolation(w, *cert);
  r.add("status", v.ok ? std::string("Verified(") + certainty_str(v.certainty) + ")"
                       : "Counterexample");
  r.add("certificate", "\n" + render_certificate(*cert));
  auto cover = isolation_to_cover(w, *cert);
  auto rv = verify_cover(w, cover);
  r.add("roundtrip_cover", rv.ok ? "Verified" : "Counterexample");
  out.emit(r);
  return v.ok && rv.ok ? kOk : kCounterexample;
}

int run_zariski_report(const Output& out, const std::string& spec, std::size_t window,
                       const SearchBounds& b) {
  auto s = parse_spec(spec);
  Window w(s, window);
  auto rep = discreteness_report(w, b);
  Report r;
  echo(r, "zariski report", spec, w.size);
  std::size_t isolated = 0;
  for (const auto& c : rep.per_element)
    if (c) ++isolated;
  r.add("isolated", isolated);
  r.add("unknown_within_bounds", rep.per_element.size() - isolated);
  r.add("certainty", certainty_str(rep.certainty));
  r.add("note", rep.note);
  out.emit(r);
  return rep.all_isolated ? kOk : kInconclusive;
}

// ---- lab ------------------------------------------------------------------

int run_lab_avoider(const Output& out, const std::string& spec, std::size_t steps,
                    std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  auto res = build_avoider_sequence(w, steps);
  Report r;
  echo(r, "lab avoider", spec, w.size);
  r.add("steps_requested", steps);
  r.add("steps_built", res.sequence.elements.size() - 1);
  r.add("sequence", join(res.sequence.elements, *s, 64));
  std::string counts;
  for (std::size_t i = 0; i < res.sequence.constraint_counts.size(); ++i) {
    if (i) counts += " ";
    counts += std::to_string(res.sequence.constraint_counts[i]);
  }
  r.add("constraint_counts", counts);
  switch (res.status) {
    case AvoiderOutcome::Status::Ok:
      r.add("status", "Ok");
      break;
    case AvoiderOutcome::Status::WindowExhausted:
      r.add("status", "WindowExhausted");
      r.add("failed_step", res.failed_step);
      break;
    case AvoiderOutcome::Status::PolyboundedObstruction:
      r.add("status", "PolyboundedObstruction");
      r.add("failed_step", res.failed_step);
      r.add("candidates_exhausted", res.candidates_exhausted);
      break;
  }
  out.emit(r);
  return res.status == AvoiderOutcome::Status::Ok ? kOk : kInconclusive;
}

FamilyK family_from_flags(const Window& w, std::size_t avoider_steps, std::size_t blocks,
                          const std::vector<std::size_t>& pool, std::size_t max_entries) {
  auto res = build_avoider_sequence(w, avoider_steps);
  if (res.status != AvoiderOutcome::Status::Ok)
    throw Error(Error::Kind::Invalid,
                "avoider sequence stopped at step " + std::to_string(res.failed_step) +
                    "; rerun with fewer steps");
  std::vector<std::size_t> p = pool;
  if (p.empty())
    for (std::size_t i = 1; i <= std::min<std::size_t>(avoider_steps, 5); ++i)
      p.push_back(i - 1);  // default pool {b_1..b_5}
  return gen_family_K(res.sequence, p, blocks, max_entries);
}

int run_lab_family(const Output& out, const std::string& spec, std::size_t avoider_steps,
                   std::size_t blocks, const std::vector<std::size_t>& pool,
                   std::size_t max_entries, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  auto k = family_from_flags(w, avoider_steps, blocks, pool, max_entries);
  Report r;
  echo(r, "lab family", spec, w.size);
  r.add("base", join(k.base, *s, 64));
  r.add("entries", k.entries.size());
  for (std::size_t i = 0; i < k.entries.size(); ++i) {
    std::string tuple;
    for (const auto& c : k.entries[i]) {
      if (!tuple.empty()) tuple += " A ";
      tuple += c.is_one ? "1" : s->render(c.index);
    }
    r.add("entry." + std::to_string(i), tuple);
  }
  out.emit(r);
  return kOk;
}

int run_lab_l0(const Output& out, const std::string& spec, std::size_t avoider_steps,
               std::size_t blocks, const std::vector<std::size_t>& pool,
               std::size_t max_entries, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  auto k = family_from_flags(w, avoider_steps, blocks, pool, max_entries);
  auto rep = check_l0_conditions(k, w);
  Report r;
  echo(r, "lab l0-check", spec, w.size);
  r.add("entries", k.entries.size());
  r.add("cond1.pairs_checked", rep.pairs_checked);
  r.add("cond1.pairs_witnessed", rep.pairs_witnessed);
  if (rep.first_unwitnessed)
    r.add("cond1.first_unwitnessed", std::to_string(rep.first_unwitnessed->first) + "," +
                                         std::to_string(rep.first_unwitnessed->second));
  r.add("cond2.shifts_checked", rep.shifts_checked);
  r.add("cond2.shifts_witnessed", rep.shifts_witnessed);
  r.add("cond3.max_fiber", rep.max_fiber3);
  r.add("cond4.max_fiber", rep.max_fiber4);
  r.add("threshold", rep.threshold);
  r.add("cond3.ok", rep.ok3 ? "yes" : "no");
  r.add("cond4.ok", rep.ok4 ? "yes" : "no");
  out.emit(r);
  return kOk;
}

int run_lab_filter(const Output& out, const std::string& spec, const std::string& base_kind,
                   const std::string& scenario, const std::vector<std::string>& shift_items,
                   std::size_t iterate, std::size_t window) {
  auto s = parse_spec(spec);
  Window w(s, window);
  FilterBase f = [&] {
    if (!scenario.empty()) return load_scenario(scenario, w);
    if (base_kind == "cofinite") {
      // base of co-<=k sets: window minus {0..k-1}, k = 0..5
      std::vector<std::vector<std::size_t>> sets;
      for (std::size_t k = 0; k <= 5; ++k) {
        std::vector<std::size_t> set;
        for (std::size_t x = k; x < w.size; ++x) set.push_back(x);
        sets.push_back(std::move(set));
      }
      return make_filter_base(w, std::move(sets));
    }
    throw Error(Error::Kind::Usage, "provide --scenario or --base cofinite");
  }();
  auto shifts = parse_shifts(shift_items, iterate + 1);
  Report r;
  echo(r, "lab filter", spec, w.size);
  r.add("base_sets", f.sets.size());
  r.add("blocks", shifts.size() - 1);
  auto t1 = t1_witness_check(w, f, shifts);
  r.add("t1.free_on_window", t1.cls.free_on_window ? "yes" : "no");
  r.add("t1.principal_on_window", t1.cls.principal_on_window ? "yes" : "no");
  r.add("t1.witnessed", t1.witnessed ? "yes" : "no");
  auto pair = it1_witness_check(w, f, shifts);
  if (pair)
    r.add("it1.witness", s->render(pair->first) + "," + s->render(pair->second));
  else
    r.add("it1.witness", "none");
  out.emit(r);
  return (t1.witnessed || pair) ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semitop: polybounded covers, Zariski isolation and topology lab"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string spec, spec_b, file, file_b, classes, base_kind, scenario;
  bool trivial = false;
  std::size_t window = 0, point = 0, steps = 20, iterate = 1;
  std::size_t avoider_steps = 5, blocks = 2, max_entries = 64;
  SearchBounds bounds;
  std::vector<std::string> coeff_items, shift_items, pool_items;

  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--window", window, "Window size (default: SEMITOP_WINDOW or 100)");
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--deg", bounds.degree_bound, "Degree bound");
    cmd->add_option("--coeffs", coeff_items, "Coefficient pool (indices, lists, a..b ranges)");
    cmd->add_option("--size", bounds.size_bound, "Cover size bound");
    cmd->add_option("--guard", bounds.candidate_guard, "Candidate count guard");
  };

  auto* analyze = app.add_subcommand("analyze", "Structural analysis of a semigroup");
  analyze->fallthrough();  // lets global options like --format follow a subcommand
  analyze->add_option("spec", spec, "Semigroup spec")->required();
  add_window(analyze);

  auto* cover = app.add_subcommand("cover", "Polybounded cover operations");
  cover->fallthrough();
  cover->require_subcommand(1);
  for (const char* name : {"verify", "search", "prune", "regularize", "transport",
                           "product", "group-extract"}) {
    auto* sub = cover->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("spec", spec, "Semigroup spec")->required();
    if (std::string(name) == "product")
      sub->add_option("spec_b", spec_b, "Second semigroup spec")->required();
    if (std::string(name) != "search") {
      sub->add_option("--file", file, "Cover file");
      sub->add_flag("--trivial", trivial, "Use the trivial finite cover");
    }
    if (std::string(name) == "product") sub->add_option("--file-b", file_b, "Second cover file");
    if (std::string(name) == "transport")
      sub->add_option("--classes", classes, "Congruence classes, e.g. '0 2|1 3'")->required();
    if (std::string(name) == "search") add_bounds(sub);
    add_window(sub);
  }

  auto* zar = app.add_subcommand("zariski", "Zariski topology operations");
  zar->fallthrough();
  zar->require_subcommand(1);
  auto* isolate = zar->add_subcommand("isolate");
  isolate->fallthrough();
  isolate->add_option("spec", spec, "Semigroup spec")->required();
  isolate->add_option("--point", point, "Element index to isolate")->required();
  add_bounds(isolate);
  add_window(isolate);
  auto* zreport = zar->add_subcommand("report");
  zreport->fallthrough();
  zreport->add_option("spec", spec, "Semigroup spec")->required();
  add_bounds(zreport);
  add_window(zreport);

  auto* lab = app.add_subcommand("lab", "Topology-lab operations");
  lab->fallthrough();
  lab->require_subcommand(1);
  auto* avoider = lab->add_subcommand("avoider");
  avoider->fallthrough();
  avoider->add_option("spec", spec, "Semigroup spec")->required();
  avoider->add_option("--steps", steps, "Steps to build");
  add_window(avoider);
  auto* family = lab->add_subcommand("family");
  auto* l0 = lab->add_subcommand("l0-check");
  for (auto* sub : {family, l0}) {
    sub->fallthrough();
    sub->add_option("spec", spec, "Semigroup spec")->required();
    sub->add_option("--from-avoider", avoider_steps, "Avoider steps for the base sequence");
    sub->add_option("--blocks", blocks, "Max A-blocks per entry");
    sub->add_option("--pool", pool_items, "Coefficient pool");
    sub->add_option("--max-entries", max_entries, "Entry cap");
    add_window(sub);
  }
  auto* filter = lab->add_subcommand("filter");
  filter->fallthrough();
  filter->add_option("spec", spec, "Semigroup spec")->required();
  filter->add_option("--base", base_kind, "Builtin base kind (cofinite)");
  filter->add_option("--scenario", scenario, "Scenario file with base sets");
  filter->add_option("--shifts", shift_items, "Shift elements a0..an, or 'none'");
  filter->add_option("--iterate", iterate, "Number of extra filter factors");
  add_window(filter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/error text
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (window == 0) window = default_window();
    bounds.coeff_pool = expand_coeffs(coeff_items);
    if (bounds.degree_bound == 0) bounds.degree_bound = 2;
    if (bounds.size_bound == 0) bounds.size_bound = 4;

    if (*analyze) return run_analyze(out, spec, window);
    if (*cover) {
      auto* sub = cover->get_subcommands().front();
      const std::string& n = sub->get_name();
      if (n == "verify") return run_cover_verify(out, spec, file, trivial, window);
      if (n == "search") return run_cover_search(out, spec, window, bounds);
      if (n == "prune") return run_cover_prune(out, spec, file, trivial, window);
      if (n == "regularize") return run_cover_regularize(out, spec, file, trivial, window);
      if (n == "transport") return run_cover_transport(out, spec, file, trivial, classes);
      if (n == "product")
        return run_cover_product(out, spec, spec_b, file, file_b, trivial);
      if (n == "group-extract")
        return run_cover_group_extract(out, spec, file, trivial, window);
    }
    if (*zar) {
      auto* sub = zar->get_subcommands().front();
      if (sub->get_name() == "isolate")
        return run_zariski_isolate(out, spec, point, window, bounds);
      return run_zariski_report(out, spec, window, bounds);
    }
    if (*lab) {
      auto* sub = lab->get_subcommands().front();
      const std::string& n = sub->get_name();
      std::vector<std::size_t> pool = expand_coeffs(pool_items);
      if (n == "avoider") return run_lab_avoider(out, spec, steps, window);
      if (n == "family")
        return run_lab_family(out, spec, avoider_steps, blocks, pool, max_entries, window);
      if (n == "l0-check")
        return run_lab_l0(out, spec, avoider_steps, blocks, pool, max_entries, window);
      if (n == "filter")
        return run_lab_filter(out, spec, base_kind, scenario, shift_items, iterate, window);
    }
    std::cerr << "no subcommand selected\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}
