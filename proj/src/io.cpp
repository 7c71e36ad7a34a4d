#include "semitop/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semitop/builtins.hpp"

namespace semitop {

namespace {

[[noreturn]] void spec_error(const std::string& spec, std::size_t pos, const std::string& msg) {
  throw Error(Error::Kind::Usage, "spec parse error at position " + std::to_string(pos) +
                                      " in '" + spec + "': " + msg);
}

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  bool eat(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  }

  std::string token() {  // up to a top-level ',' or ')'
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ')') ++pos;
    if (pos == start) spec_error(s, start, "empty spec component");
    return s.substr(start, pos - start);
  }

  std::size_t number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) spec_error(s, start, "expected a number");
    return static_cast<std::size_t>(std::stoull(s.substr(start, pos - start)));
  }

  SemigroupPtr term() {
    if (eat("product(")) {
      auto a = term();
      if (!eat(",")) spec_error(s, pos, "expected ',' in product(...)");
      auto b = term();
      if (!eat(")")) spec_error(s, pos, "expected ')' closing product(...)");
      return product(std::move(a), std::move(b));
    }
    if (eat("adjoin0(")) {
      auto a = term();
      if (!eat(")")) spec_error(s, pos, "expected ')' closing adjoin0(...)");
      return adjoin_zero(std::move(a));
    }
    if (eat("adjoin1(")) {
      auto a = term();
      if (!eat(")")) spec_error(s, pos, "expected ')' closing adjoin1(...)");
      return adjoin_identity(std::move(a));
    }
    if (eat("builtin:")) {
      std::size_t name_pos = pos;
      if (eat("nat-plus")) return make_nat_plus();
      if (eat("int-plus")) return make_int_plus();
      if (eat("zpm")) return make_zpm();
      if (eat("taimanov")) return make_taimanov();
      if (eat("semilattice-omega")) return make_semilattice_omega();
      if (eat("s3")) return make_symmetric3();
      if (eat("cyclic:")) return make_cyclic(number());
      if (eat("free:")) return make_free_monoid(number());
      spec_error(s, name_pos, "unknown builtin");
    }
    if (eat("cayley:")) return load_cayley(token());
    spec_error(s, pos, "expected builtin:, cayley:, product(, adjoin0( or adjoin1(");
  }
};

std::string trimmed(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::Usage, "cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trimmed(line);
    if (!t.empty() && t[0] != '#') lines.push_back(t);
  }
  return lines;
}

std::size_t parse_index(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(Error::Kind::Usage, "bad " + what + ": '" + text + "'");
  }
}

CoverPair parse_pair_line(const std::string& line, const SemigroupPtr& handle) {
  std::size_t eq = line.rfind('=');
  if (eq == std::string::npos)
    throw Error(Error::Kind::Usage, "expected '<poly> = <index>' in line: " + line);
  PolyTerm f = parse_poly(handle, trimmed(line.substr(0, eq)));
  std::size_t b = parse_index(trimmed(line.substr(eq + 1)), "constant");
  if (auto n = handle->size(); n && b >= *n)
    throw Error(Error::Kind::Invalid, "constant out of range in line: " + line);
  return {std::move(f), b};
}

}  // namespace

SemigroupPtr parse_spec(const std::string& spec) {
  SpecParser p{spec};
  auto s = p.term();
  if (p.pos != spec.size()) spec_error(spec, p.pos, "trailing input");
  return s;
}

SemigroupPtr load_cayley(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) throw Error(Error::Kind::Usage, "empty Cayley file: " + path);
  std::size_t n = parse_index(lines[0], "order");
  if (n == 0 || lines.size() < n + 1)
    throw Error(Error::Kind::Usage, "Cayley file needs " + std::to_string(n) + " rows: " + path);
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 1; i <= n; ++i) {
    std::istringstream row(lines[i]);
    std::vector<std::size_t> r;
    std::string cell;
    while (row >> cell) r.push_back(parse_index(cell, "table cell"));
    if (r.size() != n)
      throw Error(Error::Kind::Usage, "row " + std::to_string(i) + " has " +
                                          std::to_string(r.size()) + " cells, expected " +
                                          std::to_string(n));
    table.push_back(std::move(r));
  }
  auto s = from_cayley(table, path);
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const auto& meta = lines[i];
    if (meta.rfind("identity=", 0) == 0) {
      if (s->identity() != parse_index(meta.substr(9), "identity"))
        throw Error(Error::Kind::Invalid, "identity metadata does not match the table");
    } else if (meta.rfind("zero=", 0) == 0) {
      if (s->zero() != parse_index(meta.substr(5), "zero"))
        throw Error(Error::Kind::Invalid, "zero metadata does not match the table");
    } else {
      throw Error(Error::Kind::Usage, "unknown metadata line: " + meta);
    }
  }
  return s;
}

Cover load_cover(const std::string& path, SemigroupPtr handle) {
  Cover c{handle, {}, std::nullopt};
  for (const auto& line : read_lines(path)) c.pairs.push_back(parse_pair_line(line, handle));
  if (c.pairs.empty()) throw Error(Error::Kind::Usage, "cover file has no pairs: " + path);
  return c;
}

std::string render_cover(const Cover& c) {
  std::string out;
  for (const auto& p : c.pairs)
    out += render_poly(p.poly) + " = " + std::to_string(p.constant) + "\n";
  return out;
}

IsolationCertificate load_certificate(const std::string& path, SemigroupPtr handle) {
  auto lines = read_lines(path);
  if (lines.empty() || lines[0].rfind("point=", 0) != 0)
    throw Error(Error::Kind::Usage, "certificate file must start with 'point=<index>'");
  IsolationCertificate cert{handle, parse_index(lines[0].substr(6), "point"), {}};
  for (std::size_t i = 1; i < lines.size(); ++i)
    cert.pairs.push_back(parse_pair_line(lines[i], handle));
  if (cert.pairs.empty())
    throw Error(Error::Kind::Usage, "certificate file has no pairs: " + path);
  return cert;
}

std::string render_certificate(const IsolationCertificate& cert) {
  std::string out = "point=" + std::to_string(cert.point) + "\n";
  for (const auto& p : cert.pairs)
    out += render_poly(p.poly) + " = " + std::to_string(p.constant) + "\n";
  return out;
}

std::vector<std::vector<std::size_t>> parse_scenario_lines(
    const std::vector<std::string>& lines, const Window& w) {
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    std::vector<std::size_t> args;
    std::string tok;
    if (kind == "cofinite") {
      in >> tok;
      if (tok != "exclude")
        throw Error(Error::Kind::Usage, "expected 'cofinite exclude ...' in: " + line);
    }
    while (in >> tok) args.push_back(parse_index(tok, "scenario element"));
    for (std::size_t a : args)
      if (a >= w.size)
        throw Error(Error::Kind::Invalid, "scenario element outside the window: " + line);
    if (kind == "cofinite") {
      std::set<std::size_t> excl(args.begin(), args.end());
      std::vector<std::size_t> s;
      for (std::size_t x = 0; x < w.size; ++x)
        if (!excl.count(x)) s.push_back(x);
      sets.push_back(std::move(s));
    } else if (kind == "singleton") {
      if (args.size() != 1)
        throw Error(Error::Kind::Usage, "singleton needs exactly one element: " + line);
      sets.push_back(args);
    } else if (kind == "explicit") {
      if (args.empty())
        throw Error(Error::Kind::Usage, "explicit needs at least one element: " + line);
      sets.push_back(args);
    } else {
      throw Error(Error::Kind::Usage, "unknown scenario line kind: " + line);
    }
  }
  return sets;
}

FilterBase load_scenario(const std::string& path, const Window& w) {
  return make_filter_base(w, parse_scenario_lines(read_lines(path), w));
}

void Report::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, std::size_t value) {
  fields.emplace_back(std::move(key), std::to_string(value));
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump(2) + "\n";
}

}  // namespace semitop
