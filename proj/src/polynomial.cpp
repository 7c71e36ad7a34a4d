#include "semitop/polynomial.hpp"

#include <sstream>

namespace semitop {

PolyTerm::PolyTerm(SemigroupPtr h, std::vector<Coeff> cs)
    : handle(std::move(h)), coeffs(std::move(cs)) {
  if (!handle) throw Error(Error::Kind::Invalid, "polynomial over null handle");
  if (coeffs.size() < 2)
    throw Error(Error::Kind::Invalid, "polynomial degree must be >= 1");
  if (auto n = handle->size())
    for (const auto& c : coeffs)
      if (!c.is_one && c.index >= *n)
        throw Error(Error::Kind::Invalid, "coefficient index out of range");
}

PolyTerm identity_poly(SemigroupPtr h) {
  return PolyTerm(std::move(h), {Coeff::one(), Coeff::one()});
}

std::size_t eval(const PolyTerm& f, std::size_t x) {
  const Semigroup& s = *f.handle;
  // left-to-right product a0 x a1 x ... x an with identity slots skipped
  bool have = false;
  std::size_t acc = 0;
  auto push = [&](std::size_t v) {
    acc = have ? s.mul(acc, v) : v;
    have = true;
  };
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (!f.coeffs[i].is_one) push(f.coeffs[i].index);
    if (i + 1 < f.coeffs.size()) push(x);
  }
  return acc;
}

bool is_pruned(const PolyTerm& f) {
  return f.coeffs.front().is_one && f.coeffs.back().is_one;
}

PruneDecomposition prune_decompose(const PolyTerm& f) {
  std::vector<Coeff> inner = f.coeffs;
  Coeff a = inner.front(), b = inner.back();
  inner.front() = Coeff::one();
  inner.back() = Coeff::one();
  return {a, PolyTerm(f.handle, std::move(inner)), b};
}

Coeff coeff_mul(const Semigroup& s, const Coeff& a, const Coeff& b) {
  if (a.is_one) return b;
  if (b.is_one) return a;
  return Coeff::elem(s.mul(a.index, b.index));
}

PolyTerm compose(const PolyTerm& f, const PolyTerm& g) {
  if (f.handle->id() != g.handle->id())
    throw Error(Error::Kind::Foreign, "compose: polynomials over different handles");
  const Semigroup& s = *f.handle;
  std::size_t n = f.degree(), m = g.degree();
  // f = c0 X c1 ... X cn with X := g = d0 x d1 ... x dm
  std::vector<Coeff> out;
  out.reserve(n * m + 1);
  out.push_back(coeff_mul(s, f.coeffs[0], g.coeffs[0]));
  for (std::size_t slot = 1; slot <= n; ++slot) {
    for (std::size_t j = 1; j < m; ++j) out.push_back(g.coeffs[j]);
    Coeff junction = coeff_mul(s, g.coeffs[m], f.coeffs[slot]);
    if (slot < n) junction = coeff_mul(s, junction, g.coeffs[0]);
    out.push_back(junction);
  }
  return PolyTerm(f.handle, std::move(out));
}

AffineForm normalize_commutative(const PolyTerm& f) {
  const Semigroup& s = *f.handle;
  if (!s.additive_value(0))
    throw Error(Error::Kind::Unsupported,
                "normalize_commutative requires an additive handle ((N,+) or (Z,+))");
  AffineForm a;
  a.slope = f.degree();
  for (const auto& c : f.coeffs)
    if (!c.is_one) a.shift += *s.additive_value(c.index);
  return a;
}

PolyTerm parse_poly(SemigroupPtr h, const std::string& text) {
  std::vector<std::string> tokens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(Error::Kind::Usage, "polynomial syntax: empty token in '" + text + "'");
    tokens.push_back(tok.substr(b, e - b + 1));
  }
  if (tokens.size() < 3 || tokens.size() % 2 == 0)
    throw Error(Error::Kind::Usage,
                "polynomial syntax: expected 'a0 . x . a1 [. x . a2 ...]' in '" + text + "'");
  std::vector<Coeff> coeffs;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 1) {
      if (tokens[i] != "x")
        throw Error(Error::Kind::Usage, "polynomial syntax: expected 'x' at token " +
                                            std::to_string(i) + " of '" + text + "'");
      continue;
    }
    if (tokens[i] == "1") {
      coeffs.push_back(Coeff::one());
    } else {
      // "e<i>" forces element index i (needed for element 1, which the bare
      // token "1" cannot express)
      std::string digits =
          tokens[i].size() > 1 && tokens[i][0] == 'e' ? tokens[i].substr(1) : tokens[i];
      try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(digits, &pos);
        if (pos != digits.size()) throw std::invalid_argument(tokens[i]);
        coeffs.push_back(Coeff::elem(static_cast<std::size_t>(v)));
      } catch (const std::exception&) {
        throw Error(Error::Kind::Usage, "polynomial syntax: bad coefficient '" + tokens[i] +
                                            "' in '" + text + "'");
      }
    }
  }
  return PolyTerm(std::move(h), std::move(coeffs));
}

std::string render_poly(const PolyTerm& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) out += " . x . ";
    if (f.coeffs[i].is_one)
      out += "1";
    else if (f.coeffs[i].index == 1)
      out += "e1";  // bare "1" would read back as the adjoined identity
    else
      out += std::to_string(f.coeffs[i].index);
  }
  return out;
}

}  // namespace semitop
