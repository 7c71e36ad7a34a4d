#include "semitop/analysis.hpp"

#include <map>
#include <utility>

namespace semitop {

AssocResult check_associative(const Window& w) {
  const Semigroup& s = *w.handle;
  AssocResult r;
  r.certainty = w.exhaustive() ? Certainty::Exhaustive : Certainty::Window;
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b) {
      std::size_t ab = s.mul(a, b);
      for (std::size_t c = 0; c < w.size; ++c) {
        if (s.mul(ab, c) != s.mul(a, s.mul(b, c))) {
          r.ok = false;
          r.counterexample = {a, b, c};
          return r;
        }
      }
    }
  return r;
}

CancelResult is_cancellative(const Window& w) {
  const Semigroup& s = *w.handle;
  CancelResult r;
  r.certainty = w.exhaustive() ? Certainty::Exhaustive : Certainty::Window;
  // injectivity of every two-sided shift x -> a*x*b restricted to the window
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b) {
      std::map<std::size_t, std::size_t> seen;
      for (std::size_t x = 0; x < w.size; ++x) {
        std::size_t v = s.mul(s.mul(a, x), b);
        auto [it, fresh] = seen.emplace(v, x);
        if (!fresh) {
          r.ok = false;
          r.counterexample = {a, b, it->second, x};
          return r;
        }
      }
    }
  return r;
}

ShiftResult has_finite_to_one_shifts(const Window& w) {
  const Semigroup& s = *w.handle;
  ShiftResult r;
  if (s.is_finite()) {
    r.status = ShiftResult::Status::VerifiedExhaustive;
    return r;
  }
  if (auto o = s.shift_oracle()) {
    if (o->finite_to_one) {
      r.status = ShiftResult::Status::VerifiedOracle;
      return r;
    }
    r.status = ShiftResult::Status::Counterexample;
    r.witness = {o->witness_a, o->witness_b};
  } else {
    r.status = ShiftResult::Status::WindowReport;
  }
  // largest window fiber {x : a*x = b} or {x : x*a = b}, over window a, b
  std::map<std::pair<bool, std::pair<std::size_t, std::size_t>>, std::size_t> fibers;
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t x = 0; x < w.size; ++x) {
      ++fibers[{false, {a, s.mul(a, x)}}];
      ++fibers[{true, {a, s.mul(x, a)}}];
    }
  for (const auto& [k, c] : fibers) r.max_fiber = std::max(r.max_fiber, c);
  return r;
}

std::vector<std::size_t> idempotents(const Window& w) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < w.size; ++x)
    if (w.handle->mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<std::size_t> center(const Window& w) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < w.size; ++z) {
    bool central = true;
    for (std::size_t x = 0; x < w.size; ++x)
      if (w.handle->mul(x, z) != w.handle->mul(z, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<RegularWitness> regular_elements(const Window& w) {
  std::vector<RegularWitness> out;
  for (std::size_t x = 0; x < w.size; ++x)
    for (std::size_t y = 0; y < w.size; ++y)
      if (w.handle->mul(w.handle->mul(x, y), x) == x) {
        out.push_back({x, y});
        break;
      }
  return out;
}

std::size_t power(const Semigroup& s, std::size_t x, std::size_t e) {
  if (e == 0) throw Error(Error::Kind::Invalid, "power: exponent must be >= 1");
  std::size_t r = x;
  for (std::size_t i = 1; i < e; ++i) r = s.mul(r, x);
  return r;
}

std::optional<std::size_t> boundedness_exponent(const Window& w,
                                                std::optional<std::size_t> cap) {
  std::size_t limit = cap.value_or(w.size);
  // walk powers incrementally: p[x] = x^n
  std::vector<std::size_t> p(w.size);
  for (std::size_t x = 0; x < w.size; ++x) p[x] = x;
  for (std::size_t n = 1; n <= limit; ++n) {
    bool all = true;
    for (std::size_t x = 0; x < w.size; ++x)
      if (w.handle->mul(p[x], p[x]) != p[x]) {
        all = false;
        break;
      }
    if (all) return n;
    for (std::size_t x = 0; x < w.size; ++x) p[x] = w.handle->mul(p[x], x);
  }
  return std::nullopt;
}

}  // namespace semitop
