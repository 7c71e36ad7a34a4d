#include "semitop/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace semitop {

std::size_t mul(const Semigroup& s, const Element& a, const Element& b) {
  s.check_owns(a);
  s.check_owns(b);
  return s.mul(a.index, b.index);
}

namespace {

// sum_{e<d} min(e, cap) with cap possibly infinite
std::size_t sum_min(std::size_t d, std::optional<std::size_t> cap) {
  if (!cap || d == 0 || d - 1 <= *cap) return d * (d - 1) / 2;
  std::size_t a = *cap;
  return a * (a + 1) / 2 + (d - 1 - a) * a;
}

// sum_{e<d} max(0, e - cap)
std::size_t sum_excess(std::size_t d, std::size_t cap) {
  if (d == 0 || d - 1 <= cap) return 0;
  std::size_t t = d - 1 - cap;
  return t * (t + 1) / 2;
}

// number of pairs strictly before anti-diagonal d
std::size_t diag_base(std::size_t d, std::optional<std::size_t> na,
                      std::optional<std::size_t> nb) {
  std::optional<std::size_t> capa = na ? std::optional<std::size_t>(*na - 1) : std::nullopt;
  std::size_t s1 = sum_min(d, capa);
  std::size_t s2 = nb ? sum_excess(d, *nb - 1) : 0;
  return s1 - s2 + d;
}

std::size_t diag_imin(std::size_t d, std::optional<std::size_t> nb) {
  return (nb && d >= *nb) ? d - (*nb - 1) : 0;
}

}  // namespace

std::size_t pair_index(std::size_t i, std::size_t j, std::optional<std::size_t> na,
                       std::optional<std::size_t> nb) {
  if ((na && i >= *na) || (nb && j >= *nb))
    throw Error(Error::Kind::Invalid, "pair_index: coordinate out of range");
  std::size_t d = i + j;
  return diag_base(d, na, nb) + (i - diag_imin(d, nb));
}

std::pair<std::size_t, std::size_t> pair_decompose(std::size_t idx,
                                                   std::optional<std::size_t> na,
                                                   std::optional<std::size_t> nb) {
  if (na && nb && idx >= *na * *nb)
    throw Error(Error::Kind::Invalid, "pair_decompose: index out of range");
  // find the diagonal holding idx: diag_base is monotone in d
  std::size_t lo = 0, hi = 2;
  std::size_t dmax = (na && nb) ? (*na - 1) + (*nb - 1) : std::size_t(-2);
  while (hi <= dmax && diag_base(hi, na, nb) <= idx) hi *= 2;
  hi = std::min(hi, dmax + 1);
  while (lo < hi) {  // last d with diag_base(d) <= idx
    std::size_t mid = lo + (hi - lo + 1) / 2;
    if (diag_base(mid, na, nb) <= idx)
      lo = mid;
    else
      hi = mid - 1;
  }
  std::size_t d = lo;
  std::size_t i = diag_imin(d, nb) + (idx - diag_base(d, na, nb));
  return {i, d - i};
}

namespace {

class NatPlus final : public Semigroup {
 public:
  NatPlus() { tags_ = {Tag::Commutative, Tag::Cancellative, Tag::Monoid}; }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override { return a + b; }
  std::string render(std::size_t i) const override { return std::to_string(i); }
  std::string name() const override { return "nat-plus"; }
  std::optional<std::size_t> identity() const override { return 0; }
  std::optional<ShiftOracle> shift_oracle() const override {
    return ShiftOracle{true, 0, 0};  // a + x = b has at most one solution
  }
  std::optional<long long> additive_value(std::size_t i) const override {
    return static_cast<long long>(i);
  }
  std::optional<std::size_t> additive_index(long long v) const override {
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }
};

// Enumeration 0, 1, -1, 2, -2, ...
long long int_value_of(std::size_t i) {
  if (i == 0) return 0;
  if (i % 2 == 1) return static_cast<long long>((i + 1) / 2);
  return -static_cast<long long>(i / 2);
}

std::size_t int_index_of(long long v) {
  if (v == 0) return 0;
  if (v > 0) return static_cast<std::size_t>(2 * v - 1);
  return static_cast<std::size_t>(-2 * v);
}

class IntPlus final : public Semigroup {
 public:
  IntPlus() { tags_ = {Tag::Commutative, Tag::Cancellative, Tag::Monoid, Tag::Group}; }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return int_index_of(int_value_of(a) + int_value_of(b));
  }
  std::string render(std::size_t i) const override { return std::to_string(int_value_of(i)); }
  std::string name() const override { return "int-plus"; }
  std::optional<std::size_t> identity() const override { return 0; }
  std::optional<ShiftOracle> shift_oracle() const override { return ShiftOracle{true, 0, 0}; }
  std::optional<long long> additive_value(std::size_t i) const override { return int_value_of(i); }
  std::optional<std::size_t> additive_index(long long v) const override { return int_index_of(v); }
  std::optional<std::size_t> group_identity() const override { return 0; }
  std::optional<std::size_t> group_inverse(std::size_t i) const override {
    return int_index_of(-int_value_of(i));
  }
};

// Words ordered by length, then lexicographically; index 0 is the empty word.
class FreeMonoid final : public Semigroup {
 public:
  explicit FreeMonoid(std::size_t k) : k_(k) {
    if (k == 0) throw Error(Error::Kind::Invalid, "free monoid needs at least one generator");
    tags_ = {Tag::Cancellative, Tag::Monoid};
    if (k == 1) tags_.insert(Tag::Commutative);
  }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    if (k_ == 1) return a + b;
    auto [la, ra] = decode(a);
    auto [lb, rb] = decode(b);
    std::size_t len = la + lb;
    if (len >= 62 / log2k_())
      throw Error(Error::Kind::Guard, "free monoid product word too long");
    return offset(len) + ra * pow_k(lb) + rb;
  }
  std::string render(std::size_t i) const override {
    auto [len, rank] = decode(i);
    if (len == 0) return "e";
    std::string w(len, 'a');
    for (std::size_t p = len; p-- > 0;) {
      w[p] = static_cast<char>('a' + rank % k_);
      rank /= k_;
    }
    return w;
  }
  std::string name() const override { return "free:" + std::to_string(k_); }
  std::optional<std::size_t> identity() const override { return 0; }
  std::optional<ShiftOracle> shift_oracle() const override { return ShiftOracle{true, 0, 0}; }

 private:
  std::size_t log2k_() const {
    std::size_t b = 1;
    while ((std::size_t{1} << b) < k_) ++b;
    return std::max<std::size_t>(b, 1);
  }
  std::size_t pow_k(std::size_t e) const {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= k_;
    return r;
  }
  // number of words shorter than len
  std::size_t offset(std::size_t len) const {
    std::size_t total = 0, p = 1;
    for (std::size_t l = 0; l < len; ++l) {
      total += p;
      p *= k_;
    }
    return total;
  }
  std::pair<std::size_t, std::size_t> decode(std::size_t idx) const {
    if (k_ == 1) return {idx, 0};
    std::size_t len = 0, p = 1, base = 0;
    while (base + p <= idx) {
      base += p;
      p *= k_;
      ++len;
    }
    return {len, idx - base};
  }
  std::size_t k_;
};

class Taimanov final : public Semigroup {
 public:
  Taimanov() { tags_ = {Tag::Commutative}; }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    return (a == b && a > 1) ? 1 : 0;
  }
  std::string render(std::size_t i) const override { return std::to_string(i); }
  std::string name() const override { return "taimanov"; }
  std::optional<std::size_t> zero() const override { return 0; }
  std::optional<ShiftOracle> shift_oracle() const override {
    return ShiftOracle{false, 0, 0};  // {x : 0*x = 0} = omega
  }
};

class SemilatticeOmega final : public Semigroup {
 public:
  SemilatticeOmega() { tags_ = {Tag::Commutative, Tag::Semilattice}; }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override { return a == b ? a : 0; }
  std::string render(std::size_t i) const override { return std::to_string(i); }
  std::string name() const override { return "semilattice-omega"; }
  std::optional<std::size_t> zero() const override { return 0; }
  std::optional<ShiftOracle> shift_oracle() const override {
    return ShiftOracle{false, 0, 0};  // {x : 0*x = 0} = omega
  }
};

// <x,i> * <y,j> = <x + i*y, i*j>; signs enumerated +1, -1.
class SemidirectPM final : public Semigroup {
 public:
  explicit SemidirectPM(SemigroupPtr base) : base_(std::move(base)) {
    if (!base_ || !base_->additive_value(0))
      throw Error(Error::Kind::Unsupported, "semidirect product needs an additive base");
    if (base_->is_finite())
      throw Error(Error::Kind::Unsupported, "semidirect product base must be symbolic");
    tags_ = {Tag::Cancellative, Tag::Group, Tag::Monoid};
  }
  Kind kind() const override { return Kind::Symbolic; }
  std::optional<std::size_t> size() const override { return std::nullopt; }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    auto [xa, sa] = parts(a);
    auto [xb, sb] = parts(b);
    long long x = xa + (sa == 0 ? xb : -xb);
    return compose(x, sa ^ sb);
  }
  std::string render(std::size_t i) const override {
    auto [x, s] = parts(i);
    return "<" + std::to_string(x) + "," + (s == 0 ? std::string("1") : std::string("-1")) + ">";
  }
  std::string name() const override { return "zpm"; }
  std::optional<std::size_t> identity() const override { return compose(0, 0); }
  std::optional<ShiftOracle> shift_oracle() const override { return ShiftOracle{true, 0, 0}; }
  std::optional<std::size_t> group_identity() const override { return identity(); }
  std::optional<std::size_t> group_inverse(std::size_t i) const override {
    auto [x, s] = parts(i);
    return compose(s == 0 ? -x : x, s);
  }
  std::pair<long long, std::size_t> parts(std::size_t idx) const {
    auto [bi, si] = pair_decompose(idx, std::nullopt, 2);
    return {*base_->additive_value(bi), si};
  }
  std::size_t compose(long long x, std::size_t sign) const {
    return pair_index(*base_->additive_index(x), sign, std::nullopt, 2);
  }

 private:
  SemigroupPtr base_;
};

class FiniteTable final : public Semigroup {
 public:
  FiniteTable(std::vector<std::vector<std::size_t>> table, std::string name)
      : table_(std::move(table)), name_(std::move(name)) {
    std::size_t n = table_.size();
    if (n == 0) throw Error(Error::Kind::Invalid, "empty semigroup rejected");
    for (const auto& row : table_) {
      if (row.size() != n) throw Error(Error::Kind::Invalid, "Cayley table is not square");
      for (std::size_t v : row)
        if (v >= n) throw Error(Error::Kind::Invalid, "Cayley table entry out of range");
    }
    detect_structure();
  }
  Kind kind() const override { return Kind::Finite; }
  std::optional<std::size_t> size() const override { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    if (a >= table_.size() || b >= table_.size())
      throw Error(Error::Kind::Invalid, "element index out of range for finite handle");
    return table_[a][b];
  }
  std::string render(std::size_t i) const override { return std::to_string(i); }
  std::string name() const override { return name_; }
  std::optional<std::size_t> identity() const override { return identity_; }
  std::optional<std::size_t> zero() const override { return zero_; }
  std::optional<ShiftOracle> shift_oracle() const override { return ShiftOracle{true, 0, 0}; }
  std::optional<std::size_t> group_identity() const override {
    return has_tag(Tag::Group) ? identity_ : std::nullopt;
  }
  std::optional<std::size_t> group_inverse(std::size_t i) const override {
    if (!has_tag(Tag::Group)) return std::nullopt;
    for (std::size_t j = 0; j < table_.size(); ++j)
      if (table_[i][j] == *identity_ && table_[j][i] == *identity_) return j;
    return std::nullopt;
  }

 private:
  void detect_structure() {
    std::size_t n = table_.size();
    bool comm = true;
    for (std::size_t a = 0; a < n && comm; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] != table_[b][a]) {
          comm = false;
          break;
        }
    if (comm) tags_.insert(Tag::Commutative);
    for (std::size_t e = 0; e < n; ++e) {
      bool id = true, zr = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (table_[e][x] != x || table_[x][e] != x) id = false;
        if (table_[e][x] != e || table_[x][e] != e) zr = false;
      }
      if (id && !identity_) identity_ = e;
      if (zr && !zero_) zero_ = e;
    }
    if (identity_) tags_.insert(Tag::Monoid);
    bool cancel = true;
    for (std::size_t a = 0; a < n && cancel; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (row[table_[a][x]] || col[table_[x][a]]) {
          cancel = false;
          break;
        }
        row[table_[a][x]] = col[table_[x][a]] = true;
      }
    }
    if (cancel) {
      tags_.insert(Tag::Cancellative);
      if (identity_) tags_.insert(Tag::Group);  // finite cancellative monoid
    }
    bool semi = comm;
    for (std::size_t x = 0; x < n && semi; ++x)
      if (table_[x][x] != x) semi = false;
    if (semi) tags_.insert(Tag::Semilattice);
  }

  std::vector<std::vector<std::size_t>> table_;
  std::string name_;
  std::optional<std::size_t> identity_;
  std::optional<std::size_t> zero_;
};

// Fresh adjoined element at enumeration position 0.
class Adjoined final : public Semigroup {
 public:
  enum class Mode { Identity, Zero };
  Adjoined(SemigroupPtr base, Mode mode) : base_(std::move(base)), mode_(mode) {
    if (!base_) throw Error(Error::Kind::Invalid, "adjoin over null handle");
    if (base_->has_tag(Tag::Commutative)) tags_.insert(Tag::Commutative);
  }
  Kind kind() const override { return base_->kind(); }
  std::optional<std::size_t> size() const override {
    auto c = base_->size();
    if (c) return *c + 1;
    return std::nullopt;
  }
  std::size_t mul(std::size_t a, std::size_t b) const override {
    if (mode_ == Mode::Identity) {
      if (a == 0) return b;
      if (b == 0) return a;
      return base_->mul(a - 1, b - 1) + 1;
    }
    if (a == 0 || b == 0) return 0;
    return base_->mul(a - 1, b - 1) + 1;
  }
  std::string render(std::size_t i) const override {
    if (i == 0) return mode_ == Mode::Identity ? "1*" : "0*";
    return base_->render(i - 1);
  }
  std::string name() const override {
    return (mode_ == Mode::Identity ? "adjoin1(" : "adjoin0(") + base_->name() + ")";
  }
  std::optional<std::size_t> identity() const override {
    if (mode_ == Mode::Identity) return 0;
    if (auto e = base_->identity()) return *e + 1;
    return std::nullopt;
  }
  std::optional<std::size_t> zero() const override {
    if (mode_ == Mode::Zero) return 0;
    if (auto z = base_->zero()) return *z + 1;
    return std::nullopt;
  }
  std::optional<ShiftOracle> shift_oracle() const override {
    if (mode_ == Mode::Zero) return ShiftOracle{false, 0, 0};  // {x : 0x = 0} is everything
    auto o = base_->shift_oracle();
    if (o && !o->finite_to_one) return ShiftOracle{false, o->witness_a + 1, o->witness_b + 1};
    return o;
  }

 private:
  SemigroupPtr base_;
  Mode mode_;
};

class Product final : public Semigroup {
 public:
  Product(SemigroupPtr a, SemigroupPtr b) : a_(std::move(a)), b_(std::move(b)) {
    if (!a_ || !b_) throw Error(Error::Kind::Invalid, "product over null handle");
    if (a_->has_tag(Tag::Commutative) && b_->has_tag(Tag::Commutative))
      tags_.insert(Tag::Commutative);
    if (a_->has_tag(Tag::Cancellative) && b_->has_tag(Tag::Cancellative))
      tags_.insert(Tag::Cancellative);
    if (a_->has_tag(Tag::Group) && b_->has_tag(Tag::Group)) tags_.insert(Tag::Group);
  }
  Kind kind() const override {
    return (a_->is_finite() && b_->is_finite()) ? Kind::Finite : Kind::Symbolic;
  }
  std::optional<std::size_t> size() const override {
    auto ca = a_->size(), cb = b_->size();
    if (ca && cb) return *ca * *cb;
    return std::nullopt;
  }
  std::size_t mul(std::size_t x, std::size_t y) const override {
    auto [xi, xj] = pair_decompose(x, a_->size(), b_->size());
    auto [yi, yj] = pair_decompose(y, a_->size(), b_->size());
    return pair_index(a_->mul(xi, yi), b_->mul(xj, yj), a_->size(), b_->size());
  }
  std::string render(std::size_t x) const override {
    auto [i, j] = pair_decompose(x, a_->size(), b_->size());
    return "(" + a_->render(i) + "," + b_->render(j) + ")";
  }
  std::string name() const override { return "product(" + a_->name() + "," + b_->name() + ")"; }
  std::optional<std::size_t> identity() const override {
    auto ea = a_->identity(), eb = b_->identity();
    if (ea && eb) return pair_index(*ea, *eb, a_->size(), b_->size());
    return std::nullopt;
  }
  std::optional<std::size_t> zero() const override {
    auto za = a_->zero(), zb = b_->zero();
    if (za && zb) return pair_index(*za, *zb, a_->size(), b_->size());
    return std::nullopt;
  }
  std::optional<ShiftOracle> shift_oracle() const override {
    auto oa = a_->shift_oracle(), ob = b_->shift_oracle();
    if (oa && ob && oa->finite_to_one && ob->finite_to_one) return ShiftOracle{true, 0, 0};
    return std::nullopt;
  }
  std::optional<std::size_t> group_identity() const override {
    return has_tag(Tag::Group) ? identity() : std::nullopt;
  }
  std::optional<std::size_t> group_inverse(std::size_t x) const override {
    if (!has_tag(Tag::Group)) return std::nullopt;
    auto [i, j] = pair_decompose(x, a_->size(), b_->size());
    auto ia = a_->group_inverse(i), ib = b_->group_inverse(j);
    if (!ia || !ib) return std::nullopt;
    return pair_index(*ia, *ib, a_->size(), b_->size());
  }
  const SemigroupPtr& left() const { return a_; }
  const SemigroupPtr& right() const { return b_; }

 private:
  SemigroupPtr a_, b_;
};

}  // namespace

SemigroupPtr make_nat_plus() { return std::make_shared<NatPlus>(); }
SemigroupPtr make_int_plus() { return std::make_shared<IntPlus>(); }
SemigroupPtr make_free_monoid(std::size_t generators) {
  return std::make_shared<FreeMonoid>(generators);
}

SemigroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw Error(Error::Kind::Invalid, "cyclic group of order 0 rejected");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return std::make_shared<FiniteTable>(std::move(t), "cyclic:" + std::to_string(n));
}

SemigroupPtr make_symmetric3() {
  // permutations of {0,1,2} in lexicographic one-line order
  const std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::size_t c[3];
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      for (std::size_t p = 0; p < 6; ++p)
        if (perms[p][0] == c[0] && perms[p][1] == c[1] && perms[p][2] == c[2]) {
          t[a][b] = p;
          break;
        }
    }
  return std::make_shared<FiniteTable>(std::move(t), "s3");
}

SemigroupPtr make_semidirect_pm(SemigroupPtr abelian_base) {
  return std::make_shared<SemidirectPM>(std::move(abelian_base));
}

SemigroupPtr make_zpm() { return make_semidirect_pm(make_int_plus()); }
SemigroupPtr make_taimanov() { return std::make_shared<Taimanov>(); }
SemigroupPtr make_semilattice_omega() { return std::make_shared<SemilatticeOmega>(); }

SemigroupPtr from_cayley(const std::vector<std::vector<std::size_t>>& table, std::string name) {
  return std::make_shared<FiniteTable>(table, std::move(name));
}

SemigroupPtr adjoin_identity(SemigroupPtr s) {
  return std::make_shared<Adjoined>(std::move(s), Adjoined::Mode::Identity);
}

SemigroupPtr adjoin_zero(SemigroupPtr s) {
  return std::make_shared<Adjoined>(std::move(s), Adjoined::Mode::Zero);
}

SemigroupPtr product(SemigroupPtr a, SemigroupPtr b) {
  return std::make_shared<Product>(std::move(a), std::move(b));
}

}  // namespace semitop
