#ifndef SEMITOP_CORE_HPP_
#define SEMITOP_CORE_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semitop {

// Thrown on precondition violations (foreign elements, bad tables, parse
// errors, exceeded search guards).  The kind is used by the CLI to pick
// an exit code.
class Error : public std::runtime_error {
 public:
  enum class Kind { Usage, Foreign, Invalid, Guard, Unsupported };
  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class Tag { Commutative, Cancellative, Group, Monoid, Semilattice };

enum class Kind { Finite, Symbolic };

// How much a verdict actually proves.  Window-only verdicts are "no
// violation found", never a proof, for countable handles.
enum class Certainty { Exhaustive, Window };

class Semigroup;
using SemigroupPtr = std::shared_ptr<const Semigroup>;

// A reference to an element of a specific handle.  Two refs of the same
// handle are equal iff their indices are equal; refs of different handles
// never mix (operations throw Error::Kind::Foreign).
struct Element {
  std::uint64_t handle_id = 0;
  std::size_t index = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

struct ShiftOracle {
  bool finite_to_one = false;
  // for the negative case: a pair (a, b) whose fiber {x : a*x = b} is
  // infinite in the full semigroup
  std::size_t witness_a = 0;
  std::size_t witness_b = 0;
};

// A finite (Cayley-table) or enumerated countable semigroup.  Elements are
// positions in the canonical enumeration; mul is total on those positions.
// Handles are immutable after construction and safe to share.
class Semigroup : public std::enable_shared_from_this<Semigroup> {
 public:
  Semigroup() : id_(next_id()) {}
  virtual ~Semigroup() = default;

  Semigroup(const Semigroup&) = delete;
  Semigroup& operator=(const Semigroup&) = delete;

  std::uint64_t id() const { return id_; }
  virtual Kind kind() const = 0;
  bool is_finite() const { return kind() == Kind::Finite; }
  // nullopt means countably infinite
  virtual std::optional<std::size_t> size() const = 0;
  virtual std::size_t mul(std::size_t a, std::size_t b) const = 0;
  virtual std::string render(std::size_t i) const = 0;
  virtual std::string name() const = 0;

  virtual std::optional<std::size_t> identity() const { return std::nullopt; }
  virtual std::optional<std::size_t> zero() const { return std::nullopt; }

  bool has_tag(Tag t) const { return tags_.count(t) > 0; }
  const std::set<Tag>& tags() const { return tags_; }

  // Structural oracle for finite-to-one shifts; nullopt = no oracle.
  virtual std::optional<ShiftOracle> shift_oracle() const { return std::nullopt; }

  // Additive view for (N,+) and (Z,+): element <-> integer value.
  virtual std::optional<long long> additive_value(std::size_t) const { return std::nullopt; }
  virtual std::optional<std::size_t> additive_index(long long) const { return std::nullopt; }

  // Group oracle: identity plus inverses, when structurally known.
  virtual std::optional<std::size_t> group_identity() const { return std::nullopt; }
  virtual std::optional<std::size_t> group_inverse(std::size_t) const { return std::nullopt; }

  Element element(std::size_t i) const { return Element{id_, i}; }
  void check_owns(const Element& e) const {
    if (e.handle_id != id_)
      throw Error(Error::Kind::Foreign, "element belongs to a different semigroup handle");
  }

 protected:
  std::set<Tag> tags_;

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }
  std::uint64_t id_;
};

// E_N: the first N enumerated elements of a handle.
struct Window {
  SemigroupPtr handle;
  std::size_t size = 0;

  Window(SemigroupPtr h, std::size_t n) : handle(std::move(h)), size(n) {
    if (!handle) throw Error(Error::Kind::Invalid, "window over null handle");
    if (n == 0) throw Error(Error::Kind::Invalid, "window of size 0");
    if (auto c = handle->size(); c && n > *c) size = *c;
  }

  // Exhaustive when the window covers all of a finite handle.
  bool exhaustive() const {
    auto c = handle->size();
    return c && size >= *c;
  }
};

std::size_t mul(const Semigroup& s, const Element& a, const Element& b);

}  // namespace semitop

#endif  // SEMITOP_CORE_HPP_
