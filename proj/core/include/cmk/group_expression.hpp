#pragma once

#include "cmk/abelian_group.hpp"
#include "cmk/integer_matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace cmk {

class GroupExpression;
struct Atom;

struct FreeAtom {
  std::size_t rank = 1;
};
struct CyclicAtom {
  Integer order;
};
// k^x, the multiplicative group of a residue field.
struct UnitsAtom {
  std::string field = "k";
};
// k^+, the additive group of a residue field.
struct AdditiveAtom {
  std::string field = "k";
};
// R^x / k^x; not finitely generated, never instantiated.
struct ResidueUnitsAtom {};
// A / dA
struct QuotientAtom {
  std::shared_ptr<const Atom> base;
  Integer divisor;
};
// A group known only through attached facts.
struct OpaqueAtom {
  std::string name;
  std::vector<std::string> constraints;
};
// An extension 0 -> kernel -> E -> quotient -> 0 that is not asserted to split.
struct ExtensionAtom {
  std::shared_ptr<const GroupExpression> kernel;
  std::shared_ptr<const GroupExpression> quotient;
};

struct Atom {
  using Variant = std::variant<FreeAtom, CyclicAtom, UnitsAtom, AdditiveAtom, ResidueUnitsAtom,
                               QuotientAtom, OpaqueAtom, ExtensionAtom>;
  Variant value;

  template <class T>
    requires std::is_constructible_v<Variant, T> && (!std::is_same_v<std::decay_t<T>, Atom>)
  Atom(T v) : value(std::move(v)) {} // NOLINT(google-explicit-constructor)

  template <class T> bool is() const { return std::holds_alternative<T>(value); }
  template <class T> const T &as() const { return std::get<T>(value); }

  std::string to_string() const;
  std::string kind() const;
};

bool operator==(const Atom &a, const Atom &b);

QuotientAtom quotient(Atom base, Integer divisor);
ExtensionAtom extension(GroupExpression kernel, GroupExpression quotient);

// Formal direct sum of atoms. The empty sum is the trivial group.
class GroupExpression {
public:
  GroupExpression() = default;
  GroupExpression(Atom a) { summands_.push_back(std::move(a)); } // NOLINT
  explicit GroupExpression(std::vector<Atom> summands) : summands_(std::move(summands)) {}

  const std::vector<Atom> &summands() const noexcept { return summands_; }
  bool empty() const noexcept { return summands_.empty(); }

  GroupExpression &operator+=(const GroupExpression &other);
  friend GroupExpression operator+(GroupExpression a, const GroupExpression &b) {
    a += b;
    return a;
  }

  std::string to_string() const;

  friend bool operator==(const GroupExpression &, const GroupExpression &) = default;

private:
  std::vector<Atom> summands_;
};

struct FiniteField {
  std::uint64_t order = 0;
  std::uint64_t characteristic = 0;
  unsigned degree = 0;
};

// Throws InputError unless q = p^e with p prime, e >= 1.
FiniteField finite_field(std::uint64_t q);

struct CoefficientSpec {
  enum class Mode { symbolic, finite_field };
  Mode mode = Mode::symbolic;
  std::uint64_t q = 0;

  static CoefficientSpec symbolic() { return {}; }
  // Validates that q is a prime power.
  static CoefficientSpec over(std::uint64_t q);
  // "symbolic" or "ff:<q>"
  static CoefficientSpec parse(const std::string &text);

  bool is_finite() const noexcept { return mode == Mode::finite_field; }
  std::string to_string() const;
};

struct Instantiation {
  std::optional<FiniteAbelianGroup> group;
  // Descriptions of the atoms that could not be made concrete.
  std::vector<std::string> refused;

  bool ok() const noexcept { return group.has_value(); }
};

// Concrete group over the field of order q, or a refusal listing the atoms
// that block it (opaque atoms, R^x/k^x, free atoms, undetermined extensions).
Instantiation instantiate(const GroupExpression &e, std::uint64_t q);

// Replaces every instantiable summand by cyclic atoms and keeps the rest.
GroupExpression partially_instantiate(const GroupExpression &e, std::uint64_t q);

GroupExpression to_expression(const FiniteAbelianGroup &g);

} // namespace cmk
