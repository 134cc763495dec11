#pragma once

#include "cmk/integer_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmk {

// Z^free_rank + Z/d_1 + ... + Z/d_k in canonical form: every d_i >= 2 and
// d_i | d_{i+1}. Equality is field-wise.
class FGAbelianGroup {
public:
  FGAbelianGroup() = default;

  // Canonicalizes: units are dropped, zeros count toward the free rank, and
  // arbitrary cyclic orders are regrouped into a divisibility chain.
  static FGAbelianGroup from_orders(std::size_t free_rank, std::vector<Integer> orders);
  static FGAbelianGroup free(std::size_t rank) { return from_orders(rank, {}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer> &invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_free() const noexcept { return factors_.empty(); }
  // Torsion order; 1 for torsion-free groups.
  Integer torsion_order() const;

  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup &, const FGAbelianGroup &) = default;

private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

// Direct sum of cyclic groups Z/a_1 + ... + Z/a_k with machine-word orders.
// The list need not be canonical; equality compares canonical invariants.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders);

  static FiniteAbelianGroup cyclic(std::uint64_t n) { return FiniteAbelianGroup({n}); }
  static FiniteAbelianGroup trivial() { return {}; }

  const std::vector<std::uint64_t> &cyclic_orders() const noexcept { return orders_; }

  // Throws InputError when the order does not fit in 64 bits.
  std::uint64_t order() const;
  bool is_trivial() const;

  // Invariant factors (each >= 2, divisibility chain).
  std::vector<std::uint64_t> invariant_factors() const;
  FiniteAbelianGroup canonical() const { return FiniteAbelianGroup(invariant_factors()); }

  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup &other) const;
  // A^n
  FiniteAbelianGroup power(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return a.invariant_factors() == b.invariant_factors();
  }

private:
  std::vector<std::uint64_t> orders_;
};

// Z^rows / (column span of M), reading M as a map Z^cols -> Z^rows.
FGAbelianGroup cokernel(const IntegerMatrix &m);

// coker(M (x) id_A : A^cols -> A^rows) via the Smith normal form of M:
// the sum of A/d_i A over the SNF diagonal plus A^(rows - rank).
FiniteAbelianGroup cokernel_with_coefficients(const IntegerMatrix &m,
                                              const FiniteAbelianGroup &a);

inline constexpr std::uint64_t default_oracle_budget = 1'000'000;

// Enumeration budget, overridable through the CMK_ORACLE_BUDGET environment
// variable.
std::uint64_t oracle_budget();

// Independent oracle for cokernel_with_coefficients: enumerates A^cols to
// build the image inside A^rows, then reads off the elementary divisors of
// the quotient from counts of elements killed by p^k. Throws BudgetExceeded
// when |A|^rows or |A|^cols is larger than `budget`.
FiniteAbelianGroup brute_force_cokernel(const IntegerMatrix &m, const FiniteAbelianGroup &a,
                                        std::uint64_t budget = oracle_budget());

} // namespace cmk
