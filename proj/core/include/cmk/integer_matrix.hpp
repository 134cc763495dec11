#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cmk {

using Integer = mpz_class;

// Dense row-major matrix over Z with exact (GMP) entries.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntegerMatrix diagonal(std::size_t rows, std::size_t cols,
                                std::span<const Integer> diag);
  static IntegerMatrix from_columns(std::size_t rows,
                                    const std::vector<std::vector<Integer>> &cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Integer> &entries() const noexcept { return entries_; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;

  IntegerMatrix transpose() const;
  IntegerMatrix without_row(std::size_t r) const;
  IntegerMatrix select_columns(std::span<const std::size_t> cols) const;
  IntegerMatrix select_rows(std::span<const std::size_t> rows) const;
  bool is_zero() const;

  // Elementary operations; each is unimodular except scale by non-units.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k);
  // (row a, row b) <- (p*a + q*b, r*a + s*b)
  void combine_rows(std::size_t a, std::size_t b, const Integer &p, const Integer &q,
                    const Integer &r, const Integer &s);
  void combine_cols(std::size_t a, std::size_t b, const Integer &p, const Integer &q,
                    const Integer &r, const Integer &s);

  // Deterministic 64-bit FNV-1a digest of the shape and decimal entries,
  // rendered as "fnv1a64:<16 hex digits>".
  std::string hash() const;

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);
std::vector<Integer> operator*(const IntegerMatrix &a, std::span<const Integer> x);

std::ostream &operator<<(std::ostream &os, const IntegerMatrix &m);

} // namespace cmk
