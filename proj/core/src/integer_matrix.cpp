#include "cmk/integer_matrix.hpp"

#include "cmk/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <utility>

namespace cmk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count does not match its shape");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw InputError("ragged matrix literal");
    for (long v : r)
      entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::size_t rows, std::size_t cols,
                                      std::span<const Integer> diag) {
  if (diag.size() > std::min(rows, cols))
    throw InputError("too many diagonal entries for the matrix shape");
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows,
                                          const std::vector<std::vector<Integer>> &cols) {
  IntegerMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw InputError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::without_row(std::size_t r) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r)
      keep.push_back(i);
  return select_rows(keep);
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntegerMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(r, j) = (*this)(r, cols[j]);
  return m;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> rows) const {
  IntegerMatrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c)
      m(i, c) = (*this)(rows[i], c);
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer &x) { return x == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(a, c).swap((*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, a).swap((*this)(r, b));
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::combine_rows(std::size_t a, std::size_t b, const Integer &p,
                                 const Integer &q, const Integer &r, const Integer &s) {
  Integer x, y;
  for (std::size_t c = 0; c < cols_; ++c) {
    x = p * (*this)(a, c) + q * (*this)(b, c);
    y = r * (*this)(a, c) + s * (*this)(b, c);
    (*this)(a, c) = x;
    (*this)(b, c) = y;
  }
}

void IntegerMatrix::combine_cols(std::size_t a, std::size_t b, const Integer &p,
                                 const Integer &q, const Integer &r, const Integer &s) {
  Integer x, y;
  for (std::size_t i = 0; i < rows_; ++i) {
    x = p * (*this)(i, a) + q * (*this)(i, b);
    y = r * (*this)(i, a) + s * (*this)(i, b);
    (*this)(i, a) = x;
    (*this)(i, b) = y;
  }
}

std::string IntegerMatrix::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string &s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  feed(std::to_string(rows_) + "x" + std::to_string(cols_) + ":");
  for (const auto &e : entries_)
    feed(e.get_str() + ",");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols() != b.rows())
    throw InputError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

std::vector<Integer> operator*(const IntegerMatrix &a, std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw InputError("matrix-vector shape mismatch");
  std::vector<Integer> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] += a(i, k) * x[k];
  return out;
}

std::ostream &operator<<(std::ostream &os, const IntegerMatrix &m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

} // namespace cmk
