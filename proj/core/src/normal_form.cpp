#include "cmk/normal_form.hpp"

#include "cmk/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace cmk {
namespace {

struct Bezout {
  Integer g, s, t; // s*a + t*b = g
};

Bezout bezout(const Integer &a, const Integer &b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Zeroes A(i, t) against the pivot A(t, t) by a unimodular row operation,
// mirrored on U.
void eliminate_row(IntegerMatrix &a, IntegerMatrix &u, std::size_t t, std::size_t i) {
  const Integer p = a(t, t);
  const Integer b = a(i, t);
  if (b % p == 0) {
    const Integer k = -(b / p);
    a.add_row_multiple(i, t, k);
    u.add_row_multiple(i, t, k);
    return;
  }
  const auto [g, s, x] = bezout(p, b);
  const Integer r = -(b / g), q = p / g;
  a.combine_rows(t, i, s, x, r, q);
  u.combine_rows(t, i, s, x, r, q);
}

void eliminate_col(IntegerMatrix &a, IntegerMatrix &v, std::size_t t, std::size_t j) {
  const Integer p = a(t, t);
  const Integer b = a(t, j);
  if (b % p == 0) {
    const Integer k = -(b / p);
    a.add_col_multiple(j, t, k);
    v.add_col_multiple(j, t, k);
    return;
  }
  const auto [g, s, x] = bezout(p, b);
  const Integer r = -(b / g), q = p / g;
  a.combine_cols(t, j, s, x, r, q);
  v.combine_cols(t, j, s, x, r, q);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntegerMatrix &a,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0)
        continue;
      if (!best || mpz_cmpabs(a(i, j).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0)
        best = {i, j};
    }
  return best;
}

} // namespace

std::vector<Integer> SNFDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    if (D(i, i) == 0)
      break;
    out.push_back(D(i, i));
  }
  return out;
}

SNFDecomposition smith_normal_form(const IntegerMatrix &m) {
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    const auto pivot = smallest_entry(a, t);
    if (!pivot)
      break;
    a.swap_rows(t, pivot->first);
    u.swap_rows(t, pivot->first);
    a.swap_cols(t, pivot->second);
    v.swap_cols(t, pivot->second);

    for (;;) {
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0)
          eliminate_row(a, u, t, i);
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (a(t, j) != 0)
          eliminate_col(a, v, t, j);

      bool column_clear = true;
      for (std::size_t i = t + 1; i < a.rows() && column_clear; ++i)
        column_clear = a(i, t) == 0;
      if (!column_clear)
        continue;

      // Pivot must divide the whole trailing block; otherwise pull an
      // offending row up and reduce again (the pivot strictly shrinks).
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending)
        break;
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }

    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HermiteDecomposition column_hermite_form(const IntegerMatrix &m) {
  HermiteDecomposition out{m, IntegerMatrix::identity(m.cols()), 0, {}};
  IntegerMatrix &h = out.H;
  IntegerMatrix &v = out.V;
  std::size_t p = 0;

  for (std::size_t r = 0; r < h.rows() && p < h.cols(); ++r) {
    for (std::size_t c = p + 1; c < h.cols(); ++c) {
      if (h(r, c) == 0)
        continue;
      if (h(r, p) == 0) {
        h.swap_cols(p, c);
        v.swap_cols(p, c);
        continue;
      }
      const Integer a = h(r, p);
      const Integer b = h(r, c);
      if (b % a == 0) {
        const Integer k = -(b / a);
        h.add_col_multiple(c, p, k);
        v.add_col_multiple(c, p, k);
        continue;
      }
      const auto [g, s, x] = bezout(a, b);
      const Integer lo = -(b / g), hi = a / g;
      h.combine_cols(p, c, s, x, lo, hi);
      v.combine_cols(p, c, s, x, lo, hi);
    }
    if (h(r, p) == 0)
      continue;
    if (h(r, p) < 0) {
      h.negate_col(p);
      v.negate_col(p);
    }
    for (std::size_t c = 0; c < p; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(r, p).get_mpz_t());
      if (q != 0) {
        h.add_col_multiple(c, p, -q);
        v.add_col_multiple(c, p, -q);
      }
    }
    out.pivot_rows.push_back(r);
    ++p;
  }
  out.rank = p;
  return out;
}

IntegerMatrix kernel_lattice(const IntegerMatrix &m) {
  const auto hnf = column_hermite_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t c = hnf.rank; c < m.cols(); ++c)
    cols.push_back(c);
  return hnf.V.select_columns(cols);
}

IntegerMatrix image_lattice(const IntegerMatrix &m) {
  const auto hnf = column_hermite_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < hnf.rank; ++c)
    cols.push_back(c);
  return hnf.H.select_columns(cols);
}

std::size_t rank(const IntegerMatrix &m) { return column_hermite_form(m).rank; }

Integer determinant(const IntegerMatrix &m) {
  if (m.rows() != m.cols())
    throw InputError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0)
        ++i;
      if (i == n)
        return 0;
      a.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace cmk
