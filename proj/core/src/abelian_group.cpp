#include "cmk/abelian_group.hpp"

#include "cmk/errors.hpp"
#include "cmk/normal_form.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string_view>

namespace cmk {
namespace {

// Pairwise (gcd, lcm) sweep; leaves a divisibility chain with the same
// direct sum up to isomorphism.
template <class T, class Gcd> void chain(std::vector<T> &v, Gcd gcd) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const T g = gcd(v[i], v[j]);
      const T l = (v[i] / g) * v[j];
      v[i] = g;
      v[j] = l;
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw InputError("finite group order exceeds 64 bits");
  return out;
}

// a^n, or nullopt once the value exceeds `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t a, std::size_t n, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a != 0 && out > limit / a)
      return std::nullopt;
    out *= a;
  }
  if (out > limit)
    return std::nullopt;
  return out;
}

std::uint64_t mod_u64(const Integer &x, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
  return r.get_ui();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    out.push_back(p);
    while (n % p == 0)
      n /= p;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

FGAbelianGroup FGAbelianGroup::from_orders(std::size_t free_rank, std::vector<Integer> orders) {
  FGAbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> torsion;
  for (auto &d : orders) {
    if (d == 0) {
      ++g.free_rank_;
      continue;
    }
    d = abs(d);
    if (d != 1)
      torsion.push_back(std::move(d));
  }
  chain(torsion, [](const Integer &a, const Integer &b) { return Integer(gcd(a, b)); });
  for (auto &d : torsion)
    if (d != 1)
      g.factors_.push_back(std::move(d));
  return g;
}

Integer FGAbelianGroup::torsion_order() const {
  Integer out = 1;
  for (const auto &d : factors_)
    out *= d;
  return out;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial())
    return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1)
      os << '^' << free_rank_;
    first = false;
  }
  for (const auto &d : factors_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (auto a : orders_)
    if (a == 0)
      throw InputError("cyclic factor of order 0 is not finite");
  (void)order();
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto a : orders_)
    n = checked_mul(n, a);
  return n;
}

bool FiniteAbelianGroup::is_trivial() const { return order() == 1; }

std::vector<std::uint64_t> FiniteAbelianGroup::invariant_factors() const {
  std::vector<std::uint64_t> v;
  for (auto a : orders_)
    if (a != 1)
      v.push_back(a);
  chain(v, [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); });
  std::erase(v, std::uint64_t{1});
  return v;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup &other) const {
  auto v = orders_;
  v.insert(v.end(), other.orders_.begin(), other.orders_.end());
  return FiniteAbelianGroup(std::move(v));
}

FiniteAbelianGroup FiniteAbelianGroup::power(std::size_t n) const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < n; ++i)
    v.insert(v.end(), orders_.begin(), orders_.end());
  return FiniteAbelianGroup(std::move(v));
}

std::string FiniteAbelianGroup::to_string() const {
  const auto f = invariant_factors();
  if (f.empty())
    return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i)
    os << (i ? " + " : "") << "Z/" << f[i];
  return os.str();
}

FGAbelianGroup cokernel(const IntegerMatrix &m) {
  const auto diag = smith_normal_form(m).diagonal();
  return FGAbelianGroup::from_orders(m.rows() - diag.size(), diag);
}

FiniteAbelianGroup cokernel_with_coefficients(const IntegerMatrix &m,
                                              const FiniteAbelianGroup &a) {
  const auto diag = smith_normal_form(m).diagonal();
  std::vector<std::uint64_t> orders;
  for (const auto &d : diag)
    for (auto n : a.cyclic_orders())
      orders.push_back(mpz_gcd_ui(nullptr, d.get_mpz_t(), n));
  const auto free_part = a.power(m.rows() - diag.size());
  orders.insert(orders.end(), free_part.cyclic_orders().begin(),
                free_part.cyclic_orders().end());
  return FiniteAbelianGroup(std::move(orders)).canonical();
}

std::uint64_t oracle_budget() {
  const char *env = std::getenv("CMK_ORACLE_BUDGET");
  if (!env || !*env)
    return default_oracle_budget;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("CMK_ORACLE_BUDGET is not a nonnegative integer: " + std::string(text));
  return value;
}

FiniteAbelianGroup brute_force_cokernel(const IntegerMatrix &m, const FiniteAbelianGroup &a,
                                        std::uint64_t budget) {
  std::vector<std::uint64_t> radix;
  for (auto n : a.cyclic_orders())
    if (n != 1)
      radix.push_back(n);
  const std::uint64_t group_order = a.order();
  const auto target_size = bounded_power(group_order, m.rows(), budget);
  const auto source_size = bounded_power(group_order, m.cols(), budget);
  if (!target_size || !source_size)
    throw BudgetExceeded("brute-force cokernel needs " + std::to_string(group_order) + "^" +
                         std::to_string(std::max(m.rows(), m.cols())) +
                         " enumerated tuples, over the budget of " + std::to_string(budget));

  const std::size_t k = radix.size();
  const std::size_t rows = m.rows(), cols = m.cols();
  // Coordinates of an element of A^n: n blocks of k residues.
  auto decode = [&](std::uint64_t index, std::size_t n, std::vector<std::uint64_t> &out) {
    out.assign(n * k, 0);
    for (std::size_t i = 0; i < n * k; ++i) {
      const auto base = radix[i % k];
      out[i] = index % base;
      index /= base;
    }
  };
  auto encode = [&](const std::vector<std::uint64_t> &x) {
    std::uint64_t index = 0;
    for (std::size_t i = x.size(); i-- > 0;)
      index = index * radix[i % k] + x[i];
    return index;
  };

  // M reduced modulo each coordinate order.
  std::vector<std::uint64_t> reduced(rows * cols * k);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t c = 0; c < k; ++c)
        reduced[(r * cols + j) * k + c] = mod_u64(m(r, j), radix[c]);

  std::vector<bool> in_image(*target_size, false);
  std::vector<std::uint64_t> x, y(rows * k);
  for (std::uint64_t s = 0; s < *source_size; ++s) {
    decode(s, cols, x);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j)
          acc = (acc + reduced[(r * cols + j) * k + c] * x[j * k + c]) % radix[c];
        y[r * k + c] = acc;
      }
    in_image[encode(y)] = true;
  }
  const auto image_size =
      static_cast<std::uint64_t>(std::count(in_image.begin(), in_image.end(), true));
  const std::uint64_t quotient_order = *target_size / image_size;

  // |Q[p^e]| = #{x : p^e x in image} / |image| determines the p-part of Q:
  // log_p |Q[p^e]| - log_p |Q[p^(e-1)]| is the number of cyclic factors of
  // order at least p^e.
  std::vector<std::uint64_t> elementary;
  for (auto p : prime_factors(quotient_order)) {
    std::uint64_t p_part = 1;
    for (auto n = quotient_order; n % p == 0; n /= p)
      p_part *= p;
    unsigned prev_log = 0;
    std::vector<unsigned> at_least; // at_least[e-1] = #factors with order >= p^e
    std::uint64_t scale = 1;
    for (;;) {
      scale *= p;
      std::uint64_t killed = 0;
      for (std::uint64_t t = 0; t < *target_size; ++t) {
        decode(t, rows, x);
        for (std::size_t i = 0; i < x.size(); ++i)
          x[i] = (x[i] * (scale % radix[i % k])) % radix[i % k];
        killed += in_image[encode(x)];
      }
      std::uint64_t torsion = killed / image_size;
      unsigned log = 0;
      for (; torsion > 1; torsion /= p)
        ++log;
      at_least.push_back(log - prev_log);
      prev_log = log;
      if (killed / image_size == p_part)
        break;
    }
    for (std::size_t e = 0; e < at_least.size(); ++e) {
      const unsigned exactly = at_least[e] - (e + 1 < at_least.size() ? at_least[e + 1] : 0);
      std::uint64_t power = 1;
      for (std::size_t i = 0; i <= e; ++i)
        power *= p;
      for (unsigned i = 0; i < exactly; ++i)
        elementary.push_back(power);
    }
  }
  return FiniteAbelianGroup(std::move(elementary)).canonical();
}

} // namespace cmk
