#include "cmk/group_expression.hpp"

#include "cmk/errors.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace cmk {
namespace {

template <class... Fs> struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

struct AtomInstance {
  std::optional<FiniteAbelianGroup> group;
  std::vector<std::string> refused;
};

AtomInstance instantiate_atom(const Atom &a, const FiniteField &k);

AtomInstance instantiate_sum(const GroupExpression &e, const FiniteField &k) {
  AtomInstance out{FiniteAbelianGroup::trivial(), {}};
  for (const auto &atom : e.summands()) {
    auto part = instantiate_atom(atom, k);
    if (!part.group) {
      out.refused.insert(out.refused.end(), part.refused.begin(), part.refused.end());
      continue;
    }
    if (out.refused.empty())
      out.group = out.group->direct_sum(*part.group);
  }
  if (!out.refused.empty())
    out.group.reset();
  else
    out.group = out.group->canonical();
  return out;
}

AtomInstance refuse(std::string why) { return {std::nullopt, {std::move(why)}}; }

AtomInstance instantiate_atom(const Atom &a, const FiniteField &k) {
  return std::visit(
      overloaded{
          [&](const FreeAtom &f) { return refuse(Atom(f).to_string() + " (infinite)"); },
          [&](const CyclicAtom &c) {
            if (c.order <= 0 || !c.order.fits_ulong_p())
              return refuse(Atom(c).to_string() + " (not a finite cyclic group)");
            return AtomInstance{FiniteAbelianGroup::cyclic(c.order.get_ui()), {}};
          },
          [&](const UnitsAtom &) {
            return AtomInstance{FiniteAbelianGroup::cyclic(k.order - 1), {}};
          },
          [&](const AdditiveAtom &) {
            return AtomInstance{FiniteAbelianGroup::cyclic(k.characteristic).power(k.degree), {}};
          },
          [&](const ResidueUnitsAtom &) {
            return refuse("R^x/k^x (not finitely generated)");
          },
          [&](const QuotientAtom &q) {
            auto base = instantiate_atom(*q.base, k);
            if (!base.group)
              return base;
            const IntegerMatrix d(1, 1, {q.divisor});
            return AtomInstance{cokernel_with_coefficients(d, *base.group), {}};
          },
          [&](const OpaqueAtom &o) { return refuse(o.name + " (opaque)"); },
          [&](const ExtensionAtom &x) {
            auto kernel = instantiate_sum(*x.kernel, k);
            auto quotient = instantiate_sum(*x.quotient, k);
            if (!kernel.group || !quotient.group) {
              kernel.refused.insert(kernel.refused.end(), quotient.refused.begin(),
                                    quotient.refused.end());
              kernel.group.reset();
              return kernel;
            }
            if (kernel.group->is_trivial())
              return quotient;
            if (quotient.group->is_trivial())
              return kernel;
            // Coprime orders force the extension to split.
            if (std::gcd(kernel.group->order(), quotient.group->order()) == 1)
              return AtomInstance{kernel.group->direct_sum(*quotient.group).canonical(), {}};
            return refuse("extension of " + quotient.group->to_string() + " by " +
                          kernel.group->to_string() + " (splitting not determined)");
          },
      },
      a.value);
}

GroupExpression partial_sum(const GroupExpression &e, const FiniteField &k);

GroupExpression partial_atom(const Atom &a, const FiniteField &k) {
  if (auto inst = instantiate_atom(a, k); inst.group)
    return to_expression(*inst.group);
  if (a.is<ExtensionAtom>()) {
    const auto &x = a.as<ExtensionAtom>();
    return Atom(extension(partial_sum(*x.kernel, k), partial_sum(*x.quotient, k)));
  }
  return a;
}

GroupExpression partial_sum(const GroupExpression &e, const FiniteField &k) {
  GroupExpression out;
  for (const auto &atom : e.summands())
    out += partial_atom(atom, k);
  return out;
}

} // namespace

std::string Atom::to_string() const {
  return std::visit(
      overloaded{
          [](const FreeAtom &f) {
            return f.rank == 1 ? std::string("Z") : "Z^" + std::to_string(f.rank);
          },
          [](const CyclicAtom &c) { return "Z/" + c.order.get_str(); },
          [](const UnitsAtom &u) { return u.field + "^x"; },
          [](const AdditiveAtom &a) { return a.field + "^+"; },
          [](const ResidueUnitsAtom &) { return std::string("R^x/k^x"); },
          [](const QuotientAtom &q) {
            const auto base = q.base->to_string();
            return "(" + base + ")/" + q.divisor.get_str() + "(" + base + ")";
          },
          [](const OpaqueAtom &o) { return o.name; },
          [](const ExtensionAtom &x) {
            return "ext(0 -> " + x.kernel->to_string() + " -> E -> " + x.quotient->to_string() +
                   " -> 0)";
          },
      },
      value);
}

std::string Atom::kind() const {
  static const char *names[] = {"free",     "cyclic", "units",  "additive",
                                "residue_units", "quotient", "opaque", "extension"};
  return names[value.index()];
}

bool operator==(const Atom &a, const Atom &b) {
  if (a.value.index() != b.value.index())
    return false;
  return std::visit(
      overloaded{
          [&](const FreeAtom &x) { return x.rank == b.as<FreeAtom>().rank; },
          [&](const CyclicAtom &x) { return x.order == b.as<CyclicAtom>().order; },
          [&](const UnitsAtom &x) { return x.field == b.as<UnitsAtom>().field; },
          [&](const AdditiveAtom &x) { return x.field == b.as<AdditiveAtom>().field; },
          [&](const ResidueUnitsAtom &) { return true; },
          [&](const QuotientAtom &x) {
            const auto &y = b.as<QuotientAtom>();
            return x.divisor == y.divisor && *x.base == *y.base;
          },
          [&](const OpaqueAtom &x) {
            const auto &y = b.as<OpaqueAtom>();
            return x.name == y.name && x.constraints == y.constraints;
          },
          [&](const ExtensionAtom &x) {
            const auto &y = b.as<ExtensionAtom>();
            return *x.kernel == *y.kernel && *x.quotient == *y.quotient;
          },
      },
      a.value);
}

QuotientAtom quotient(Atom base, Integer divisor) {
  return {std::make_shared<const Atom>(std::move(base)), std::move(divisor)};
}

ExtensionAtom extension(GroupExpression kernel, GroupExpression quotient) {
  return {std::make_shared<const GroupExpression>(std::move(kernel)),
          std::make_shared<const GroupExpression>(std::move(quotient))};
}

GroupExpression &GroupExpression::operator+=(const GroupExpression &other) {
  summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end());
  return *this;
}

std::string GroupExpression::to_string() const {
  if (summands_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i)
    out += (i ? " + " : "") + summands_[i].to_string();
  return out;
}

FiniteField finite_field(std::uint64_t q) {
  if (q < 2)
    throw InputError("field order must be a prime power, got " + std::to_string(q));
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw InputError("field order must be a prime power, got " + std::to_string(q));
  return {q, p, e};
}

CoefficientSpec CoefficientSpec::over(std::uint64_t q) {
  (void)finite_field(q);
  return {Mode::finite_field, q};
}

CoefficientSpec CoefficientSpec::parse(const std::string &text) {
  if (text == "symbolic")
    return symbolic();
  if (text.rfind("ff:", 0) == 0) {
    std::uint64_t q = 0;
    const char *first = text.data() + 3, *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, q);
    if (ec == std::errc{} && ptr == last && first != last)
      return over(q);
  }
  throw InputError("coefficients must be 'symbolic' or 'ff:<q>', got '" + text + "'");
}

std::string CoefficientSpec::to_string() const {
  return is_finite() ? "ff:" + std::to_string(q) : "symbolic";
}

Instantiation instantiate(const GroupExpression &e, std::uint64_t q) {
  auto inst = instantiate_sum(e, finite_field(q));
  return {std::move(inst.group), std::move(inst.refused)};
}

GroupExpression partially_instantiate(const GroupExpression &e, std::uint64_t q) {
  return partial_sum(e, finite_field(q));
}

GroupExpression to_expression(const FiniteAbelianGroup &g) {
  GroupExpression out;
  for (auto d : g.invariant_factors())
    out += Atom(CyclicAtom{Integer(static_cast<unsigned long>(d))});
  return out;
}

} // namespace cmk
