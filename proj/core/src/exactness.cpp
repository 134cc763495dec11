#include "cmk/exactness.hpp"

#include "cmk/errors.hpp"
#include "cmk/normal_form.hpp"

#include <string>

namespace cmk {

ExactnessCheck is_exact_at(const IntegerMatrix &f, const IntegerMatrix &g) {
  if (f.rows() != g.cols())
    throw InputError("cannot compose: f has " + std::to_string(f.rows()) +
                     " rows but g has " + std::to_string(g.cols()) + " columns");
  if (!(g * f).is_zero())
    return {false, "g o f is nonzero"};
  // Both sides in column Hermite form; equal lattices have equal forms.
  const IntegerMatrix kernel = image_lattice(kernel_lattice(g));
  const IntegerMatrix image = image_lattice(f);
  if (kernel == image)
    return {true, "exact"};
  if (kernel.cols() != image.cols())
    return {false, "ker g has rank " + std::to_string(kernel.cols()) + " but im f has rank " +
                       std::to_string(image.cols())};
  return {false, "im f is a proper sublattice of ker g"};
}

} // namespace cmk
