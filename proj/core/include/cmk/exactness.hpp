#pragma once

#include "cmk/integer_matrix.hpp"

#include <string>

namespace cmk {

struct ExactnessCheck {
  bool exact = false;
  std::string diagnostic;

  explicit operator bool() const noexcept { return exact; }
};

// Exactness of A --f--> B --g--> C at B, with f: rows(f) x cols(f) and
// g: rows(g) x cols(g) acting on column vectors. Requires rows(f) == cols(g).
// Checks g*f = 0 and ker g = im f by comparing column Hermite forms.
ExactnessCheck is_exact_at(const IntegerMatrix &f, const IntegerMatrix &g);

} // namespace cmk
