#pragma once

#include "cmk/arquiver.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace cmk {

struct CatalogueEntry {
  std::string family;
  int parameter = 0;
  ARQuiver quiver;
  std::string notes;
};

// AR quiver of the one-dimensional A_{2n} singularity k[[t^2, t^{2n+1}]]:
// indecomposables M0 (= R, projective), ..., Mn, and AR sequences
//   0 -> Mj -> M(j-1) + M(j+1) -> Mj -> 0   for 0 < j < n
//   0 -> Mn -> M(n-1) + Mn     -> Mn -> 0
ARQuiver a2n_quiver(int n);

CatalogueEntry catalogue_entry(std::string_view family, int n);

// Quiver interchange format (JSON). Unknown keys and duplicate ids are
// rejected with a ParseError naming the field.
ARQuiver parse_quiver(std::string_view text);
std::string serialize_quiver(const ARQuiver &q);

ARQuiver load_quiver(const std::filesystem::path &path);
void save_quiver(const ARQuiver &q, const std::filesystem::path &path);

} // namespace cmk
