#pragma once

#include "cmk/abelian_group.hpp"
#include "cmk/arquiver.hpp"
#include "cmk/group_expression.hpp"
#include "cmk/ktheory.hpp"
#include "cmk/localization.hpp"

#include <nlohmann/json.hpp>

namespace cmk {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings.
Json to_json(const Integer &n);
Json to_json(const IntegerMatrix &m);
Json to_json(const FGAbelianGroup &g);
Json to_json(const FiniteAbelianGroup &g);
Json to_json(const Atom &a);
Json to_json(const GroupExpression &e);
Json to_json(const ARMatrix &m);
Json to_json(const ValidationReport &r);
Json to_json(const DeterminantResult &d);
Json to_json(const K1Presentation &p);
Json to_json(const ExactSequenceReport &r);
Json to_json(const FiltrationReport &r);

} // namespace cmk
