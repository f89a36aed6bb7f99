#pragma once

#include "brstack/abelian.hpp"
#include "brstack/brauer.hpp"
#include "brstack/covers.hpp"
#include "brstack/inertia.hpp"
#include "brstack/rootdata.hpp"

#include <json.hpp>

namespace brstack {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in a signed long and as
// decimal strings otherwise; both forms are accepted on input. Malformed
// documents raise ParseError.

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// [n1, n2, ...]
Json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

/// {"group": [...], "coords": [...]}
Json to_json(const GroupElement& x);
GroupElement element_from_json(const Json& j);

/// {"d": [...], "U": [[...]], "V": [[...]]}
Json to_json(const SmithDecomposition& s);

/// {"gq": g', "N": N, "d": [d_1, ...]}
Json to_json(const AdmissibleDatum& a);
AdmissibleDatum datum_from_json(const Json& j);

/// {"h2": [...], "class_nontrivial": bool, "d_over_N": int, "all_di_even": bool}
Json to_json(const BrauerReport& r);
BrauerReport brauer_report_from_json(const Json& j);

/// Flat object: gq, N, d, g, admissible, failures, k, connected, brauer
/// (object or null). g is a number, or a "p/q" string when non-integral.
Json to_json(const SectorReport& r);
SectorReport sector_report_from_json(const Json& j);

/// {"factors": ["A3", ...] or ["A", "3", ...], "central_generators": [[...]]}
Json to_json(const SemisimpleGroupSpec& spec);
SemisimpleGroupSpec semisimple_spec_from_json(const Json& j);

}  // namespace brstack
