#pragma once

#include <json.hpp>

#include "octo/cd_number.hpp"
#include "octo/cw_complex.hpp"
#include "octo/hopf.hpp"
#include "octo/mult_table.hpp"
#include "octo/projective.hpp"
#include "octo/properties.hpp"

namespace octo {

/// Key order follows insertion, so equal inputs give byte-identical text.
using Json = nlohmann::ordered_json;

/// Exact scalars as decimal "num/den" strings ("3" when den = 1).
Json to_json(const CDNumber<Rational>& x);

/// { "level": n, "basis": ["e0", ...], "table": [[{"sign": 1, "index": 3}, ...]] }
Json to_json(const MultiplicationTable& t);
MultiplicationTable table_from_json(const Json& j);

Json to_json(const PropertyReport& r);
Json to_json(const ZeroDivisorPair& p);

/// { "rank": r, "torsion": [...] }
Json to_json(const AbelianGroup& g);

Json to_json(const ChartRoundtripReport& r);
Json to_json(const EquivalenceReport& r);

Json to_json(const Bidegree& b);
Json to_json(const LinkingReport& r);

}  // namespace octo
