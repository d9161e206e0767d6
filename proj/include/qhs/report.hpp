#ifndef QHS_REPORT_HPP
#define QHS_REPORT_HPP

#include <json.hpp>

#include "qhs/cover.hpp"
#include "qhs/divisor.hpp"
#include "qhs/milnor_orlik.hpp"
#include "qhs/polynomial.hpp"
#include "qhs/realization.hpp"
#include "qhs/weights.hpp"

// JSON shapes of the command-line reports.  Keys come out sorted and big
// integers are base-10 strings, so equal inputs give byte-identical output.

namespace qhs {

using json = nlohmann::json;

/* [{"j": 1, "num": "-1", "den": "1"}, ...] sorted by j. */
json divisor_to_json(const OrlikDivisor& div);
/* Inverse of divisor_to_json; throws invalid_index / integrality on bad input. */
OrlikDivisor divisor_from_json(const json& j);

json weights_to_json(const WeightSystem& ws);
WeightSystem weights_from_json(const json& j);

json poly_to_json(const CharPolynomial& p);
json link_to_json(const LinkInvariants& inv);
json cover_to_json(const CoverLink& cover);
json family_to_json(const FamilyMember& m);
json manifold_to_json(const SmaleManifold& m);
json certificate_to_json(const RealizationCertificate& cert);

} // namespace qhs

#endif
