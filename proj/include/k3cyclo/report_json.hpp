#ifndef K3CYCLO_REPORT_JSON_HPP
#define K3CYCLO_REPORT_JSON_HPP

#include "k3cyclo/expr.hpp"
#include "k3cyclo/localforms.hpp"
#include "k3cyclo/realizability.hpp"
#include "k3cyclo/salem.hpp"

#include <json.hpp>

namespace k3cyclo {

inline constexpr const char* kSchema = "k3cyclo/1";

/// Values that can exceed 53-bit precision (resultants, evaluations, D_0,
/// primes) are rendered as decimal strings; small structural integers stay
/// plain. Keys are emitted sorted, so identical invocations are
/// byte-identical.
nlohmann::json json_int(const Int& v);
nlohmann::json to_json(const FpPolynomial& p);
nlohmann::json to_json(const PiCertificate& c);
nlohmann::json to_json(const C1Report& r);
nlohmann::json to_json(const ObstructionGroup& g);
nlohmann::json to_json(const RealizabilityReport& r);
nlohmann::json to_json(const ClassTable& t);
nlohmann::json to_json(const SalemReport& r);
nlohmann::json to_json(const SalemCycloGf& r);
nlohmann::json to_json(const Lemma602Report& r);
nlohmann::json to_json(const Prop601Report& r);

std::string symmetry_name(SymmetryClass s);

} // namespace k3cyclo

#endif
