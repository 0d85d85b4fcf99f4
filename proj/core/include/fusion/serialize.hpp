#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/groebner.hpp"
#include "fusion/ideal.hpp"
#include "fusion/koszul.hpp"
#include "fusion/matrix.hpp"
#include "fusion/quotient.hpp"
#include "fusion/torus.hpp"
#include "fusion/verlinde.hpp"

namespace fusion {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Canonical bit-exact text form: terms in descending grevlex, each
/// written `c * t1^a1*...*tn^an` with every variable listed and the
/// coefficient always as `p/q`. Zero polynomial serializes as "0".
std::string poly_text(const MPoly& p);
std::string monomial_text(const ExpVec& e, int nvars);

/// Parse the poly_text format back. Throws DomainError on malformed input.
MPoly poly_parse(const std::string& s, int nvars);

std::string torus_text(const TorusElem& x);
std::string localized_text(const LocalizedElem& x);

json matrix_json(const RatMatrix& m);
json partition_json(const Partition& p);

json groebner_json(const GroebnerBasis& gb);
json quotient_json(const QuotientAlgebra& a);
json fusion_table_json(const FusionTable& t);
json presentation_json(const IdealPresentation& p);
json potential_json(const Potential& p, const DerivativeCheck& check);
json regularity_json(const RegularityReport& r);
json koszul_json(const KoszulReport& r);
json comparison_json(const QuotientComparison& c);

/// Deterministic rendering: 2-space indent, sorted object keys (nlohmann
/// std::map default), trailing newline.
std::string dump_json(const json& j);

}  // namespace fusion
