#pragma once

// JSON (and CSV) serialization of every result object.  Rationals are
// "p/q" strings; documents carry the schema version "aa-schema/1".
// Certificates round-trip so they can be re-verified from a file alone.

#include <aa/tailblowup.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace aa {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "aa-schema/1";

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const DivisorClass& d);
json to_json(const SurfaceModel& s);
json to_json(const LinearForm& f);
json to_json(const QuadraticForm& q);
json to_json(const StrictInequality& ineq);
json to_json(const ConstraintSystem& sys);
json to_json(const HomogeneousSystem& sys);
json to_json(const FeasibilityCertificate& cert);
json to_json(const OriginCheck& check);
json to_json(const AmpleAngleBody& body);
json to_json(const PaperLPMatrix& m);
json to_json(const TailEvidence& e);

HomogeneousSystem homogeneous_system_from_json(const json& j);
FeasibilityCertificate certificate_from_json(const json& j);

/// Wraps a payload in {"schema": "aa-schema/1", "kind": ..., ...payload}.
json make_document(const std::string& kind, json payload);

/// CSV with a header row; each point becomes one row of p/q cells.
std::string points_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<Rat>>& rows);

} // namespace aa
