#pragma once

// JSON views of the main result types. Every top-level document produced by
// the command-line tool carries "schema": 1.

#include "pfol/certificate.hpp"
#include "pfol/families.hpp"
#include "pfol/foliation.hpp"
#include "pfol/newton.hpp"

#include <json.hpp>

namespace pfol {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

Json to_json(const SparsePoly& f);
Json to_json(const PlaneVectorField& v);
Json to_json(const DegreeReport& d);
Json to_json(const PDivisorResult& r);
/// Vertices counterclockwise from the lexicographically least one.
Json to_json(const LatticePolytope& P);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const CertificateReport& r);
Json to_json(const FamilyVerification& v);

}  // namespace pfol
