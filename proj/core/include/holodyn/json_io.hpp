#pragma once

#include <nlohmann/json.hpp>

#include "holodyn/dynamics.hpp"
#include "holodyn/fock.hpp"
#include "holodyn/graded.hpp"
#include "holodyn/henon.hpp"
#include "holodyn/jet.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/rigidity.hpp"
#include "holodyn/sphere_search.hpp"
#include "holodyn/types.hpp"
#include "holodyn/weight.hpp"

namespace holodyn::json_io {

using nlohmann::json;

// Readers throw SchemaError naming the offending field.
Complex complex_from_json(const json& j, const std::string& field);
Jet jet_from_json(const json& j);
Polynomial polynomial_from_terms(const json& terms, int dim, const std::string& field);
PolyMap polymap_from_json(const json& j);
Weight weight_from_json(const json& j, int dim);
HenonComposition henon_from_json(const json& j);
Matrix matrix_from_json(const json& j, const std::string& field);

json to_json(Complex z);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const std::vector<Complex>& zs);
json to_json(const Jet& jet, double drop_below = 0.0);
json to_json(const Tolerances& tol);
json to_json(const PeriodicOrbit& orbit);
json to_json(const ObstructionCertificate& cert);
json to_json(const GradedOperatorMatrix& m);
json to_json(const RepellingConstruction& c);
json to_json(const SphereMaxProfile& p);
json to_json(const FockOperatorMatrix& m);
json to_json(const DualityResult& d);

}  // namespace holodyn::json_io
