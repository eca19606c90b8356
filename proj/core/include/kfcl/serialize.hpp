#pragma once

#include "kfcl/finsler.hpp"

#include <json.hpp>

namespace kfcl {

/// Row-major nested arrays.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

/// Octonions serialize as arrays of 8 numbers in Cayley-Dickson order.
void to_json(nlohmann::json& j, const Octonion& o);
void from_json(const nlohmann::json& j, Octonion& o);

/// Three row-major 8x8 arrays under "A", "B", "C".
void to_json(nlohmann::json& j, const TrialityTriple& t);
void from_json(const nlohmann::json& j, TrialityTriple& t);

/// Three row-major 8x8 arrays under "a", "b", "c".
void to_json(nlohmann::json& j, const InfTriple& t);
void from_json(const nlohmann::json& j, InfTriple& t);

/// {"name", "elements", "labels"}; elements are triples or 16x16 matrices.
void to_json(nlohmann::json& j, const GeneratorSet& g);
void from_json(const nlohmann::json& j, GeneratorSet& g);

/// {"variant": "riemannian", "Q": ...} or {"variant": "randers", "A", "b"}.
void to_json(nlohmann::json& j, const MinkowskiNorm& f);
MinkowskiNorm minkowski_norm_from_json(const nlohmann::json& j);

/// {"kind", "X", "seed", "points"}.
void to_json(nlohmann::json& j, const OrbitSample& s);
void from_json(const nlohmann::json& j, OrbitSample& s);

}  // namespace kfcl
