#include "kfcl/serialize.hpp"

#include <stdexcept>

namespace kfcl {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw std::invalid_argument("matrix_from_json: expected nested arrays");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw std::invalid_argument("matrix_from_json: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

nlohmann::json vector_to_json(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vector vector_from_json(const nlohmann::json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j[i].get<double>();
  return v;
}

void to_json(nlohmann::json& j, const Octonion& o) {
  j = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) j.push_back(o[i]);
}

void from_json(const nlohmann::json& j, Octonion& o) {
  if (!j.is_array() || j.size() != 8) {
    throw std::invalid_argument("Octonion: expected an array of 8 numbers");
  }
  for (int i = 0; i < 8; ++i) o[i] = j[static_cast<std::size_t>(i)].get<double>();
}

void to_json(nlohmann::json& j, const TrialityTriple& t) {
  j = {{"A", matrix_to_json(t.A)},
       {"B", matrix_to_json(t.B)},
       {"C", matrix_to_json(t.C)}};
}

void from_json(const nlohmann::json& j, TrialityTriple& t) {
  t.A = matrix_from_json(j.at("A"));
  t.B = matrix_from_json(j.at("B"));
  t.C = matrix_from_json(j.at("C"));
}

void to_json(nlohmann::json& j, const InfTriple& t) {
  j = {{"a", matrix_to_json(t.a)},
       {"b", matrix_to_json(t.b)},
       {"c", matrix_to_json(t.c)}};
}

void from_json(const nlohmann::json& j, InfTriple& t) {
  t.a = matrix_from_json(j.at("a"));
  t.b = matrix_from_json(j.at("b"));
  t.c = matrix_from_json(j.at("c"));
}

void to_json(nlohmann::json& j, const GeneratorSet& g) {
  nlohmann::json elements = nlohmann::json::array();
  if (g.is_block_set()) {
    for (const Matrix& m : g.blocks) elements.push_back(matrix_to_json(m));
  } else {
    for (const InfTriple& t : g.triples) elements.push_back(t);
  }
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& [i, k] : g.labels) labels.push_back({i, k});
  j = {{"name", g.name}, {"elements", std::move(elements)},
       {"labels", std::move(labels)}};
}

void from_json(const nlohmann::json& j, GeneratorSet& g) {
  g = GeneratorSet{};
  g.name = j.at("name").get<std::string>();
  for (const auto& e : j.at("elements")) {
    if (e.is_object()) {
      g.triples.push_back(e.get<InfTriple>());
    } else {
      g.blocks.push_back(matrix_from_json(e));
    }
  }
  for (const auto& l : j.at("labels")) {
    g.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
  }
}

void to_json(nlohmann::json& j, const MinkowskiNorm& f) {
  if (f.is_randers()) {
    j = {{"variant", "randers"},
         {"A", matrix_to_json(f.quadratic())},
         {"b", vector_to_json(f.drift())}};
  } else {
    j = {{"variant", "riemannian"}, {"Q", matrix_to_json(f.quadratic())}};
  }
}

MinkowskiNorm minkowski_norm_from_json(const nlohmann::json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "riemannian") {
    return MinkowskiNorm::riemannian(matrix_from_json(j.at("Q")));
  }
  if (variant == "randers") {
    return MinkowskiNorm::randers(matrix_from_json(j.at("A")),
                                  vector_from_json(j.at("b")));
  }
  throw std::invalid_argument("minkowski_norm_from_json: unknown variant " +
                              variant);
}

void to_json(nlohmann::json& j, const OrbitSample& s) {
  nlohmann::json points = nlohmann::json::array();
  for (const Vector& p : s.points) points.push_back(vector_to_json(p));
  j = {{"kind", to_string(s.kind)},
       {"X", matrix_to_json(s.X)},
       {"seed", s.seed},
       {"points", std::move(points)}};
}

void from_json(const nlohmann::json& j, OrbitSample& s) {
  s = OrbitSample{};
  s.kind = sphere_kind_from_string(j.at("kind").get<std::string>());
  s.X = matrix_from_json(j.at("X"));
  s.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& p : j.at("points")) s.points.push_back(vector_from_json(p));
}

}  // namespace kfcl
