#include "logbm/io.hpp"

#include <fstream>
#include <json.hpp>

namespace logbm {

namespace {

using nlohmann::json;

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GeometryError("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<Direction> parse_directions(const json& arr, int dim, const char* what) {
  std::vector<Direction> dirs;
  for (const auto& row : arr) {
    if (static_cast<int>(row.size()) != dim) {
      throw DimensionMismatch(std::string(what) + ": row length != dim");
    }
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = row[static_cast<std::size_t>(i)].get<double>();
    dirs.emplace_back(v);
  }
  return dirs;
}

json vectors_to_json(const Eigen::MatrixXd& cols) {
  json arr = json::array();
  for (Eigen::Index c = 0; c < cols.cols(); ++c) {
    json row = json::array();
    for (Eigen::Index r = 0; r < cols.rows(); ++r) row.push_back(cols(r, c));
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

SymmetricPolytope load_body(const std::string& path) {
  const json j = read_file(path);
  const int dim = j.at("dim").get<int>();
  auto dirs = parse_directions(j.at("normals"), dim, "body normals");
  const auto& sup = j.at("supports");
  if (sup.size() != dirs.size()) {
    throw DimensionMismatch("body: supports/normals count mismatch");
  }
  Eigen::VectorXd h(static_cast<Eigen::Index>(sup.size()));
  for (std::size_t i = 0; i < sup.size(); ++i) h[static_cast<Eigen::Index>(i)] = sup[i].get<double>();
  return wulff_shape(dirs, h);
}

void save_body(const SymmetricPolytope& body, const std::string& path) {
  json j;
  j["dim"] = body.dim();
  j["normals"] = vectors_to_json(body.normals());
  json sup = json::array();
  for (Eigen::Index i = 0; i < body.supports().size(); ++i) sup.push_back(body.supports()[i]);
  j["supports"] = sup;
  write_file(j, path);
}

std::string body_to_json(const SymmetricPolytope& body) {
  json j;
  j["dim"] = body.dim();
  j["normals"] = vectors_to_json(body.normals());
  json sup = json::array();
  for (Eigen::Index i = 0; i < body.supports().size(); ++i) sup.push_back(body.supports()[i]);
  j["supports"] = sup;
  return j.dump(2);
}

EvenDiscreteMeasure load_measure(const std::string& path) {
  const json j = read_file(path);
  const int dim = j.at("dim").get<int>();
  auto dirs = parse_directions(j.at("directions"), dim, "measure directions");
  const auto& ws = j.at("weights");
  if (ws.size() != dirs.size()) {
    throw DimensionMismatch("measure: weights/directions count mismatch");
  }
  Eigen::VectorXd w(static_cast<Eigen::Index>(ws.size()));
  for (std::size_t i = 0; i < ws.size(); ++i) w[static_cast<Eigen::Index>(i)] = ws[i].get<double>();
  return EvenDiscreteMeasure(std::move(dirs), std::move(w));
}

void save_measure(const EvenDiscreteMeasure& measure, const std::string& path) {
  json j;
  j["dim"] = measure.dim();
  j["directions"] = vectors_to_json(directions_as_matrix(measure.directions()));
  json ws = json::array();
  for (Eigen::Index i = 0; i < measure.weights().size(); ++i) ws.push_back(measure.weights()[i]);
  j["weights"] = ws;
  write_file(j, path);
}

std::string measure_to_json(const EvenDiscreteMeasure& measure) {
  json j;
  j["dim"] = measure.dim();
  j["directions"] = vectors_to_json(directions_as_matrix(measure.directions()));
  json ws = json::array();
  for (Eigen::Index i = 0; i < measure.weights().size(); ++i) ws.push_back(measure.weights()[i]);
  j["weights"] = ws;
  return j.dump(2);
}

Zonotope load_zonotope(const std::string& path) {
  const json j = read_file(path);
  const int dim = j.at("dim").get<int>();
  const auto& rows = j.at("generators");
  Eigen::MatrixXd gens(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (static_cast<int>(rows[c].size()) != dim) {
      throw DimensionMismatch("zonotope: generator length != dim");
    }
    for (int r = 0; r < dim; ++r) gens(r, static_cast<Eigen::Index>(c)) = rows[c][static_cast<std::size_t>(r)].get<double>();
  }
  return zonotope_from_generators(gens);
}

void save_zonotope(const Zonotope& z, const std::string& path) {
  json j;
  j["dim"] = z.dim();
  j["generators"] = vectors_to_json(z.generators());
  write_file(j, path);
}

}  // namespace logbm
