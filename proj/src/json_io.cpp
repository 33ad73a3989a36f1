#include "tvb/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tvb {

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string problem_hash(const Json& problem) {
  const std::string text = canonical_dump(problem);
  std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;  // FNV prime
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_atomic(const std::string& path, const Json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + tmp);
    out << canonical_dump(doc);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::invalid_argument("cannot rename into place: " + path);
}

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_of_double(j.get<double>());
  throw std::invalid_argument("expected a rational (string or number), got: " + j.dump());
}

Json rational_vector_to_json(const RatVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_json(v(i)));
  return arr;
}

RatVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("polytope JSON needs \"dim\" and \"vertices\"");
  const int d = j.at("dim").get<int>();
  std::vector<RatVector> verts;
  for (const auto& row : j.at("vertices")) verts.push_back(rational_vector_from_json(row));
  if (j.contains("faces")) {
    std::vector<std::vector<int>> faces;
    for (const auto& f : j.at("faces")) faces.push_back(f.get<std::vector<int>>());
    return Polytope::from_vertices_and_faces(d, std::move(verts), std::move(faces));
  }
  return Polytope::from_vertices(d, std::move(verts));
}

Json polytope_to_json(const Polytope& P) {
  Json j;
  j["dim"] = P.ambient_dim();
  Json verts = Json::array();
  for (const auto& v : P.vertices()) verts.push_back(rational_vector_to_json(v));
  j["vertices"] = verts;
  Json faces = Json::array();
  for (const auto& f : P.faces()) faces.push_back(f.vertex_set);
  j["faces"] = faces;
  return j;
}

PointConfiguration config_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("points"))
    throw std::invalid_argument("configuration JSON needs \"dim\" and \"points\"");
  PointConfiguration cfg;
  cfg.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("points")) {
    RatVector p = rational_vector_from_json(row);
    if (p.size() != cfg.dim)
      throw std::invalid_argument("configuration point dimension differs from \"dim\"");
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

Json config_to_json(const PointConfiguration& cfg) {
  Json j;
  j["dim"] = cfg.dim;
  Json pts = Json::array();
  for (const auto& p : cfg.points) pts.push_back(rational_vector_to_json(p));
  j["points"] = pts;
  return j;
}

std::optional<std::vector<int>> colors_from_json(const Json& j) {
  if (!j.contains("colors")) return std::nullopt;
  return j.at("colors").get<std::vector<int>>();
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("facets"))
    throw std::invalid_argument("complex JSON needs \"vertices\" and \"facets\"");
  SimplicialComplex K;
  K.vertex_count = j.at("vertices").get<int>();
  for (const auto& f : j.at("facets")) {
    auto facet = f.get<std::vector<int>>();
    std::sort(facet.begin(), facet.end());
    for (int v : facet)
      if (v < 0 || v >= K.vertex_count)
        throw std::invalid_argument("complex facet index out of range");
    K.facets.push_back(std::move(facet));
  }
  return K;
}

Json barycenter_certificate_to_json(const BarycenterCertificate& cert) {
  Json j;
  j["faces"] = cert.faces;
  Json pts = Json::array();
  for (const auto& p : cert.points) pts.push_back(rational_vector_to_json(p));
  j["points"] = pts;
  Json coeffs = Json::array();
  for (const auto& block : cert.coefficients) {
    Json row = Json::array();
    for (const auto& c : block) row.push_back(rational_to_json(c));
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  return j;
}

BarycenterCertificate barycenter_certificate_from_json(const Json& j) {
  BarycenterCertificate cert;
  cert.faces = j.at("faces").get<std::vector<std::vector<int>>>();
  for (const auto& p : j.at("points")) cert.points.push_back(rational_vector_from_json(p));
  for (const auto& block : j.at("coefficients")) {
    std::vector<Rational> row;
    for (const auto& c : block) row.push_back(rational_from_json(c));
    cert.coefficients.push_back(std::move(row));
  }
  return cert;
}

Json tverberg_certificate_to_json(const TverbergCertificate& cert) {
  Json j;
  j["faces"] = cert.faces;
  Json coeffs = Json::array();
  for (const auto& block : cert.coefficients) {
    Json row = Json::array();
    for (const auto& c : block) row.push_back(rational_to_json(c));
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  j["witness"] = rational_vector_to_json(cert.witness);
  return j;
}

TverbergCertificate tverberg_certificate_from_json(const Json& j) {
  TverbergCertificate cert;
  cert.faces = j.at("faces").get<std::vector<std::vector<int>>>();
  for (const auto& block : j.at("coefficients")) {
    std::vector<Rational> row;
    for (const auto& c : block) row.push_back(rational_from_json(c));
    cert.coefficients.push_back(std::move(row));
  }
  cert.witness = rational_vector_from_json(j.at("witness"));
  return cert;
}

}  // namespace tvb
