#include "brickforge/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace brickforge {

namespace {

std::string vec_to_line(const QVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << rat_to_string(v[i]);
  return os.str();
}

QVec vec_from_line(const std::string& line) {
  std::istringstream is(line);
  QVec v;
  std::string tok;
  while (is >> tok) v.push_back(rat_from_string(tok));
  return v;
}

}  // namespace

std::string polytope_to_text(const VPolytope& p) {
  std::ostringstream os;
  os << "vpolytope " << p.dim() << ' ' << p.vertex_count() << '\n';
  for (const QVec& v : p.vertices()) os << vec_to_line(v) << '\n';
  return os.str();
}

VPolytope polytope_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int dim = 0;
  std::size_t count = 0;
  is >> tag >> dim >> count;
  if (tag != "vpolytope") throw std::invalid_argument("polytope_from_text: bad header");
  std::string line;
  std::getline(is, line);
  std::vector<QVec> pts;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(is, line)) throw std::invalid_argument("polytope_from_text: truncated");
    pts.push_back(vec_from_line(line));
  }
  return VPolytope::from_points(dim, std::move(pts));
}

std::string fan_to_text(const Fan& fan) {
  std::ostringstream os;
  os << "fan " << fan.dim << ' ' << fan.rays.size() << ' ' << fan.maximal_cones.size() << '\n';
  for (const QVec& r : fan.rays) os << vec_to_line(r) << '\n';
  for (const auto& cone : fan.maximal_cones) {
    os << "cone";
    for (int idx : cone) os << ' ' << idx;
    os << '\n';
  }
  return os.str();
}

Fan fan_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  Fan fan;
  std::size_t nrays = 0, ncones = 0;
  is >> tag >> fan.dim >> nrays >> ncones;
  if (tag != "fan") throw std::invalid_argument("fan_from_text: bad header");
  std::string line;
  std::getline(is, line);
  for (std::size_t i = 0; i < nrays; ++i) {
    if (!std::getline(is, line)) throw std::invalid_argument("fan_from_text: truncated rays");
    fan.rays.push_back(vec_from_line(line));
  }
  for (std::size_t i = 0; i < ncones; ++i) {
    if (!std::getline(is, line)) throw std::invalid_argument("fan_from_text: truncated cones");
    std::istringstream cs(line);
    std::string head;
    cs >> head;
    if (head != "cone") throw std::invalid_argument("fan_from_text: bad cone line");
    std::vector<int> cone;
    int idx;
    while (cs >> idx) cone.push_back(idx);
    fan.maximal_cones.push_back(std::move(cone));
  }
  fan.validate();
  return fan;
}

std::string polytope_to_json(const VPolytope& p) {
  nlohmann::json j;
  j["type"] = "vpolytope";
  j["dim"] = p.dim();
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const QVec& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rat& x : v) row.push_back(rat_to_string(x));
    verts.push_back(std::move(row));
  }
  return j.dump();
}

VPolytope polytope_from_json(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  if (j.at("type") != "vpolytope") throw std::invalid_argument("polytope_from_json: bad type");
  std::vector<QVec> pts;
  for (const auto& row : j.at("vertices")) {
    QVec v;
    for (const auto& entry : row) v.push_back(rat_from_string(entry.get<std::string>()));
    pts.push_back(std::move(v));
  }
  return VPolytope::from_points(j.at("dim").get<int>(), std::move(pts));
}

std::string fan_to_json(const Fan& fan) {
  nlohmann::json j;
  j["type"] = "fan";
  j["dim"] = fan.dim;
  auto& rays = j["rays"] = nlohmann::json::array();
  for (const QVec& r : fan.rays) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rat& x : r) row.push_back(rat_to_string(x));
    rays.push_back(std::move(row));
  }
  j["maximal_cones"] = fan.maximal_cones;
  return j.dump();
}

Fan fan_from_json(const std::string& json) {
  nlohmann::json j = nlohmann::json::parse(json);
  if (j.at("type") != "fan") throw std::invalid_argument("fan_from_json: bad type");
  Fan fan;
  fan.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("rays")) {
    QVec v;
    for (const auto& entry : row) v.push_back(rat_from_string(entry.get<std::string>()));
    fan.rays.push_back(std::move(v));
  }
  fan.maximal_cones = j.at("maximal_cones").get<std::vector<std::vector<int>>>();
  fan.validate();
  return fan;
}

}  // namespace brickforge
