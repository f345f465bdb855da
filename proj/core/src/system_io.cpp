#include "dilator/system_io.hpp"

#include <fstream>
#include <stdexcept>

#include "dilator/dilation.hpp"

namespace dilator {

Json cylinder_to_json(const CylinderFunction& f) {
  Json table = Json::object();
  const WordSpace ws = f.word_space();
  for (std::size_t i = 0; i < ws.size(); ++i)
    table[ws.word_at(i).to_string()] = format_rational(f.table()[i]);
  return Json{{"depth", f.depth().coords()}, {"table", table}};
}

CylinderFunction cylinder_from_json(const ShiftSystem& sys, const nlohmann::json& j) {
  const auto depth_list = j.at("depth").get<std::vector<long long>>();
  if (depth_list.size() != static_cast<std::size_t>(sys.rank()))
    throw std::invalid_argument("depth vector length must equal the number of factors");
  const LatticeElement depth{std::vector<long long>(depth_list)};
  if (!depth.is_semigroup()) throw std::invalid_argument("depth entries must be >= 0");
  const WordSpace ws(sys, depth);
  const auto& table_json = j.at("table");
  if (!table_json.is_object()) throw std::invalid_argument("'table' must be an object");
  if (table_json.size() != ws.size())
    throw std::invalid_argument("table has " + std::to_string(table_json.size()) +
                                " entries, expected " + std::to_string(ws.size()));
  std::vector<Rational> table(ws.size());
  std::vector<char> seen(ws.size(), 0);
  for (const auto& [key, value] : table_json.items()) {
    const Word w = Word::parse(key, sys);
    if (!(w.lengths() == depth))
      throw std::invalid_argument("table key '" + key + "' does not match the depth");
    const std::size_t idx = ws.index_of(w);
    if (seen[idx]) throw std::invalid_argument("duplicate table key '" + key + "'");
    seen[idx] = 1;
    table[idx] = parse_rational(value.get<std::string>());
  }
  return CylinderFunction(sys, depth, std::move(table));
}

Json dilation_to_json(const DilationElement& e) {
  return Json{{"level", e.level.coords()}, {"fn", cylinder_to_json(e.fn)}};
}

Cocycle system_from_json(const nlohmann::json& j) {
  const auto& factors = j.at("factors");
  if (!factors.is_array() || factors.empty())
    throw std::invalid_argument("'factors' must be a non-empty array");
  std::vector<int> alphabets;
  for (const auto& f : factors) alphabets.push_back(f.at("alphabet").get<int>());
  const ShiftSystem sys(alphabets);

  const CocycleMode mode = cocycle_mode_from_string(j.at("mode").get<std::string>());

  const auto& generators = j.at("generators");
  if (!generators.is_array() || generators.size() != alphabets.size())
    throw std::invalid_argument("need exactly one generator table per factor");
  std::vector<CylinderFunction> tables;
  tables.reserve(generators.size());
  for (const auto& g : generators) tables.push_back(cylinder_from_json(sys, g));
  return Cocycle(sys, std::move(tables), mode);
}

Json system_to_json(const Cocycle& c) {
  Json factors = Json::array();
  for (int i = 0; i < c.rank(); ++i)
    factors.push_back(Json{{"alphabet", c.system().alphabet(i)}});
  Json generators = Json::array();
  for (const auto& g : c.generators()) generators.push_back(cylinder_to_json(g));
  return Json{{"factors", factors}, {"mode", to_string(c.mode())}, {"generators", generators}};
}

Cocycle load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
  return system_from_json(j);
}

std::string input_digest(const nlohmann::json& j) {
  // Plain json sorts object keys, so the digest ignores key order.
  return fnv1a_digest(nlohmann::json(j).dump());
}

}  // namespace dilator
