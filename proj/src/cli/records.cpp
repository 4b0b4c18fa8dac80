#include "zforce/cli.hpp"
#include "zforce/errors.hpp"

namespace zforce::cli {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return s.indices(); }

VertexSet set_from_json(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int index = v.get<int>();
    if (index < 0 || index >= kMaxOrder) throw ParseError("vertex index out of range");
    s.insert(index);
  }
  return s;
}

Claim claim_from_string(const std::string& s) {
  for (Claim c : {Claim::kFailed, Claim::kStalled, Claim::kMaximal, Claim::kExactF})
    if (to_string(c) == s) return c;
  throw ParseError("unknown claim '" + s + "'");
}

}  // namespace

json certificate_to_json(const Certificate& c) {
  return json{{"kind", "certificate"},
              {"target", std::string(to_string(c.target))},
              {"value", c.value},
              {"witness", set_to_json(c.witness)},
              {"route", std::string(to_string(c.route))},
              {"basis", c.basis}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    const auto target = j.at("target").get<std::string>();
    if (target == "Z") c.target = Target::kZ;
    else if (target == "F") c.target = Target::kF;
    else throw ParseError("unknown target '" + target + "'");
    c.value = j.at("value").get<int>();
    c.witness = set_from_json(j.at("witness"));
    const auto route = j.at("route").get<std::string>();
    if (route == "exhaustive") c.route = Route::kExhaustive;
    else if (route == "structural") c.route = Route::kStructural;
    else throw ParseError("unknown route '" + route + "'");
    c.basis = j.value("basis", "");
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate record: ") + e.what());
  }
}

json construction_to_json(const ConstructionResult& r) {
  json claims = json::array();
  for (Claim c : r.claims) claims.push_back(std::string(to_string(c)));
  return json{{"kind", "construction"},
              {"source", r.source},
              {"set", set_to_json(r.set)},
              {"size", r.set.size()},
              {"predicted_size", r.predicted_size},
              {"claims", claims},
              {"graph", serialize_graph(r.graph)}};
}

ConstructionResult construction_from_json(const json& j) {
  try {
    ConstructionResult r{parse_graph(j.at("graph").get<std::string>()),
                         set_from_json(j.at("set")),
                         j.at("predicted_size").get<int>(),
                         {},
                         j.at("source").get<std::string>()};
    for (const auto& c : j.at("claims")) r.claims.push_back(claim_from_string(c.get<std::string>()));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad construction record: ") + e.what());
  }
}

}  // namespace zforce::cli
