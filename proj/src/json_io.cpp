// JSON parsing/serialization built on the vendored single-header library.
#include "matchings/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace matchings {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

std::string id_string(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw std::invalid_argument(std::string(what) + " must be a string or integer");
}

ExactScalar weight_value(const json& v) {
  if (v.is_string()) return ExactScalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return ExactScalar(static_cast<long>(v.get<long long>()));
  throw std::invalid_argument("edge weight must be a decimal string or integer");
}

int int_param(const json& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end() || !it->is_number_integer()) {
    throw std::invalid_argument("missing or non-integer parameter: " + name);
  }
  return it->get<int>();
}

std::vector<int> int_list_param(const json& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end() || !it->is_array()) {
    throw std::invalid_argument("missing or non-array parameter: " + name);
  }
  std::vector<int> out;
  for (const auto& v : *it) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("parameter " + name + " must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

HexSide side_from_string(const std::string& s) {
  if (s == "s") return HexSide::south;
  if (s == "ne") return HexSide::northeast;
  if (s == "nw") return HexSide::northwest;
  throw std::invalid_argument("dent side must be one of \"s\", \"ne\", \"nw\"");
}

std::vector<Dent> dents_param(const json& params) {
  auto it = params.find("dents");
  if (it == params.end() || !it->is_array()) {
    throw std::invalid_argument("missing or non-array parameter: dents");
  }
  std::vector<Dent> out;
  for (const auto& d : *it) {
    if (!d.is_object() || !d.contains("side") || !d.contains("pos") ||
        !d["side"].is_string() || !d["pos"].is_number_integer()) {
      throw std::invalid_argument("each dent needs a \"side\" string and \"pos\" integer");
    }
    out.push_back({side_from_string(d["side"].get<std::string>()), d["pos"].get<int>()});
  }
  return out;
}

}  // namespace

WeightedPlanarGraph graph_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      !j.contains("edges") || !j["edges"].is_array()) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\" arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(id_string(v, "vertex id"));

  std::vector<EdgeSpec> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v")) {
      throw std::invalid_argument("each edge needs \"u\" and \"v\" endpoints");
    }
    ExactScalar w = e.contains("w") ? weight_value(e["w"]) : ExactScalar(1);
    edges.push_back({id_string(e["u"], "edge endpoint"), id_string(e["v"], "edge endpoint"), w});
  }

  std::optional<std::vector<std::vector<int>>> rotation;
  if (j.contains("rotation")) {
    if (!j["rotation"].is_object()) {
      throw std::invalid_argument("\"rotation\" must map vertex ids to edge-index lists");
    }
    std::vector<std::vector<int>> rot(vertices.size());
    std::unordered_map<std::string, int> pos;
    for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    for (const auto& [id, lst] : j["rotation"].items()) {
      auto it = pos.find(id);
      if (it == pos.end()) {
        throw std::invalid_argument("rotation references unknown vertex: " + id);
      }
      if (!lst.is_array()) {
        throw std::invalid_argument("rotation entry must be an array of edge indices");
      }
      for (const auto& v : lst) {
        if (!v.is_number_integer()) {
          throw std::invalid_argument("rotation entries must be integers");
        }
        rot[it->second].push_back(v.get<int>());
      }
    }
    rotation = std::move(rot);
  }
  return build_graph(vertices, edges, rotation);
}

std::string graph_to_json(const WeightedPlanarGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& id : g.vertex_ids()) j["vertices"].push_back(id);
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back({{"u", g.vertex_id(e.u)}, {"v", g.vertex_id(e.v)}, {"w", e.w.str()}});
  }
  if (g.has_rotation()) {
    json rot = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) rot[g.vertex_id(v)] = g.rotation()[v];
    j["rotation"] = std::move(rot);
  }
  return j.dump();
}

RegionSpec region_spec_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw std::invalid_argument("region JSON needs a \"family\" string");
  }
  const std::string family = j["family"].get<std::string>();
  json params = j.contains("params") ? j["params"] : json::object();
  if (!params.is_object()) throw std::invalid_argument("\"params\" must be an object");

  RegionSpec out;
  out.family = family;
  if (family == "hexagon") {
    out.region = hexagon(int_param(params, "a"), int_param(params, "b"),
                         int_param(params, "c"));
  } else if (family == "eisenkolbl") {
    out.region = eisenkolbl_region(int_param(params, "a"), int_param(params, "b"),
                                   int_param(params, "c"), int_param(params, "r"),
                                   int_param(params, "s"), int_param(params, "t"));
  } else if (family == "hstar") {
    HStarRegion h = hstar_region(int_param(params, "a"), int_param(params, "b"),
                                 int_param(params, "c"));
    out.region = h.region;
    out.marked.assign(h.pendants.begin(), h.pendants.end());
  } else if (family == "t") {
    out.region = t_region(int_param(params, "m"), int_param(params, "n"),
                          int_list_param(params, "xs"));
  } else if (family == "hk") {
    out.region = h_k_region(int_param(params, "x"), int_param(params, "y"),
                            int_param(params, "z"), int_param(params, "k"),
                            dents_param(params));
  } else if (family == "hstar_strings") {
    StarStrings s = h_star_strings(int_param(params, "x"), int_param(params, "y"),
                                   int_param(params, "z"), int_param(params, "k"),
                                   dents_param(params));
    out.region = s.region;
    out.marked = s.marked;
  } else if (family == "hkl") {
    out.region = h_kl_region(int_param(params, "x"), int_param(params, "y"),
                             int_param(params, "z"), int_param(params, "k"),
                             int_param(params, "l"));
  } else if (family == "hkl_prime") {
    out.region = h_prime_kl_region(int_param(params, "x"), int_param(params, "y"),
                                   int_param(params, "z"), int_param(params, "k"),
                                   int_param(params, "l"));
  } else if (family == "f") {
    out.region = f_region(int_param(params, "x"), int_param(params, "y"),
                          int_param(params, "z"), int_param(params, "l"));
  } else if (family == "augmented") {
    AugmentedRegion a = augmented_region(int_param(params, "x"), int_param(params, "y"),
                                         int_param(params, "z"), int_param(params, "k"),
                                         int_param(params, "l"));
    out.region = a.region;
    out.marked = {a.a, a.b, a.c, a.d};
  } else {
    throw std::invalid_argument("unknown region family: " + family);
  }
  return out;
}

CountInput count_input_from_json(const std::string& text) {
  json j = parse_text(text);
  CountInput out;
  if (j.is_object() && j.contains("vertices")) {
    out.graph = graph_from_json(text);
  } else if (j.is_object() && j.contains("family")) {
    out.region = region_spec_from_json(text);
  } else {
    throw std::invalid_argument("input must be a graph (\"vertices\") or region (\"family\")");
  }
  return out;
}

}  // namespace matchings
