// Copyright 2026 The Matchcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matchcount/region_spec.hpp"

#include <fstream>
#include <sstream>

#include "matchcount/error.hpp"

namespace matchcount {

using nlohmann::json;

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "region file: " + what);
}

int GetInt(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) Malformed(std::string("missing params.") + key);
  const json& v = obj.at(key);
  if (!v.is_number_integer()) Malformed(std::string("params.") + key + " must be an integer");
  return v.get<int>();
}

void RejectUnknownKeys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) Malformed("unexpected key '" + key + "' in " + where);
  }
}

}  // namespace

json RegionSpecToJson(const RegionSpec& spec) {
  json doc;
  doc["kind"] = RegionKindName(spec.kind);
  json params = json::object();
  switch (spec.kind) {
    case RegionKind::kHexagon:
      params["sides"] = spec.sides.s;
      break;
    case RegionKind::kAztecDiamond:
    case RegionKind::kHypercube:
      params["n"] = spec.n;
      break;
    case RegionKind::kAztecRectangle: {
      params["a"] = spec.a;
      params["b"] = spec.b;
      json removed = json::array();
      for (const auto& c : spec.removed) removed.push_back({c.i, c.j});
      params["removed"] = removed;
      break;
    }
    case RegionKind::kAztecWindow:
      params["x"] = spec.x;
      params["w"] = spec.w;
      break;
  }
  doc["params"] = params;
  if (spec.kind == RegionKind::kHexagon) {
    json holes = json::array();
    for (const auto& h : spec.holes) {
      holes.push_back({h.x, h.y, h.orient == Orient::kUp ? "up" : "down"});
    }
    doc["holes"] = holes;
  }
  return doc;
}

RegionSpec RegionSpecFromJson(const json& doc) {
  if (!doc.is_object()) Malformed("top level must be an object");
  RejectUnknownKeys(doc, {"kind", "params", "holes"}, "region");
  if (!doc.contains("kind") || !doc["kind"].is_string()) Malformed("missing string 'kind'");
  if (!doc.contains("params") || !doc["params"].is_object()) Malformed("missing object 'params'");
  const std::string kind = doc["kind"].get<std::string>();
  const json& params = doc["params"];
  RegionSpec spec;
  if (kind == "hexagon") {
    spec.kind = RegionKind::kHexagon;
    RejectUnknownKeys(params, {"sides"}, "params");
    if (!params.contains("sides") || !params["sides"].is_array() || params["sides"].size() != 6) {
      Malformed("params.sides must be a list of six integers");
    }
    for (int k = 0; k < 6; ++k) {
      if (!params["sides"][k].is_number_integer()) Malformed("params.sides must be integers");
      spec.sides.s[k] = params["sides"][k].get<int>();
    }
  } else if (kind == "aztec_diamond" || kind == "hypercube") {
    spec.kind = kind == "hypercube" ? RegionKind::kHypercube : RegionKind::kAztecDiamond;
    RejectUnknownKeys(params, {"n"}, "params");
    spec.n = GetInt(params, "n");
  } else if (kind == "aztec_rectangle") {
    spec.kind = RegionKind::kAztecRectangle;
    RejectUnknownKeys(params, {"a", "b", "removed"}, "params");
    spec.a = GetInt(params, "a");
    spec.b = GetInt(params, "b");
    if (params.contains("removed")) {
      if (!params["removed"].is_array()) Malformed("params.removed must be a list");
      for (const json& c : params["removed"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer()) {
          Malformed("removed cells must be [i, j] integer pairs");
        }
        spec.removed.push_back({c[0].get<int>(), c[1].get<int>()});
      }
    }
  } else if (kind == "aztec_window") {
    spec.kind = RegionKind::kAztecWindow;
    RejectUnknownKeys(params, {"x", "w"}, "params");
    spec.x = GetInt(params, "x");
    spec.w = GetInt(params, "w");
  } else {
    Malformed("unknown kind '" + kind + "'");
  }
  if (doc.contains("holes")) {
    const json& holes = doc["holes"];
    if (!holes.is_array()) Malformed("'holes' must be a list");
    if (spec.kind != RegionKind::kHexagon && !holes.empty()) {
      Malformed("'holes' is only allowed for hexagons");
    }
    for (const json& h : holes) {
      if (!h.is_array() || h.size() != 3 || !h[0].is_number_integer() ||
          !h[1].is_number_integer() || !h[2].is_string()) {
        Malformed("holes must be [x, y, \"up\"|\"down\"]");
      }
      const std::string o = h[2].get<std::string>();
      if (o != "up" && o != "down") Malformed("hole orientation must be \"up\" or \"down\"");
      spec.holes.push_back({h[0].get<int>(), h[1].get<int>(), o == "up" ? Orient::kUp : Orient::kDown});
    }
  }
  return spec;
}

RegionSpec ParseRegionSpec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  return RegionSpecFromJson(doc);
}

RegionSpec LoadRegionSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseRegionSpec(buffer.str());
}

}  // namespace matchcount
