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

#ifndef MATCHCOUNT_REGION_SPEC_HPP_
#define MATCHCOUNT_REGION_SPEC_HPP_

#include <string>

#include "json.hpp"
#include "matchcount/regions.hpp"

namespace matchcount {

// Region file format:
//   {"kind": "hexagon", "params": {"sides": [s1,...,s6]},
//    "holes": [[x, y, "up"|"down"], ...]}
//   {"kind": "aztec_diamond",   "params": {"n": n}}
//   {"kind": "aztec_rectangle", "params": {"a": a, "b": b, "removed": [[i, j], ...]}}
//   {"kind": "aztec_window",    "params": {"x": x, "w": w}}
//   {"kind": "hypercube",       "params": {"n": n}}
// "holes" is optional and only legal for hexagons. Parse errors throw
// Error(kMalformedInput).
nlohmann::json RegionSpecToJson(const RegionSpec& spec);
RegionSpec RegionSpecFromJson(const nlohmann::json& doc);
RegionSpec ParseRegionSpec(const std::string& text);
RegionSpec LoadRegionSpec(const std::string& path);

}  // namespace matchcount

#endif  // MATCHCOUNT_REGION_SPEC_HPP_
