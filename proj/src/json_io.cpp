// Copyright 2026 The rdc Authors.
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

#include "rdc/json_io.hpp"

namespace rdc {

using nlohmann::json;

json poset_to_json(const OgPoset& p) {
  json elements = json::array();
  for (const Element& e : p.elements()) {
    elements.push_back({{"dim", e.dim}, {"minus", e.minus}, {"plus", e.plus}});
  }
  return {{"elements", elements}};
}

std::string to_canonical_json(const OgPoset& p) {
  return poset_to_json(p).dump() + "\n";
}

OgPoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") ||
      !j.at("elements").is_array()) {
    throw Error(ErrorKind::kParse, "expected an object with an elements array");
  }
  std::vector<Element> raw;
  for (const json& e : j.at("elements")) {
    try {
      raw.push_back({e.at("dim").get<int>(),
                     e.value("minus", std::vector<int>{}),
                     e.value("plus", std::vector<int>{})});
    } catch (const json::exception& ex) {
      throw Error(ErrorKind::kParse, ex.what());
    }
  }
  return validate(std::move(raw));
}

OgPoset parse_poset(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::kParse, ex.what());
  }
  return poset_from_json(j);
}

json map_to_json(const PosetMap& f) {
  return {{"source", f.source().size()},
          {"target", f.target().size()},
          {"kind", map_kind_name(f.kind())},
          {"assignment", f.assignment()}};
}

json subset_to_json(const ClosedSubset& u) { return u.elements(); }

}  // namespace rdc
