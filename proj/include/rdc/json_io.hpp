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

#ifndef RDC_JSON_IO_HPP_
#define RDC_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "rdc/ogposet.hpp"

namespace rdc {

// {"elements":[{"dim":d,"minus":[...],"plus":[...]},...]}
nlohmann::json poset_to_json(const OgPoset& p);
// Compact canonical text followed by a newline.
std::string to_canonical_json(const OgPoset& p);

// Throws Error(kParse) on malformed input and validation errors otherwise.
OgPoset poset_from_json(const nlohmann::json& j);
OgPoset parse_poset(const std::string& text);

// {"source":n,"target":m,"kind":"...","assignment":[...]}
nlohmann::json map_to_json(const PosetMap& f);

nlohmann::json subset_to_json(const ClosedSubset& u);

}  // namespace rdc

#endif  // RDC_JSON_IO_HPP_
