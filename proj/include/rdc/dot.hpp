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


#ifndef RDC_DOT_HPP_
#define RDC_DOT_HPP_

#include <string>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

struct DotOptions {
  std::string graph_name = "hasse";
  // Optional label per element; defaults to the index.
  std::vector<std::string> labels;
};

// Hasse diagram: one rank per dimension, an edge from each element to each
// of its faces labelled with the orientation.
std::string export_dot(const OgPoset& p, const DotOptions& options = {});

}  // namespace rdc

#endif  // RDC_DOT_HPP_
