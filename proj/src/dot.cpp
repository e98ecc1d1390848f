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

#include "rdc/dot.hpp"

#include <sstream>

namespace rdc {

std::string export_dot(const OgPoset& p, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << options.graph_name << " {\n";
  out << "  rankdir=BT;\n";
  const int top = p.dim().value_or(-1);
  for (int d = 0; d <= top; ++d) {
    out << "  { rank=same;";
    for (int x = p.first_of_dim(d); x < p.end_of_dim(d); ++x) out << " n" << x << ";";
    out << " }\n";
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    const std::string label = x < options.labels.size()
                                  ? options.labels[x]
                                  : std::to_string(x);
    out << "  n" << x << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (Sign s : kSigns) {
      for (int f : p.faces(static_cast<int>(x), s)) {
        out << "  n" << x << " -> n" << f << " [label=\"" << sign_char(s)
            << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rdc
