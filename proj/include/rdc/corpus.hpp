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


#ifndef RDC_CORPUS_HPP_
#define RDC_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rdc/ogposet.hpp"

namespace rdc {

struct CorpusBudget {
  int max_dim = 4;
  std::size_t max_elements = 200;
  // Attempts at random pastings and products.
  int random_rounds = 60;
};

struct CorpusEntry {
  std::string name;
  OgPoset poset;
};

// Shape families first, then seeded random pastings, products and duals.
// Every entry is a regular directed complex within the budget, and the
// result depends only on (seed, budget).
std::vector<CorpusEntry> gen_corpus(std::uint64_t seed,
                                    const CorpusBudget& budget = {});

// A regular complex whose oriented Hasse diagram has a cycle: `length`
// points joined by arrows in a ring.
OgPoset cyclic_complex(int length);

}  // namespace rdc

#endif  // RDC_CORPUS_HPP_
