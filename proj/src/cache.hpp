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


#ifndef RDC_SRC_CACHE_HPP_
#define RDC_SRC_CACHE_HPP_

#include <map>
#include <mutex>

namespace rdc::detail {

// Memo table safe for concurrent readers. The value is built outside the
// lock so that builders may recurse into the same cache; a racing builder
// loses and its result is dropped.
template <class Key, class Value>
class ShapeCache {
 public:
  template <class Make>
  Value get(const Key& key, Make make) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = make();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace rdc::detail

#endif  // RDC_SRC_CACHE_HPP_
