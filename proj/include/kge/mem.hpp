/* Copyright 2026 the kge-gcp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace kge::mem {

/// Tallies the transient buffer bytes requested by the training hot path.
/// Every scratch acquisition reports its requested size, whether or not the
/// underlying vector reallocates, so step_bytes() reflects the working-set
/// size of a step rather than allocator behaviour.
class TransientCounter {
 public:
  void begin_step() { step_ = 0; }

  void add(std::size_t bytes) {
    step_ += bytes;
    total_ += bytes;
    peak_step_ = std::max(peak_step_, step_);
  }

  std::size_t step_bytes() const { return step_; }
  std::size_t peak_step_bytes() const { return peak_step_; }
  std::size_t total_bytes() const { return total_; }

  void reset() { step_ = peak_step_ = total_ = 0; }

 private:
  std::size_t step_ = 0;
  std::size_t peak_step_ = 0;
  std::size_t total_ = 0;
};

/// Sizes a scratch vector and reports the requested bytes. The counter is
/// optional so the same helpers serve untracked call sites.
template <class T>
void acquire(std::vector<T>& buf, std::size_t n, TransientCounter* counter) {
  if (counter) counter->add(n * sizeof(T));
  buf.resize(n);
}

}  // namespace kge::mem
