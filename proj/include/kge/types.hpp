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

#include <cstdint>

namespace kge {

// Dense indices into the entity / relation vocabularies. Subjects and
// objects index the same entity vocabulary.
using EntityId = std::uint32_t;
using RelationId = std::uint32_t;

struct Triple {
  EntityId subject;
  RelationId relation;
  EntityId object;

  friend bool operator==(const Triple&, const Triple&) = default;
};

}  // namespace kge
