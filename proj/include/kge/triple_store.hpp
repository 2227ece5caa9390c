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
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kge/types.hpp"

namespace kge {

/// The knowledge graph as a sparse binary 3rd-order tensor in coordinate
/// form: a deduplicated triple list plus an exact membership set and
/// per-pair completion indexes. Immutable after construction; concurrent
/// reads are safe.
class TripleStore {
 public:
  /// Builds a store from raw id triples. Duplicates are dropped (first
  /// occurrence wins, insertion order preserved); out-of-range ids throw.
  static TripleStore build(std::span<const Triple> triples,
                           std::size_t n_entities, std::size_t n_relations);

  std::size_t entity_count() const { return n_entities_; }
  std::size_t relation_count() const { return n_relations_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  std::span<const Triple> triples() const { return triples_; }

  /// Exact membership, O(1) expected.
  bool contains(EntityId s, RelationId r, EntityId o) const {
    return membership_.count(pack(s, r, o)) != 0;
  }
  bool contains(const Triple& t) const {
    return contains(t.subject, t.relation, t.object);
  }

  /// All o with (s,r,o) in the store, sorted ascending. Empty span if none.
  std::span<const EntityId> objects_of(EntityId s, RelationId r) const;

  /// All s with (s,r,o) in the store, sorted ascending. Empty span if none.
  std::span<const EntityId> subjects_of(RelationId r, EntityId o) const;

  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

 private:
  TripleStore() = default;

  // Mixed-radix packing of (s,r,o) into one 64-bit key; build() rejects
  // dimension combinations that would overflow.
  std::uint64_t pack(EntityId s, RelationId r, EntityId o) const {
    return (static_cast<std::uint64_t>(s) * n_relations_ + r) * n_entities_ + o;
  }
  std::uint64_t pack_pair(std::uint64_t major, std::uint64_t minor) const {
    return major * n_relations_ + minor;
  }

  std::size_t n_entities_ = 0;
  std::size_t n_relations_ = 0;
  std::size_t duplicates_dropped_ = 0;
  std::vector<Triple> triples_;
  std::unordered_set<std::uint64_t> membership_;
  std::unordered_map<std::uint64_t, std::vector<EntityId>> objects_by_pair_;
  std::unordered_map<std::uint64_t, std::vector<EntityId>> subjects_by_pair_;
};

}  // namespace kge
