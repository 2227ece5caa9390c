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

#include "kge/triple_store.hpp"

#include <algorithm>
#include <limits>

#include "kge/common.hpp"

namespace kge {

TripleStore TripleStore::build(std::span<const Triple> triples,
                               std::size_t n_entities,
                               std::size_t n_relations) {
  TripleStore store;
  store.n_entities_ = n_entities;
  store.n_relations_ = n_relations;

  if (n_entities > 0 && n_relations > 0) {
    // pack() computes (s*n_r + r)*n_e + o; its maximum must fit in 64 bits.
    const auto max_key = static_cast<unsigned __int128>(n_entities) *
                         n_relations * n_entities;
    if (max_key > std::numeric_limits<std::uint64_t>::max())
      fail("triple store dimensions overflow the 64-bit key space: n_e=",
           n_entities, " n_r=", n_relations);
  }

  store.triples_.reserve(triples.size());
  store.membership_.reserve(triples.size() * 2);

  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (t.subject >= n_entities || t.object >= n_entities)
      fail("entity id out of range at triple ", i, ": (", t.subject, ", ",
           t.relation, ", ", t.object, "), n_entities=", n_entities);
    if (t.relation >= n_relations)
      fail("relation id out of range at triple ", i, ": (", t.subject, ", ",
           t.relation, ", ", t.object, "), n_relations=", n_relations);

    if (!store.membership_.insert(store.pack(t.subject, t.relation, t.object))
             .second) {
      ++store.duplicates_dropped_;
      continue;
    }
    store.triples_.push_back(t);
    store.objects_by_pair_[store.pack_pair(t.subject, t.relation)].push_back(
        t.object);
    store.subjects_by_pair_[store.pack_pair(t.object, t.relation)].push_back(
        t.subject);
  }

  for (auto& [key, ids] : store.objects_by_pair_) std::sort(ids.begin(), ids.end());
  for (auto& [key, ids] : store.subjects_by_pair_) std::sort(ids.begin(), ids.end());
  return store;
}

std::span<const EntityId> TripleStore::objects_of(EntityId s, RelationId r) const {
  const auto it = objects_by_pair_.find(pack_pair(s, r));
  if (it == objects_by_pair_.end()) return {};
  return it->second;
}

std::span<const EntityId> TripleStore::subjects_of(RelationId r, EntityId o) const {
  const auto it = subjects_by_pair_.find(pack_pair(o, r));
  if (it == subjects_by_pair_.end()) return {};
  return it->second;
}

}  // namespace kge
