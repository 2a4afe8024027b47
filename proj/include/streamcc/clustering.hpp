// Copyright 2026 The streamcc Authors.
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

#ifndef STREAMCC_CLUSTERING_HPP_
#define STREAMCC_CLUSTERING_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "streamcc/error.hpp"
#include "streamcc/types.hpp"

namespace streamcc {

/// Pivot: opened its own cluster. Member: joined a pivot's cluster.
/// Singleton: placed alone because no pivot was found among its kept
/// neighbours. A pivot alone in its cluster is still a Pivot.
enum class Role : std::uint8_t { kPivot, kMember, kSingleton };

inline std::string_view to_string(Role role) {
  switch (role) {
    case Role::kPivot: return "pivot";
    case Role::kMember: return "member";
    case Role::kSingleton: return "singleton";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view text) {
  if (text == "pivot") return Role::kPivot;
  if (text == "member") return Role::kMember;
  if (text == "singleton") return Role::kSingleton;
  return std::nullopt;
}

/// Assignment of every vertex to a cluster plus its role. Cluster ids are
/// canonical: numbered 0, 1, ... in order of first appearance when scanning
/// vertices by index. Two clusterings that induce the same partition with the
/// same roles therefore compare equal regardless of how they were built.
class Clustering {
 public:
  Clustering() = default;

  /// `leader[v]` is any vertex identifying v's cluster (the pivot, or v
  /// itself for singletons). Validates the role invariants.
  static Clustering from_leaders(std::span<const VertexId> leader,
                                 std::vector<Role> roles) {
    if (leader.size() != roles.size()) {
      throw Error(ErrorCode::kInvalidInput, "leader/role size mismatch");
    }
    for (VertexId l : leader) {
      if (l >= leader.size()) {
        throw Error(ErrorCode::kInvalidInput, "leader out of range");
      }
    }
    Clustering c;
    c.assignment_ = canonical_ids(leader);
    c.num_clusters_ = 0;
    for (ClusterId id : c.assignment_) {
      c.num_clusters_ = std::max<std::size_t>(c.num_clusters_, id + 1);
    }
    c.roles_ = std::move(roles);
    c.validate();
    return c;
  }

  /// Arbitrary cluster labels with explicit roles. Validates the role
  /// invariants.
  static Clustering from_assignment(std::span<const ClusterId> labels,
                                    std::vector<Role> roles) {
    if (labels.size() != roles.size()) {
      throw Error(ErrorCode::kInvalidInput, "label/role size mismatch");
    }
    Clustering c = from_partition(labels);
    c.roles_ = std::move(roles);
    c.validate();
    return c;
  }

  /// Builds a clustering from an arbitrary partition. Roles are synthesized:
  /// the smallest vertex of each cluster is its pivot.
  static Clustering from_partition(std::span<const ClusterId> labels) {
    std::unordered_map<ClusterId, ClusterId> dense_of;
    std::vector<ClusterId> dense(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const auto next = static_cast<ClusterId>(dense_of.size());
      dense[v] = dense_of.try_emplace(labels[v], next).first->second;
    }
    Clustering c;
    c.assignment_ = canonical_ids(std::span<const ClusterId>(dense));
    c.num_clusters_ = dense_of.size();
    c.roles_.assign(labels.size(), Role::kMember);
    std::vector<bool> seen(c.num_clusters_, false);
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (!seen[c.assignment_[v]]) {
        seen[c.assignment_[v]] = true;
        c.roles_[v] = Role::kPivot;
      }
    }
    return c;
  }

  std::size_t size() const noexcept { return assignment_.size(); }
  ClusterId cluster_of(VertexId v) const { return assignment_[v]; }
  Role role(VertexId v) const { return roles_[v]; }
  std::span<const ClusterId> assignment() const noexcept { return assignment_; }
  std::span<const Role> roles() const noexcept { return roles_; }

  std::size_t num_clusters() const noexcept { return num_clusters_; }

  std::size_t num_with_role(Role role) const noexcept {
    std::size_t count = 0;
    for (Role r : roles_) count += (r == role);
    return count;
  }
  std::size_t num_singletons() const noexcept {
    return num_with_role(Role::kSingleton);
  }

  /// Vertices of each cluster, indexed by cluster id, ascending.
  std::vector<std::vector<VertexId>> clusters() const {
    std::vector<std::vector<VertexId>> out(num_clusters());
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
      out[assignment_[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  /// Throws kInvariant unless every non-singleton cluster has exactly one
  /// pivot and every singleton sits alone.
  void validate() const {
    const auto groups = clusters();
    for (const auto& members : groups) {
      std::size_t pivots = 0;
      std::size_t singletons = 0;
      for (VertexId v : members) {
        pivots += roles_[v] == Role::kPivot;
        singletons += roles_[v] == Role::kSingleton;
      }
      if (singletons > 0 && members.size() != 1) {
        throw Error(ErrorCode::kInvariant,
                    "singleton vertex shares its cluster");
      }
      if (singletons == 0 && pivots != 1) {
        throw Error(ErrorCode::kInvariant,
                    "cluster without exactly one pivot");
      }
    }
  }

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  // Labels must be dense enough to index a vector (vertex ids or < n).
  template <typename Label>
  static std::vector<ClusterId> canonical_ids(std::span<const Label> labels) {
    std::vector<ClusterId> remap;
    std::vector<ClusterId> out(labels.size());
    constexpr ClusterId kUnset = std::numeric_limits<ClusterId>::max();
    ClusterId next = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const auto label = static_cast<std::size_t>(labels[v]);
      if (label >= remap.size()) remap.resize(label + 1, kUnset);
      if (remap[label] == kUnset) remap[label] = next++;
      out[v] = remap[label];
    }
    return out;
  }

  std::vector<ClusterId> assignment_;
  std::vector<Role> roles_;
  std::size_t num_clusters_ = 0;
};

}  // namespace streamcc

#endif  // STREAMCC_CLUSTERING_HPP_
