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

#ifndef STREAMCC_TYPES_HPP_
#define STREAMCC_TYPES_HPP_

#include <cstdint>

namespace streamcc {

/// 0-based vertex index. External formats are 1-based and converted at the
/// I/O boundary.
using VertexId = std::uint32_t;

/// Position in the random ordering; 1 is the highest-ranked vertex.
using Rank = std::uint32_t;

using ClusterId = std::uint32_t;

enum class Label : std::uint8_t { kPositive, kNegative };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct LabeledEdge {
  VertexId u = 0;
  VertexId v = 0;
  Label label = Label::kPositive;

  friend constexpr bool operator==(const LabeledEdge&,
                                   const LabeledEdge&) = default;
};

}  // namespace streamcc

#endif  // STREAMCC_TYPES_HPP_
