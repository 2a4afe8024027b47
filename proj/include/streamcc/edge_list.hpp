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

#ifndef STREAMCC_EDGE_LIST_HPP_
#define STREAMCC_EDGE_LIST_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streamcc/core.hpp"

// Text formats. Edge lists: optional header "n <count>" before the first
// edge, then one "u v", "u v +" or "u v -" record per line; '#' starts a
// comment line. Clusterings: "vertex<TAB>cluster<TAB>role" per vertex. All
// ids in files are 1-based.

namespace streamcc {

namespace internal {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

[[noreturn]] inline void format_error(std::size_t line,
                                      const std::string& what) {
  throw Error(ErrorCode::kStreamFormat,
              "line " + std::to_string(line) + ": " + what);
}

/// 1-based id in a file to a 0-based VertexId.
inline VertexId parse_vertex(std::string_view token, std::size_t line) {
  const auto value = parse_uint(token);
  if (!value || *value == 0 ||
      *value > std::numeric_limits<VertexId>::max()) {
    format_error(line, "bad vertex id '" + std::string(token) + "'");
  }
  return static_cast<VertexId>(*value - 1);
}

inline bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace internal

/// Single-pass edge-list reader. Holds at most one line beyond the current
/// record, so it is safe on non-seekable input.
class EdgeListReader {
 public:
  explicit EdgeListReader(std::istream& in) : in_(in) {
    // The header may only precede the first edge record.
    while (std::getline(in_, pending_)) {
      ++line_;
      if (internal::is_blank_or_comment(pending_)) continue;
      const auto tokens = internal::split_ws(pending_);
      if (tokens[0] == "n") {
        if (tokens.size() != 2) internal::format_error(line_, "bad header");
        const auto n = internal::parse_uint(tokens[1]);
        if (!n || *n > std::numeric_limits<VertexId>::max()) {
          internal::format_error(line_, "bad vertex count in header");
        }
        declared_n_ = static_cast<std::size_t>(*n);
        pending_.clear();
      } else {
        has_pending_ = true;
      }
      return;
    }
  }

  std::optional<std::size_t> declared_n() const noexcept { return declared_n_; }

  /// Records naming a vertex >= limit are rejected with their line number.
  void set_vertex_limit(std::size_t n) noexcept { limit_ = n; }

  std::size_t line_number() const noexcept { return line_; }

  std::optional<LabeledEdge> next() {
    std::string line;
    if (has_pending_) {
      has_pending_ = false;
      return parse(pending_);
    }
    while (std::getline(in_, line)) {
      ++line_;
      if (internal::is_blank_or_comment(line)) continue;
      return parse(line);
    }
    return std::nullopt;
  }

 private:
  LabeledEdge parse(std::string_view line) const {
    const auto tokens = internal::split_ws(line);
    if (tokens[0] == "n") {
      internal::format_error(line_, "header after the first edge record");
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      internal::format_error(line_, "expected 'u v [+|-]'");
    }
    LabeledEdge e;
    e.u = internal::parse_vertex(tokens[0], line_);
    e.v = internal::parse_vertex(tokens[1], line_);
    if (tokens.size() == 3) {
      if (tokens[2] == "+") {
        e.label = Label::kPositive;
      } else if (tokens[2] == "-") {
        e.label = Label::kNegative;
      } else {
        internal::format_error(line_, "bad label '" + std::string(tokens[2]) +
                                          "'");
      }
    }
    if (limit_ && (e.u >= *limit_ || e.v >= *limit_)) {
      internal::format_error(line_, "vertex id exceeds n = " +
                                        std::to_string(*limit_));
    }
    return e;
  }

  std::istream& in_;
  std::string pending_;
  bool has_pending_ = false;
  std::size_t line_ = 0;
  std::optional<std::size_t> declared_n_;
  std::optional<std::size_t> limit_;
};

struct EdgeList {
  std::size_t n = 0;
  std::vector<LabeledEdge> edges;
};

/// Vertex count of a whole edge-list file: the header if present, else the
/// largest id seen. Consumes the stream; validates every record.
inline std::size_t scan_vertex_count(std::istream& in) {
  EdgeListReader reader(in);
  std::size_t max_id = 0;
  while (const auto e = reader.next()) {
    max_id = std::max<std::size_t>(max_id, std::max(e->u, e->v) + 1);
  }
  if (reader.declared_n()) {
    if (max_id > *reader.declared_n()) {
      throw Error(ErrorCode::kStreamFormat,
                  "vertex id " + std::to_string(max_id) +
                      " exceeds header n = " +
                      std::to_string(*reader.declared_n()));
    }
    return *reader.declared_n();
  }
  return max_id;
}

inline EdgeList read_edge_list(std::istream& in) {
  EdgeListReader reader(in);
  if (reader.declared_n()) reader.set_vertex_limit(*reader.declared_n());
  EdgeList out;
  while (const auto e = reader.next()) {
    out.n = std::max<std::size_t>(out.n, std::max(e->u, e->v) + 1);
    out.edges.push_back(*e);
  }
  if (reader.declared_n()) out.n = *reader.declared_n();
  return out;
}

/// Positive edges of the list; a pair that also carries a negative record
/// stays positive.
inline PositiveGraph to_positive_graph(const EdgeList& list) {
  std::vector<Edge> positive;
  for (const LabeledEdge& e : list.edges) {
    if (e.label == Label::kPositive) positive.push_back(Edge{e.u, e.v});
  }
  return PositiveGraph(list.n, positive);
}

/// Header plus one record per edge. Positive records are written unlabeled.
inline void write_edge_list(std::ostream& out, std::size_t n,
                            std::span<const LabeledEdge> edges) {
  out << "n " << n << '\n';
  for (const LabeledEdge& e : edges) {
    out << e.u + 1 << ' ' << e.v + 1;
    if (e.label == Label::kNegative) out << " -";
    out << '\n';
  }
}

/// Cluster ids are written 1-based as well.
inline void write_clustering_tsv(std::ostream& out, const Clustering& c) {
  for (VertexId v = 0; v < c.size(); ++v) {
    out << v + 1 << '\t' << c.cluster_of(v) + 1 << '\t' << to_string(c.role(v))
        << '\n';
  }
}

/// Reads "vertex cluster [role]" lines. Every vertex 1..N must appear exactly
/// once. Without a role column, roles are synthesized.
inline Clustering read_clustering_tsv(std::istream& in) {
  std::vector<std::optional<ClusterId>> labels;
  std::vector<Role> roles;
  std::size_t role_lines = 0;
  std::size_t lines = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (internal::is_blank_or_comment(line)) continue;
    const auto tokens = internal::split_ws(line);
    if (tokens.size() < 2 || tokens.size() > 3) {
      internal::format_error(line_no, "expected 'vertex cluster [role]'");
    }
    const VertexId v = internal::parse_vertex(tokens[0], line_no);
    const auto cluster = internal::parse_uint(tokens[1]);
    if (!cluster || *cluster > std::numeric_limits<ClusterId>::max()) {
      internal::format_error(line_no, "bad cluster id");
    }
    if (v >= labels.size()) {
      labels.resize(v + 1);
      roles.resize(v + 1, Role::kMember);
    }
    if (labels[v]) {
      internal::format_error(line_no,
                             "vertex " + std::to_string(v + 1) + " repeated");
    }
    labels[v] = static_cast<ClusterId>(*cluster);
    if (tokens.size() == 3) {
      const auto role = parse_role(tokens[2]);
      if (!role) internal::format_error(line_no, "bad role");
      roles[v] = *role;
      ++role_lines;
    }
    ++lines;
  }
  if (lines != labels.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "clustering does not list every vertex 1.." +
                    std::to_string(labels.size()));
  }
  std::vector<ClusterId> dense(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) dense[v] = *labels[v];
  if (role_lines == lines && lines > 0) {
    return Clustering::from_assignment(dense, std::move(roles));
  }
  if (role_lines != 0) {
    throw Error(ErrorCode::kInvalidInput, "role column on some lines only");
  }
  return Clustering::from_partition(dense);
}

}  // namespace streamcc

#endif  // STREAMCC_EDGE_LIST_HPP_
