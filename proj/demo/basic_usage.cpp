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

// Clusters a small noisy planted instance with the streaming clusterer and
// compares the result against the exact optimum.

#include <iostream>

#include "streamcc/streamcc.hpp"

int main() {
  using namespace streamcc;

  const PositiveGraph g =
      generate(InstanceSpec{PlantedPartition{{4, 3, 3}, 0.1}, /*seed=*/7});
  const auto stream = emit_stream(g, StreamOrder::kShuffled, /*seed=*/1);

  const StreamResult run = cluster_stream(stream, g.size(), /*k=*/4, /*seed=*/42);
  const CostReport cost = disagreement_cost(run.clustering, g);
  const OptimalClustering best = brute_force_opt(g);

  std::cout << "vertices " << g.size() << ", positive edges " << g.num_edges()
            << "\nclusters " << run.clustering.num_clusters() << ", singletons "
            << run.clustering.num_singletons() << ", peak entries "
            << run.stats.peak_entries << "\ncost " << cost.total
            << " (optimum " << best.cost << ")\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    std::cout << "  " << v + 1 << " -> cluster " << run.clustering.cluster_of(v) + 1
              << " (" << to_string(run.clustering.role(v)) << ")\n";
  }
  return 0;
}
