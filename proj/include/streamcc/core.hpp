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

#ifndef STREAMCC_CORE_HPP_
#define STREAMCC_CORE_HPP_

#include "streamcc/capped_rank_queue.hpp"
#include "streamcc/clustering.hpp"
#include "streamcc/error.hpp"
#include "streamcc/graph.hpp"
#include "streamcc/permutation.hpp"
#include "streamcc/rng.hpp"
#include "streamcc/types.hpp"

#endif  // STREAMCC_CORE_HPP_
