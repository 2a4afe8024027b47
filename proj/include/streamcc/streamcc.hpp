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

#ifndef STREAMCC_STREAMCC_HPP_
#define STREAMCC_STREAMCC_HPP_

#include "streamcc/core.hpp"
#include "streamcc/cost.hpp"
#include "streamcc/edge_list.hpp"
#include "streamcc/gen.hpp"
#include "streamcc/reference.hpp"
#include "streamcc/stats.hpp"
#include "streamcc/streaming.hpp"

#endif  // STREAMCC_STREAMCC_HPP_
