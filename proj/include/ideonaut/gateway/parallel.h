// Copyright 2026 The Ideonaut Authors.
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

#ifndef IDEONAUT_GATEWAY_PARALLEL_H_
#define IDEONAUT_GATEWAY_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace ideonaut::gateway {

// Runs fn(0..count-1) on at most `max_parallel` threads. Blocks until all
// calls finish; rethrows the exception of the lowest failing index.
void ParallelFor(size_t count, int max_parallel,
                 const std::function<void(size_t)>& fn);

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_PARALLEL_H_
