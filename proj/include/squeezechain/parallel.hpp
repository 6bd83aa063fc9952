/*
 * Copyright 2026 The squeezechain authors
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

#include <cstddef>
#include <functional>

namespace squeezechain {

/// workers > 0 -> workers; otherwise SQUEEZECHAIN_WORKERS if set, else the
/// hardware concurrency (at least 1).
int resolve_workers(int workers);

/// Runs f(i) for i in [0, count) on a pool of `workers` threads, work-stealing
/// by atomic index. Each index writes only its own output slot, so results
/// are independent of scheduling. Exceptions are captured and rethrown on the
/// calling thread.
void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& f);

}  // namespace squeezechain
