// Copyright 2026 The ncadmm Authors
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

#pragma once

#include <cstdint>
#include <functional>

namespace ncadmm {

/// Worker cap: NCADMM_THREADS when set and positive, otherwise the hardware
/// concurrency (NCADMM_THREADS=0 also means auto).
int worker_count();

/// Runs fn(i) for i in [0, count). Work items must be independent; outputs
/// should be written to per-index slots so results do not depend on
/// scheduling. The first exception thrown by any item is rethrown.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn);

}  // namespace ncadmm
