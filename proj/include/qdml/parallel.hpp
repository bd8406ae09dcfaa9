// Copyright 2026 The qdml Authors
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

#pragma once

#include <exception>
#include <functional>

#include "qdml/types.hpp"

namespace qdml {

// Worker count for batch loops: the QDML_THREADS environment variable when
// set to a positive integer, otherwise the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n) across worker_count() threads in contiguous
// chunks. Bodies must write only to their own index; the first exception
// thrown by any body is rethrown on the calling thread. Runs inline when n
// is small or one worker is available.
void parallel_for(Index n, const std::function<void(Index)>& body);

}  // namespace qdml
