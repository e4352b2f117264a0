// Copyright 2026 The farmlayout Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

namespace farmlayout {

/// Resolves a requested worker count: values >= 1 pass through, 0 means
/// hardware concurrency.
int resolve_thread_count(int requested);

/// Runs fn(i) for i in [0, n_tasks) on up to n_threads workers. Tasks must
/// write only to their own output slots; the call returns after all tasks
/// finish. The first exception thrown by a task is rethrown.
void parallel_for(int n_tasks, int n_threads,
                  const std::function<void(int)>& fn);

}  // namespace farmlayout
