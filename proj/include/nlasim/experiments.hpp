// Copyright 2026 The nlasim Authors
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

#ifndef NLASIM_EXPERIMENTS_HPP
#define NLASIM_EXPERIMENTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "nlasim/config.hpp"
#include "nlasim/report.hpp"

namespace nlasim {

/// Subcommand names in display order: table1, linearity, fringe, vis-tau,
/// epr, bound.
const std::vector<std::string>& experiment_names();

/// Accepted keys for an experiment. Throws ConfigError for an unknown name.
const std::vector<KeySpec>& experiment_schema(const std::string& name);

/// Runs one experiment. Sweep points are evaluated on up to `threads` worker
/// threads; the result does not depend on the thread count.
Report run_experiment(const std::string& name, const Config& config, int threads = 1);

/// Evaluates fn(0..n-1) on up to `threads` threads, results in index order.
template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn);

/// Thread count from a SIM_THREADS-style string: empty means hardware
/// concurrency. Throws ConfigError for anything but a positive integer.
int parse_thread_count(const char* value);

}  // namespace nlasim

#include "nlasim/parallel_inl.hpp"

#endif  // NLASIM_EXPERIMENTS_HPP
