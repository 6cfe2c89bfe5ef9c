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

#ifndef NLASIM_ERRORS_HPP
#define NLASIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nlasim {

/// Raised when a truncated Fock basis is too small for the requested
/// operation, i.e. more norm than the configured tolerance would be lost.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double leakage)
      : std::runtime_error(what), leakage_(leakage) {}

  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

}  // namespace nlasim

#endif  // NLASIM_ERRORS_HPP
