// Copyright 2026 The k3inst Authors
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

#ifndef K3INST_ERRORS_H_
#define K3INST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace k3inst {

// Raised when a derived fact that must hold for an admissible hypersurface
// does not hold (an A-type witness fails, a well-formed edge has no
// monomials, ...). Distinct from std::invalid_argument, which signals bad
// caller input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace k3inst

#endif  // K3INST_ERRORS_H_
