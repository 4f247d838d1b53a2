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

#ifndef K3INST_HYPERSURFACE_H_
#define K3INST_HYPERSURFACE_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3inst/lattice.h"

namespace k3inst {

// Admissibility of the pair (P(w), X_d) where X_d is the general member of
// degree d.

/// A monomial of degree d in the variables of the subset alone.
struct PureMonomial {
  ExponentVector monomial;
  friend bool operator==(const PureMonomial&, const PureMonomial&) = default;
};

/// One monomial of degree d of the form (subset monomial) * x_external.
struct TiltedMonomial {
  ExponentVector monomial;  // includes the x_external factor
  int external;
  friend bool operator==(const TiltedMonomial&, const TiltedMonomial&) = default;
};

/// |subset| tilted monomials with pairwise distinct external indices.
struct TiltedMonomials {
  std::vector<TiltedMonomial> entries;
  friend bool operator==(const TiltedMonomials&, const TiltedMonomials&) = default;
};

struct QuasiSmoothWitness {
  IndexSubset subset;
  std::variant<PureMonomial, TiltedMonomials> satisfied_by;

  std::string to_string() const;
};

/// gcd of every three of the weights is 1.
bool ambient_well_formed(const WeightVector& w);

/// d equals one of the weights. Never true for d = sum(w) with positive
/// weights; reachable only through WeightVector::with_degree_unchecked.
bool is_linear_cone(const WeightVector& w);

/// One witness per nonempty subset I of {0,1,2,3} (ascending mask order) if
/// the general member is quasi-smooth, std::nullopt otherwise. For each I
/// either some monomial of degree d lives on I alone, or |I| monomials
/// x^m * x_e of degree d exist with x^m on I and the e distinct and outside
/// I. Pure monomials are preferred; ties break lexicographically, and tilted
/// witnesses take the smallest usable external indices.
std::optional<std::vector<QuasiSmoothWitness>> general_member_quasi_smooth(
    const WeightVector& w);

/// Ambient well-formed, and every edge P_iP_j with gcd(w_i, w_j) > 1 carries
/// a monomial of degree d, i.e. X does not contain a singular edge.
bool hypersurface_well_formed(const WeightVector& w);

/// Result of the full admissibility check, with the first failing reason.
struct Admissibility {
  bool ambient_well_formed = false;
  bool hypersurface_well_formed = false;
  bool quasi_smooth = false;
  bool linear_cone = false;

  bool k3_candidate() const {
    return ambient_well_formed && hypersurface_well_formed && quasi_smooth &&
           !linear_cone;
  }
  /// Empty for candidates, otherwise e.g. "ambient not well-formed".
  std::string reason() const;
};

Admissibility check_admissibility(const WeightVector& w);

bool k3_candidate(const WeightVector& w);

}  // namespace k3inst

#endif  // K3INST_HYPERSURFACE_H_
