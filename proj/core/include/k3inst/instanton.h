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

#ifndef K3INST_INSTANTON_H_
#define K3INST_INSTANTON_H_

#include <cstdint>
#include <string>

#include "k3inst/lattice.h"
#include "k3inst/rational.h"
#include "k3inst/singular.h"

namespace k3inst {

// Invariants of the transverse Levi-Civita connection on a Sasakian
// 5-manifold whose leaf space is the orbifold K3 surface X_d in P(w).

/// deg = sum over singular points of (m^2 - 1) / m. Zero for smooth X.
Rational connection_degree(const SingularityData& data);

/// The irreducibility criterion only works one way: degree != 24 proves
/// irreducibility, degree == 24 proves nothing.
struct IrreducibilityCertificate {
  enum class Status { kCertifiedIrreducible, kUndetermined };

  Status status;
  Rational witness_degree;

  bool certified() const { return status == Status::kCertifiedIrreducible; }
  /// "certified" / "undetermined"
  std::string label() const;

  friend bool operator==(const IrreducibilityCertificate&,
                         const IrreducibilityCertificate&) = default;
};

IrreducibilityCertificate irreducibility(const Rational& degree);

/// Complex dimension of the moduli space of irreducible ASD contact
/// instantons, 90 - 2 * sum(2m - 1). The formula is only asserted on the
/// classification list; a negative value is returned as is, flagged.
struct ModuliDimension {
  std::int64_t value;
  bool out_of_theorem_scope;

  friend bool operator==(const ModuliDimension&, const ModuliDimension&) = default;
};

ModuliDimension moduli_dimension(const SingularityData& data);

struct InstantonInvariants {
  Rational degree;
  IrreducibilityCertificate certificate;
  ModuliDimension dim;

  friend bool operator==(const InstantonInvariants&, const InstantonInvariants&) = default;
};

InstantonInvariants compute_invariants(const SingularityData& data);

struct CertificationSummary {
  bool irreducible;
  bool rigid;           // dim == 0
  std::string verdict;  // "irreducible; dim_C M* = 48"
  std::string text;     // multi-line human-readable record
};

/// Checks that `data` is the singularity data of `w` and `inv` the
/// invariants of `data` (std::invalid_argument otherwise), then writes the
/// certification record.
CertificationSummary certify(const WeightVector& w, const SingularityData& data,
                             const InstantonInvariants& inv);

/// The record certify() writes, without the consistency checks.
CertificationSummary summarize_certification(const WeightVector& w,
                                             const SingularityData& data,
                                             const InstantonInvariants& inv);

}  // namespace k3inst

#endif  // K3INST_INSTANTON_H_
