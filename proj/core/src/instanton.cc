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

#include "k3inst/instanton.h"

#include <sstream>
#include <stdexcept>

namespace k3inst {

Rational connection_degree(const SingularityData& data) {
  Rational total;
  for (const auto& e : data.entries()) {
    total += Rational(e.count) * Rational(e.order * e.order - 1, e.order);
  }
  return total;
}

std::string IrreducibilityCertificate::label() const {
  return certified() ? "certified" : "undetermined";
}

IrreducibilityCertificate irreducibility(const Rational& degree) {
  const auto status = degree != Rational(24)
                          ? IrreducibilityCertificate::Status::kCertifiedIrreducible
                          : IrreducibilityCertificate::Status::kUndetermined;
  return {status, degree};
}

ModuliDimension moduli_dimension(const SingularityData& data) {
  std::int64_t sum = 0;
  for (const auto& e : data.entries()) sum += e.count * (2 * e.order - 1);
  const std::int64_t dim = 90 - 2 * sum;
  return {dim, dim < 0};
}

InstantonInvariants compute_invariants(const SingularityData& data) {
  const Rational degree = connection_degree(data);
  return {degree, irreducibility(degree), moduli_dimension(data)};
}

CertificationSummary certify(const WeightVector& w, const SingularityData& data,
                             const InstantonInvariants& inv) {
  if (singularity_data(w) != data) {
    throw std::invalid_argument("certify: singularity data does not belong to " +
                                w.to_string());
  }
  if (compute_invariants(data) != inv) {
    throw std::invalid_argument("certify: invariants were not computed from the data");
  }
  return summarize_certification(w, data, inv);
}

CertificationSummary summarize_certification(const WeightVector& w,
                                             const SingularityData& data,
                                             const InstantonInvariants& inv) {
  CertificationSummary s;
  s.irreducible = inv.certificate.certified();
  s.rigid = inv.dim.value == 0;
  const std::string dim = std::to_string(inv.dim.value);
  if (s.irreducible) {
    s.verdict = "irreducible; dim_C M* = " + dim;
  } else {
    s.verdict = "irreducibility undetermined by the degree criterion (deg = 24); "
                "dim_C M* = " + dim;
  }

  std::ostringstream os;
  os << "Leaf space: X_" << w.degree() << " in P" << w.to_string()
     << ", an orbifold K3 surface with singularities "
     << (data.empty() ? std::string("none") : data.canonical()) << ".\n";
  os << "Connection: transverse Levi-Civita connection on the contact distribution,\n"
     << "  taken on the anti-self-dual part Lambda^- H^* (an SO(3) adjoint bundle).\n";
  os << "deg = sum (m^2-1)/m = " << inv.degree.to_string();
  if (s.irreducible) {
    os << " != 24, so the connection is an irreducible ASD contact instanton.\n";
    os << "Moduli space M* over any compact simply-connected Sasakian 5-manifold\n"
       << "  with transverse Calabi-Yau structure and this leaf space: non-empty\n"
       << "  hyperkahler manifold of complex dimension " << dim << ".\n";
  } else {
    os << " = 24; the degree criterion does not decide irreducibility.\n";
    os << "Dimension formula value: " << dim << ".\n";
  }
  if (s.rigid) {
    os << "Rigid case: dim_C M* = 0, the connection admits no deformations.\n";
  }
  if (inv.dim.out_of_theorem_scope) {
    os << "Warning: negative dimension; the formula does not apply to this input.\n";
  }
  s.text = os.str();
  return s;
}

}  // namespace k3inst
