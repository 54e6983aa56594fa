// Copyright 2026 The bellsep Authors
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

#include "bellsep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsep/error.hpp"
#include "bellsep/tolerances.hpp"

namespace bellsep {

namespace {

// Signs applied to (t1, t2, t3) in 4 lambda_k, k = 1..4.
constexpr std::array<std::array<int, 3>, 4> kPatterns{{
    {+1, -1, -1},
    {-1, +1, -1},
    {-1, -1, +1},
    {+1, +1, +1},
}};

void require_finite(const TVector& t) {
  for (double x : t)
    if (!std::isfinite(x))
      throw Error(ErrorKind::kInvalidArgument, "t vector has a non-finite entry");
}

// sum |t_i| in magnitude order, so permutations of t give identical bits.
double abs_sum(const TVector& t) {
  std::array<double, 3> m{std::abs(t[0]), std::abs(t[1]), std::abs(t[2])};
  std::sort(m.begin(), m.end(), std::greater<>());
  return (m[0] + m[1]) + m[2];
}

SignCase sign_case_of(const TVector& t) {
  int negatives = 0;
  for (double x : t) {
    if (x == 0.0) return SignCase::kDegenerate;
    if (x < 0.0) ++negatives;
  }
  return negatives % 2 == 1 ? SignCase::kA : SignCase::kB;
}

// Sign patterns over the magnitude-ordered vector s.
MinCondition condition_of(const TVector& s, SignCase sc) {
  const bool p1 = s[0] > 0.0, p2 = s[1] > 0.0, p3 = s[2] > 0.0;
  if (sc == SignCase::kA) {
    if (!p1 && !p2 && !p3) return MinCondition::kAa;
    if (p1 && p2 && !p3) return MinCondition::kAb;
    if (p1 && !p2 && p3) return MinCondition::kAc;
    return MinCondition::kAd;  // t1 < 0 < t2, t3
  }
  if (sc == SignCase::kB) {
    if (p1 && p2 && p3) return MinCondition::kBa;
    if (!p1 && !p2 && p3) return MinCondition::kBb;
    if (!p1 && p2 && !p3) return MinCondition::kBc;
    return MinCondition::kBd;  // t2, t3 < 0 < t1
  }
  return MinCondition::kDegenerate;
}

ComplexMatrix computational_projector(int bit) {
  return QubitState::pauli_eigenstate(3, bit == 0 ? +1 : -1).matrix();
}

}  // namespace

const char* to_string(SignCase c) {
  switch (c) {
    case SignCase::kA: return "A";
    case SignCase::kB: return "B";
    case SignCase::kDegenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(MinCondition c) {
  switch (c) {
    case MinCondition::kAa: return "A.a";
    case MinCondition::kAb: return "A.b";
    case MinCondition::kAc: return "A.c";
    case MinCondition::kAd: return "A.d";
    case MinCondition::kBa: return "B.a";
    case MinCondition::kBb: return "B.b";
    case MinCondition::kBc: return "B.c";
    case MinCondition::kBd: return "B.d";
    case MinCondition::kDegenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(Strength s) {
  return s == Strength::kStrong ? "Strong" : "Weak";
}

std::optional<SignCase> parse_sign_case(const std::string& s) {
  for (SignCase c : {SignCase::kA, SignCase::kB, SignCase::kDegenerate})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::optional<MinCondition> parse_min_condition(const std::string& s) {
  for (MinCondition c :
       {MinCondition::kAa, MinCondition::kAb, MinCondition::kAc, MinCondition::kAd,
        MinCondition::kBa, MinCondition::kBb, MinCondition::kBc, MinCondition::kBd,
        MinCondition::kDegenerate})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

EigenIndex labeled_eigen_index(MinCondition c) {
  switch (c) {
    case MinCondition::kAa: return 4;
    case MinCondition::kAb: return 3;
    case MinCondition::kAc: return 2;
    case MinCondition::kAd: return 1;
    case MinCondition::kBa: return 3;
    case MinCondition::kBb: return 4;
    case MinCondition::kBc: return 1;
    case MinCondition::kBd: return 2;
    case MinCondition::kDegenerate: return 0;
  }
  return 0;
}

double pt_eigenvalue(const TVector& t, EigenIndex index) {
  if (index < 1 || index > 4)
    throw Error(ErrorKind::kInvalidArgument, "eigenvalue index must be 1..4");
  const auto& sign = kPatterns[index - 1];
  std::array<double, 3> terms{sign[0] * t[0], sign[1] * t[1], sign[2] * t[2]};
  std::sort(terms.begin(), terms.end());
  return (((1.0 + terms[0]) + terms[1]) + terms[2]) / 4.0;
}

std::array<double, 4> pt_eigenvalues_indexed(const TVector& t) {
  return {pt_eigenvalue(t, 1), pt_eigenvalue(t, 2), pt_eigenvalue(t, 3),
          pt_eigenvalue(t, 4)};
}

std::array<double, 4> pt_spectrum_closed_form(const TVector& t) {
  auto ev = pt_eigenvalues_indexed(t);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::array<int, 3> magnitude_order(const TVector& t) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(t[x]) > std::abs(t[y]);
  });
  return order;
}

Verdict classify(const TVector& t, Validation validation) {
  require_finite(t);
  if (validation == Validation::kEnforce) from_t_vector(t);

  Verdict v;
  v.t = t;
  v.order = magnitude_order(t);
  for (int k = 0; k < 3; ++k) v.reordered[k] = t[v.order[k]];
  v.margin = 1.0 - abs_sum(t);
  v.separable = v.margin >= -tol::kBoundary;
  v.pt_spectrum = pt_spectrum_closed_form(t);
  v.sign_case = sign_case_of(t);
  v.min_condition = condition_of(v.reordered, v.sign_case);
  return v;
}

double labeled_eigenvalue(const Verdict& v) {
  const EigenIndex k = labeled_eigen_index(v.min_condition);
  if (k == 0)
    throw Error(ErrorKind::kInvalidArgument,
                "degenerate verdict has no labeled eigenvalue");
  return pt_eigenvalue(v.reordered, k);
}

bool case_b_sufficient_check(const TVector& t, Validation validation) {
  require_finite(t);
  if (validation == Validation::kEnforce) from_t_vector(t);
  if (sign_case_of(t) != SignCase::kB)
    throw Error(ErrorKind::kInvalidArgument,
                "case_b_sufficient_check requires sign(t1 t2 t3) = +1");
  const auto order = magnitude_order(t);
  const double a1 = std::abs(t[order[0]]);
  const double a2 = std::abs(t[order[1]]);
  const double a3 = std::abs(t[order[2]]);
  return a1 + a2 - a3 > 1.0;
}

ComplexMatrix build_s_matrix(const TVector& t) {
  ComplexMatrix s = abs_sum(t) * kron(pauli(0), pauli(0));
  for (int i = 1; i <= 3; ++i) s += t[i - 1] * kron(pauli(i), pauli(i));
  return s;
}

Decomposition separable_decomposition(const TVector& t) {
  require_finite(t);
  const double total = abs_sum(t);
  if (total > 1.0 + tol::kBoundary) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is entangled: sum |t_i| = " << total << " > 1 (margin "
        << 1.0 - total << "); the remainder weight would be negative";
    throw Error(ErrorKind::kNotSeparable, msg.str());
  }
  from_t_vector(t);

  Decomposition d;
  for (int i = 0; i < 3; ++i) {
    if (t[i] == 0.0) continue;
    const int sign = t[i] > 0.0 ? +1 : -1;
    const double w = std::abs(t[i]) / 2.0;
    const int axis = i + 1;
    d.terms.push_back({w, QubitState::pauli_eigenstate(axis, -1),
                       QubitState::pauli_eigenstate(axis, -sign)});
    d.terms.push_back({w, QubitState::pauli_eigenstate(axis, +1),
                       QubitState::pauli_eigenstate(axis, +sign)});
  }
  const double remainder = 1.0 - total;
  if (remainder > 0.0) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        d.terms.push_back({remainder / 4.0, QubitState(computational_projector(a)),
                           QubitState(computational_projector(b))});
  }
  return d;
}

ComplexMatrix reconstruct(const Decomposition& d) {
  ComplexMatrix sum = ComplexMatrix::zero(4);
  for (const ProductTerm& term : d.terms)
    sum += term.weight * kron(term.a.matrix(), term.b.matrix());
  return sum;
}

std::vector<std::string> weight_violations(const Decomposition& d) {
  std::vector<std::string> out;
  double total = 0.0;
  for (std::size_t j = 0; j < d.terms.size(); ++j) {
    const double w = d.terms[j].weight;
    if (!std::isfinite(w) || w < 0.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "term " << j << ": weight " << w << " is negative or non-finite";
      out.push_back(msg.str());
    }
    total += w;
  }
  if (d.terms.empty()) out.emplace_back("decomposition has no terms");
  if (!(std::abs(total - 1.0) <= tol::kBoundary)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights sum to " << total << ", expected 1";
    out.push_back(msg.str());
  }
  return out;
}

Strength strength(const Decomposition& d) {
  for (const ProductTerm& term : d.terms)
    if (purity(term.a) < 1.0 - tol::kPurity || purity(term.b) < 1.0 - tol::kPurity)
      return Strength::kWeak;
  return Strength::kStrong;
}

double verify_decomposition(const Decomposition& d, const DensityMatrix& rho) {
  return frobenius_distance(reconstruct(d), rho.matrix());
}

}  // namespace bellsep
