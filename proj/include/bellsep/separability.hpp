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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bellsep/qstate.hpp"

namespace bellsep {

/// Sign of t1 * t2 * t3: kA for -1, kB for +1, kDegenerate when some t_i = 0.
enum class SignCase { kA, kB, kDegenerate };

/// Which sign pattern of the magnitude-ordered t vector holds, and therefore
/// which partial-transpose eigenvalue is minimal.
enum class MinCondition { kAa, kAb, kAc, kAd, kBa, kBb, kBc, kBd, kDegenerate };

/// Index (1..4) of the partial-transpose eigenvalue lambda_k, with
///   4 lambda_1 = 1 + t1 - t2 - t3     4 lambda_2 = 1 - t1 + t2 - t3
///   4 lambda_3 = 1 - t1 - t2 + t3     4 lambda_4 = 1 + t1 + t2 + t3.
using EigenIndex = int;

/// Controls whether operations demand a physically valid state.
enum class Validation { kEnforce, kBypass };

const char* to_string(SignCase c);
const char* to_string(MinCondition c);
std::optional<SignCase> parse_sign_case(const std::string& s);
std::optional<MinCondition> parse_min_condition(const std::string& s);

/// Eigenvalue index that a condition labels as minimal; 0 for kDegenerate.
EigenIndex labeled_eigen_index(MinCondition c);

struct Verdict {
  TVector t{};
  bool separable = false;
  std::array<double, 4> pt_spectrum{};  // closed form, ascending
  SignCase sign_case = SignCase::kDegenerate;
  MinCondition min_condition = MinCondition::kDegenerate;
  double margin = 0.0;  // 1 - sum |t_i|
  // reordered[k] = t[order[k]] with |reordered[0]| >= |reordered[1]| >= |reordered[2]|.
  std::array<int, 3> order{0, 1, 2};
  TVector reordered{};

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ProductTerm {
  double weight = 0.0;
  QubitState a;
  QubitState b;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

struct Decomposition {
  std::vector<ProductTerm> terms;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class Strength { kStrong, kWeak };
const char* to_string(Strength s);

/// lambda_k for the sign pattern of `index`. The three signed terms are summed
/// in ascending order, so relabelling t never changes the rounded value.
double pt_eigenvalue(const TVector& t, EigenIndex index);

/// {lambda_1, ..., lambda_4} in index order.
std::array<double, 4> pt_eigenvalues_indexed(const TVector& t);

/// Closed-form partial-transpose spectrum of the Bell-diagonal state, ascending.
std::array<double, 4> pt_spectrum_closed_form(const TVector& t);

/// Stable permutation sorting |t| descending.
std::array<int, 3> magnitude_order(const TVector& t);

/// Separable iff sum |t_i| <= 1 (+ tol::kBoundary). With kEnforce the state
/// must be valid (kInvalidState otherwise); with kBypass any finite t is
/// accepted and the verdict is a statement about the formulas only.
Verdict classify(const TVector& t, Validation validation = Validation::kEnforce);

/// Eigenvalue selected by verdict.min_condition, evaluated on the reordered t.
/// Throws kInvalidArgument for degenerate verdicts.
double labeled_eigenvalue(const Verdict& v);

/// |t1| + |t2| - |t3| > 1 for the magnitude-ordered t; sufficient for a
/// negative partial-transpose eigenvalue in the positive-product case alone.
/// Throws kInvalidArgument unless sign(t1 t2 t3) = +1.
bool case_b_sufficient_check(const TVector& t,
                             Validation validation = Validation::kEnforce);

/// 4 S = sum_i t_i sigma_i x sigma_i + (sum_i |t_i|) I x I.
ComplexMatrix build_s_matrix(const TVector& t);

/// Convex mixture of pure product states reproducing from_t_vector(t): two
/// Pauli-eigenstate products of weight |t_i| / 2 for every nonzero t_i and
/// four computational-basis products sharing the remainder 1 - sum |t_i|.
/// Throws kNotSeparable when sum |t_i| > 1 + tol::kBoundary.
Decomposition separable_decomposition(const TVector& t);

/// sum_j w_j a_j x b_j (no validation).
ComplexMatrix reconstruct(const Decomposition& d);

/// Weight invariants (nonnegative, summing to 1 within tol::kBoundary); one
/// message per violation.
std::vector<std::string> weight_violations(const Decomposition& d);

/// Strong iff every factor has purity >= 1 - tol::kPurity.
Strength strength(const Decomposition& d);

/// Frobenius distance between reconstruct(d) and rho.
double verify_decomposition(const Decomposition& d, const DensityMatrix& rho);

}  // namespace bellsep
