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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bellsep/canonicalize.hpp"
#include "bellsep/error.hpp"
#include "bellsep/sampling.hpp"
#include "bellsep/separability.hpp"
#include "commands.hpp"

namespace {

using namespace bellsep;

constexpr double kSpectrumTol = 1e-10;
constexpr double kPtSignTol = 1e-12;
constexpr double kWeightTol = 1e-12;
constexpr double kPurityTol = 1e-9;
constexpr double kResidualTol = 1e-12;
constexpr double kWernerBoundaryTol = 1e-12;
constexpr double kCanonicalTol = 1e-9;

constexpr int kSampleSize = 10000;
constexpr int kPerCondition = 1000;
constexpr int kWernerPoints = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double abs_sum(const TVector& t) { return std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]); }

std::array<double, 4> numeric_pt(const TVector& t) {
  const auto ev = hermitian_eigenvalues(partial_transpose(from_t_vector(t)));
  return {ev[0], ev[1], ev[2], ev[3]};
}

// 10^4 tetrahedron points; every fifth has one coordinate zeroed when the
// result stays valid, so the degenerate sign case is always represented.
std::vector<TVector> tetrahedron_sample() {
  Sampler rng(20240601);
  std::vector<TVector> out;
  while (static_cast<int>(out.size()) < kSampleSize) {
    TVector t = rng.tetrahedron_point();
    if (out.size() % 5 == 4) {
      TVector z = t;
      z[out.size() % 3] = 0.0;
      if (in_tetrahedron(z)) t = z;
    }
    out.push_back(t);
  }
  return out;
}

Outcome spectrum_oracle(const std::vector<TVector>& sample) {
  double worst = 0.0;
  for (const TVector& t : sample) {
    const auto closed = pt_spectrum_closed_form(t);
    const auto num = numeric_pt(t);
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(closed[k] - num[k]));
  }
  return {worst <= kSpectrumTol,
          fmt("%d states, max |closed - numeric| = %.3e (tol %.0e)", kSampleSize, worst, kSpectrumTol)};
}

Outcome criterion_equivalence(const std::vector<TVector>& sample) {
  std::map<SignCase, int> cases;
  int counterexamples = 0;
  for (const TVector& t : sample) {
    const Verdict v = classify(t);
    ++cases[v.sign_case];
    const bool octahedron = abs_sum(t) <= 1.0 + kPtSignTol;
    const bool ppt = numeric_pt(t)[0] >= -kPtSignTol;
    if (octahedron != ppt || v.separable != ppt) ++counterexamples;
  }
  const int a = cases[SignCase::kA], b = cases[SignCase::kB], d = cases[SignCase::kDegenerate];
  return {counterexamples == 0 && a > 0 && b > 0 && d > 0,
          fmt("%d counterexamples; case A %d, case B %d, degenerate %d", counterexamples, a, b, d)};
}

// Sign pattern on the magnitude-ordered vector for each condition.
struct Pattern {
  MinCondition condition;
  std::array<int, 3> signs;
};

constexpr std::array<Pattern, 8> kPatterns{{
    {MinCondition::kAa, {-1, -1, -1}},
    {MinCondition::kAb, {+1, +1, -1}},
    {MinCondition::kAc, {+1, -1, +1}},
    {MinCondition::kAd, {-1, +1, +1}},
    {MinCondition::kBa, {+1, +1, +1}},
    {MinCondition::kBb, {-1, -1, +1}},
    {MinCondition::kBc, {-1, +1, -1}},
    {MinCondition::kBd, {+1, -1, -1}},
}};

Outcome case_table() {
  Sampler rng(20240602);
  std::string summary;
  bool ok = true;
  for (const Pattern& p : kPatterns) {
    int accepted = 0, exact = 0, mislabeled = 0;
    double worst_numeric = 0.0;
    while (accepted < kPerCondition) {
      std::array<double, 3> mag{rng.uniform(), rng.uniform(), rng.uniform()};
      std::sort(mag.rbegin(), mag.rend());
      if (mag[2] == 0.0 || mag[0] == mag[1] || mag[1] == mag[2]) continue;
      TVector s{p.signs[0] * mag[0], p.signs[1] * mag[1], p.signs[2] * mag[2]};
      if (!in_tetrahedron(s)) continue;
      // Scatter the ordered entries to a random arrangement.
      std::array<int, 3> perm{0, 1, 2};
      for (int k = 2; k > 0; --k) std::swap(perm[k], perm[static_cast<int>(rng.uniform() * (k + 1))]);
      TVector t{};
      for (int k = 0; k < 3; ++k) t[perm[k]] = s[k];

      ++accepted;
      const Verdict v = classify(t);
      if (v.min_condition != p.condition) {
        ++mislabeled;
        continue;
      }
      if (labeled_eigenvalue(v) == v.pt_spectrum[0]) ++exact;
      worst_numeric = std::max(worst_numeric, std::abs(labeled_eigenvalue(v) - numeric_pt(t)[0]));
    }
    const bool pass = mislabeled == 0 && exact == accepted && worst_numeric <= kSpectrumTol;
    ok = ok && pass;
    summary += fmt("%s %d/%d%s ", to_string(p.condition), exact, accepted, pass ? "" : "!");
  }
  summary += "exact matches";
  return {ok, summary};
}

Outcome strong_construction() {
  Sampler rng(20240603);
  double worst_weight = 0.0, worst_purity = 0.0, worst_residual = 0.0;
  int negative = 0;
  for (int trial = 0; trial < kSampleSize; ++trial) {
    const TVector t = rng.octahedron_point();
    const Decomposition d = separable_decomposition(t);
    double total = 0.0;
    for (const ProductTerm& term : d.terms) {
      if (term.weight < 0.0) ++negative;
      total += term.weight;
      worst_purity = std::max({worst_purity, 1.0 - purity(term.a), 1.0 - purity(term.b)});
    }
    worst_weight = std::max(worst_weight, std::abs(total - 1.0));
    worst_residual = std::max(worst_residual, verify_decomposition(d, from_t_vector(t)));
  }

  int entangled = 0, refused = 0;
  while (entangled < kSampleSize / 10) {
    const TVector t = rng.cube_point();
    if (abs_sum(t) <= 1.0 + kWeightTol) continue;
    ++entangled;
    try {
      separable_decomposition(t);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kNotSeparable) ++refused;
    }
  }

  const bool pass = negative == 0 && worst_weight <= kWeightTol && worst_purity <= kPurityTol &&
                    worst_residual <= kResidualTol && refused == entangled;
  return {pass, fmt("%d states: %d negative weights, |sum w - 1| <= %.1e, 1 - purity <= %.1e, "
                    "residual <= %.3e; refused %d/%d with sum > 1",
                    kSampleSize, negative, worst_weight, worst_purity, worst_residual, refused,
                    entangled)};
}

Outcome werner_sweep() {
  int wrong = 0, entangled = 0;
  double worst_literal = 0.0;
  ComplexMatrix singlet(4, 4);
  singlet(1, 1) = singlet(2, 2) = 0.5;
  singlet(1, 2) = singlet(2, 1) = -0.5;
  for (int k = 0; k < kWernerPoints; ++k) {
    const double p = static_cast<double>(k) / (kWernerPoints - 1);
    const TVector t{-p, -p, -p};
    const DensityMatrix rho = from_t_vector(t);
    const ComplexMatrix literal = p * singlet + (1.0 - p) * 0.25 * ComplexMatrix::identity(4);
    worst_literal = std::max(worst_literal, frobenius_distance(rho.matrix(), literal));

    const bool got = !classify(t).separable;
    entangled += got;
    if (p > 1.0 / 3.0 + kWernerBoundaryTol && !got) ++wrong;
    if (p < 1.0 / 3.0 - kWernerBoundaryTol && got) ++wrong;
    if (std::abs(p - 1.0 / 3.0) <= kWernerBoundaryTol && got) ++wrong;
  }
  if (!classify({-1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0}).separable) ++wrong;
  return {wrong == 0 && worst_literal <= 1e-15,
          fmt("%d points, %d misclassified, %d entangled; boundary p = 1/3 separable",
              kWernerPoints, wrong, entangled)};
}

Outcome canonicalization() {
  Sampler rng(20240604);
  double worst_offdiag = 0.0, worst_sum = 0.0;
  int verdict_mismatch = 0;
  for (int trial = 0; trial < kSampleSize; ++trial) {
    const TVector t = rng.tetrahedron_point();
    const DensityMatrix rho(conjugate_local(bell_diagonal_matrix(t), rng.su2(), rng.su2()));
    const CanonicalForm c = canonical_form(rho);
    const RealMatrix3 d = c.rot_a.transpose() * hs_decompose(rho).t * c.rot_b;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) worst_offdiag = std::max(worst_offdiag, std::abs(d(i, j)));
    worst_sum = std::max(worst_sum, std::abs(abs_sum(c.t) - abs_sum(t)));
    if (classify_general(rho).separable != classify(t).separable) ++verdict_mismatch;
  }
  return {worst_offdiag <= kCanonicalTol && worst_sum <= kCanonicalTol && verdict_mismatch == 0,
          fmt("%d states: max off-diagonal %.3e, max |sum change| %.3e (tol %.0e), %d verdict mismatches",
              kSampleSize, worst_offdiag, worst_sum, kCanonicalTol, verdict_mismatch)};
}

// Grid over the case B part of the cube at formula level.
Outcome case_b_sweep() {
  const int n = 41;
  int fails_but_entangled = 0, holds_but_separable = 0, holds_not_entangled = 0, points = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const TVector t{-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1), -1.0 + 2.0 * k / (n - 1)};
        if (!(t[0] * t[1] * t[2] > 0.0)) continue;
        ++points;
        const bool holds = case_b_sufficient_check(t, Validation::kBypass);
        const bool entangled = !classify(t, Validation::kBypass).separable;
        if (!holds && entangled) ++fails_but_entangled;
        if (holds && !entangled) ++holds_not_entangled;
        if (holds && in_tetrahedron(t) && classify(t).separable) ++holds_but_separable;
      }
  return {fails_but_entangled >= 1 && holds_but_separable == 0 && holds_not_entangled == 0,
          fmt("%d case B grid points: %d where the check fails but sum > 1, %d valid separable "
              "points where it holds",
              points, fails_but_entangled, holds_but_separable)};
}

Outcome determinism() {
  const auto a = cli::cmd_sample(kSampleSize, 1234, cli::Region::kTetrahedron);
  const auto b = cli::cmd_sample(kSampleSize, 1234, cli::Region::kTetrahedron);
  const auto c = cli::cmd_sample(kSampleSize / 10, 1234, cli::Region::kCube);
  const auto d = cli::cmd_sample(kSampleSize / 10, 1234, cli::Region::kCube);
  const bool same = a.output == b.output && c.output == d.output && !a.output.empty();
  const bool clean = a.status == cli::kExitOk && c.status == cli::kExitOk;
  return {same && clean, fmt("two runs per region, %zu-byte report %s, status %d/%d", a.output.size(),
                             same ? "identical" : "differs", a.status, c.status)};
}

}  // namespace

int main() {
  const std::vector<TVector> sample = tetrahedron_sample();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed-form spectrum vs eigensolver", [&] { return spectrum_oracle(sample); }},
      {"sum |t_i| <= 1 iff partial transpose is PSD", [&] { return criterion_equivalence(sample); }},
      {"case table selects the minimal eigenvalue", case_table},
      {"pure product decomposition of separable states", strong_construction},
      {"Werner threshold p = 1/3", werner_sweep},
      {"local-unitary canonicalization", canonicalization},
      {"case B check is sufficient, not necessary", case_b_sweep},
      {"seeded sample reports are byte-identical", determinism},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
