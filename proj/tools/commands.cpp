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

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "bellsep/error.hpp"
#include "bellsep/sampling.hpp"
#include "bellsep/tolerances.hpp"

namespace bellsep::cli {

namespace {

// Thresholds the sample harness holds every draw to.
constexpr double kSpectrumAgreement = 1e-10;
constexpr double kCriterionSlack = 1e-12;
constexpr double kDecompositionResidual = 1e-12;
constexpr std::size_t kMaxListedViolations = 20;

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidState: return kExitInvalidState;
    case ErrorKind::kNotSeparable: return kExitNotSeparable;
    case ErrorKind::kOutOfRegime: return kExitOutOfRegime;
    default: return kExitUsage;
  }
}

CommandResult failure(int status, std::string message) {
  CommandResult r;
  r.status = status;
  r.diagnostics.push_back(std::move(message));
  return r;
}

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return failure(kExitParse, std::string("parse error: ") + e.what());
  } catch (const Json::exception& e) {
    return failure(kExitParse, std::string("parse error: ") + e.what());
  } catch (const Error& e) {
    return failure(status_for(e.kind()), std::string(to_string(e.kind())) + ": " + e.what());
  }
}

std::array<double, 4> numeric_spectrum(const ComplexMatrix& pt) {
  const std::vector<double> ev = hermitian_eigenvalues(pt);
  return {ev[0], ev[1], ev[2], ev[3]};
}

double max_abs_diff(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

CommandResult emit(const Report& report, int status = kExitOk) {
  CommandResult r;
  r.status = status;
  r.output = dump(to_json(report)) + "\n";
  return r;
}

DensityMatrix state_of(const StateInput& input) {
  if (input.t) return from_t_vector(*input.t);
  return DensityMatrix(*input.matrix);
}

double weight_sum_error(const Decomposition& d) {
  double total = 0.0;
  for (const ProductTerm& term : d.terms) total += term.weight;
  return std::abs(total - 1.0);
}

Report spectral_report(const std::string& command, const StateInput& input,
                       bool allow_invalid, std::vector<std::string>& notes) {
  Report r;
  r.command = command;
  if (input.t) {
    const TVector& t = *input.t;
    const Validation val = allow_invalid ? Validation::kBypass : Validation::kEnforce;
    r.verdict = classify(t, val);
    if (allow_invalid && !in_tetrahedron(t, -tol::kPsdSlack))
      notes.emplace_back("t lies outside the valid tetrahedron; verdict is formula-level only");
    r.numeric_pt_spectrum = numeric_spectrum(partial_transpose(bell_diagonal_matrix(t)));
    if (r.verdict->sign_case == SignCase::kB)
      r.case_b_sufficient = case_b_sufficient_check(t, val);
  } else {
    const DensityMatrix rho(*input.matrix);
    const CanonicalForm c = canonical_form(rho);
    r.verdict = classify(c.t);
    r.numeric_pt_spectrum = numeric_spectrum(partial_transpose(rho));
    if (r.verdict->sign_case == SignCase::kB) r.case_b_sufficient = case_b_sufficient_check(c.t);
    r.canonical = c;
  }
  r.residuals["spectrum_mismatch"] =
      max_abs_diff(r.verdict->pt_spectrum, *r.numeric_pt_spectrum);
  return r;
}

// ---------------------------------------------------------------------------
// sample

struct SampleStats {
  long long drawn = 0;
  long long rejected_invalid = 0;
  long long processed = 0;
  long long separable = 0;
  long long entangled = 0;
  std::map<std::string, long long> sign_cases;
  std::map<std::string, long long> conditions;
  double max_spectrum_mismatch = 0.0;
  double max_reconstruction_residual = 0.0;
  double max_weight_sum_error = 0.0;
  double min_reconstruction_pt_eigenvalue = 1.0;
  long long violation_count = 0;
  std::vector<std::string> violations;

  void violate(const TVector& t, const std::string& what) {
    ++violation_count;
    if (violations.size() >= kMaxListedViolations) return;
    std::ostringstream msg;
    msg.precision(17);
    msg << "t = (" << t[0] << ", " << t[1] << ", " << t[2] << "): " << what;
    violations.push_back(msg.str());
  }
};

void check_point(const TVector& t, SampleStats& st) {
  ++st.processed;
  const Verdict v = classify(t);
  ++st.sign_cases[to_string(v.sign_case)];
  ++st.conditions[to_string(v.min_condition)];
  (v.separable ? st.separable : st.entangled) += 1;

  const auto numeric = numeric_spectrum(partial_transpose(from_t_vector(t)));
  const double mismatch = max_abs_diff(v.pt_spectrum, numeric);
  st.max_spectrum_mismatch = std::max(st.max_spectrum_mismatch, mismatch);
  if (!(mismatch <= kSpectrumAgreement)) st.violate(t, "closed-form spectrum disagrees with eigensolver");

  const bool ppt_numeric = numeric[0] >= -kCriterionSlack;
  const bool ppt_closed = v.pt_spectrum[0] >= -kCriterionSlack;
  if (v.separable != ppt_numeric || v.separable != ppt_closed)
    st.violate(t, "sum |t_i| criterion disagrees with the partial-transpose sign");

  if (v.min_condition != MinCondition::kDegenerate && labeled_eigenvalue(v) != v.pt_spectrum[0])
    st.violate(t, std::string("condition ") + to_string(v.min_condition) +
                      " does not select the minimal eigenvalue");

  if (v.sign_case == SignCase::kB && case_b_sufficient_check(t) && v.separable)
    st.violate(t, "|t1| + |t2| - |t3| > 1 holds for a separable state");

  if (v.separable) {
    const Decomposition d = separable_decomposition(t);
    const double residual = verify_decomposition(d, from_t_vector(t));
    const double wsum = weight_sum_error(d);
    st.max_reconstruction_residual = std::max(st.max_reconstruction_residual, residual);
    st.max_weight_sum_error = std::max(st.max_weight_sum_error, wsum);
    if (!(residual <= kDecompositionResidual)) st.violate(t, "decomposition residual too large");
    if (!(wsum <= tol::kBoundary)) st.violate(t, "decomposition weights do not sum to 1");
    for (const ProductTerm& term : d.terms)
      if (term.weight < 0.0) st.violate(t, "negative weight in decomposition");
    if (strength(d) != Strength::kStrong) st.violate(t, "decomposition has a mixed factor");
    const double pt_min = hermitian_eigenvalues(partial_transpose(reconstruct(d))).front();
    st.min_reconstruction_pt_eigenvalue = std::min(st.min_reconstruction_pt_eigenvalue, pt_min);
    if (pt_min < tol::kPsdSlack) st.violate(t, "reconstruction is not PPT");
  } else {
    try {
      separable_decomposition(t);
      st.violate(t, "entangled state was decomposed");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotSeparable) st.violate(t, "unexpected error refusing decomposition");
    }
  }
}

}  // namespace

CommandResult cmd_classify(const StateInput& input, bool allow_invalid) {
  return guarded([&] {
    std::vector<std::string> notes;
    Report r = spectral_report("classify", input, allow_invalid, notes);
    CommandResult out = emit(r);
    out.diagnostics = notes;
    return out;
  });
}

CommandResult cmd_spectrum(const StateInput& input, bool allow_invalid) {
  return guarded([&] {
    std::vector<std::string> notes;
    Report r = spectral_report("spectrum", input, allow_invalid, notes);
    r.case_b_sufficient.reset();
    CommandResult out = emit(r);
    out.diagnostics = notes;
    return out;
  });
}

CommandResult cmd_decompose(const StateInput& input) {
  return guarded([&] {
    Report r;
    r.command = "decompose";
    // Entangled t is refused before the validity check so the status names
    // the sum |t_i| breakdown.
    if (input.t) r.decomposition = separable_decomposition(*input.t);
    const DensityMatrix rho = state_of(input);
    if (input.t) {
      r.verdict = classify(*input.t);
    } else {
      const CanonicalForm c = canonical_form(rho);
      r.verdict = classify(c.t);
      r.decomposition = to_source_frame(separable_decomposition(c.t), c);
      r.canonical = c;
    }
    r.strength = strength(*r.decomposition);
    r.residuals["reconstruction"] = verify_decomposition(*r.decomposition, rho);
    r.residuals["weight_sum"] = weight_sum_error(*r.decomposition);
    return emit(r);
  });
}

CommandResult cmd_canonicalize(const StateInput& input) {
  return guarded([&] {
    const DensityMatrix rho = state_of(input);
    const CorrelationData corr = hs_decompose(rho);
    const CanonicalForm c = canonical_form(rho);
    Report r;
    r.command = "canonicalize";
    r.canonical = c;
    r.verdict = classify(c.t);

    const RealMatrix3 diag = RealMatrix3::diagonal(c.t[0], c.t[1], c.t[2]);
    r.residuals["factorization"] =
        frobenius_norm(c.rot_a * diag * c.rot_b.transpose() - corr.t);
    const ComplexMatrix rotated = conjugate_local(rho.matrix(), c.u_a, c.u_b);
    r.residuals["bell_diagonal_distance"] =
        frobenius_distance(rotated, bell_diagonal_matrix(c.t));
    return emit(r);
  });
}

CommandResult cmd_verify(const StateInput& input, const std::string& decomposition_text) {
  return guarded([&] {
    const DensityMatrix rho = state_of(input);
    const std::vector<RawTerm> raw = read_decomposition_terms(decomposition_text);

    Report r;
    r.command = "verify";
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (auto why = state_violation(raw[j].a))
        r.violations.push_back("term " + std::to_string(j) + " factor a: " + *why);
      if (auto why = state_violation(raw[j].b))
        r.violations.push_back("term " + std::to_string(j) + " factor b: " + *why);
    }
    if (!r.violations.empty()) {
      CommandResult out = emit(r, kExitInvalidState);
      out.diagnostics = r.violations;
      return out;
    }

    Decomposition d;
    for (const RawTerm& term : raw)
      d.terms.push_back({term.weight, QubitState(term.a), QubitState(term.b)});
    for (std::string& why : weight_violations(d)) r.violations.push_back(std::move(why));

    r.strength = strength(d);
    const double residual = verify_decomposition(d, rho);
    r.residuals["reconstruction"] = residual;

    int status = kExitOk;
    if (!r.violations.empty()) {
      status = kExitInvalidState;
    } else if (!(residual <= tol::kVerify)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "reconstruction residual " << residual << " exceeds " << tol::kVerify;
      r.violations.push_back(msg.str());
      status = kExitVerifyFailed;
    }
    CommandResult out = emit(r, status);
    out.diagnostics = r.violations;
    return out;
  });
}

CommandResult cmd_sample(long long count, std::uint64_t seed, Region region) {
  if (count < 1) return failure(kExitUsage, "--count must be at least 1");
  return guarded([&] {
    Sampler rng(seed);
    SampleStats st;
    if (region == Region::kTetrahedron) {
      while (st.processed < count) {
        ++st.drawn;
        const TVector t = rng.cube_point();
        if (!in_tetrahedron(t)) {
          ++st.rejected_invalid;
          continue;
        }
        check_point(t, st);
      }
    } else {
      for (long long k = 0; k < count; ++k) {
        ++st.drawn;
        const TVector t = rng.cube_point();
        bool valid = true;
        try {
          from_t_vector(t);
        } catch (const Error&) {
          valid = false;
        }
        if (valid != in_tetrahedron(t, -tol::kPsdSlack) && valid != in_tetrahedron(t))
          st.violate(t, "numeric PSD check disagrees with the analytic tetrahedron");
        if (!valid) {
          ++st.rejected_invalid;
          continue;
        }
        check_point(t, st);
      }
    }

    Json j;
    j["command"] = "sample";
    j["region"] = region == Region::kTetrahedron ? "tetrahedron" : "cube";
    j["seed"] = seed;
    j["count"] = count;
    j["drawn"] = st.drawn;
    j["rejected_invalid"] = st.rejected_invalid;
    j["processed"] = st.processed;
    j["separable"] = st.separable;
    j["entangled"] = st.entangled;
    j["sign_cases"] = st.sign_cases;
    j["conditions"] = st.conditions;
    j["max_spectrum_mismatch"] = st.max_spectrum_mismatch;
    j["max_reconstruction_residual"] = st.max_reconstruction_residual;
    j["max_weight_sum_error"] = st.max_weight_sum_error;
    j["min_reconstruction_pt_eigenvalue"] = st.min_reconstruction_pt_eigenvalue;
    j["violation_count"] = st.violation_count;
    j["violations"] = st.violations;

    CommandResult out;
    out.status = st.violation_count == 0 ? kExitOk : kExitVerifyFailed;
    out.output = dump(j) + "\n";
    out.diagnostics = st.violations;
    return out;
  });
}

// ---------------------------------------------------------------------------
// command line

namespace {

struct Options {
  std::string input;
  std::vector<double> t;
  std::string output;
  bool allow_invalid = false;
  std::string decomposition;
  long long count = 0;
  std::uint64_t seed = 0;
  std::string region = "tetrahedron";
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Partial-transpose classification and explicit pure-product decompositions "
      "of two-qubit states.\n"
      "A Bell-diagonal state is entangled iff |t1| + |t2| + |t3| > 1; when the sum "
      "is <= 1 it is a convex mixture of pure product states.",
      "bellsep"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool state) {
    if (state) {
      sub->add_option("--input", o.input, "File holding one state record");
      sub->add_option("--t", o.t, "Correlation diagonal t1,t2,t3")
          ->delimiter(',')
          ->expected(3)
          ->allow_extra_args(false);
    }
    sub->add_option("--output", o.output, "Write records to this file instead of stdout");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Separable/entangled verdict");
  add_common(classify_cmd, true);
  classify_cmd->add_flag("--allow-invalid", o.allow_invalid,
                         "Accept t outside the valid tetrahedron (formula-level mode)");

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "Pure product decomposition of a separable state (sum |t_i| <= 1)");
  add_common(decompose_cmd, true);

  CLI::App* canon_cmd =
      app.add_subcommand("canonicalize", "Local-unitary frame with diagonal correlations");
  add_common(canon_cmd, true);

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Closed-form and numeric partial-transpose spectra");
  add_common(spectrum_cmd, true);
  spectrum_cmd->add_flag("--allow-invalid", o.allow_invalid,
                         "Accept t outside the valid tetrahedron (formula-level mode)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a decomposition file against a state");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--decomposition", o.decomposition, "Decomposition file")->required();

  CLI::App* sample_cmd = app.add_subcommand("sample", "Seeded property sweep");
  add_common(sample_cmd, false);
  sample_cmd->add_option("--count", o.count, "Number of processed states")->required();
  sample_cmd->add_option("--seed", o.seed, "Generator seed");
  sample_cmd->add_option("--region", o.region, "tetrahedron or cube")
      ->check(CLI::IsMember({"tetrahedron", "cube"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto state_input = [&]() -> std::variant<StateInput, CommandResult> {
    const bool has_t = !o.t.empty();
    const bool has_file = !o.input.empty();
    if (has_t == has_file) return failure(kExitUsage, "give exactly one of --t or --input");
    if (has_t) return StateInput{TVector{o.t[0], o.t[1], o.t[2]}, std::nullopt};
    const auto text = read_file(o.input);
    if (!text) return failure(kExitParse, "parse error: cannot read " + o.input);
    try {
      return read_state_input(*text);
    } catch (const ParseError& e) {
      return failure(kExitParse, std::string("parse error: ") + e.what());
    }
  };

  auto with_state = [&](auto&& command) -> CommandResult {
    auto in = state_input();
    if (auto* fail = std::get_if<CommandResult>(&in)) return *fail;
    return command(std::get<StateInput>(in));
  };

  CommandResult result;
  if (classify_cmd->parsed()) {
    result = with_state([&](const StateInput& in) { return cmd_classify(in, o.allow_invalid); });
  } else if (decompose_cmd->parsed()) {
    result = with_state([&](const StateInput& in) { return cmd_decompose(in); });
  } else if (canon_cmd->parsed()) {
    result = with_state([&](const StateInput& in) { return cmd_canonicalize(in); });
  } else if (spectrum_cmd->parsed()) {
    result = with_state([&](const StateInput& in) { return cmd_spectrum(in, o.allow_invalid); });
  } else if (verify_cmd->parsed()) {
    const auto text = read_file(o.decomposition);
    if (!text) {
      result = failure(kExitParse, "parse error: cannot read " + o.decomposition);
    } else {
      result = with_state([&](const StateInput& in) { return cmd_verify(in, *text); });
    }
  } else if (sample_cmd->parsed()) {
    result = cmd_sample(o.count, o.seed,
                        o.region == "cube" ? Region::kCube : Region::kTetrahedron);
  }

  if (!result.output.empty()) {
    if (o.output.empty()) {
      out << result.output;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) {
        err << "bellsep: cannot write " << o.output << "\n";
        return kExitUsage;
      }
      file << result.output;
    }
  }
  for (const std::string& line : result.diagnostics) err << "bellsep: " << line << "\n";
  return result.status;
}

}  // namespace bellsep::cli
