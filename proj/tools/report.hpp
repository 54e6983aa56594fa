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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellsep/canonicalize.hpp"
#include "bellsep/separability.hpp"

namespace bellsep::cli {

using Json = nlohmann::ordered_json;

/// Exit statuses of the bellsep tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidState = 2,
  kExitNotSeparable = 3,
  kExitOutOfRegime = 4,
  kExitParse = 5,
  kExitVerifyFailed = 6,
};

/// Malformed input text or records.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exactly one of t / matrix is set.
struct StateInput {
  std::optional<TVector> t;
  std::optional<ComplexMatrix> matrix;

  friend bool operator==(const StateInput&, const StateInput&) = default;
};

struct Report {
  std::string command;
  std::optional<Verdict> verdict;
  std::optional<std::array<double, 4>> numeric_pt_spectrum;
  std::optional<bool> case_b_sufficient;
  std::optional<Decomposition> decomposition;
  std::optional<Strength> strength;
  std::optional<CanonicalForm> canonical;
  std::map<std::string, double> residuals;
  std::vector<std::string> violations;

  friend bool operator==(const Report&, const Report&) = default;
};

/// One factor-level record from a decomposition file, before validation.
struct RawTerm {
  double weight = 0.0;
  ComplexMatrix a;
  ComplexMatrix b;
};

Json to_json(const Complex& z);
Json to_json(const ComplexMatrix& m);  // flat row-major list of [re, im]
Json to_json(const RealMatrix3& m);    // flat row-major list of 9 reals
Json to_json(const Verdict& v);
Json to_json(const ProductTerm& term);
Json to_json(const Decomposition& d);  // list of term records
Json to_json(const CanonicalForm& c);
Json to_json(const StateInput& in);
Json to_json(const Report& r);

ComplexMatrix complex_matrix_from_json(const Json& j, std::size_t n);
RealMatrix3 real_matrix3_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
CanonicalForm canonical_from_json(const Json& j);
StateInput state_input_from_json(const Json& j);
Report report_from_json(const Json& j);

/// Parses one line of JSON text; throws ParseError.
Json parse_line(const std::string& text);

/// Reads the single StateInput record of an input file.
StateInput read_state_input(const std::string& text);

/// Collects term records from a decomposition file. Lines may hold a single
/// term, a list of terms, or any record with a "decomposition" list (such as
/// a decompose report).
std::vector<RawTerm> read_decomposition_terms(const std::string& text);

/// Single-line serialisation used for every emitted record.
std::string dump(const Json& j);

}  // namespace bellsep::cli
