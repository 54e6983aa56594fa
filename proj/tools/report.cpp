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

#include "report.hpp"

#include <sstream>

#include "bellsep/error.hpp"

namespace bellsep::cli {

namespace {

double real_from_json(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex entry must be a number or a [re, im] pair");
  return {real_from_json(j[0], "real part"), real_from_json(j[1], "imaginary part")};
}

template <std::size_t N>
std::array<double, N> real_array_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != N) {
    std::ostringstream msg;
    msg << what << ": expected a list of " << N << " numbers";
    throw ParseError(msg.str());
  }
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = real_from_json(j[k], what);
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

QubitState qubit_from_json(const Json& j) {
  try {
    return QubitState(complex_matrix_from_json(j, 2));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

void append_terms(const Json& j, std::vector<RawTerm>& out) {
  if (j.is_array()) {
    for (const Json& item : j) append_terms(item, out);
    return;
  }
  if (!j.is_object()) throw ParseError("decomposition record must be an object or list");
  if (j.contains("decomposition")) {
    append_terms(j.at("decomposition"), out);
    return;
  }
  out.push_back({real_from_json(field(j, "weight"), "weight"),
                 complex_matrix_from_json(field(j, "a"), 2),
                 complex_matrix_from_json(field(j, "b"), 2)});
}

}  // namespace

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_json(m(i, j)));
  return out;
}

Json to_json(const RealMatrix3& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.push_back(m(i, j));
  return out;
}

Json to_json(const Verdict& v) {
  Json j;
  j["t"] = v.t;
  j["separable"] = v.separable;
  j["pt_spectrum"] = v.pt_spectrum;
  j["sign_case"] = to_string(v.sign_case);
  j["min_condition"] = to_string(v.min_condition);
  j["margin"] = v.margin;
  j["order"] = v.order;
  j["reordered"] = v.reordered;
  return j;
}

Json to_json(const ProductTerm& term) {
  Json j;
  j["weight"] = term.weight;
  j["a"] = to_json(term.a.matrix());
  j["b"] = to_json(term.b.matrix());
  return j;
}

Json to_json(const Decomposition& d) {
  Json out = Json::array();
  for (const ProductTerm& term : d.terms) out.push_back(to_json(term));
  return out;
}

Json to_json(const CanonicalForm& c) {
  Json j;
  j["t"] = c.t;
  j["rot_a"] = to_json(c.rot_a);
  j["rot_b"] = to_json(c.rot_b);
  j["u_a"] = to_json(c.u_a);
  j["u_b"] = to_json(c.u_b);
  return j;
}

Json to_json(const StateInput& in) {
  Json j = Json::object();
  if (in.t) j["t"] = *in.t;
  if (in.matrix) j["matrix"] = to_json(*in.matrix);
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  if (r.verdict) j["verdict"] = to_json(*r.verdict);
  if (r.numeric_pt_spectrum) j["numeric_pt_spectrum"] = *r.numeric_pt_spectrum;
  if (r.case_b_sufficient) j["case_b_sufficient"] = *r.case_b_sufficient;
  if (r.decomposition) j["decomposition"] = to_json(*r.decomposition);
  if (r.strength) j["strength"] = to_string(*r.strength);
  if (r.canonical) j["canonical"] = to_json(*r.canonical);
  j["residuals"] = Json::object();
  for (const auto& [name, value] : r.residuals) j["residuals"][name] = value;
  j["violations"] = r.violations;
  return j;
}

ComplexMatrix complex_matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n) {
    std::ostringstream msg;
    msg << "matrix must be a flat list of " << n * n << " complex entries";
    throw ParseError(msg.str());
  }
  ComplexMatrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = complex_from_json(j[k]);
  return m;
}

RealMatrix3 real_matrix3_from_json(const Json& j) {
  return RealMatrix3(real_array_from_json<9>(j, "3x3 matrix"));
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.t = real_array_from_json<3>(field(j, "t"), "t");
  if (!field(j, "separable").is_boolean()) throw ParseError("separable must be a boolean");
  v.separable = j.at("separable").get<bool>();
  v.pt_spectrum = real_array_from_json<4>(field(j, "pt_spectrum"), "pt_spectrum");
  const auto sc = parse_sign_case(field(j, "sign_case").get<std::string>());
  const auto mc = parse_min_condition(field(j, "min_condition").get<std::string>());
  if (!sc || !mc) throw ParseError("unknown sign_case or min_condition label");
  v.sign_case = *sc;
  v.min_condition = *mc;
  v.margin = real_from_json(field(j, "margin"), "margin");
  const auto order = real_array_from_json<3>(field(j, "order"), "order");
  for (int k = 0; k < 3; ++k) v.order[k] = static_cast<int>(order[k]);
  v.reordered = real_array_from_json<3>(field(j, "reordered"), "reordered");
  return v;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("decomposition must be a list of terms");
  Decomposition d;
  for (const Json& term : j)
    d.terms.push_back({real_from_json(field(term, "weight"), "weight"),
                       qubit_from_json(field(term, "a")), qubit_from_json(field(term, "b"))});
  return d;
}

CanonicalForm canonical_from_json(const Json& j) {
  CanonicalForm c;
  c.t = real_array_from_json<3>(field(j, "t"), "t");
  c.rot_a = real_matrix3_from_json(field(j, "rot_a"));
  c.rot_b = real_matrix3_from_json(field(j, "rot_b"));
  c.u_a = complex_matrix_from_json(field(j, "u_a"), 2);
  c.u_b = complex_matrix_from_json(field(j, "u_b"), 2);
  return c;
}

StateInput state_input_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("state input must be an object");
  const bool has_t = j.contains("t");
  const bool has_matrix = j.contains("matrix");
  if (has_t == has_matrix)
    throw ParseError("state input needs exactly one of \"t\" or \"matrix\"");
  StateInput in;
  if (has_t) in.t = real_array_from_json<3>(j.at("t"), "t");
  if (has_matrix) in.matrix = complex_matrix_from_json(j.at("matrix"), 4);
  return in;
}

Report report_from_json(const Json& j) {
  Report r;
  if (!field(j, "command").is_string()) throw ParseError("command must be a string");
  r.command = j.at("command").get<std::string>();
  if (j.contains("verdict")) r.verdict = verdict_from_json(j.at("verdict"));
  if (j.contains("numeric_pt_spectrum"))
    r.numeric_pt_spectrum =
        real_array_from_json<4>(j.at("numeric_pt_spectrum"), "numeric_pt_spectrum");
  if (j.contains("case_b_sufficient")) r.case_b_sufficient = j.at("case_b_sufficient").get<bool>();
  if (j.contains("decomposition")) r.decomposition = decomposition_from_json(j.at("decomposition"));
  if (j.contains("strength")) {
    const std::string s = j.at("strength").get<std::string>();
    if (s == "Strong") r.strength = Strength::kStrong;
    else if (s == "Weak") r.strength = Strength::kWeak;
    else throw ParseError("unknown strength label " + s);
  }
  if (j.contains("canonical")) r.canonical = canonical_from_json(j.at("canonical"));
  if (j.contains("residuals"))
    for (const auto& [name, value] : j.at("residuals").items())
      r.residuals[name] = real_from_json(value, "residual");
  if (j.contains("violations"))
    r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

Json parse_line(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

StateInput read_state_input(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<StateInput> found;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (found) throw ParseError("input file must hold exactly one state record");
    try {
      found = state_input_from_json(parse_line(line));
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  }
  if (!found) throw ParseError("input file holds no state record");
  return *found;
}

std::vector<RawTerm> read_decomposition_terms(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<RawTerm> out;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      append_terms(parse_line(line), out);
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  }
  if (out.empty()) throw ParseError("decomposition file holds no terms");
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace bellsep::cli
