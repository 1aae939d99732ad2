// Copyright 2026 The ncadmm Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncadmm/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncadmm {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw std::runtime_error("problem JSON: field '" + field + "' " + what);
}

const json& require(const json& doc, const std::string& field) {
  if (!doc.contains(field)) field_error(field, "is missing");
  return doc.at(field);
}

double require_number(const json& doc, const std::string& field) {
  const json& v = require(doc, field);
  if (!v.is_number()) field_error(field, "must be a number");
  return v.get<double>();
}

Eigen::VectorXd parse_vector(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "must be an array of numbers");
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) field_error(field, "must contain only numbers");
    out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
  }
  return out;
}

Eigen::MatrixXd parse_matrix(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "must be an array of arrays");
  const Eigen::Index rows = static_cast<Eigen::Index>(v.size());
  if (rows == 0) return Eigen::MatrixXd(0, 0);
  if (!v[0].is_array()) field_error(field, "must be an array of arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(v[0].size());
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      field_error(field, "rows must all have the same length");
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!row[static_cast<std::size_t>(j)].is_number())
        field_error(field, "must contain only numbers");
      out(i, j) = row[static_cast<std::size_t>(j)].get<double>();
    }
  }
  return out;
}

ConstraintSet parse_set(const json& v, std::size_t index) {
  const std::string field = "sets[" + std::to_string(index) + "]";
  if (!v.is_object()) field_error(field, "must be an object");
  if (!v.contains("type") || !v.at("type").is_string()) field_error(field + ".type", "is missing");
  const std::string type = v.at("type").get<std::string>();
  if (type == "reals") return ConstraintSet::reals();
  if (type == "nonneg") return ConstraintSet::nonneg_reals();
  if (type == "interval")
    return ConstraintSet::interval(require_number(v, "lo"), require_number(v, "hi"));
  if (type == "intrange") {
    const double lo = require_number(v, "lo");
    const double hi = require_number(v, "hi");
    if (lo != std::floor(lo) || hi != std::floor(hi))
      field_error(field, "intrange bounds must be integers");
    return ConstraintSet::integer_range(static_cast<std::int64_t>(lo),
                                        static_cast<std::int64_t>(hi));
  }
  if (type == "finite") {
    const json& vals = require(v, "values");
    const Eigen::VectorXd parsed = parse_vector(vals, field + ".values");
    return ConstraintSet::finite_set(
        std::vector<double>(parsed.data(), parsed.data() + parsed.size()));
  }
  field_error(field + ".type", "must be one of reals|nonneg|interval|finite|intrange");
}

json set_to_json(const ConstraintSet& s) {
  json out;
  switch (s.kind()) {
    case ConstraintSet::Kind::kReals:
      out["type"] = "reals";
      break;
    case ConstraintSet::Kind::kNonnegReals:
      out["type"] = "nonneg";
      break;
    case ConstraintSet::Kind::kInterval:
      out["type"] = "interval";
      out["lo"] = s.lo();
      out["hi"] = s.hi();
      break;
    case ConstraintSet::Kind::kFiniteSet:
      out["type"] = "finite";
      out["values"] = s.values();
      break;
    case ConstraintSet::Kind::kIntegerRange:
      out["type"] = "intrange";
      out["lo"] = static_cast<std::int64_t>(s.lo());
      out["hi"] = static_cast<std::int64_t>(s.hi());
      break;
  }
  return out;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& mat) {
  json out = json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Problem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("problem JSON: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("problem JSON: document must be an object");

  Problem p;
  p.P = parse_matrix(require(doc, "P"), "P");
  p.q = parse_vector(require(doc, "q"), "q");
  p.r = require_number(doc, "r");
  p.A = parse_matrix(require(doc, "A"), "A");
  p.b = parse_vector(require(doc, "b"), "b");
  if (p.A.rows() == 0) p.A.resize(0, p.q.size());

  const json& sets = require(doc, "sets");
  if (!sets.is_array()) field_error("sets", "must be an array");
  for (std::size_t i = 0; i < sets.size(); ++i) p.sets.push_back(parse_set(sets[i], i));
  return p;
}

Problem load_problem_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

std::string problem_to_json_string(const Problem& p) {
  json doc;
  doc["P"] = matrix_to_json(p.P);
  doc["q"] = vector_to_json(p.q);
  doc["r"] = p.r;
  doc["A"] = matrix_to_json(p.A);
  doc["b"] = vector_to_json(p.b);
  json sets = json::array();
  for (const ConstraintSet& s : p.sets) sets.push_back(set_to_json(s));
  doc["sets"] = sets;
  return doc.dump(2) + "\n";
}

void save_problem_json(const Problem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write problem file: " + path);
  out << problem_to_json_string(p);
}

std::string solution_to_json_string(const Solution& sol, bool include_timing) {
  json doc;
  doc["status"] = sol.found_feasible ? "feasible" : "no_feasible_point";
  doc["objective"] = std::isfinite(sol.best_objective) ? json(sol.best_objective) : json();
  doc["residual"] = std::isfinite(sol.best_residual) ? json(sol.best_residual) : json();
  doc["x"] = sol.best_x ? vector_to_json(*sol.best_x) : json();
  doc["restarts"] = sol.restarts;
  doc["iterations"] = sol.iterations;
  doc["factorizations"] = sol.factorizations;
  doc["wall_ms"] = include_timing ? json(sol.wall_ms) : json();
  return doc.dump(2) + "\n";
}

void write_trace_csv(const std::vector<TraceRow>& trace, std::ostream& os) {
  os << "restart,k,objective,residual,best_so_far\n";
  char line[160];
  for (const TraceRow& row : trace) {
    std::snprintf(line, sizeof(line), "%d,%d,%.12g,%.12g,%.12g\n", row.restart, row.iter,
                  row.objective, row.residual, row.best_so_far);
    os << line;
  }
}

void save_trace_csv(const std::vector<TraceRow>& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  write_trace_csv(trace, out);
}

}  // namespace ncadmm
