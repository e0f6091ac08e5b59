// Copyright 2026 The isoinertia Authors
//
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

#include "isoinertia/tools/report.h"

#include <cmath>
#include <cstdio>
#include <utility>

namespace isoinertia::tools {
namespace {

const char* CenteringName(Centering c) {
  return c == Centering::kVolume ? "volume" : "boundary";
}

Json Doubles(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

Json ToJson(const VecX& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json ToJson(const MatX& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(ToJson(VecX(m.row(i).transpose())));
  return out;
}

Json ToJson(const MomentSummary& m) {
  Json out;
  out["dimension"] = m.dimension;
  out["volume"] = m.volume;
  out["volume_centroid"] = ToJson(m.volume_centroid);
  out["J"] = ToJson(m.J);
  out["J0"] = m.J0;
  out["J_product"] = m.J_product;
  out["inertia"] = ToJson(m.inertia);
  out["determinant"] = m.determinant;
  if (m.has_boundary) {
    out["surface"] = m.surface;
    out["boundary_centroid"] = ToJson(m.boundary_centroid);
    out["I"] = ToJson(m.I);
    out["I0"] = m.I0;
    out["I_product"] = m.I_product;
    out["boundary_inertia"] = ToJson(m.boundary_inertia);
  }
  return out;
}

Json ToJson(const InequalityReport& r) {
  Json out;
  out["id"] = std::string(InequalityName(r.id));
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  out["margin"] = r.margin;
  out["relative_margin"] = r.relative_margin;
  out["holds"] = r.holds;
  out["equality"] = r.equality;
  out["centering"] = CenteringName(r.centering);
  if (r.worst_axis >= 0) out["worst_axis"] = r.worst_axis + 1;
  return out;
}

Json ToJson(const ExpansionFit& fit) {
  Json out;
  out["axis"] = fit.axis + 1;
  out["h_grid"] = Doubles(fit.h_grid);
  out["samples"] = Doubles(fit.samples);
  out["coefficients"] = Doubles(fit.coefficients);
  out["residual"] = fit.residual;
  out["condition"] = fit.condition;
  return out;
}

Json ToJson(const ConcavityReport& r) {
  Json out;
  out["functional"] =
      r.functional == ParallelFunctional::kVolume ? "volume" : "axis_moment";
  if (r.functional == ParallelFunctional::kAxisMoment) out["axis"] = r.axis + 1;
  out["exponent"] = r.exponent;
  out["h_grid"] = Doubles(r.h_grid);
  out["g"] = Doubles(r.g);
  out["second_differences"] = Doubles(r.second_differences);
  out["max_second_difference"] = r.max_second_difference;
  out["concave"] = r.concave;
  if (r.functional == ParallelFunctional::kAxisMoment) {
    out["min_chord_slope"] = r.min_chord_slope;
    out["slope_bound"] = r.slope_bound;
    out["slope_bound_holds"] = r.slope_bound_holds;
  }
  return out;
}

Json ToJson(const StekloffBounds& b) {
  Json out;
  out["method"] = b.method;
  out["degree"] = b.degree;
  out["bounds"] = Doubles(b.bounds);
  out["product"] = b.product;
  out["converged"] = b.converged;
  if (std::isfinite(b.achieved_tolerance)) {
    out["achieved_tolerance"] = b.achieved_tolerance;
  }
  Json history = Json::array();
  for (const auto& h : b.history) history.push_back(Doubles(h));
  out["history"] = std::move(history);
  return out;
}

Json ToJson(const ChainLink& link) {
  Json out;
  out["name"] = link.name;
  out["lhs"] = link.lhs;
  out["rhs"] = link.rhs;
  out["margin"] = link.margin;
  out["relative_margin"] = link.relative_margin;
  out["holds"] = link.holds;
  out["equality"] = link.equality;
  return out;
}

Json ToJson(const StekloffChainReport& r) {
  Json out;
  out["dimension"] = r.dimension;
  Json links = Json::array();
  for (const ChainLink& l : r.links) links.push_back(ToJson(l));
  out["links"] = std::move(links);
  out["holds"] = r.holds;
  return out;
}

Json ToJson(const StationarityReport& r) {
  Json out;
  out["lambda"] = r.lambda;
  out["relative_residual"] = r.relative_residual;
  out["perimeter"] = r.system.perimeter;
  Json modes = Json::array();
  for (const LagrangeModeResidual& m : r.system.modes) {
    Json mode;
    mode["k"] = m.k;
    mode["residual"] = Doubles({m.residual.begin(), m.residual.end()});
    mode["M"] = m.M;
    modes.push_back(std::move(mode));
  }
  out["modes"] = std::move(modes);
  out["active_modes"] = r.active_modes;
  out["vanishing_M"] = r.vanishing_M;
  out["at_most_two_roots"] = r.at_most_two_roots;
  return out;
}

Json ToJson(const OptimizationTrace& trace) {
  Json out;
  out["verdict"] = trace.verdict;
  out["converged"] = trace.converged;
  out["final_objective"] = trace.final_objective;
  out["final_area_residual"] = trace.final_area_residual;
  out["lambda"] = trace.lambda;
  out["iterations"] = trace.iterations.size();
  Json iterates = Json::array();
  for (const TraceEntry& e : trace.iterations) {
    Json entry;
    entry["outer"] = e.outer;
    entry["iteration"] = e.iteration;
    entry["objective"] = e.objective;
    entry["area_residual"] = e.area_residual;
    entry["speed_residual"] = e.speed_residual;
    entry["gradient_norm"] = e.gradient_norm;
    entry["multiplier"] = e.multiplier;
    entry["augmented"] = e.augmented;
    iterates.push_back(std::move(entry));
  }
  out["trace"] = std::move(iterates);
  return out;
}

Json MakeRunReport(const std::vector<std::string>& command, Json results,
                   Json summary, double wall_clock_seconds) {
  Json out;
  out["tool"] = "isoinertia";
  out["version"] = kToolVersion;
  out["command"] = command;
  out["results"] = std::move(results);
  out["summary"] = std::move(summary);
  out["wall_clock_seconds"] = wall_clock_seconds;
  return out;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::AddRow(std::vector<std::string> cells) {
  rows_.push_back(std::move(cells));
}

void Table::Write(std::ostream& out) const {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header_);
  for (const auto& row : rows_) line(row);
}

std::string Table::Number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace isoinertia::tools
