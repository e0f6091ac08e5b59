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

#include "isoinertia/tools/cli.h"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "isoinertia/error.h"
#include "isoinertia/inequalities.h"
#include "isoinertia/optimizer.h"
#include "isoinertia/parallel.h"
#include "isoinertia/random_shapes.h"
#include "isoinertia/shape.h"
#include "isoinertia/stekloff.h"
#include "isoinertia/tools/report.h"
#include "isoinertia/tools/shape_io.h"

namespace isoinertia::tools {
namespace {

struct Options {
  std::string shape_path;
  std::string ids = "all";
  std::uint64_t seed = 1;
  int count = 0;  // 0: subcommand default
  std::optional<int> degree;
  std::optional<double> tol;
  std::string out_path;
  std::string format = "report";
  std::string kind = "convex-polygon";
  double amplitude = 0.1;
};

// What a subcommand produces before it is written out.
struct Outcome {
  Json results = Json::array();
  Json summary = Json::object();
  std::optional<Table> table;
  std::optional<Json> document;  // replaces the run report when set
  int exit_code = kExitSuccess;
};

std::vector<NamedShape> RequireShapes(const Options& o) {
  if (o.shape_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--shape is required");
  }
  return LoadShapeFile(o.shape_path);
}

std::vector<InequalityId> ParseIds(const std::string& list) {
  if (list == "all") {
    const auto& all = AllInequalityIds();
    return {all.begin(), all.end()};
  }
  std::vector<InequalityId> ids;
  std::stringstream stream(list);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto id = ParseInequalityId(token);
    if (!id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown inequality id '" + token + "'");
    }
    ids.push_back(*id);
  }
  if (ids.empty()) throw Error(ErrorCode::kInvalidArgument, "--ids is empty");
  return ids;
}

Json ShapeHeader(const NamedShape& s) {
  Json out;
  out["name"] = s.name;
  out["kind"] = std::string(KindName(s.shape));
  out["dimension"] = Dimension(s.shape);
  return out;
}

Outcome RunMoments(const Options& o) {
  Outcome result;
  auto shapes = RequireShapes(o);
  Table table({"shape", "volume", "surface", "J0", "I0", "J_product",
               "I_product"});
  for (const NamedShape& s : shapes) {
    MomentSummary m = Moments(s.shape);
    Json item = ShapeHeader(s);
    item["convex"] = IsConvex(s.shape);
    item["moments"] = ToJson(m);
    result.results.push_back(std::move(item));
    table.AddRow({s.name, Table::Number(m.volume), Table::Number(m.surface),
                  Table::Number(m.J0), Table::Number(m.I0),
                  Table::Number(m.J_product), Table::Number(m.I_product)});
  }
  result.summary["shapes"] = shapes.size();
  result.table = std::move(table);
  return result;
}

struct VerifyItem {
  std::vector<InequalityReport> reports;
  std::vector<std::pair<InequalityId, std::string>> errors;
};

VerifyItem VerifyOne(const Shape& shape, const std::vector<InequalityId>& ids) {
  VerifyItem item;
  for (InequalityId id : ids) {
    try {
      item.reports.push_back(EvaluateInequality(id, shape));
    } catch (const Error& e) {
      item.errors.emplace_back(id, e.what());
    }
  }
  return item;
}

Outcome RunVerify(const Options& o) {
  Outcome result;
  auto shapes = RequireShapes(o);
  auto ids = ParseIds(o.ids);

  std::vector<std::future<VerifyItem>> futures;
  futures.reserve(shapes.size());
  for (const NamedShape& s : shapes) {
    futures.push_back(std::async(std::launch::async, VerifyOne,
                                 std::cref(s.shape), std::cref(ids)));
  }

  int holds = 0, equalities = 0, violations = 0, errors = 0;
  Table table({"shape", "id", "lhs", "rhs", "relative_margin", "holds",
               "equality"});
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    VerifyItem item = futures[i].get();
    Json entry = ShapeHeader(shapes[i]);
    Json reports = Json::array();
    for (const InequalityReport& r : item.reports) {
      reports.push_back(ToJson(r));
      holds += r.holds;
      equalities += r.equality;
      violations += !r.holds;
      table.AddRow({shapes[i].name, std::string(InequalityName(r.id)),
                    Table::Number(r.lhs), Table::Number(r.rhs),
                    Table::Number(r.relative_margin),
                    r.holds ? "true" : "false",
                    r.equality ? "true" : "false"});
    }
    entry["reports"] = std::move(reports);
    if (!item.errors.empty()) {
      Json failed = Json::array();
      for (const auto& [id, message] : item.errors) {
        failed.push_back({{"id", std::string(InequalityName(id))},
                          {"error", message}});
      }
      entry["errors"] = std::move(failed);
      errors += static_cast<int>(item.errors.size());
    }
    result.results.push_back(std::move(entry));
  }
  result.summary["holds"] = holds;
  result.summary["equalities"] = equalities;
  result.summary["violations"] = violations;
  result.summary["errors"] = errors;
  result.table = std::move(table);
  if (violations > 0) {
    result.exit_code = kExitViolation;
  } else if (errors > 0) {
    result.exit_code = kExitInputError;
  }
  return result;
}

Outcome RunOffsetScan(const Options& o) {
  Outcome result;
  auto shapes = RequireShapes(o);
  const int points = o.count > 0 ? o.count : 12;
  if (points < 3) {
    throw Error(ErrorCode::kInvalidArgument, "--count must be at least 3");
  }
  const std::vector<double> grid = UniformGrid(points);
  int failures = 0;
  Table table({"shape", "h", "volume_sqrt", "axis1_quarter", "axis2_quarter"});
  for (const NamedShape& s : shapes) {
    const auto* polygon = std::get_if<Polygon2>(&s.shape);
    if (polygon == nullptr) {
      throw Error(ErrorCode::kUnsupported,
                  "offset-scan needs a polygon, got " +
                      std::string(KindName(s.shape)) + " '" + s.name + "'");
    }
    Json item = ShapeHeader(s);
    Json fits = Json::array();
    for (int axis = 0; axis < 2; ++axis) {
      fits.push_back(ToJson(FitExpansion(*polygon, axis, DefaultExpansionGrid())));
    }
    item["expansion"] = std::move(fits);

    ConcavityReport volume =
        ConcavityScan(*polygon, ParallelFunctional::kVolume, 0, 0.5, grid);
    std::vector<ConcavityReport> axes;
    for (int axis = 0; axis < 2; ++axis) {
      axes.push_back(ConcavityScan(*polygon, ParallelFunctional::kAxisMoment,
                                   axis, 0.25, grid));
    }
    Json scans = Json::array();
    scans.push_back(ToJson(volume));
    failures += !volume.concave;
    for (const ConcavityReport& r : axes) {
      scans.push_back(ToJson(r));
      failures += !r.concave + !r.slope_bound_holds;
    }
    item["concavity"] = std::move(scans);
    result.results.push_back(std::move(item));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      table.AddRow({s.name, Table::Number(grid[i]), Table::Number(volume.g[i]),
                    Table::Number(axes[0].g[i]), Table::Number(axes[1].g[i])});
    }
  }
  result.summary["shapes"] = shapes.size();
  result.summary["failures"] = failures;
  result.table = std::move(table);
  if (failures > 0) result.exit_code = kExitViolation;
  return result;
}

Outcome RunStekloff(const Options& o) {
  Outcome result;
  auto shapes = RequireShapes(o);
  const int degree = o.degree.value_or(40);
  const double tol = o.tol.value_or(1e-10);
  if (degree < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--degree must be positive");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--tol must be positive");
  }
  const bool many = shapes.size() > 1;
  Table table(many ? std::vector<std::string>{"shape", "degree", "p2"}
                   : std::vector<std::string>{"degree", "p2"});
  int violations = 0;
  for (const NamedShape& s : shapes) {
    StekloffChainReport report = StekloffChainCheck(s.shape, degree, tol);
    Json item = ShapeHeader(s);
    item["coordinate"] = ToJson(report.coordinate);
    if (report.converged) item["harmonic"] = ToJson(*report.converged);
    item["chain"] = ToJson(report);
    result.results.push_back(std::move(item));
    violations += !report.holds;
    if (report.converged) {
      const auto& history = report.converged->history;
      for (std::size_t m = 0; m < history.size(); ++m) {
        std::vector<std::string> row;
        if (many) row.push_back(s.name);
        row.push_back(std::to_string(m + 1));
        row.push_back(Table::Number(history[m].empty() ? NAN : history[m][0]));
        table.AddRow(std::move(row));
      }
    }
  }
  result.summary["shapes"] = shapes.size();
  result.summary["violations"] = violations;
  result.table = std::move(table);
  if (violations > 0) result.exit_code = kExitViolation;
  return result;
}

Outcome RunOptimize(const Options& o) {
  Outcome result;
  FourierBoundary initial;
  std::string name = "random-start";
  if (!o.shape_path.empty()) {
    auto shapes = LoadShapeFile(o.shape_path);
    if (shapes.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "optimize takes exactly one starting shape");
    }
    const auto* fb = std::get_if<FourierBoundary>(&shapes[0].shape);
    if (fb == nullptr) {
      throw Error(ErrorCode::kUnsupported,
                  "optimize needs a fourier starting shape");
    }
    initial = *fb;
    name = shapes[0].name;
  } else {
    Rng rng(o.seed);
    initial = RandomStarFourier(rng, 4, o.amplitude);
  }

  OptimizationProblem problem;
  problem.order = o.degree.value_or(8);
  if (problem.order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--degree must be positive");
  }
  if (o.tol) {
    if (!(*o.tol > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "--tol must be positive");
    }
    problem.area_tolerance = *o.tol;
  }
  OptimizationTrace trace = MinimizeI(initial, problem);

  Json item;
  item["name"] = name;
  item["order"] = problem.order;
  item["target_area"] = problem.target_area;
  item["trace"] = ToJson(trace);
  item["final_boundary"] = ShapeToJson({name + "-optimized", trace.final_boundary});
  item["radius_deviation"] = RadiusDeviation(trace.final_boundary);
  try {
    item["stationarity"] = ToJson(MakeStationarityReport(trace.final_boundary));
  } catch (const Error& e) {
    item["stationarity_error"] = e.what();
  }
  result.results.push_back(std::move(item));

  // Any curve enclosing area A has I_1 I_2 at least the disc value
  // pi^2 R^6 with pi R^2 = A. Compare at the area actually reached.
  const double radius = std::sqrt(problem.target_area / kPi);
  const double disc = kPi * kPi * std::pow(radius, 6);
  const double reached =
      disc * std::pow(1.0 + trace.final_area_residual, 3);
  const bool below_disc =
      trace.final_objective < reached * (1.0 - kViolationTolerance);
  result.summary["converged"] = trace.converged;
  result.summary["disc_objective"] = disc;
  result.summary["relative_excess"] = trace.final_objective / reached - 1.0;
  result.summary["below_disc"] = below_disc;

  // The objective itself trades against the area constraint; the augmented
  // value is the one that decreases within an outer iteration.
  Table table({"iteration", "objective", "area_residual", "outer", "augmented"});
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const TraceEntry& e = trace.iterations[i];
    table.AddRow({std::to_string(i), Table::Number(e.objective),
                  Table::Number(e.area_residual), std::to_string(e.outer),
                  Table::Number(e.augmented)});
  }
  result.table = std::move(table);
  if (below_disc) result.exit_code = kExitViolation;
  return result;
}

Outcome RunRandom(const Options& o) {
  Outcome result;
  const int count = o.count > 0 ? o.count : 1;
  Rng rng(o.seed);
  std::vector<NamedShape> shapes;
  for (int i = 0; i < count; ++i) {
    std::string name = o.kind + "-" + std::to_string(o.seed) + "-" +
                       std::to_string(i);
    if (o.kind == "convex-polygon") {
      shapes.push_back({name, RandomConvexPolygon(rng)});
    } else if (o.kind == "star-fourier") {
      shapes.push_back(
          {name, RandomStarFourier(rng, o.degree.value_or(6), o.amplitude)});
    } else if (o.kind == "simplicial-box") {
      shapes.push_back(
          {name, RandomPerturbedBox(rng, o.degree.value_or(3), o.amplitude)});
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown --kind '" + o.kind +
                      "' (convex-polygon, star-fourier, simplicial-box)");
    }
  }
  Table table({"shape", "kind", "volume", "surface"});
  for (const NamedShape& s : shapes) {
    MomentSummary m = Moments(s.shape);
    table.AddRow({s.name, std::string(KindName(s.shape)),
                  Table::Number(m.volume), Table::Number(m.surface)});
  }
  result.document = ShapesToJson(shapes);
  result.table = std::move(table);
  return result;
}

void AddCommonOptions(CLI::App* app, Options& o) {
  app->add_option("--out", o.out_path, "Write the report to this file");
  app->add_option("--format", o.format, "report or tabular")
      ->check(CLI::IsMember({"report", "tabular"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Moments of inertia, isoperimetric inequalities and Stekloff "
               "bounds",
               "isoinertia"};
  app.require_subcommand(1);

  CLI::App* moments = app.add_subcommand("moments", "Moment summary per shape");
  CLI::App* verify = app.add_subcommand("verify", "Check inequalities");
  CLI::App* offset = app.add_subcommand(
      "offset-scan", "Parallel-body expansion and concavity for polygons");
  CLI::App* stekloff = app.add_subcommand(
      "stekloff", "Stekloff eigenvalue bounds and the moment chain");
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Minimize I_1 I_2 over Fourier curves of fixed area");
  CLI::App* random = app.add_subcommand("random", "Generate random shapes");

  for (CLI::App* sub : {moments, verify, offset, stekloff}) {
    sub->add_option("--shape", o.shape_path, "Shape document")->required();
  }
  optimize->add_option("--shape", o.shape_path, "Fourier starting shape");
  verify->add_option("--ids", o.ids, "Comma-separated ids or 'all'");
  offset->add_option("--count", o.count, "Concavity grid points on [0, 1]");
  for (CLI::App* sub : {stekloff, optimize, random}) {
    sub->add_option("--degree", o.degree,
                    sub == stekloff   ? "Maximum harmonic degree"
                    : sub == optimize ? "Fourier order"
                                      : "Mode cap or dimension");
  }
  for (CLI::App* sub : {stekloff, optimize}) {
    sub->add_option("--tol", o.tol,
                    sub == stekloff ? "Spectrum convergence tolerance"
                                    : "Relative area tolerance");
  }
  for (CLI::App* sub : {optimize, random}) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--amplitude", o.amplitude, "Perturbation amplitude");
  }
  random->add_option("--count", o.count, "Number of shapes");
  random->add_option("--kind", o.kind,
                     "convex-polygon, star-fourier or simplicial-box");
  for (CLI::App* sub : {moments, verify, offset, stekloff, optimize, random}) {
    AddCommonOptions(sub, o);
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("isoinertia");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (moments->parsed()) {
      outcome = RunMoments(o);
    } else if (verify->parsed()) {
      outcome = RunVerify(o);
    } else if (offset->parsed()) {
      outcome = RunOffsetScan(o);
    } else if (stekloff->parsed()) {
      outcome = RunStekloff(o);
    } else if (optimize->parsed()) {
      outcome = RunOptimize(o);
    } else {
      outcome = RunRandom(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitInputError;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  if (o.format == "tabular") {
    outcome.table->Write(sink);
  } else if (outcome.document) {
    sink << outcome.document->dump(2) << '\n';
  } else {
    sink << MakeRunReport(argv_storage, std::move(outcome.results),
                          std::move(outcome.summary), seconds)
                .dump(2)
         << '\n';
  }
  return outcome.exit_code;
}

}  // namespace isoinertia::tools
