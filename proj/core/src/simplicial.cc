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

#include "isoinertia/simplicial.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/LU>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

double Factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Sorts `key` in place and returns the parity (+1 / -1) of the permutation.
int SortWithParity(std::vector<int>& key) {
  int parity = 1;
  for (std::size_t i = 1; i < key.size(); ++i) {
    for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
      std::swap(key[j - 1], key[j]);
      parity = -parity;
    }
  }
  return parity;
}

// det[w_0 - c, ..., w_{N-1} - c] for the facet vertices w.
double OrientationAbout(const std::vector<VecX>& vertices,
                        const std::vector<int>& facet, const VecX& c) {
  const int n = static_cast<int>(c.size());
  MatX m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = vertices[facet[j]] - c;
  return m.determinant();
}

double Scale(const std::vector<VecX>& vertices) {
  double d = 0.0;
  for (const VecX& p : vertices) {
    for (const VecX& q : vertices) d = std::max(d, (p - q).norm());
  }
  return d;
}

// Adds the closed-form moments of a k-simplex with the given vertices and
// (signed) measure.
void AccumulateSimplex(const std::vector<VecX>& points, double measure,
                       VecX& first, MatX& second) {
  const int k = static_cast<int>(points.size()) - 1;
  VecX sum = VecX::Zero(points[0].size());
  MatX outer = MatX::Zero(points[0].size(), points[0].size());
  for (const VecX& p : points) {
    sum += p;
    outer += p * p.transpose();
  }
  first += measure / (k + 1) * sum;
  second += measure / ((k + 1.0) * (k + 2.0)) * (outer + sum * sum.transpose());
}

}  // namespace

SimplicialBody::SimplicialBody(int dimension, std::vector<VecX> vertices,
                               std::vector<std::vector<int>> simplices,
                               std::vector<std::vector<int>> facets)
    : dimension_(dimension),
      vertices_(std::move(vertices)),
      simplices_(std::move(simplices)),
      facets_(std::move(facets)) {
  const int n = dimension_;
  if (n < 2) throw Error(ErrorCode::kInvalidShape, "dimension must be >= 2");
  if (simplices_.empty() || facets_.empty()) {
    throw Error(ErrorCode::kInvalidShape, "body needs simplices and facets");
  }
  const int num_vertices = static_cast<int>(vertices_.size());
  for (const VecX& v : vertices_) {
    if (v.size() != n || !v.allFinite()) {
      throw Error(ErrorCode::kInvalidShape, "vertex dimension mismatch");
    }
  }
  auto check_indices = [&](const std::vector<int>& tuple, int expected,
                           const char* what) {
    if (static_cast<int>(tuple.size()) != expected) {
      throw Error(ErrorCode::kInvalidShape,
                  std::string(what) + " has wrong vertex count");
    }
    for (int idx : tuple) {
      if (idx < 0 || idx >= num_vertices) {
        throw Error(ErrorCode::kInvalidShape,
                    std::string(what) + " index out of range");
      }
    }
  };

  const double scale = Scale(vertices_);
  double total_volume = 0.0;
  for (int s = 0; s < static_cast<int>(simplices_.size()); ++s) {
    check_indices(simplices_[s], n + 1, "simplex");
    const double v = SignedSimplexVolume(s);
    if (!(std::abs(v) > 1e-14 * std::pow(scale, n))) {
      throw Error(ErrorCode::kDegenerate,
                  "simplex " + std::to_string(s) + " has zero volume");
    }
    total_volume += v;
  }
  if (!(total_volume > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "signed volume is not positive");
  }

  // Boundary of the facet chain must vanish: every ridge cancels.
  std::map<std::vector<int>, int> ridges;
  double cone_volume = 0.0;
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f) {
    check_indices(facets_[f], n, "facet");
    if (!(FacetMeasure(f) > 1e-14 * std::pow(scale, n - 1))) {
      throw Error(ErrorCode::kDegenerate,
                  "facet " + std::to_string(f) + " has zero measure");
    }
    for (int i = 0; i < n; ++i) {
      std::vector<int> ridge;
      for (int j = 0; j < n; ++j) {
        if (j != i) ridge.push_back(facets_[f][j]);
      }
      const int sign = SortWithParity(ridge) * ((i % 2 == 0) ? 1 : -1);
      ridges[ridge] += sign;
    }
    cone_volume += OrientationAbout(vertices_, facets_[f], VecX::Zero(n));
  }
  for (const auto& [ridge, count] : ridges) {
    if (count != 0) {
      throw Error(ErrorCode::kInconsistentOrientation,
                  "facets do not form a closed oriented boundary");
    }
  }
  cone_volume /= Factorial(n);
  if (std::abs(cone_volume - total_volume) > 1e-9 * total_volume) {
    if (std::abs(cone_volume + total_volume) <= 1e-9 * total_volume) {
      throw Error(ErrorCode::kInconsistentOrientation,
                  "facets are oriented inward");
    }
    throw Error(ErrorCode::kInconsistentOrientation,
                "facets do not bound the simplices");
  }
}

SimplicialBody SimplicialBody::FromSimplices(
    int dimension, std::vector<VecX> vertices,
    std::vector<std::vector<int>> simplices) {
  const int n = dimension;
  struct Entry {
    int count = 0;
    int order = 0;
    std::vector<int> facet;
  };
  std::map<std::vector<int>, Entry> faces;
  int order = 0;
  for (auto& simplex : simplices) {
    if (static_cast<int>(simplex.size()) != n + 1) {
      throw Error(ErrorCode::kInvalidShape, "simplex has wrong vertex count");
    }
    for (int idx : simplex) {
      if (idx < 0 || idx >= static_cast<int>(vertices.size())) {
        throw Error(ErrorCode::kInvalidShape, "simplex index out of range");
      }
    }
    MatX edges(n, n);
    for (int j = 0; j < n; ++j) {
      edges.col(j) = vertices[simplex[j + 1]] - vertices[simplex[0]];
    }
    if (edges.determinant() < 0.0) std::swap(simplex[0], simplex[1]);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> facet;
      for (int j = 0; j <= n; ++j) {
        if (j != i) facet.push_back(simplex[j]);
      }
      if (OrientationAbout(vertices, facet, vertices[simplex[i]]) < 0.0) {
        std::swap(facet[0], facet[1]);
      }
      std::vector<int> key = facet;
      std::sort(key.begin(), key.end());
      Entry& entry = faces[key];
      if (entry.count++ == 0) {
        entry.order = order++;
        entry.facet = facet;
      }
    }
  }
  std::vector<const Entry*> boundary;
  for (const auto& [key, entry] : faces) {
    if (entry.count == 1) boundary.push_back(&entry);
  }
  std::sort(boundary.begin(), boundary.end(),
            [](const Entry* a, const Entry* b) { return a->order < b->order; });
  std::vector<std::vector<int>> facets;
  facets.reserve(boundary.size());
  for (const Entry* e : boundary) facets.push_back(e->facet);
  return SimplicialBody(dimension, std::move(vertices), std::move(simplices),
                        std::move(facets));
}

double SimplicialBody::SignedSimplexVolume(int simplex) const {
  const auto& s = simplices_[simplex];
  MatX edges(dimension_, dimension_);
  for (int j = 0; j < dimension_; ++j) {
    edges.col(j) = vertices_[s[j + 1]] - vertices_[s[0]];
  }
  return edges.determinant() / Factorial(dimension_);
}

double SimplicialBody::FacetMeasure(int facet) const {
  const auto& f = facets_[facet];
  MatX edges(dimension_, dimension_ - 1);
  for (int j = 0; j + 1 < dimension_; ++j) {
    edges.col(j) = vertices_[f[j + 1]] - vertices_[f[0]];
  }
  const double gram = (edges.transpose() * edges).determinant();
  return std::sqrt(std::max(gram, 0.0)) / Factorial(dimension_ - 1);
}

VecX SimplicialBody::FacetNormal(int facet) const {
  // det[w_0 - c, E] = g . (w_0 - c) where g is the first-column cofactor
  // vector of [., E] with E the edge matrix.
  const auto& f = facets_[facet];
  const int n = dimension_;
  MatX edges(n, n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    edges.col(j) = vertices_[f[j + 1]] - vertices_[f[0]];
  }
  VecX g(n);
  for (int row = 0; row < n; ++row) {
    MatX minor(n - 1, n - 1);
    for (int r = 0, mr = 0; r < n; ++r) {
      if (r == row) continue;
      minor.row(mr++) = edges.row(r);
    }
    const double det = (n == 1) ? 1.0 : minor.determinant();
    g(row) = (row % 2 == 0) ? det : -det;
  }
  return g.normalized();
}

bool SimplicialBody::IsConvex() const {
  const double tol = 1e-12 * Scale(vertices_);
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f) {
    const VecX normal = FacetNormal(f);
    const VecX& anchor = vertices_[facets_[f][0]];
    for (const VecX& v : vertices_) {
      if (normal.dot(v - anchor) > tol) return false;
    }
  }
  return true;
}

RawMoments SimplicialRawMoments(const SimplicialBody& body,
                                bool with_boundary) {
  const int n = body.dimension();
  RawMoments raw = RawMoments::Zero(n, with_boundary);
  const auto& vertices = body.vertices();
  std::vector<VecX> points;
  for (int s = 0; s < static_cast<int>(body.simplices().size()); ++s) {
    points.clear();
    for (int idx : body.simplices()[s]) points.push_back(vertices[idx]);
    const double v = body.SignedSimplexVolume(s);
    raw.volume += v;
    AccumulateSimplex(points, v, raw.first, raw.second);
  }
  if (with_boundary) {
    for (int f = 0; f < static_cast<int>(body.facets().size()); ++f) {
      points.clear();
      for (int idx : body.facets()[f]) points.push_back(vertices[idx]);
      const double a = body.FacetMeasure(f);
      raw.surface += a;
      AccumulateSimplex(points, a, raw.boundary_first, raw.boundary_second);
    }
  }
  return raw;
}

MomentSummary SimplicialMoments(const SimplicialBody& body) {
  return Summarize(SimplicialRawMoments(body, /*with_boundary=*/true));
}

SimplicialBody KuhnCube(int dimension, double lo, double hi) {
  const int n = dimension;
  std::vector<VecX> vertices;
  for (int mask = 0; mask < (1 << n); ++mask) {
    VecX v(n);
    for (int k = 0; k < n; ++k) v(k) = (mask >> k & 1) ? hi : lo;
    vertices.push_back(v);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> simplices;
  do {
    std::vector<int> simplex = {0};
    int mask = 0;
    for (int axis : perm) {
      mask |= 1 << axis;
      simplex.push_back(mask);
    }
    simplices.push_back(simplex);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SimplicialBody::FromSimplices(n, std::move(vertices),
                                       std::move(simplices));
}

SimplicialBody StandardSimplex(int dimension) {
  std::vector<VecX> vertices = {VecX::Zero(dimension)};
  std::vector<int> simplex = {0};
  for (int k = 0; k < dimension; ++k) {
    vertices.push_back(VecX::Unit(dimension, k));
    simplex.push_back(k + 1);
  }
  return SimplicialBody::FromSimplices(dimension, std::move(vertices),
                                       {simplex});
}

}  // namespace isoinertia
