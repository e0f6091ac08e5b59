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

#ifndef ISOINERTIA_TOOLS_SHAPE_IO_H_
#define ISOINERTIA_TOOLS_SHAPE_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isoinertia/shape.h"

namespace isoinertia::tools {

inline constexpr int kShapeFormatVersion = 1;

struct NamedShape {
  std::string name;
  Shape shape;
};

// A shape document is either a single shape
//   {"format_version": 1, "kind": "polygon", "name": "...", ...}
// or a collection {"format_version": 1, "shapes": [ ... ]}. Payloads:
//   polygon     "vertices": [[x, y], ...]
//   simplicial  "dimension", "vertices", "simplices" and optional "facets"
//               (derived from the simplices when absent)
//   ellipsoid   "center", "semi_axes"
//   fourier     "a0", "b0", "modes": [[a_k, a'_k, b_k, b'_k], ...]
// Throws Error(kInvalidShape) for unknown kinds, versions or malformed
// payloads; geometry invariants are checked by the shape constructors.
std::vector<NamedShape> ParseShapeDocument(const nlohmann::json& document);

std::vector<NamedShape> LoadShapeFile(const std::string& path);

nlohmann::json ShapeToJson(const NamedShape& shape);

// Collection document holding every shape.
nlohmann::json ShapesToJson(const std::vector<NamedShape>& shapes);

}  // namespace isoinertia::tools

#endif  // ISOINERTIA_TOOLS_SHAPE_IO_H_
