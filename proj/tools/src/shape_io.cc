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

#include "isoinertia/tools/shape_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "isoinertia/error.h"

namespace isoinertia::tools {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kInvalidShape, message);
}

const json& Field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) Fail(std::string("missing field '") + key + "'");
  return *it;
}

double Number(const json& value, const char* what) {
  if (!value.is_number()) Fail(std::string(what) + " must be a number");
  return value.get<double>();
}

VecX Vector(const json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  VecX v(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) v(i) = Number(value[i], what);
  return v;
}

std::vector<VecX> Points(const json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<VecX> points;
  for (const json& p : value) points.push_back(Vector(p, what));
  return points;
}

std::vector<std::vector<int>> IndexLists(const json& value, const char* what) {
  if (!value.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<std::vector<int>> lists;
  for (const json& list : value) {
    if (!list.is_array()) Fail(std::string(what) + " entries must be arrays");
    std::vector<int> indices;
    for (const json& i : list) {
      if (!i.is_number_integer()) {
        Fail(std::string(what) + " indices must be integers");
      }
      indices.push_back(i.get<int>());
    }
    lists.push_back(std::move(indices));
  }
  return lists;
}

json VectorJson(const VecX& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Shape ParseShape(const json& object) {
  if (!object.is_object()) Fail("shape entry must be an object");
  const auto kind_it = object.find("kind");
  if (kind_it == object.end() || !kind_it->is_string()) {
    Fail("missing field 'kind'");
  }
  const std::string kind = kind_it->get<std::string>();
  if (kind == "polygon") {
    std::vector<Vec2> vertices;
    for (const VecX& p : Points(Field(object, "vertices"), "vertices")) {
      if (p.size() != 2) Fail("polygon vertices must have two coordinates");
      vertices.emplace_back(p(0), p(1));
    }
    Polygon2 polygon(std::move(vertices));
    if (!polygon.IsSimple()) Fail("polygon boundary is not simple");
    return polygon;
  }
  if (kind == "simplicial") {
    const json& dim = Field(object, "dimension");
    if (!dim.is_number_integer()) Fail("dimension must be an integer");
    const int n = dim.get<int>();
    std::vector<VecX> vertices = Points(Field(object, "vertices"), "vertices");
    auto simplices = IndexLists(Field(object, "simplices"), "simplices");
    if (object.contains("facets")) {
      return SimplicialBody(n, std::move(vertices), std::move(simplices),
                            IndexLists(object.at("facets"), "facets"));
    }
    return SimplicialBody::FromSimplices(n, std::move(vertices),
                                         std::move(simplices));
  }
  if (kind == "ellipsoid") {
    return Ellipsoid(Vector(Field(object, "center"), "center"),
                     Vector(Field(object, "semi_axes"), "semi_axes"));
  }
  if (kind == "fourier") {
    FourierBoundary fb;
    fb.a0 = object.contains("a0") ? Number(object.at("a0"), "a0") : 0.0;
    fb.b0 = object.contains("b0") ? Number(object.at("b0"), "b0") : 0.0;
    for (const VecX& m : Points(Field(object, "modes"), "modes")) {
      if (m.size() != 4) Fail("each Fourier mode needs [a, a', b, b']");
      fb.modes.push_back({m(0), m(1), m(2), m(3)});
    }
    if (fb.modes.empty()) Fail("Fourier boundary needs at least one mode");
    const SimplicityReport simple = CheckSimple(fb);
    if (!simple.simple) Fail("Fourier boundary is not a simple closed curve");
    return fb;
  }
  Fail("unknown shape kind '" + kind + "'");
}

void CheckVersion(const json& document) {
  const auto it = document.find("format_version");
  if (it == document.end()) Fail("missing field 'format_version'");
  if (!it->is_number_integer() || it->get<int>() != kShapeFormatVersion) {
    Fail("unsupported format_version " + it->dump());
  }
}

}  // namespace

std::vector<NamedShape> ParseShapeDocument(const json& document) {
  if (!document.is_object()) Fail("shape document must be a JSON object");
  CheckVersion(document);
  std::vector<NamedShape> shapes;
  auto add = [&shapes](const json& entry) {
    std::string name = "shape" + std::to_string(shapes.size());
    if (entry.is_object() && entry.contains("name")) {
      if (!entry.at("name").is_string()) Fail("name must be a string");
      name = entry.at("name").get<std::string>();
    }
    shapes.push_back({std::move(name), ParseShape(entry)});
  };
  if (document.contains("shapes")) {
    const json& list = document.at("shapes");
    if (!list.is_array()) Fail("'shapes' must be an array");
    for (const json& entry : list) add(entry);
  } else {
    add(document);
  }
  return shapes;
}

std::vector<NamedShape> LoadShapeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open shape file " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  json document;
  try {
    document = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    Fail(path + ": " + e.what());
  }
  return ParseShapeDocument(document);
}

json ShapeToJson(const NamedShape& named) {
  json out;
  out["format_version"] = kShapeFormatVersion;
  out["name"] = named.name;
  out["kind"] = std::string(KindName(named.shape));
  std::visit(
      Overloaded{
          [&out](const Polygon2& p) {
            json vertices = json::array();
            for (const Vec2& v : p.vertices()) vertices.push_back({v.x(), v.y()});
            out["vertices"] = std::move(vertices);
          },
          [&out](const SimplicialBody& b) {
            out["dimension"] = b.dimension();
            json vertices = json::array();
            for (const VecX& v : b.vertices()) vertices.push_back(VectorJson(v));
            out["vertices"] = std::move(vertices);
            out["simplices"] = b.simplices();
            out["facets"] = b.facets();
          },
          [&out](const Ellipsoid& e) {
            out["center"] = VectorJson(e.center());
            out["semi_axes"] = VectorJson(e.semi_axes());
          },
          [&out](const FourierBoundary& f) {
            out["a0"] = f.a0;
            out["b0"] = f.b0;
            json modes = json::array();
            for (const FourierMode& m : f.modes) {
              modes.push_back({m.a, m.a_prime, m.b, m.b_prime});
            }
            out["modes"] = std::move(modes);
          }},
      named.shape);
  return out;
}

json ShapesToJson(const std::vector<NamedShape>& shapes) {
  json out;
  out["format_version"] = kShapeFormatVersion;
  json list = json::array();
  for (const NamedShape& s : shapes) {
    json entry = ShapeToJson(s);
    entry.erase("format_version");
    list.push_back(std::move(entry));
  }
  out["shapes"] = std::move(list);
  return out;
}

}  // namespace isoinertia::tools
