#pragma once

// psc-1 interchange format.
//
// A psc-1 document is JSON:
//
//   {
//     "format": "psc-1",
//     "faces":   [ {"id": 0, "sides": 4}, ... ],
//     "gluings": [ {"a": [0, 0], "b": [0, 2], "reversed": true}, ... ]
//   }
//
// Face ids are integers, unique within the document. A slot [face, side]
// names side `side` (zero-based) of the face with that id; sides run
// counterclockwise from corner side to corner side+1. "reversed" defaults to
// true. Slots not mentioned in any gluing are boundary sides.

#include "polysurf/complex.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace polysurf {

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] inline void schema_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::SchemaError, "field '" + field + "': " + what);
}

inline long long require_integer(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) schema_error(field, "expected an integer");
  return j.get<long long>();
}

}  // namespace detail

inline GluingData parse_psc(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                            e.what());
  }
  if (!doc.is_object()) detail::schema_error("<root>", "expected an object");
  if (!doc.contains("format") || doc["format"] != "psc-1") detail::schema_error("format", "must be \"psc-1\"");
  if (!doc.contains("faces") || !doc["faces"].is_array()) detail::schema_error("faces", "expected an array");

  GluingData data;
  std::map<FaceId, int> sides_of;
  const auto& faces = doc["faces"];
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string where = "faces[" + std::to_string(i) + "]";
    const auto& f = faces[i];
    if (!f.is_object()) detail::schema_error(where, "expected an object");
    if (!f.contains("id")) detail::schema_error(where + ".id", "missing");
    if (!f.contains("sides")) detail::schema_error(where + ".sides", "missing");
    FaceId id = detail::require_integer(f["id"], where + ".id");
    long long sides = detail::require_integer(f["sides"], where + ".sides");
    if (sides < 3) detail::schema_error(where + ".sides", "must be >= 3");
    if (!sides_of.emplace(id, static_cast<int>(sides)).second) detail::schema_error(where + ".id", "duplicate face id");
    data.faces.push_back({id, static_cast<int>(sides)});
  }

  if (doc.contains("gluings")) {
    const auto& gl = doc["gluings"];
    if (!gl.is_array()) detail::schema_error("gluings", "expected an array");
    std::set<Slot> used;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const std::string where = "gluings[" + std::to_string(i) + "]";
      const auto& g = gl[i];
      if (!g.is_object()) detail::schema_error(where, "expected an object");
      auto slot = [&](const char* key) {
        const std::string field = where + "." + key;
        if (!g.contains(key)) detail::schema_error(field, "missing");
        const auto& s = g[key];
        if (!s.is_array() || s.size() != 2) detail::schema_error(field, "expected [face, side]");
        FaceId face = detail::require_integer(s[0], field + "[0]");
        long long side = detail::require_integer(s[1], field + "[1]");
        auto it = sides_of.find(face);
        if (it == sides_of.end()) detail::schema_error(field + "[0]", "unknown face id " + std::to_string(face));
        if (side < 0 || side >= it->second)
          detail::schema_error(field + "[1]", "side " + std::to_string(side) + " out of range [0, " +
                                                  std::to_string(it->second - 1) + "]");
        Slot out{face, static_cast<int>(side)};
        if (!used.insert(out).second)
          throw Error(ErrorKind::DuplicateSlot, "field '" + field + "': slot [" + std::to_string(face) + "," +
                                                    std::to_string(side) + "] is already glued");
        return out;
      };
      Gluing gluing;
      gluing.a = slot("a");
      gluing.b = slot("b");
      if (g.contains("reversed")) {
        if (!g["reversed"].is_boolean()) detail::schema_error(where + ".reversed", "expected a boolean");
        gluing.reversed = g["reversed"].get<bool>();
      }
      data.gluings.push_back(gluing);
    }
  }
  return data;
}

/// Canonical text: one face or gluing per line, in the given order.
inline std::string serialize_psc(const GluingData& data) {
  std::ostringstream out;
  out << "{\n  \"format\": \"psc-1\",\n  \"faces\": [";
  for (std::size_t i = 0; i < data.faces.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"id\": " << data.faces[i].id << ", \"sides\": " << data.faces[i].sides << "}";
  }
  out << (data.faces.empty() ? "]" : "\n  ]") << ",\n  \"gluings\": [";
  for (std::size_t i = 0; i < data.gluings.size(); ++i) {
    const auto& g = data.gluings[i];
    out << (i ? ",\n" : "\n") << "    {\"a\": [" << g.a.face << ", " << g.a.side << "], \"b\": [" << g.b.face << ", "
        << g.b.side << "], \"reversed\": " << (g.reversed ? "true" : "false") << "}";
  }
  out << (data.gluings.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GluingData load_psc(const std::string& path) { return parse_psc(read_text_file(path)); }

inline void save_psc(const std::string& path, const GluingData& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_psc(data);
}

/// Same faces and the same set of gluings, ignoring order and the a/b
/// orientation of each pair.
inline bool same_gluing_data(const GluingData& x, const GluingData& y) {
  auto faces = [](const GluingData& d) {
    std::set<std::pair<FaceId, int>> s;
    for (const auto& f : d.faces) s.emplace(f.id, f.sides);
    return s;
  };
  auto pairs = [](const GluingData& d) {
    std::set<std::tuple<Slot, Slot, bool>> s;
    for (const auto& g : d.gluings) s.emplace(std::min(g.a, g.b), std::max(g.a, g.b), g.reversed);
    return s;
  };
  return x.faces.size() == y.faces.size() && x.gluings.size() == y.gluings.size() && faces(x) == faces(y) &&
         pairs(x) == pairs(y);
}

}  // namespace polysurf
