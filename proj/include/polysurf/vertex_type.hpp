#pragma once

#include "polysurf/error.hpp"

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polysurf {

/// Lexicographically least representative of `tuple` under rotations and
/// reflection. Entries must all be >= 3.
inline std::vector<int> canonical_tuple(std::span<const int> tuple) {
  if (tuple.empty()) throw Error(ErrorKind::BadVertexType, "vertex-type must have degree >= 1");
  for (int k : tuple)
    if (k < 3) throw Error(ErrorKind::BadVertexType, "face size " + std::to_string(k) + " < 3");

  const std::size_t d = tuple.size();
  std::vector<int> best(tuple.begin(), tuple.end());
  std::vector<int> candidate(d);
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t shift = 0; shift < d; ++shift) {
      for (std::size_t i = 0; i < d; ++i) {
        std::size_t j = direction == 0 ? (shift + i) % d : (shift + d - i) % d;
        candidate[i] = tuple[j];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

/// Cyclic tuple [k1,...,kd] of face sizes around a vertex, stored in
/// dihedral-canonical form so that equality is type equality.
class VertexType {
 public:
  VertexType() = default;
  explicit VertexType(std::span<const int> tuple) : tuple_(canonical_tuple(tuple)) {}
  VertexType(std::initializer_list<int> tuple)
      : VertexType(std::span<const int>(tuple.begin(), tuple.size())) {}

  const std::vector<int>& tuple() const& noexcept { return tuple_; }
  std::vector<int> tuple() && { return std::move(tuple_); }  // no dangling on temporaries
  int degree() const noexcept { return static_cast<int>(tuple_.size()); }
  int max_sides() const { return *std::max_element(tuple_.begin(), tuple_.end()); }

  auto operator<=>(const VertexType&) const = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < tuple_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(tuple_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<int> tuple_;
};

inline VertexType canonicalize(std::span<const int> tuple) { return VertexType(tuple); }

/// Parses "5,5,5" or "[5,5,5]".
inline VertexType parse_vertex_type(std::string_view text) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadVertexType, "not an integer: '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == '[' || c == ']' || c == ' ') continue;
    if (c == ',') {
      flush();
      continue;
    }
    token += c;
  }
  flush();
  return VertexType(values);
}

}  // namespace polysurf
