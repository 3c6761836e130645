#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

/// Index into the color alphabet of a Code.
using Color = int;

struct DegreeEntry {
  Color i = 0;
  Color j = 0;
  std::uint32_t degree = 0;
};

/// A colored-tree code: a finite color alphabet I together with a degree
/// matrix a(i,j) giving, for every vertex of color i, the number of its
/// neighbors of color j. Valid codes satisfy zero-symmetry
/// (a(i,j)=0 iff a(j,i)=0) and connectedness of the color graph G(a).
class Code {
 public:
  static constexpr std::uint32_t kDefaultDegreeCap = 255;
  static constexpr int kMaxColors = 16;

  /// Validates raw input and builds a Code. Throws Error with
  /// EmptyAlphabet, TooManyColors, DegreeLimit, ZeroAsymmetry or
  /// DisconnectedColorGraph on violation. Entries for the same (i,j)
  /// accumulate; omitted pairs are 0.
  static Code validate(std::vector<std::string> names,
                       const std::vector<DegreeEntry>& entries,
                       std::uint32_t degree_cap = kDefaultDegreeCap);

  /// Text format: first nonempty line `colors: c0 c1 ...`, then
  /// `<ci> <cj> <degree>` triples. `#` starts a comment line.
  static Code parse(std::istream& in, std::uint32_t degree_cap = kDefaultDegreeCap);
  static Code load(const std::string& path, std::uint32_t degree_cap = kDefaultDegreeCap);

  int num_colors() const { return static_cast<int>(names_.size()); }
  const std::string& name(Color i) const { return names_.at(static_cast<size_t>(i)); }
  std::optional<Color> color_of(std::string_view name) const;

  std::uint32_t degree(Color i, Color j) const {
    return deg_[static_cast<size_t>(i) * names_.size() + static_cast<size_t>(j)];
  }
  std::uint32_t total_degree(Color i) const;

  /// Colors i with total degree >= 3.
  std::vector<Color> ramification_colors() const;

  struct Biregular {
    std::uint32_t n = 0, m = 0;
  };
  /// Two colors, zero diagonal, cross degrees n,m >= 3.
  std::optional<Biregular> biregular() const;

  struct AlmostBiregular {
    std::uint32_t n = 0, m = 0;
    /// Edges on the subdivision path between the two ramification
    /// colors; k=1 means no subdivision (plain biregular).
    int k = 0;
    /// Colors along the path, endpoint to endpoint (k+1 entries).
    std::vector<Color> path;
  };
  /// Matches a subdivided-biregular code: the color graph is a path,
  /// endpoint degrees n,m >= 3 and every interior degree equal to 1.
  std::optional<AlmostBiregular> almost_biregular() const;

  bool operator==(const Code&) const = default;

 private:
  Code() = default;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> deg_;
};

/// 8*K^2: bound on the conjugacy-width of G+ when every translation is a
/// product of K rotations. K=2 gives the constant 32.
int bounded_constant_from_K(int k_rotations);

}  // namespace arbor
