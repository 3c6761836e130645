#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arbor/typecalc.hpp"

namespace arbor {

/// Path of (edge color, sibling index) steps from the root of a Ball.
struct VertexAddr {
  std::vector<std::pair<Color, int>> steps;

  std::string str() const;           // "/" or "/c0.i0/c1.i1/..."
  static VertexAddr parse(const std::string& s);
  friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
};

/// Explicit radius-r neighborhood of a root vertex in the colored tree
/// defined by a code. Vertex ids are assigned breadth first with
/// children ordered color-major, sibling-index-minor, so ids and
/// addresses are stable across runs.
class Ball {
 public:
  static constexpr std::uint64_t kDefaultBudget = 1'000'000;

  Ball(Code code, Color root_color, int radius, std::uint64_t vertex_budget = kDefaultBudget);

  const Code& code() const { return code_; }
  Color root_color() const { return root_color_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(color_.size()); }

  Color color(int v) const { return color_[v]; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  /// Children in address order.
  const std::vector<int>& children(int v) const { return children_[v]; }
  std::vector<int> neighbors(int v) const;
  /// Number of materialized neighbors equals the code degree exactly for
  /// every vertex with depth < radius.
  bool is_interior(int v) const { return depth_[v] < radius_; }

  int dist(int u, int v) const;
  /// Vertices from u to v inclusive.
  std::vector<int> path(int u, int v) const;

  VertexAddr addr(int v) const;
  std::optional<int> find(const VertexAddr& a) const;

 private:
  Code code_;
  Color root_color_;
  int radius_;
  std::vector<Color> color_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> sib_index_;  // index within the same-color block under the parent
  std::vector<std::vector<int>> children_;
};

/// Color- and edge-preserving partial bijection of a ball, valid on the
/// root-centered sub-ball of radius r_valid.
struct BallAutomorphism {
  const Ball* ball = nullptr;
  std::vector<int> img;  // -1 where the image leaves the ball
  int r_valid = -1;

  int operator()(int v) const { return img[v]; }
  bool defined(int v) const { return img[v] >= 0; }
  /// `<addr> -> <addr>` lines for the valid sub-ball, in id order.
  std::string serialize() const;
};

/// Wraps an image table: computes the largest root radius on which the
/// map is total, injective, color-preserving and edge-preserving.
BallAutomorphism finish_automorphism(const Ball& b, std::vector<int> img);

BallAutomorphism identity_automorphism(const Ball& b);

/// Uniform random element of the stabilizer of `fixed`: independently
/// permutes same-color sibling blocks at every vertex, radiating out
/// from `fixed`. Deterministic for a fixed seed.
BallAutomorphism random_rotation(const Ball& b, int fixed, std::uint64_t seed);

BallAutomorphism compose(const BallAutomorphism& a, const BallAutomorphism& b);
BallAutomorphism inverse(const BallAutomorphism& a);

struct AutClass {
  enum class Kind { Rotation, Symmetry, Translation };
  Kind kind = Kind::Rotation;
  std::vector<int> fixed;            // Rotation: all fixed vertices in the valid domain
  std::pair<int, int> edge{-1, -1};  // Symmetry: the swapped edge
  int length = 0;                    // Translation
  std::vector<int> axis_segment;     // Translation: one axis period plus one vertex
};

/// Rotation / symmetry / translation trichotomy. Translations are
/// certified by the two-sided shortest-path criterion; when the valid
/// sub-ball cannot certify an answer, throws InsufficientRadius.
AutClass classify(const BallAutomorphism& a);

/// Colors along one axis period of a translation.
CyclicType empirical_type(const BallAutomorphism& a);

std::vector<int> fixed_tree(const BallAutomorphism& a);

/// Tree Helly property: pairwise-intersecting subtrees have a common
/// vertex; returns one, or nullopt when some pair is disjoint.
std::optional<int> helly_common_vertex(const Ball& b, const std::vector<std::vector<int>>& trees);

/// Vertex of `path` closest to v.
int project(const Ball& b, int v, const std::vector<int>& path);

/// Splits a translation in a biregular ball into two rotations
/// (axial reflections corrected on the axis) whose composition equals it
/// on the shrunken common domain.
std::pair<BallAutomorphism, BallAutomorphism> factor_translation_biregular(
    const BallAutomorphism& a);

/// True iff the rotation fixes a vertex of ramification color.
bool rotation_fixes_ramification(const BallAutomorphism& a);

/// True iff dist(v, a(v)) is even for every v in the valid domain.
bool parity_check(const BallAutomorphism& a);

}  // namespace arbor
