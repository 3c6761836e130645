#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arbor/code.hpp"

namespace arbor {

/// Finite nonempty sequence of colors (the color of a path).
using ColorWord = std::vector<Color>;

std::string word_str(const ColorWord& w);
ColorWord parse_word(const std::string& csv);

/// Least cyclic rotation of a word (Booth's algorithm).
ColorWord least_rotation(ColorWord w);

/// A translation type: the class of a nonempty color word under cyclic
/// shift, stored as its lexicographically least rotation.
class CyclicType {
 public:
  explicit CyclicType(ColorWord w);

  const ColorWord& letters() const { return canon_; }
  std::size_t length() const { return canon_.size(); }
  std::string str() const { return word_str(canon_); }

  bool contains(Color c) const;
  /// All distinct rotations whose first letter is `anchor`.
  std::vector<ColorWord> readings_from(Color anchor) const;

  friend auto operator<=>(const CyclicType&, const CyclicType&) = default;

 private:
  ColorWord canon_;
};

CyclicType make_type(const ColorWord& w);

std::size_t type_length(const CyclicType& t);

/// Word of the type of a composition of two rotations whose fixed points
/// are joined by a path of color (i1,...,in): the palindromic doubling
/// (i1,...,i_{n-1},i_n,i_{n-1},...,i2). Not canonicalized.
ColorWord rot_rot_word(const ColorWord& path);

CyclicType compose_rot_rot(const ColorWord& path);

/// Off-axis rotation-translation composition for one concrete reading of
/// the translation type starting at the spur's base color.
CyclicType compose_rot_trans_word(const ColorWord& spur, const ColorWord& anchored_type);

/// Union over every reading of `t` anchored at `anchor` (= spur[0]).
/// Sorted, deduplicated.
std::vector<CyclicType> compose_rot_trans_offaxis(const ColorWord& spur, const CyclicType& t,
                                                  Color anchor);

/// Result of composing a translation with a rotation fixing an axis
/// vertex: either a translation of a folded subtype, or a rotation.
struct OnAxisOutcome {
  enum class Kind { Translation, RotationFixing };
  Kind kind = Kind::Translation;
  std::optional<CyclicType> type;   // set for Translation
  Color fixed_color = -1;           // set for RotationFixing

  static OnAxisOutcome translation(CyclicType t);
  static OnAxisOutcome rotation_fixing(Color c);

  friend auto operator<=>(const OnAxisOutcome&, const OnAxisOutcome&) = default;
  std::string str() const;
};

/// Outcomes for one concrete reading (i1,j2,...,jm) of the type from the
/// fixed axis vertex: every fold depth consistent with the palindromic
/// matching j2=jm, j3=j_{m-1}, ..., plus the full-fold rotation when the
/// length is even.
std::vector<OnAxisOutcome> onaxis_outcomes_word(const ColorWord& anchored_type);

/// Union over all readings of `t` from `anchor`. Sorted, deduplicated.
std::vector<OnAxisOutcome> onaxis_outcomes(const CyclicType& t, Color anchor);

/// If some rotation of `t` has the two-rotation shape
/// (i1,...,i_{n-1},i_n,i_{n-1},...,i2), returns the connecting path
/// (i1,...,in).
std::optional<ColorWord> is_two_rotation_type(const CyclicType& t);

}  // namespace arbor
