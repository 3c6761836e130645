#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/typecalc.hpp"

namespace arbor {

/// Cyclic sequence of distances between consecutive occurrences of one
/// color in a type, stored as its least rotation. Empty when the color
/// does not occur.
class GapSequence {
 public:
  GapSequence() = default;
  explicit GapSequence(std::vector<int> gaps);

  const std::vector<int>& gaps() const { return canon_; }
  bool empty() const { return canon_.empty(); }
  std::size_t size() const { return canon_.size(); }
  std::string str() const;

  friend auto operator<=>(const GapSequence&, const GapSequence&) = default;

 private:
  std::vector<int> canon_;
};

GapSequence i_sequence(const CyclicType& t, Color i);

/// Linear gap list read from the first occurrence of `i` in `w` (not
/// canonicalized); used for the shape analysis of composition tables.
std::vector<int> gap_list(const ColorWord& w, Color i);

/// Greatest even number <= multiplicity of gap value m in the
/// i-sequence of t.
int L_m(const CyclicType& t, Color i, int m);

int L_inf(const CyclicType& t, Color i);

struct LowerBoundCertificate {
  CyclicType type;
  Color color = -1;   // the color attaining the bound
  int occurrences = 0;
  int l_inf = 0;
  int bound = 2;      // minimum number of rotations in any factorization
};

/// For each color i with N_i occurrences, any K-rotation factorization
/// satisfies L_inf(t,i) >= N_i - 4K + 6; the certificate reports
/// max(2, max_i ceil((N_i + 6 - L_inf)/4)).
LowerBoundCertificate rotation_lower_bound(const CyclicType& t);

/// The witness family over the block alphabet {0,1,2}:
///   t_2     = (1,2,1,0,(1,2)^2,1,0)
///   t_{n+1} = (1,2,1,0,(1,2)^{2n-1}, t_n, (1,2)^{2n-1}, 1, 0)
ColorWord gen_tn(int n, int cap = 64);

/// A code configuration that refutes bounded simplicity: a color z with
/// a(z,j) >= 2 hanging off a two-rotation translation axis that avoids
/// color z.
struct ForbiddenConfig {
  ColorWord axis_path1;  // block 1: colors from a^{-1}(t) to t, through x
  ColorWord axis_path2;  // block 2: colors from t to b(t), through y
  ColorWord spur_path0;  // block 0: colors from t to g(t), through z
  Color z_color = -1;
  int p = 0;  // length of path 01 (even, >= 2)
  int q = 0;  // length of path 12 (even, >= 2)

  std::map<Color, ColorWord> blocks() const;
  std::string str() const;
};

/// Replaces every block letter of `t` by its image word. Every nonempty
/// image must have the palindromic-with-apex shape (c1,...,cr,...,c2)
/// and all images must share the first color.
CyclicType substitute_blocks(const CyclicType& t, const std::map<Color, ColorWord>& blocks);

std::optional<ForbiddenConfig> find_forbidden_config(const Code& c, int walk_cap = 12);

/// Certificates for substitute_blocks(gen_tn(n), cfg) for n = 2..up_to;
/// the bounds grow without limit, so no uniform rotation count exists.
std::vector<LowerBoundCertificate> unboundedness_certificates(const ForbiddenConfig& cfg,
                                                              int up_to);

/// Classification verdict for a code.
struct CodeReport {
  enum class Verdict { AlmostBiregular, NotBoundedlySimpleWitness, Degenerate, Indeterminate };
  Verdict verdict = Verdict::Indeterminate;
  // AlmostBiregular payload
  std::uint32_t n = 0, m = 0;
  int k = 0;
  std::optional<ForbiddenConfig> witness;
  std::string reason;

  static const char* verdict_name(Verdict v);
  /// `verdict: <tag>` followed by `key: value` certificate lines.
  std::string to_text() const;
};

CodeReport classify(const Code& c, int walk_cap = 12);

}  // namespace arbor
