#include "arbor/invariants.hpp"

#include <algorithm>
#include <deque>

namespace arbor {

GapSequence::GapSequence(std::vector<int> gaps) {
  if (!gaps.empty()) canon_ = least_rotation(std::move(gaps));
}

std::string GapSequence::str() const { return word_str(canon_); }

std::vector<int> gap_list(const ColorWord& w, Color i) {
  std::vector<int> pos;
  for (size_t k = 0; k < w.size(); ++k)
    if (w[k] == i) pos.push_back(static_cast<int>(k));
  std::vector<int> gaps;
  const int len = static_cast<int>(w.size());
  for (size_t k = 0; k + 1 < pos.size(); ++k) gaps.push_back(pos[k + 1] - pos[k]);
  if (!pos.empty()) gaps.push_back(len - pos.back() + pos.front());
  return gaps;
}

GapSequence i_sequence(const CyclicType& t, Color i) {
  return GapSequence(gap_list(t.letters(), i));
}

int L_m(const CyclicType& t, Color i, int m) {
  auto seq = i_sequence(t, i);
  int mult = static_cast<int>(std::count(seq.gaps().begin(), seq.gaps().end(), m));
  return mult - mult % 2;
}

int L_inf(const CyclicType& t, Color i) {
  auto seq = i_sequence(t, i);
  std::vector<int> gaps = seq.gaps();
  std::sort(gaps.begin(), gaps.end());
  int total = 0;
  for (size_t a = 0; a < gaps.size();) {
    size_t b = a;
    while (b < gaps.size() && gaps[b] == gaps[a]) ++b;
    int mult = static_cast<int>(b - a);
    total += mult - mult % 2;
    a = b;
  }
  return total;
}

LowerBoundCertificate rotation_lower_bound(const CyclicType& t) {
  LowerBoundCertificate best{t, -1, 0, 0, 2};
  ColorWord colors = t.letters();
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  int best_k = 0;
  for (Color i : colors) {
    const int n = static_cast<int>(std::count(t.letters().begin(), t.letters().end(), i));
    const int linf = L_inf(t, i);
    const int k = (n + 6 - linf + 3) / 4;  // ceil((N + 6 - Linf)/4)
    if (best.color < 0 || k > best_k) {
      best_k = k;
      best.color = i;
      best.occurrences = n;
      best.l_inf = linf;
    }
  }
  best.bound = std::max(2, best_k);
  return best;
}

ColorWord gen_tn(int n, int cap) {
  if (n < 2 || n > cap)
    throw Error(Errc::OutOfRange, "t_n defined for 2 <= n <= " + std::to_string(cap));
  ColorWord t = {1, 2, 1, 0, 1, 2, 1, 2, 1, 0};  // t_2
  for (int k = 2; k < n; ++k) {
    // t_{k+1} = (1,2,1,0,(1,2)^{2k-1}, t_k, (1,2)^{2k-1}, 1, 0)
    ColorWord next = {1, 2, 1, 0};
    for (int r = 0; r < 2 * k - 1; ++r) {
      next.push_back(1);
      next.push_back(2);
    }
    next.insert(next.end(), t.begin(), t.end());
    for (int r = 0; r < 2 * k - 1; ++r) {
      next.push_back(1);
      next.push_back(2);
    }
    next.push_back(1);
    next.push_back(0);
    t = std::move(next);
  }
  return t;
}

namespace {

// Palindromic-with-apex shape (c1,c2,...,cr,...,c2): even length, equal
// to its own reversal read cyclically from the first letter.
bool has_apex_shape(const ColorWord& w) {
  const size_t len = w.size();
  if (len < 2 || len % 2 != 0) return false;
  for (size_t i = 1; i < len; ++i)
    if (w[i] != w[len - i]) return false;
  return true;
}

}  // namespace

std::map<Color, ColorWord> ForbiddenConfig::blocks() const {
  return {{0, spur_path0}, {1, axis_path1}, {2, axis_path2}};
}

std::string ForbiddenConfig::str() const {
  return "z=" + std::to_string(z_color) + " block0=" + word_str(spur_path0) +
         " block1=" + (axis_path1.empty() ? "-" : word_str(axis_path1)) +
         " block2=" + (axis_path2.empty() ? "-" : word_str(axis_path2)) +
         " p=" + std::to_string(p) + " q=" + std::to_string(q);
}

CyclicType substitute_blocks(const CyclicType& t, const std::map<Color, ColorWord>& blocks) {
  Color shared_first = -1;
  for (const auto& [b, img] : blocks) {
    if (img.empty()) continue;
    if (!has_apex_shape(img))
      throw Error(Errc::ShapeViolation,
                  "block " + std::to_string(b) + " image " + word_str(img) +
                      " is not palindromic-with-apex of even length");
    if (shared_first < 0) shared_first = img[0];
    if (img[0] != shared_first)
      throw Error(Errc::ShapeViolation, "block images do not share a first color");
  }
  ColorWord out;
  for (Color b : t.letters()) {
    auto it = blocks.find(b);
    if (it == blocks.end())
      throw Error(Errc::MissingBlock, "no image for block " + std::to_string(b));
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  if (out.empty()) throw Error(Errc::EmptyWord, "all block images are empty");
  return make_type(out);
}

namespace {

struct ConfigSearch {
  const Code& code;
  int cap;
  long budget = 500000;
  Color z = -1;
  std::optional<ForbiddenConfig> found;

  bool spend() { return --budget >= 0; }

  // Shortest realizable spur in G(a) from axis color c (at walk position
  // with the given required axis-neighbor multiset) to z, entering z
  // through a color j with a(z,j) >= 2. Returns the vertex colors
  // (c,...,z) or empty.
  ColorWord find_spur(Color c, Color axis_nb1, Color axis_nb2) {
    const int nc = code.num_colors();
    auto capacity_at_t = [&](Color d) {
      std::uint32_t need = 1;
      if (d == axis_nb1) ++need;
      if (d == axis_nb2) ++need;
      return code.degree(c, d) >= need;
    };
    // BFS over (prev, cur) edge states.
    std::vector<int> parent(static_cast<size_t>(nc) * nc, -2);  // -2 unseen
    std::deque<std::pair<Color, Color>> queue;
    auto idx = [&](Color prev, Color cur) { return static_cast<size_t>(prev) * nc + cur; };
    for (Color d = 0; d < nc; ++d) {
      if (d == z) {
        if (code.degree(z, c) >= 2 && capacity_at_t(z)) return {c, z};
        continue;
      }
      if (code.degree(c, d) == 0 || !capacity_at_t(d)) continue;
      parent[idx(c, d)] = -1;  // root step
      queue.emplace_back(c, d);
    }
    while (!queue.empty()) {
      if (!spend()) return {};
      auto [prev, cur] = queue.front();
      queue.pop_front();
      for (Color d = 0; d < nc; ++d) {
        if (code.degree(cur, d) == 0) continue;
        // interior capacity at cur with neighbors prev and d
        if (d == prev && code.degree(cur, d) < 2) continue;
        if (d == z) {
          if (code.degree(z, cur) < 2) continue;
          ColorWord spur{z, cur};
          Color a = prev, b = cur;
          while (parent[idx(a, b)] != -1) {
            Color pa = static_cast<Color>(parent[idx(a, b)]);
            spur.push_back(a);
            b = a;
            a = pa;
          }
          spur.push_back(c);
          std::reverse(spur.begin(), spur.end());
          return spur;
        }
        if (parent[idx(cur, d)] != -2) continue;
        parent[idx(cur, d)] = prev;
        queue.emplace_back(cur, d);
      }
    }
    return {};
  }

  // Try every anchor position along the axis walk.
  bool try_walk(const std::vector<Color>& walk) {
    const int len = static_cast<int>(walk.size());
    for (int s = 0; s < len; ++s) {
      Color nb1 = s == 0 ? walk[1] : walk[s - 1];
      Color nb2 = s == len - 1 ? walk[len - 2] : walk[s + 1];
      ColorWord spur = find_spur(walk[s], nb1, nb2);
      if (spur.empty()) continue;
      ForbiddenConfig cfg;
      cfg.z_color = z;
      cfg.spur_path0 = rot_rot_word(spur);
      if (s + 1 < len) cfg.axis_path1 = rot_rot_word(ColorWord(walk.begin() + s, walk.end()));
      if (s > 0) {
        ColorWord back(walk.rend() - s - 1, walk.rend());
        cfg.axis_path2 = rot_rot_word(back);
      }
      cfg.p = static_cast<int>(cfg.spur_path0.size() + cfg.axis_path1.size());
      cfg.q = static_cast<int>(cfg.axis_path1.size() + cfg.axis_path2.size());
      found = cfg;
      return true;
    }
    return false;
  }

  // DFS over capacity-feasible axis walks avoiding z.
  bool extend(std::vector<Color>& walk) {
    if (!spend()) return false;
    const int nc = code.num_colors();
    Color last = walk.back();
    // close the walk here if the mirrored-end condition holds
    if (walk.size() >= 2 && code.degree(last, walk[walk.size() - 2]) >= 2 &&
        code.total_degree(last) >= 3) {
      if (try_walk(walk)) return true;
    }
    if (static_cast<int>(walk.size()) >= cap) return false;
    for (Color d = 0; d < nc; ++d) {
      if (d == z || code.degree(last, d) == 0) continue;
      if (walk.size() >= 2) {
        Color prev = walk[walk.size() - 2];
        // interior capacity at `last` with neighbors prev and d
        if (d == prev && code.degree(last, d) < 2) continue;
      }
      walk.push_back(d);
      if (extend(walk)) return true;
      walk.pop_back();
    }
    return false;
  }

  std::optional<ForbiddenConfig> run() {
    const int nc = code.num_colors();
    // candidate z colors: some a(z,j) >= 2
    for (z = 0; z < nc; ++z) {
      bool heavy = false;
      for (Color j = 0; j < nc; ++j) heavy = heavy || (j != z && code.degree(z, j) >= 2);
      if (!heavy) continue;
      for (Color start = 0; start < nc; ++start) {
        if (start == z || code.total_degree(start) < 3) continue;
        for (Color second = 0; second < nc; ++second) {
          if (second == z || code.degree(start, second) < 2) continue;
          std::vector<Color> walk{start, second};
          if (extend(walk)) return found;
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<ForbiddenConfig> find_forbidden_config(const Code& c, int walk_cap) {
  ConfigSearch search{c, walk_cap};
  return search.run();
}

std::vector<LowerBoundCertificate> unboundedness_certificates(const ForbiddenConfig& cfg,
                                                              int up_to) {
  if (up_to < 2) throw Error(Errc::OutOfRange, "up_to must be >= 2");
  std::vector<LowerBoundCertificate> out;
  auto blocks = cfg.blocks();
  for (int n = 2; n <= up_to; ++n)
    out.push_back(rotation_lower_bound(substitute_blocks(make_type(gen_tn(n)), blocks)));
  return out;
}

const char* CodeReport::verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AlmostBiregular: return "AlmostBiregular";
    case Verdict::NotBoundedlySimpleWitness: return "NotBoundedlySimpleWitness";
    case Verdict::Degenerate: return "Degenerate";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

std::string CodeReport::to_text() const {
  std::string out = std::string("verdict: ") + verdict_name(verdict) + "\n";
  switch (verdict) {
    case Verdict::AlmostBiregular:
      out += "n: " + std::to_string(n) + "\n";
      out += "m: " + std::to_string(m) + "\n";
      out += "k: " + std::to_string(k) + "\n";
      out += "constant: " + std::to_string(bounded_constant_from_K(2)) + "\n";
      break;
    case Verdict::NotBoundedlySimpleWitness:
      out += "z: " + std::to_string(witness->z_color) + "\n";
      out += "block0: " + word_str(witness->spur_path0) + "\n";
      out += "block1: " + (witness->axis_path1.empty() ? "-" : word_str(witness->axis_path1)) + "\n";
      out += "block2: " + (witness->axis_path2.empty() ? "-" : word_str(witness->axis_path2)) + "\n";
      out += "p: " + std::to_string(witness->p) + "\n";
      out += "q: " + std::to_string(witness->q) + "\n";
      break;
    case Verdict::Degenerate:
    case Verdict::Indeterminate:
      out += "reason: " + reason + "\n";
      break;
  }
  return out;
}

CodeReport classify(const Code& c, int walk_cap) {
  CodeReport report;
  if (c.ramification_colors().empty()) {
    report.verdict = CodeReport::Verdict::Degenerate;
    report.reason = "no ramification point";
    return report;
  }
  if (auto ab = c.almost_biregular()) {
    report.verdict = CodeReport::Verdict::AlmostBiregular;
    report.n = ab->n;
    report.m = ab->m;
    report.k = ab->k;
    return report;
  }
  if (auto cfg = find_forbidden_config(c, walk_cap)) {
    report.verdict = CodeReport::Verdict::NotBoundedlySimpleWitness;
    report.witness = std::move(cfg);
    return report;
  }
  report.verdict = CodeReport::Verdict::Indeterminate;
  bool has_one = false;
  for (Color i = 0; i < c.num_colors(); ++i)
    for (Color j = 0; j < c.num_colors(); ++j) has_one = has_one || c.degree(i, j) == 1;
  if (has_one)
    report.reason = "invariant proper subtree not excluded (code contains degree-1 entries)";
  else
    report.reason =
        "not almost-biregular and no forbidden configuration found within walk cap " +
        std::to_string(walk_cap);
  return report;
}

}  // namespace arbor
