#include "arbor/typecalc.hpp"

#include <algorithm>
#include <sstream>

namespace arbor {

std::string word_str(const ColorWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

ColorWord parse_word(const std::string& csv) {
  ColorWord w;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw Error(Errc::EmptyWord, "empty letter in '" + csv + "'");
    w.push_back(std::stoi(tok));
  }
  if (w.empty()) throw Error(Errc::EmptyWord, "empty color word");
  return w;
}

ColorWord least_rotation(ColorWord w) {
  // Booth's least-rotation algorithm, O(n).
  const size_t n = w.size();
  if (n <= 1) return w;
  std::vector<long> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && w[j % n] != w[(k + static_cast<size_t>(i) + 1) % n]) {
      if (w[j % n] < w[(k + static_cast<size_t>(i) + 1) % n]) k = j - static_cast<size_t>(i) - 1;
      i = f[static_cast<size_t>(i)];
    }
    if (i == -1 && w[j % n] != w[k % n]) {
      if (w[j % n] < w[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  std::rotate(w.begin(), w.begin() + static_cast<long>(k % n), w.end());
  return w;
}

CyclicType::CyclicType(ColorWord w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "a type needs at least one letter");
  canon_ = least_rotation(std::move(w));
}

bool CyclicType::contains(Color c) const {
  return std::find(canon_.begin(), canon_.end(), c) != canon_.end();
}

std::vector<ColorWord> CyclicType::readings_from(Color anchor) const {
  std::vector<ColorWord> out;
  const size_t n = canon_.size();
  for (size_t s = 0; s < n; ++s) {
    if (canon_[s] != anchor) continue;
    ColorWord r(n);
    for (size_t i = 0; i < n; ++i) r[i] = canon_[(s + i) % n];
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CyclicType make_type(const ColorWord& w) { return CyclicType(w); }

std::size_t type_length(const CyclicType& t) { return t.length(); }

ColorWord rot_rot_word(const ColorWord& path) {
  if (path.size() < 2)
    throw Error(Errc::PathTooShort, "two-rotation path needs length >= 2");
  ColorWord w(path);
  for (size_t i = path.size() - 2; i >= 1; --i) w.push_back(path[i]);
  return w;
}

CyclicType compose_rot_rot(const ColorWord& path) { return make_type(rot_rot_word(path)); }

CyclicType compose_rot_trans_word(const ColorWord& spur, const ColorWord& anchored_type) {
  if (spur.size() < 2) throw Error(Errc::SpurTooShort, "spur needs length >= 2");
  if (anchored_type.empty()) throw Error(Errc::EmptyWord, "empty translation type");
  if (anchored_type[0] != spur[0])
    throw Error(Errc::AnchorAbsent, "type reading does not start at the spur base color");
  ColorWord w = rot_rot_word(spur);
  w.insert(w.end(), anchored_type.begin(), anchored_type.end());
  return make_type(w);
}

std::vector<CyclicType> compose_rot_trans_offaxis(const ColorWord& spur, const CyclicType& t,
                                                  Color anchor) {
  if (spur.size() < 2) throw Error(Errc::SpurTooShort, "spur needs length >= 2");
  if (spur[0] != anchor)
    throw Error(Errc::AnchorAbsent, "anchor must equal the spur base color");
  auto readings = t.readings_from(anchor);
  if (readings.empty())
    throw Error(Errc::AnchorAbsent, "anchor color " + std::to_string(anchor) +
                                        " does not occur in type " + t.str());
  std::vector<CyclicType> out;
  for (const auto& r : readings) out.push_back(compose_rot_trans_word(spur, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OnAxisOutcome OnAxisOutcome::translation(CyclicType t) {
  OnAxisOutcome o;
  o.kind = Kind::Translation;
  o.type = std::move(t);
  return o;
}

OnAxisOutcome OnAxisOutcome::rotation_fixing(Color c) {
  OnAxisOutcome o;
  o.kind = Kind::RotationFixing;
  o.fixed_color = c;
  return o;
}

std::string OnAxisOutcome::str() const {
  if (kind == Kind::RotationFixing) return "rotation-fixing:" + std::to_string(fixed_color);
  return type->str();
}

std::vector<OnAxisOutcome> onaxis_outcomes_word(const ColorWord& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "empty translation type");
  const size_t m = w.size();
  std::vector<OnAxisOutcome> out;
  out.push_back(OnAxisOutcome::translation(make_type(w)));
  // Fold depth d strips (j1..jd) and (j_{m-d+1}..jm); it needs the
  // matching j_{l+1} = j_{m+1-l} for every l = 1..d.
  for (size_t d = 1; 2 * d + 1 <= m && w[d] == w[m - d]; ++d)
    out.push_back(OnAxisOutcome::translation(
        make_type(ColorWord(w.begin() + static_cast<long>(d), w.end() - static_cast<long>(d)))));
  // Full palindromic consumption: the composition is a rotation fixing a
  // vertex of the middle color j_{m/2+1}.
  if (m % 2 == 0) {
    bool pal = true;
    for (size_t l = 1; l <= m / 2 - 1 && pal; ++l) pal = w[l] == w[m - l];
    if (pal) out.push_back(OnAxisOutcome::rotation_fixing(w[m / 2]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OnAxisOutcome> onaxis_outcomes(const CyclicType& t, Color anchor) {
  auto readings = t.readings_from(anchor);
  if (readings.empty())
    throw Error(Errc::AnchorAbsent, "anchor color " + std::to_string(anchor) +
                                        " does not occur in type " + t.str());
  std::vector<OnAxisOutcome> out;
  for (const auto& r : readings) {
    auto part = onaxis_outcomes_word(r);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ColorWord> is_two_rotation_type(const CyclicType& t) {
  const ColorWord& c = t.letters();
  const size_t len = c.size();
  if (len < 2 || len % 2 != 0) return std::nullopt;
  for (size_t s = 0; s < len; ++s) {
    bool ok = true;
    for (size_t i = 1; i < len && ok; ++i)
      ok = c[(s + i) % len] == c[(s + len - i) % len];
    if (ok) {
      ColorWord path(len / 2 + 1);
      for (size_t i = 0; i < path.size(); ++i) path[i] = c[(s + i) % len];
      return path;
    }
  }
  return std::nullopt;
}

}  // namespace arbor
