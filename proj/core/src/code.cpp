#include "arbor/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace arbor {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroAsymmetry: return "ZeroAsymmetry";
    case Errc::DisconnectedColorGraph: return "DisconnectedColorGraph";
    case Errc::EmptyAlphabet: return "EmptyAlphabet";
    case Errc::DegreeLimit: return "DegreeLimit";
    case Errc::TooManyColors: return "TooManyColors";
    case Errc::ColorNotInCode: return "ColorNotInCode";
    case Errc::BadCodeFile: return "BadCodeFile";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::PathTooShort: return "PathTooShort";
    case Errc::SpurTooShort: return "SpurTooShort";
    case Errc::AnchorAbsent: return "AnchorAbsent";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MissingBlock: return "MissingBlock";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::VertexNotInBall: return "VertexNotInBall";
    case Errc::DomainExhausted: return "DomainExhausted";
    case Errc::InsufficientRadius: return "InsufficientRadius";
    case Errc::NotATranslation: return "NotATranslation";
    case Errc::NotARotation: return "NotARotation";
    case Errc::NotBiregular: return "NotBiregular";
    case Errc::NotASubtree: return "NotASubtree";
  }
  return "Unknown";
}

Code Code::validate(std::vector<std::string> names,
                    const std::vector<DegreeEntry>& entries,
                    std::uint32_t degree_cap) {
  if (names.empty()) throw Error(Errc::EmptyAlphabet, "color alphabet is empty");
  if (names.size() > kMaxColors)
    throw Error(Errc::TooManyColors,
                "alphabet has " + std::to_string(names.size()) + " colors, limit is " +
                    std::to_string(kMaxColors));
  const int n = static_cast<int>(names.size());
  Code c;
  c.names_ = std::move(names);
  c.deg_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
      throw Error(Errc::ColorNotInCode, "degree entry references color out of range");
    auto& cell = c.deg_[static_cast<size_t>(e.i) * n + e.j];
    cell += e.degree;
    if (cell > degree_cap)
      throw Error(Errc::DegreeLimit, "a(" + c.names_[e.i] + "," + c.names_[e.j] +
                                         ") exceeds degree cap " + std::to_string(degree_cap));
  }
  for (Color i = 0; i < n; ++i)
    for (Color j = 0; j < n; ++j)
      if ((c.degree(i, j) == 0) != (c.degree(j, i) == 0))
        throw Error(Errc::ZeroAsymmetry,
                    "a(" + c.names_[i] + "," + c.names_[j] + ")=" + std::to_string(c.degree(i, j)) +
                        " but a(" + c.names_[j] + "," + c.names_[i] + ")=" +
                        std::to_string(c.degree(j, i)));
  // connectedness of G(a)
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<Color> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Color i = stack.back();
    stack.pop_back();
    for (Color j = 0; j < n; ++j)
      if (!seen[j] && c.degree(i, j) != 0) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    std::string comps;
    for (Color i = 0; i < n; ++i)
      if (!seen[i]) comps += (comps.empty() ? "" : " ") + c.names_[i];
    throw Error(Errc::DisconnectedColorGraph, "colors unreachable from " + c.names_[0] + ": " + comps);
  }
  return c;
}

Code Code::parse(std::istream& in, std::uint32_t degree_cap) {
  std::string line;
  std::vector<std::string> names;
  std::vector<DegreeEntry> entries;
  bool have_header = false;
  auto lookup = [&](const std::string& tok) -> Color {
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw Error(Errc::BadCodeFile, "unknown color name '" + tok + "'");
    return static_cast<Color>(it - names.begin());
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      if (first != "colors:") throw Error(Errc::BadCodeFile, "expected 'colors:' header line");
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      have_header = true;
      continue;
    }
    std::string second;
    long long deg = -1;
    if (!(ls >> second >> deg) || deg < 0)
      throw Error(Errc::BadCodeFile, "expected '<ci> <cj> <degree>' line, got '" + line + "'");
    entries.push_back({lookup(first), lookup(second), static_cast<std::uint32_t>(deg)});
  }
  if (!have_header) throw Error(Errc::BadCodeFile, "missing 'colors:' header line");
  return validate(std::move(names), entries, degree_cap);
}

Code Code::load(const std::string& path, std::uint32_t degree_cap) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadCodeFile, "cannot open '" + path + "'");
  return parse(in, degree_cap);
}

std::optional<Color> Code::color_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Color>(i);
  return std::nullopt;
}

std::uint32_t Code::total_degree(Color i) const {
  std::uint32_t s = 0;
  for (Color j = 0; j < num_colors(); ++j) s += degree(i, j);
  return s;
}

std::vector<Color> Code::ramification_colors() const {
  std::vector<Color> out;
  for (Color i = 0; i < num_colors(); ++i)
    if (total_degree(i) >= 3) out.push_back(i);
  return out;
}

std::optional<Code::Biregular> Code::biregular() const {
  if (num_colors() != 2) return std::nullopt;
  if (degree(0, 0) != 0 || degree(1, 1) != 0) return std::nullopt;
  std::uint32_t n = degree(0, 1), m = degree(1, 0);
  if (n < 3 || m < 3) return std::nullopt;
  return Biregular{n, m};
}

std::optional<Code::AlmostBiregular> Code::almost_biregular() const {
  const int nc = num_colors();
  if (nc < 2) return std::nullopt;
  // The color graph must be a simple path; recover its vertex order
  // instead of trying all |I|! relabelings.
  std::vector<std::vector<Color>> adj(static_cast<size_t>(nc));
  for (Color i = 0; i < nc; ++i) {
    if (degree(i, i) != 0) return std::nullopt;
    for (Color j = 0; j < nc; ++j)
      if (j != i && degree(i, j) != 0) adj[i].push_back(j);
  }
  std::vector<Color> ends;
  for (Color i = 0; i < nc; ++i) {
    if (adj[i].size() == 1)
      ends.push_back(i);
    else if (adj[i].size() != 2)
      return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  auto walk = [&](Color start) {
    std::vector<Color> p{start};
    Color prev = -1, cur = start;
    while (true) {
      Color next = -1;
      for (Color nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      p.push_back(next);
      prev = cur;
      cur = next;
    }
    return p;
  };
  for (Color start : ends) {
    std::vector<Color> p = walk(start);
    if (static_cast<int>(p.size()) != nc) return std::nullopt;  // cycle, not a path
    const int k = nc - 1;
    std::uint32_t n = degree(p[0], p[1]);
    std::uint32_t m = degree(p[k], p[k - 1]);
    if (n < 3 || m < 3) continue;
    bool ok = true;
    for (int s = 1; s < k && ok; ++s)
      ok = degree(p[s], p[s + 1]) == 1 && degree(p[s], p[s - 1]) == 1;
    if (!ok) continue;
    return AlmostBiregular{n, m, k, std::move(p)};
  }
  return std::nullopt;
}

int bounded_constant_from_K(int k_rotations) {
  return 8 * k_rotations * k_rotations;
}

}  // namespace arbor
