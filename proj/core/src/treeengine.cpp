#include "arbor/treeengine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace arbor {

std::string VertexAddr::str() const {
  if (steps.empty()) return "/";
  std::string out;
  for (const auto& [c, i] : steps) {
    out += '/';
    out += std::to_string(c);
    out += '.';
    out += std::to_string(i);
  }
  return out;
}

VertexAddr VertexAddr::parse(const std::string& s) {
  if (s.empty() || s[0] != '/')
    throw Error(Errc::OutOfRange, "vertex address must start with '/': " + s);
  VertexAddr a;
  if (s == "/") return a;
  std::istringstream in(s.substr(1));
  std::string tok;
  while (std::getline(in, tok, '/')) {
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
      throw Error(Errc::OutOfRange, "bad address step '" + tok + "' in " + s);
    a.steps.emplace_back(std::stoi(tok.substr(0, dot)), std::stoi(tok.substr(dot + 1)));
  }
  return a;
}

Ball::Ball(Code code, Color root_color, int radius, std::uint64_t vertex_budget)
    : code_(std::move(code)), root_color_(root_color), radius_(radius) {
  if (root_color < 0 || root_color >= static_cast<Color>(code_.num_colors()))
    throw Error(Errc::ColorNotInCode, "root color " + std::to_string(root_color));
  if (radius < 0) throw Error(Errc::OutOfRange, "negative radius");
  color_.push_back(root_color);
  parent_.push_back(-1);
  depth_.push_back(0);
  sib_index_.push_back(0);
  children_.emplace_back();
  for (int v = 0; v < static_cast<int>(color_.size()); ++v) {
    if (depth_[v] >= radius_) continue;
    for (Color c = 0; c < static_cast<Color>(code_.num_colors()); ++c) {
      int want = code_.degree(color_[v], c);
      if (parent_[v] >= 0 && color_[parent_[v]] == c) --want;  // parent fills one slot
      for (int i = 0; i < want; ++i) {
        if (color_.size() >= vertex_budget)
          throw Error(Errc::BudgetExceeded,
                      "ball exceeds vertex budget " + std::to_string(vertex_budget));
        int u = static_cast<int>(color_.size());
        color_.push_back(c);
        parent_.push_back(v);
        depth_.push_back(depth_[v] + 1);
        sib_index_.push_back(i);
        children_.emplace_back();
        children_[v].push_back(u);
      }
    }
  }
}

std::vector<int> Ball::neighbors(int v) const {
  std::vector<int> out;
  if (parent_[v] >= 0) out.push_back(parent_[v]);
  out.insert(out.end(), children_[v].begin(), children_[v].end());
  return out;
}

int Ball::dist(int u, int v) const {
  int d = 0;
  while (depth_[u] > depth_[v]) u = parent_[u], ++d;
  while (depth_[v] > depth_[u]) v = parent_[v], ++d;
  while (u != v) u = parent_[u], v = parent_[v], d += 2;
  return d;
}

std::vector<int> Ball::path(int u, int v) const {
  std::vector<int> up, down;
  int a = u, b = v;
  while (depth_[a] > depth_[b]) up.push_back(a), a = parent_[a];
  while (depth_[b] > depth_[a]) down.push_back(b), b = parent_[b];
  while (a != b) {
    up.push_back(a), a = parent_[a];
    down.push_back(b), b = parent_[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

VertexAddr Ball::addr(int v) const {
  VertexAddr a;
  while (v != 0) {
    a.steps.emplace_back(color_[v], sib_index_[v]);
    v = parent_[v];
  }
  std::reverse(a.steps.begin(), a.steps.end());
  return a;
}

std::optional<int> Ball::find(const VertexAddr& a) const {
  int v = 0;
  for (const auto& [c, i] : a.steps) {
    int next = -1, seen = 0;
    for (int u : children_[v]) {
      if (color_[u] != c) continue;
      if (seen++ == i) {
        next = u;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    v = next;
  }
  return v;
}

std::string BallAutomorphism::serialize() const {
  std::string out;
  for (int v = 0; v < ball->size(); ++v) {
    if (ball->depth(v) > r_valid) continue;
    out += ball->addr(v).str();
    out += " -> ";
    out += ball->addr(img[v]).str();
    out += '\n';
  }
  return out;
}

BallAutomorphism finish_automorphism(const Ball& b, std::vector<int> img) {
  if (static_cast<int>(img.size()) != b.size())
    throw Error(Errc::OutOfRange, "image table size mismatch");
  int bad = b.radius() + 1;  // smallest radius at which the map breaks
  std::vector<int> pre(img.size(), -1);
  for (int v = 0; v < b.size(); ++v) {
    int w = img[v];
    if (w < 0 || w >= b.size() || b.color(w) != b.color(v)) {
      bad = std::min(bad, b.depth(v));
      continue;
    }
    if (pre[w] >= 0)
      bad = std::min(bad, std::max(b.depth(pre[w]), b.depth(v)));
    else
      pre[w] = v;
    int p = b.parent(v);
    if (p >= 0 && img[p] >= 0 && b.parent(w) != img[p] && b.parent(img[p]) != w)
      bad = std::min(bad, b.depth(v));
  }
  BallAutomorphism a;
  a.ball = &b;
  a.img = std::move(img);
  a.r_valid = bad - 1;
  return a;
}

BallAutomorphism identity_automorphism(const Ball& b) {
  std::vector<int> img(b.size());
  for (int v = 0; v < b.size(); ++v) img[v] = v;
  return finish_automorphism(b, std::move(img));
}

namespace {

void fisher_yates(std::vector<int>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

/// Extends the partial matching given by `seeds` over the whole ball,
/// pairing unmatched same-color neighbors in address order (or shuffled
/// when rng is given). Seeds must already be color-consistent.
BallAutomorphism grow(const Ball& b, const std::vector<std::pair<int, int>>& seeds,
                      std::mt19937_64* rng) {
  std::vector<int> img(b.size(), -1);
  std::vector<char> used(b.size(), 0);
  std::deque<int> queue;
  for (auto [v, w] : seeds) {
    if (img[v] >= 0) {
      if (img[v] != w) throw Error(Errc::OutOfRange, "inconsistent seed pairs");
      continue;
    }
    img[v] = w;
    used[w] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int w = img[v];
    for (Color c = 0; c < static_cast<Color>(b.code().num_colors()); ++c) {
      std::vector<int> dom, codom;
      for (int u : b.neighbors(v))
        if (b.color(u) == c && img[u] < 0) dom.push_back(u);
      for (int u : b.neighbors(w))
        if (b.color(u) == c && !used[u]) codom.push_back(u);
      if (rng) fisher_yates(codom, *rng);
      for (size_t i = 0; i < dom.size() && i < codom.size(); ++i) {
        img[dom[i]] = codom[i];
        used[codom[i]] = 1;
        queue.push_back(dom[i]);
      }
    }
  }
  return finish_automorphism(b, std::move(img));
}

}  // namespace

BallAutomorphism random_rotation(const Ball& b, int fixed, std::uint64_t seed) {
  if (fixed < 0 || fixed >= b.size())
    throw Error(Errc::VertexNotInBall, "fixed vertex " + std::to_string(fixed));
  std::mt19937_64 rng(seed);
  return grow(b, {{fixed, fixed}}, &rng);
}

BallAutomorphism compose(const BallAutomorphism& a, const BallAutomorphism& b) {
  if (a.ball != b.ball) throw Error(Errc::OutOfRange, "automorphisms of different balls");
  const Ball& ball = *a.ball;
  std::vector<int> img(ball.size(), -1);
  for (int v = 0; v < ball.size(); ++v) {
    int m = b.img[v];
    if (m >= 0) img[v] = a.img[m];
  }
  return finish_automorphism(ball, std::move(img));
}

BallAutomorphism inverse(const BallAutomorphism& a) {
  const Ball& ball = *a.ball;
  std::vector<int> img(ball.size(), -1);
  for (int v = 0; v < ball.size(); ++v)
    if (a.img[v] >= 0) img[a.img[v]] = v;
  return finish_automorphism(ball, std::move(img));
}

AutClass classify(const BallAutomorphism& a) {
  const Ball& b = *a.ball;
  // Certificates are sound on the whole defined domain: image tables
  // built by this library are genuine partial automorphisms wherever
  // they are defined, not only on the r_valid sub-ball.
  std::vector<int> dom;
  for (int v = 0; v < b.size(); ++v)
    if (a.img[v] >= 0) dom.push_back(v);
  if (dom.empty())
    throw Error(Errc::InsufficientRadius, "automorphism defined nowhere");

  AutClass out;
  for (int v : dom)
    if (a.img[v] == v) out.fixed.push_back(v);
  if (!out.fixed.empty()) {
    out.kind = AutClass::Kind::Rotation;
    return out;
  }

  std::vector<int> disp(b.size(), 0);
  for (int v : dom) disp[v] = b.dist(v, a.img[v]);
  std::stable_sort(dom.begin(), dom.end(), [&](int u, int v) { return disp[u] < disp[v]; });
  for (int v : dom) {
    int w = a.img[v];
    int d = disp[v];
    if (d % 2 == 1) {
      // Candidate inversion: the middle edge of [v, a(v)] must swap.
      auto p = b.path(v, w);
      int u1 = p[d / 2], u2 = p[d / 2 + 1];
      if (a.img[u1] == u2 && a.img[u2] == u1) {
        out.kind = AutClass::Kind::Symmetry;
        out.edge = {u1, u2};
        return out;
      }
    }
    // Translation certificate: no backtracking at a(v).
    int w2 = a.img[w];
    if (w2 >= 0 && b.dist(v, w2) == 2 * d) {
      out.kind = AutClass::Kind::Translation;
      out.length = d;
      out.axis_segment = b.path(v, w);
      return out;
    }
  }
  throw Error(Errc::InsufficientRadius,
              "no classification certificate inside the valid sub-ball");
}

CyclicType empirical_type(const BallAutomorphism& a) {
  AutClass c = classify(a);
  if (c.kind != AutClass::Kind::Translation)
    throw Error(Errc::NotATranslation, "empirical type requires a translation");
  ColorWord w;
  for (size_t i = 0; i + 1 < c.axis_segment.size(); ++i)
    w.push_back(a.ball->color(c.axis_segment[i]));
  return make_type(w);
}

std::vector<int> fixed_tree(const BallAutomorphism& a) {
  std::vector<int> out;
  for (int v = 0; v < a.ball->size(); ++v)
    if (a.img[v] == v) out.push_back(v);
  return out;
}

std::optional<int> helly_common_vertex(const Ball& b,
                                       const std::vector<std::vector<int>>& trees) {
  if (trees.empty()) return 0;
  std::vector<std::vector<int>> sorted(trees);
  for (auto& t : sorted) {
    for (int v : t)
      if (v < 0 || v >= b.size()) throw Error(Errc::VertexNotInBall, std::to_string(v));
    std::sort(t.begin(), t.end());
  }
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(inter));
      if (inter.empty()) return std::nullopt;
    }
  std::vector<int> common = sorted[0];
  for (size_t i = 1; i < sorted.size(); ++i) {
    std::vector<int> inter;
    std::set_intersection(common.begin(), common.end(), sorted[i].begin(), sorted[i].end(),
                          std::back_inserter(inter));
    common = std::move(inter);
  }
  if (common.empty())
    throw Error(Errc::NotASubtree, "pairwise-meeting inputs with empty intersection");
  return common[0];
}

int project(const Ball& b, int v, const std::vector<int>& path) {
  if (path.empty()) throw Error(Errc::EmptyWord, "projection target is empty");
  int best = path[0], bd = b.dist(v, path[0]);
  for (int p : path) {
    int d = b.dist(v, p);
    if (d < bd) best = p, bd = d;
  }
  return best;
}

std::pair<BallAutomorphism, BallAutomorphism> factor_translation_biregular(
    const BallAutomorphism& a) {
  const Ball& b = *a.ball;
  if (!b.code().biregular())
    throw Error(Errc::NotBiregular, "factorization requires a biregular code");
  AutClass c = classify(a);
  if (c.kind != AutClass::Kind::Translation)
    throw Error(Errc::NotATranslation, "not a translation");
  const auto& z = c.axis_segment;  // z[0] .. z[L]
  const int L = c.length;
  // sigma0 reflects about z[0]; on the forward ray it is forced by a:
  // sigma0(z[k]) = a^{-1}(z[L-k]), the mirror ray through a^{-1}(z[L-1]).
  std::vector<int> pre(b.size(), -1);
  for (int v = 0; v < b.size(); ++v)
    if (a.img[v] >= 0) pre[a.img[v]] = v;
  std::vector<std::pair<int, int>> seeds0{{z[0], z[0]}};
  for (int k = 1; k <= L; ++k) {
    int w = pre[z[L - k]];
    if (w < 0) break;
    seeds0.emplace_back(z[k], w);
    seeds0.emplace_back(w, z[k]);
  }
  if (seeds0.size() < 3)
    throw Error(Errc::InsufficientRadius, "axis mirror leaves the ball immediately");
  BallAutomorphism sigma0 = grow(b, seeds0, nullptr);
  // sigmaD reflects about the axis midpoint z[L/2].
  const int d = L / 2;
  std::vector<std::pair<int, int>> seedsD{{z[d], z[d]}};
  for (int i = 1; i <= d; ++i) {
    seedsD.emplace_back(z[d + i], z[d - i]);
    seedsD.emplace_back(z[d - i], z[d + i]);
  }
  BallAutomorphism sigmaD = grow(b, seedsD, nullptr);
  // a = (delta o sigmaD) o sigma0 with delta = a o sigma0 o sigmaD fixing
  // the whole axis segment; both factors fix a vertex.
  BallAutomorphism delta = compose(a, compose(sigma0, sigmaD));
  return {compose(delta, sigmaD), sigma0};
}

bool rotation_fixes_ramification(const BallAutomorphism& a) {
  AutClass c = classify(a);
  if (c.kind != AutClass::Kind::Rotation)
    throw Error(Errc::NotARotation, "not a rotation");
  const auto& ram = a.ball->code().ramification_colors();
  for (int v : c.fixed)
    if (std::find(ram.begin(), ram.end(), a.ball->color(v)) != ram.end()) return true;
  return false;
}

bool parity_check(const BallAutomorphism& a) {
  for (int v = 0; v < a.ball->size(); ++v) {
    if (a.ball->depth(v) > a.r_valid) continue;
    if (a.ball->dist(v, a.img[v]) % 2 != 0) return false;
  }
  return true;
}

}  // namespace arbor
