#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Permutation of {1,...,n}, 1-based throughout.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
  }
  static Permutation from_images(const std::vector<int>& images) {
    Permutation p;
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n + 1, false);
    p.img_.resize(n);
    for (int i = 0; i < n; ++i) {
      int v = images[i];
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
      p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }
  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("index out of range");
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }

  Permutation inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  /// (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    Permutation p;
    p.img_.resize(a.img_.size());
    for (int i = 1; i <= a.degree(); ++i) p.img_[i - 1] = static_cast<std::uint8_t>(a(b(i)));
    return p;
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int parity = 0;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0, j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = img_[j] - 1;
        ++len;
      }
      parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

class BrauerDiagram;

/// Outcome of concatenating two diagrams: the resulting diagram and the
/// number of closed loops erased from the middle layer.
struct Composition;

/// Perfect matching on 2r labelled vertices; vertices 1..r form the top
/// row and r+1..2r the bottom row. Equality, ordering and hashing use the
/// partner table, which is a canonical form.
class BrauerDiagram {
 public:
  static constexpr int kMaxStrands = 8;

  BrauerDiagram() = default;

  static BrauerDiagram from_edges(int r, const std::vector<std::pair<int, int>>& edges) {
    check_strands(r);
    if (static_cast<int>(edges.size()) != r)
      throw std::invalid_argument("expected exactly r edges");
    BrauerDiagram d;
    d.r_ = static_cast<std::uint8_t>(r);
    d.partner_.fill(0);
    std::vector<bool> used(2 * r, false);
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || a > 2 * r || b > 2 * r)
        throw std::invalid_argument("vertex label out of range");
      if (a == b) throw std::invalid_argument("fixed point is not a matching edge");
      if (used[a - 1] || used[b - 1]) throw std::invalid_argument("duplicate vertex");
      used[a - 1] = used[b - 1] = true;
      d.partner_[a - 1] = static_cast<std::uint8_t>(b - 1);
      d.partner_[b - 1] = static_cast<std::uint8_t>(a - 1);
    }
    return d;
  }

  static BrauerDiagram identity(int r) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i) edges.emplace_back(i, r + i);
    return from_edges(r, edges);
  }

  int strands() const { return r_; }

  /// Matched partner of vertex v (1-based).
  int partner(int v) const { return partner_[v - 1] + 1; }

  /// Edge list in canonical order: each edge smaller endpoint first,
  /// edges sorted by first endpoint.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= 2 * r_; ++v)
      if (partner(v) > v) e.emplace_back(v, partner(v));
    return e;
  }

  int through_count() const {
    int t = 0;
    for (int v = 1; v <= r_; ++v)
      if (partner(v) > r_) ++t;
    return t;
  }

  /// Reflection in a horizontal line: v <-> v +- r on every edge.
  BrauerDiagram star() const {
    BrauerDiagram d = *this;
    auto flip = [this](int v0) { return v0 < r_ ? v0 + r_ : v0 - r_; };
    for (int v = 0; v < 2 * r_; ++v) d.partner_[flip(v)] = static_cast<std::uint8_t>(flip(partner_[v]));
    return d;
  }

  friend Composition compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

  auto operator<=>(const BrauerDiagram&) const = default;

  std::size_t hash() const {
    std::size_t h = r_;
    for (int v = 0; v < 2 * r_; ++v) h = h * 131 + partner_[v];
    return h;
  }

  /// Bit-exact text form, e.g. "r=3; 1-2 3-6 4-5".
  std::string to_string() const {
    std::string s = "r=" + std::to_string(r_) + ";";
    for (auto [a, b] : edges()) s += " " + std::to_string(a) + "-" + std::to_string(b);
    return s;
  }

  static BrauerDiagram parse(const std::string& text) {
    std::size_t i = 0;
    auto expect = [&](const std::string& tok) {
      if (text.compare(i, tok.size(), tok) != 0)
        throw std::invalid_argument("malformed diagram: '" + text + "'");
      i += tok.size();
    };
    auto read_int = [&] {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("malformed diagram: '" + text + "'");
      return std::stoi(text.substr(start, i - start));
    };
    expect("r=");
    int r = read_int();
    expect(";");
    std::vector<std::pair<int, int>> edges;
    while (i < text.size()) {
      if (text[i] == ' ') { ++i; continue; }
      int a = read_int();
      expect("-");
      int b = read_int();
      edges.emplace_back(a, b);
    }
    return from_edges(r, edges);
  }

 private:
  static void check_strands(int r) {
    if (r < 1 || r > kMaxStrands) throw std::invalid_argument("strand count out of range");
  }

  friend struct DiagramHash;
  std::uint8_t r_ = 0;
  std::array<std::uint8_t, 2 * kMaxStrands> partner_{};
};

struct Composition {
  BrauerDiagram result;
  int loops = 0;
};

struct DiagramHash {
  std::size_t operator()(const BrauerDiagram& d) const { return d.hash(); }
};

/// Concatenation d1 over d2: d1's bottom row is glued to d2's top row,
/// intermediate vertices are traced out and erased closed loops counted.
inline Composition compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  if (d1.strands() != d2.strands())
    throw std::invalid_argument("strand count mismatch");
  const int r = d1.strands();
  // Glue slot k in [0,r): d1's bottom vertex r+k joined to d2's top vertex k
  // (0-based). A walk alternates partner steps and glue jumps.
  std::vector<bool> seen(r, false);
  auto trace = [&](int side, int v0) {
    int side_cur = side, v = v0;
    for (;;) {
      int w = (side_cur == 1 ? d1.partner_[v] : d2.partner_[v]);
      if (side_cur == 1 && w < r) return std::pair<int, int>(1, w);
      if (side_cur == 2 && w >= r) return std::pair<int, int>(2, w);
      if (side_cur == 1) {
        seen[w - r] = true;
        side_cur = 2;
        v = w - r;
      } else {
        seen[w] = true;
        side_cur = 1;
        v = w + r;
      }
    }
  };

  // Result labels coincide with the traced endpoint's own 0-based index:
  // d1 top vertices and d2 bottom vertices keep their labels.
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> done(2 * r, false);
  for (int v = 0; v < r; ++v) {
    if (done[v]) continue;
    auto [side_end, w] = trace(1, v);
    done[v] = done[w] = true;
    edges.emplace_back(v + 1, w + 1);
  }
  for (int v = r; v < 2 * r; ++v) {
    if (done[v]) continue;
    auto [side_end, w] = trace(2, v);
    done[v] = done[w] = true;
    edges.emplace_back(v + 1, w + 1);
  }

  int loops = 0;
  for (int k = 0; k < r; ++k) {
    if (seen[k]) continue;
    ++loops;
    int cur = k;
    do {
      seen[cur] = true;
      int k2 = d2.partner_[cur];  // stays in d2's top row on a closed loop
      seen[k2] = true;
      cur = d1.partner_[r + k2] - r;
    } while (cur != k);
  }
  return {BrauerDiagram::from_edges(r, edges), loops};
}

inline BrauerDiagram star(const BrauerDiagram& d) { return d.star(); }
inline int through_count(const BrauerDiagram& d) { return d.through_count(); }

/// Diagram of a permutation: edges (sigma(i), r+i).
inline BrauerDiagram perm_diagram(const Permutation& sigma) {
  const int r = sigma.degree();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) edges.emplace_back(sigma(i), r + i);
  return BrauerDiagram::from_edges(r, edges);
}

/// Transposition diagram s_i swapping strands i, i+1.
inline BrauerDiagram generator_s(int i, int r) {
  if (i < 1 || i >= r) throw std::invalid_argument("index out of range");
  return perm_diagram(Permutation::transposition(r, i, i + 1));
}

/// Horizontal-arc diagram e_{i,j}: top arc (i,j), bottom arc (r+i,r+j),
/// all other strands vertical.
inline BrauerDiagram generator_e(int i, int j, int r) {
  if (!(1 <= i && i < j && j <= r)) throw std::invalid_argument("index out of range");
  std::vector<std::pair<int, int>> edges{{i, j}, {r + i, r + j}};
  for (int k = 1; k <= r; ++k)
    if (k != i && k != j) edges.emplace_back(k, r + k);
  return BrauerDiagram::from_edges(r, edges);
}

inline BrauerDiagram generator_e(int i, int r) { return generator_e(i, i + 1, r); }

/// All (2r-1)!! perfect matchings of 2r points in a deterministic order:
/// the smallest unmatched vertex is matched to each larger unmatched vertex
/// in ascending order, recursively.
inline std::vector<BrauerDiagram> all_diagrams(int r, int max_strands = 6) {
  if (r < 1 || r > max_strands || r > BrauerDiagram::kMaxStrands)
    throw std::invalid_argument("strand count above enumeration bound");
  std::vector<BrauerDiagram> out;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(2 * r, false);
  auto rec = [&](auto&& self) -> void {
    int v = -1;
    for (int u = 0; u < 2 * r; ++u)
      if (!used[u]) { v = u; break; }
    if (v < 0) {
      out.push_back(BrauerDiagram::from_edges(r, edges));
      return;
    }
    used[v] = true;
    for (int w = v + 1; w < 2 * r; ++w) {
      if (used[w]) continue;
      used[w] = true;
      edges.emplace_back(v + 1, w + 1);
      self(self);
      edges.pop_back();
      used[w] = false;
    }
    used[v] = false;
  };
  rec(rec);
  return out;
}

/// The comb diagram with k nested-free arcs on strands 1..2k: top arcs
/// (1,2),(3,4),...,(2k-1,2k), mirrored bottom arcs, vertical elsewhere.
inline BrauerDiagram arc_ladder(int k, int r) {
  if (k < 0 || 2 * k > r) throw std::invalid_argument("arc count out of range");
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= k; ++j) {
    edges.emplace_back(2 * j - 1, 2 * j);
    edges.emplace_back(r + 2 * j - 1, r + 2 * j);
  }
  for (int m = 2 * k + 1; m <= r; ++m) edges.emplace_back(m, r + m);
  return BrauerDiagram::from_edges(r, edges);
}

struct NormalForm {
  Permutation sigma1;
  int arcs = 0;
  Permutation sigma2;
};

/// Factorization d = perm(sigma1) * arc_ladder(k) * perm(sigma2)^{-1}
/// with no loops, where k = (r - through_count(d)) / 2.
inline NormalForm normal_form(const BrauerDiagram& d) {
  const int r = d.strands();
  const int t = d.through_count();
  const int k = (r - t) / 2;
  std::vector<int> img1(r), img2(r);
  int j = 0;
  for (int v = 1; v <= r; ++v) {
    int w = d.partner(v);
    if (w <= r && w > v) {
      img1[2 * j] = v;
      img1[2 * j + 1] = w;
      ++j;
    }
  }
  j = 0;
  for (int v = r + 1; v <= 2 * r; ++v) {
    int w = d.partner(v);
    if (w > r && w > v) {
      img2[2 * j] = v - r;
      img2[2 * j + 1] = w - r;
      ++j;
    }
  }
  int i = 0;
  for (int v = 1; v <= r; ++v) {
    int w = d.partner(v);
    if (w > r) {
      img1[2 * k + i] = v;
      img2[2 * k + i] = w - r;
      ++i;
    }
  }
  return {Permutation::from_images(img1), k, Permutation::from_images(img2)};
}

}  // namespace brauer
