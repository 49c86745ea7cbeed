#pragma once

// Explicit b-chromatic colorings of SVN coronas of the base families.
//
// Every construction writes the printed color formulas into a partial
// assignment (cells with no formula stay -1, colors are reduced mod k),
// then the result is verified. A formula that does not verify, or leaves
// cells open, is completed by a rainbow-pinned search that keeps as much of
// the formula as it can; such results carry repaired = true.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svn/closed_form.hpp"
#include "svn/coloring.hpp"
#include "svn/graph.hpp"
#include "svn/oracle.hpp"
#include "svn/search.hpp"

namespace svn {

struct PlanParams {
  int alpha = 0;                     // width of the extra color block, 0 if unused
  int skeleton_modulus = 0;          // M in c(u_i) = (i+1) mod M, 0 if unused
  std::optional<int> cycle_closure;  // color given to s_{0,n-1}
};

struct VerifiedColoring {
  Graph graph;
  Coloring coloring;
  BReport report;
  std::string branch;
  PlanParams plan;
  std::vector<Vertex> stated_rainbow;  // the b-rainbow set the formula claims
  bool stated_rainbow_confirmed = false;
  bool repaired = false;
  std::string repair_note;
};

inline SearchBudget default_repair_budget() {
  SearchBudget budget;
  budget.max_vertices = static_cast<std::size_t>(-1);
  budget.time_limit = std::chrono::seconds(30);
  return budget;
}

namespace detail {

inline long pmod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

/// Partial coloring of a corona addressed by (i, j) indices. Base and copy
/// indices wrap modulo the number of base vertices; a copy column outside
/// [0, |V(H)|) reads as unassigned.
class Painter {
 public:
  Painter(const Graph& g, long bases, long h_order, int k)
      : g_(&g), bases_(bases), h_order_(h_order), k_(k), colors_(g.order(), -1) {}

  int k() const noexcept { return k_; }
  const Graph& graph() const noexcept { return *g_; }

  Vertex u_id(long i) const { return g_->id(base(static_cast<Vertex>(pmod(i, bases_)))); }
  Vertex s_id(long i, long j) const {
    return g_->id(inserted(static_cast<Vertex>(pmod(i, bases_)), static_cast<Vertex>(pmod(j, bases_))));
  }
  Vertex v_id(long i, long j) const {
    return g_->id(copy(static_cast<Vertex>(pmod(i, bases_)), static_cast<Vertex>(j)));
  }

  void set(Vertex v, long c) { colors_[v] = c < 0 ? -1 : static_cast<int>(c % k_); }
  void set_u(long i, long c) { set(u_id(i), c); }
  void set_s(long i, long j, long c) { set(s_id(i, j), c); }
  void set_v(long i, long j, long c) { set(v_id(i, j), c); }

  int u(long i) const { return colors_[u_id(i)]; }
  int s(long i, long j) const { return colors_[s_id(i, j)]; }
  int v(long i, long j) const { return (j < 0 || j >= h_order_) ? -1 : colors_[v_id(i, j)]; }

  std::vector<int>& colors() noexcept { return colors_; }

 private:
  const Graph* g_;
  long bases_;
  long h_order_;
  int k_;
  std::vector<int> colors_;
};

struct Construction {
  Graph graph;
  int k = 0;
  std::vector<int> colors;
  std::vector<Vertex> stated_rainbow;
  PlanParams plan;
  bool printed = true;  // false: no formula exists, a search builds the coloring
  std::string note;
  // tried, and used as the repair hint, when the printed formula fails
  std::vector<int> alternative;
  std::vector<Vertex> alternative_rainbow;
};

inline Construction finish(Painter& p, std::vector<Vertex> stated, PlanParams plan = {}) {
  return {p.graph(), p.k(), std::move(p.colors()), std::move(stated), plan, true, {}, {}, {}};
}

inline Construction search_only(const Graph& g, int k, std::string note) {
  return {g, k, std::vector<int>(g.order(), -1), {}, {}, false, std::move(note), {}, {}};
}

/// c(u_i) = (i+1) mod M, c(s_{j,j+1}) = j mod M and, on a cycle,
/// c(s_{0,n-1}) = (n-1) mod M or 0 when n ≡ 2 (mod M).
inline PlanParams paint_skeleton(Painter& p, long n, long modulus, bool cycle) {
  PlanParams plan;
  plan.skeleton_modulus = static_cast<int>(modulus);
  for (long i = 0; i < n; ++i) p.set_u(i, (i + 1) % modulus);
  for (long j = 0; j + 1 < n; ++j) p.set_s(j, j + 1, j % modulus);
  if (cycle) {
    const long closure = (n % modulus == 2 % modulus) ? 0 : (n - 1) % modulus;
    p.set_s(0, n - 1, closure);
    plan.cycle_closure = static_cast<int>(closure % p.k());
  }
  return plan;
}

inline long skeleton_modulus(const Graph& g, long n) {
  return std::min(static_cast<long>(m_degree(g)), n);
}

inline std::vector<Vertex> path_rainbow(const Painter& p, long n, bool cycle) {
  std::vector<Vertex> out;
  for (long j = 0; j + 1 < n; ++j) out.push_back(p.s_id(j, j + 1));
  if (cycle) out.push_back(p.s_id(0, n - 1));
  return out;
}

// ---------------------------------------------------------------------------
// path and cycle left operands

/// Long paths and cycles: c(v_{i,k}) = (i + 2k + 3) mod (2|V(H)| + 3).
inline Construction long_corona(const Graph& g, long n, long h_order, bool cycle) {
  const int k = static_cast<int>(2 * h_order + 3);
  Painter p(g, n, h_order, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), cycle);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < h_order; ++j) p.set_v(i, j, i + 2 * j + 3);
  std::vector<Vertex> stated;
  for (long j = 0; j < k && j + 1 < n; ++j) stated.push_back(p.s_id(j, j + 1));
  return finish(p, std::move(stated), plan);
}

// The 7 <= n column rule shared by P_n⊡P_t and P_n⊡C_t.
inline long path_path_cell(const Painter& p, long n, long i, long j) {
  const long mod = n - 1;
  const bool odd_i = i % 2 == 1;
  if (n % 2 == 0 && j < (n - 4) / 2) return pmod(i + 2 * j + 3, mod);
  if (n % 2 == 1 && ((!odd_i && j < (n - 5) / 2) || (odd_i && j < (n - 3) / 2)))
    return pmod(i + 2 * j + 4 - 2 * (i % 2), mod);
  if (j == 1 && n == 7 && !odd_i) return pmod(i + 2, 6);
  return p.v(i, j - 2);
}

inline Construction path_path(const Graph& g, long n, long t, int k) {
  Painter p(g, n, t, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), false);
  auto stated = path_rainbow(p, n, false);
  if (n <= 6) {
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i)
        p.set_v(i, j, (n == 3 && t <= 4) ? (i + j % 2 + 1) % 4 : (i + j % 3 + 1) % 5);
    if (n < 6) stated.push_back(p.v_id(1, 1));
    if (n <= 4) stated.push_back(p.v_id(1, 2));
    if (n == 3 && t >= 5) stated.push_back(p.v_id(1, 3));
  } else {
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i) p.set_v(i, j, path_path_cell(p, n, i, j));
  }
  return finish(p, std::move(stated), plan);
}

inline Construction path_cycle(const Graph& g, long n, long t, int k) {
  if (n == 3 && t == 4) return search_only(g, k, "P3⊡C4 has no printed formula");
  Painter p(g, n, t, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), false);
  auto stated = path_rainbow(p, n, false);
  if (n <= 6) {
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i) {
        if (n == 3 && i == 1 && j == 2)
          p.set_v(i, j, 2);
        else if (j != t - 1)
          p.set_v(i, j, (i + 2 + j % 2) % 5);
        else
          p.set_v(i, j, i + 1);
      }
    if (n == 4 || n == 5) stated.push_back(p.v_id(2, 0));
    if (n <= 4) stated.push_back(p.v_id(1, 0));
    if (n == 3) {
      stated.push_back(p.v_id(1, 1));
      stated.push_back(p.v_id(1, t - 1));
    }
  } else {
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i) {
        if (t % 2 == 1 && j == t - 1 && n == 8)
          p.set_v(i, j, i + 1);
        else if (t % 2 == 1 && j == t - 1 && (n == 7 || n == 9))
          p.set_v(i, j, i + 3);
        else
          p.set_v(i, j, path_path_cell(p, n, i, j));
      }
  }
  return finish(p, std::move(stated), plan);
}

inline Construction path_star(const Graph& g, long n, long t, int k) {
  const long h_order = t + 1;
  Painter p(g, n, h_order, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), false);
  auto stated = path_rainbow(p, n, false);
  const long mod = n - 1;
  if (n <= t + 4) {
    const long alpha = k - n + 1;
    plan.alpha = static_cast<int>(alpha);
    for (long j = 0; j < h_order; ++j)
      for (long i = 0; i < n; ++i) {
        const bool end = i == 0 || i == n - 1;
        if (j < alpha)
          p.set_v(i, j, n - 1 + (i + j) % alpha);
        else if (j < alpha + n - 2 && i == 0)
          p.set_v(i, j, pmod(j - alpha + 1, mod));
        else if (j < alpha + n - 2 && i == n - 1)
          p.set_v(i, j, pmod(j - alpha, mod));
        else if (j < alpha + n - 3 && !end)
          p.set_v(i, j, pmod(i + j - alpha + 1, mod));
        else
          p.set_v(i, j, p.v(i, j - 1));
      }
    if (2 * n <= t + 3)
      for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 0));
    else if (n == (t + 5) / 2)
      for (long i = 0; i <= t - n + 2; ++i) stated.push_back(p.v_id(i, 0));
  } else {
    for (long j = 0; j < h_order; ++j)
      for (long i = 0; i < n; ++i) {
        const bool inner = 0 < j && j <= std::min(n - 6, t);
        if (j == 0)
          p.set_v(i, j, pmod(i + 3, mod));
        else if (inner && i % 2 == 0)
          p.set_v(i, j, pmod(i - j - 2, mod));
        else if (inner)
          p.set_v(i, j, pmod(i + j + 3, mod));
        else
          p.set_v(i, j, p.v(i, j - 1));
      }
  }
  return finish(p, std::move(stated), plan);
}

// Copies of K_t along a path or cycle; `cycle` adds c(v_{0,n-2}) = t for n <= t+1.
inline Construction with_complete(const Graph& g, long n, long t, int k, bool cycle) {
  Painter p(g, n, t, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), cycle);
  auto stated = path_rainbow(p, n, cycle);
  if (n <= t + 3) {
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i) p.set_v(i, j, (i + j + 1) % (t + 2));
  } else {
    const long mod = n - 1;
    const long f = (n - 4) / 2;
    for (long j = 0; j < t; ++j)
      for (long i = 0; i < n; ++i) {
        if (j < f)
          p.set_v(i, j, pmod(i + 2 * j + 3, mod));
        else if (f < j && j < t - 1)
          p.set_v(i, j, p.v(pmod(i + 1 - i % 2, mod), j - f));
        else if (j == t - 1 && j == 1)
          p.set_v(i, j, pmod(i + 1, mod));
        else if (j == t - 1)
          p.set_v(i, j, pmod(i - 2, mod));
      }
  }
  if (cycle && n <= t + 1) p.set_v(0, n - 2, t);
  const bool tail = cycle ? n <= t + 1 : n <= t + 3;
  if (tail) {
    if (cycle) stated.pop_back();
    for (long j = std::max(0L, n - 3); j < t; ++j) stated.push_back(p.v_id(1, j));
  }
  return finish(p, std::move(stated), plan);
}

inline long cycle_path_cell(const Painter& p, long n, long i, long j) {
  if (n <= 4) {
    static constexpr int table[5][3][2] = {
        {{2, 2}, {3, 0}, {-1, -1}},
        {{0, 0}, {3, 1}, {-1, -1}},
        {{1, 0}, {-1, -1}, {-1, -1}},
        {{1, 1}, {2, 0}, {-1, -1}},
        {{0, 1}, {1, 2}, {2, 1}},
    };
    for (int c = 0; c < 5; ++c)
      for (const auto& cell : table[c])
        if (cell[0] == i && cell[1] == j) return c;
    return p.v(i, j - 2);
  }
  const bool odd_i = i % 2 == 1;
  if (j == 1 && n == 5) return i + 1;
  if (n % 2 == 1 && j < (n - 3) / 2) return pmod(i + 2 * j + 3, n);
  if (n % 2 == 0 && ((!odd_i && j < (n - 4) / 2) || (odd_i && j < (n - 2) / 2)))
    return pmod(i + 2 * j + 4 - 2 * (i % 2), n);
  if (j == 1 && n == 6 && !odd_i) return pmod(i + 2, 6);
  return p.v(i, j - 2);
}

inline Construction cycle_path(const Graph& g, long n, long t, int k, bool cycle_copies) {
  Painter p(g, n, t, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), true);
  auto stated = path_rainbow(p, n, n > 4);
  for (long j = 0; j < t; ++j)
    for (long i = 0; i < n; ++i) {
      long c = -2;
      if (cycle_copies && j == 2) {
        if (i == 0 && n == 4) c = 2;
        else if (i == 3 && n == 4) c = 4;
        else if (i == 0 && n == 3) c = 3;
        else if (n == 5 || n == 7) c = pmod(i + 2, n);
        else if (n == 6 || n == 8) c = p.v(pmod(i + (i % 2 ? -1 : 1), n), 0);
      }
      p.set_v(i, j, c == -2 ? cycle_path_cell(p, n, i, j) : c);
    }
  if (n <= 4) {
    stated.push_back(p.v_id(1, 1));
    stated.push_back(p.v_id(2, 1));
    if (n == 3) stated.push_back(p.s_id(0, 2));
  }
  return finish(p, std::move(stated), plan);
}

inline Construction cycle_star(const Graph& g, long n, long t, int k) {
  const long h_order = t + 1;
  Painter p(g, n, h_order, k);
  auto plan = paint_skeleton(p, n, skeleton_modulus(g, n), true);
  auto stated = path_rainbow(p, n, true);
  if (n <= t + 2) {
    const long alpha = k - n;
    plan.alpha = static_cast<int>(alpha);
    for (long j = 0; j < h_order; ++j)
      for (long i = 0; i < n; ++i) {
        const bool end = i == 0 || i == n - 1;
        if (j < alpha)
          p.set_v(i, j, n + (i + j) % alpha);
        else if (j < alpha + n - 2 && i == 0)
          p.set_v(i, j, pmod(j - alpha + 1, n));
        else if (j < alpha + n - 2 && i == n - 1)
          p.set_v(i, j, pmod(j - alpha, n));
        else if (j < alpha + n - 3 && !end)
          p.set_v(i, j, pmod(i + j - alpha + 1, n));
        else
          p.set_v(i, j, p.v(i, j - 1));
      }
    if (n <= (t + 3) / 2)
      for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 0));
    else
      for (long i = 1; i <= t + 3 - n; ++i) stated.push_back(p.v_id(i, 1));
  } else {
    for (long j = 0; j < h_order; ++j)
      for (long i = 0; i < n; ++i) {
        const bool inner = 0 < j && j <= std::min(n - 5, t);
        if (j == 0)
          p.set_v(i, j, pmod(i + 3, n));
        else if (inner && i % 2 == 0)
          p.set_v(i, j, pmod(i - j - 2, n));
        else if (inner)
          p.set_v(i, j, pmod(i + j + 3, n));
        else
          p.set_v(i, j, p.v(i, j - 1));
      }
  }
  return finish(p, std::move(stated), plan);
}

// ---------------------------------------------------------------------------
// star left operands

/// S_n⊡H from a b-chromatic coloring of H: copy 0 keeps c_h, the inserted
/// vertices and leaves use a block of min{n, |V(H)|+2} fresh colors, and
/// each other copy is filled greedily with the block colors its inserted
/// vertex still misses.
inline Construction star_generic(const Graph& g, long n, const Graph& h, const Coloring& ch) {
  const long h_order = static_cast<long>(h.order());
  const long phi = ch.k;
  const long alpha = std::min(n, h_order + 2);
  const int k = static_cast<int>(alpha + phi);
  Painter p(g, n + 1, h_order, k);
  PlanParams plan;
  plan.alpha = static_cast<int>(alpha);

  p.set_u(0, 0);
  for (long j = 0; j < h_order; ++j) p.set_v(0, j, ch.assignment[j]);
  for (long i = 1; i <= n; ++i) {
    p.set_s(0, i, phi + (i - 1) % alpha);
    p.set_u(i, phi + i % alpha);
  }

  const long delta = static_cast<long>(h.max_degree());
  for (long i = 1; i <= n; ++i) {
    const int own_s = p.s(0, i);
    std::vector<int> required;
    for (long c = phi; c < phi + alpha; ++c)
      if (c != own_s && c != p.u(i)) required.push_back(static_cast<int>(c));
    std::vector<int> allowed = required;
    if (n <= delta + 2)
      for (long c = 0; c <= delta + 2 - n && c < k; ++c) allowed.push_back(static_cast<int>(c));
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    std::erase(allowed, own_s);

    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (long j = 0; j < h_order; ++j) {
      auto fits = [&](int c) {
        for (Vertex w : h.neighbors(static_cast<Vertex>(j)))
          if (p.v(i, static_cast<long>(w)) == c) return false;
        return true;
      };
      int pick = -1;
      for (int c : required)
        if (!used[c] && fits(c)) {
          pick = c;
          break;
        }
      if (pick < 0)
        for (int c : allowed)
          if (fits(c)) {
            pick = c;
            break;
          }
      if (pick >= 0) {
        p.set_v(i, j, pick);
        used[pick] = 1;
      }
    }
  }

  std::vector<Vertex> stated;
  for (long i = 1; i <= alpha; ++i) stated.push_back(p.s_id(0, i));
  const auto h_report = verify_b_coloring(h, ch);
  for (Vertex r : *h_report.rainbow) stated.push_back(p.v_id(0, static_cast<long>(r)));
  return finish(p, std::move(stated), plan);
}

inline Construction star_star_small(const Graph& g, long n, long t, int k) {
  Painter p(g, n + 1, t + 1, k);
  if (2 * n <= t + 1) {
    p.set_u(0, 2 * n);
    p.set_v(0, 0, 2 * n);
    for (long j = 1; j <= t; ++j) p.set_v(0, j, 1 + (j - 1) % n);
    for (long i = 1; i <= n; ++i) {
      p.set_u(i, 2 * n);
      p.set_s(0, i, 2 * (i - 1));
      p.set_v(i, 0, 2 * i - 1);
      for (long j = 1; j <= t; ++j) p.set_v(i, j, 2 * i + (j - 1) % (2 * n - 1));
    }
  } else {
    p.set_u(0, 1);
    p.set_v(0, 0, 1);
    for (long j = 1; j <= t; ++j) p.set_v(0, j, 3);
    for (long i = 1; i <= n; ++i) {
      p.set_u(i, 1);
      p.set_s(0, i, pmod(2 * (i - 1), t + 2));
      p.set_v(i, 0, pmod(2 * i - 1, t + 2));
      for (long j = 1; j <= t; ++j) p.set_v(i, j, 2 * i + (j - 1) % (t + 2));
    }
  }
  return finish(p, {});
}

// ---------------------------------------------------------------------------
// complete left operands

/// Colors of the K_n⊡P_3 scheme (n >= 7, palette n+1): c(u_i) = i, the
/// inserted vertices by the residue rule, copy columns 0 and 2 alike.
///
/// `patched` replaces the printed even-n rule by the odd-n one, which for
/// even n leaves color n without a b-vertex; moving s_{0,n-1} to color 1 and
/// putting n on v_{0,0}, v_{0,2} and v_{n-1,2} makes v_{0,0} that b-vertex.
struct CompleteScheme {
  long n;
  bool patched = false;

  bool odd_rule() const { return n % 2 == 1 || patched; }

  long s(long a, long b) const {
    if (patched && std::min(a, b) == 0 && std::max(a, b) == n - 1) return 1;
    if (odd_rule()) return pmod(a + b + 1, n + 1);
    long i = a;
    long h = pmod(b - a, n);
    if (h > n / 2) {
      i = b;
      h = n - h;
    }
    if (h == n / 2) return std::min(a, b) + 1;
    if (h == 1) return pmod(i - 2, n + 1);
    if (h % 2 == 0) return pmod(i + (n - h) / 2, n + 1);
    return pmod(i - (h - 1) / 2, n + 1);
  }

  long copy(long i, long column) const {
    if (column == 1) return i;
    if (patched && (i == 0 || (i == n - 1 && column == 2))) return n;
    if (odd_rule()) return pmod(2 * i + 1, n + 1);
    return s(pmod(i - 1, n), pmod(i + 1, n));
  }
};

inline void paint_complete_base(Painter& p, const CompleteScheme& scheme) {
  for (long i = 0; i < scheme.n; ++i) {
    p.set_u(i, i);
    for (long j = i + 1; j < scheme.n; ++j) p.set_s(i, j, scheme.s(i, j));
  }
}

inline std::vector<Vertex> scheme_rainbow(const Painter& p, const CompleteScheme& scheme, long mid_column) {
  const long n = scheme.n;
  std::vector<Vertex> stated;
  if (scheme.patched) {
    for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 1));
    stated.push_back(p.v_id(0, 0));
  } else if (n % 2 == 1) {
    for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 1));
    stated.push_back(p.v_id((n - 1) / 2, mid_column));
  } else {
    for (long i = 0; i < n / 2; ++i) {
      stated.push_back(p.v_id(i, 1));
      stated.push_back(p.v_id(i, mid_column));
    }
    stated.push_back(p.v_id(n / 2, 1));
  }
  return stated;
}

// K_n⊡P_3 (or the first three copy columns of a larger H).
inline Construction complete_scheme(const Graph& g, long n, long h_order, int k, bool patched) {
  Painter p(g, n, h_order, k);
  const CompleteScheme scheme{n, patched};
  paint_complete_base(p, scheme);
  for (long j = 0; j < std::min(h_order, 3L); ++j)
    for (long i = 0; i < n; ++i) p.set_v(i, j, scheme.copy(i, j));
  auto stated = scheme_rainbow(p, scheme, h_order > 2 ? 2 : 0);
  return finish(p, std::move(stated));
}

// K_n⊡P_t and K_n⊡C_t for n >= 2t+1 > 7, palette n+2.
inline Construction complete_long(const Graph& g, long n, long t, int k, bool patched) {
  Painter p(g, n, t, k);
  const CompleteScheme scheme{n, patched};
  paint_complete_base(p, scheme);
  for (long j = 0; j < t; ++j)
    for (long i = 0; i < n; ++i) {
      const bool top = n % 2 == 0 ? (i != n / 2 && (j == 0 || j == 3)) || (i == n / 2 && j == 1)
                                  : (i != (n - 1) / 2 && j == 2) || (i == (n - 1) / 2 && (j == 0 || j == 3));
      if (top)
        p.set_v(i, j, n + 1);
      else if (j == 4 || j == 5)
        p.set_v(i, j, p.v(i, j - 3));
      else if (j >= 3)
        p.set_v(i, j, p.v(i, j - 2));
      else
        p.set_v(i, j, scheme.copy(i, j));
    }
  auto stated = scheme_rainbow(p, scheme, 2);
  for (long i = 0; i < n; ++i)
    if (p.v(i, n % 2 == 0 ? 0 : 2) == n + 1) {
      stated.push_back(p.v_id(i, n % 2 == 0 ? 0 : 2));
      break;
    }
  return finish(p, std::move(stated));
}

// K_4 with any path or cycle H, palette 6.
inline Construction complete_four(const Graph& g, long t, int k) {
  Painter p(g, 4, t, k);
  for (long i = 0; i < 4; ++i) {
    p.set_u(i, i);
    for (long j = i + 1; j < 4; ++j) p.set_s(i, j, j == i + 1 ? pmod(i - 1, 4) : 4 + i);
  }
  for (long j = 0; j < t; ++j)
    for (long i = 0; i < 4; ++i) {
      if (j == 1 && (i == 1 || i == 3))
        p.set_v(i, j, 4);
      else if (j == 1)
        p.set_v(i, j, 5);
      else if (j == 2)
        p.set_v(i, j, i);
      else if (j == 0)
        p.set_v(i, j, (i + 1) % 4);
      else
        p.set_v(i, j, p.v(i, j - 2));
    }
  return finish(p, {});
}

// K_n⊡C_4 for n >= 9, palette n+1.
inline Construction complete_c4(const Graph& g, long n, int k, bool patched) {
  Painter p(g, n, 4, k);
  const CompleteScheme scheme{n, patched};
  paint_complete_base(p, scheme);
  for (long j = 0; j < 4; ++j)
    for (long i = 0; i < n; ++i) p.set_v(i, j, j < 3 ? scheme.copy(i, j) : p.v(i, 1));
  for (long j = 0; j < 4; ++j)
    for (long i = 0; i < n; ++i) {
      if (n % 2 == 0) {
        if (i == n / 2 && (j == 1 || j == 3)) p.set_v(i, j, p.u(n / 2));
        else if (j == 3) p.set_v(i, j, p.v(i, 1));
        else if (j == 0) p.set_v(i, j, p.v(i, 2));
      } else {
        if (i == (n - 1) / 2 && j == 0) p.set_v(i, j, n + 1);
        else if (j == 2) p.set_v(i, j, p.v(i, 0));
        else if (j == 3) p.set_v(i, j, p.v(i, 1));
      }
    }
  auto stated = scheme_rainbow(p, scheme, 2);
  return finish(p, std::move(stated));
}

// K_n⊡C_3 for n >= 7, palette n+2: the K_n⊡P_3 scheme with a fresh color on
// the third copy vertex.
inline Construction complete_c3(const Graph& g, long n, int k, bool patched) {
  Painter p(g, n, 3, k);
  const CompleteScheme scheme{n, patched};
  paint_complete_base(p, scheme);
  for (long i = 0; i < n; ++i) {
    p.set_v(i, 0, scheme.copy(i, 0));
    p.set_v(i, 1, scheme.copy(i, 1));
    p.set_v(i, 2, i >= 1 ? n + 1 : scheme.copy(i, 2));
  }
  auto stated = scheme_rainbow(p, scheme, 0);
  stated.push_back(p.v_id(1, 2));
  return finish(p, std::move(stated));
}

// K_n⊡S_t, palette n or n+1.
inline Construction complete_star(const Graph& g, long n, long t, int k, bool patched) {
  Painter p(g, n, t + 1, k);
  std::vector<Vertex> stated;
  if (n == 2 * t + 3) {
    for (long i = 0; i < n; ++i) {
      p.set_u(i, i);
      p.set_v(i, 0, i);
      for (long kk = 1; kk <= t; ++kk) p.set_v(i, kk, pmod(i + 2 * kk, n));
      for (long h = 1; h <= t; ++h) p.set_s(i, i + h, pmod(i + 2 * (h / 2) - 1, n));
    }
    stated = path_rainbow(p, n, true);
  } else {
    const CompleteScheme scheme{n, patched};
    paint_complete_base(p, scheme);
    for (long i = 0; i < n; ++i) {
      p.set_v(i, 0, scheme.copy(i, 1));
      p.set_v(i, 1, scheme.copy(i, 0));
      for (long j = 2; j <= t; ++j) p.set_v(i, j, scheme.copy(i, 2));
    }
    if (patched) {
      for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 0));
      stated.push_back(p.v_id(0, 1));
    } else if (n % 2 == 1) {
      for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 0));
      stated.push_back(p.v_id((n - 1) / 2, 2));
    } else {
      for (long i = 0; i < n / 2; ++i) {
        stated.push_back(p.v_id(i, 0));
        stated.push_back(p.v_id(i, 2));
      }
      stated.push_back(p.v_id(n / 2, 0));
    }
  }
  return finish(p, std::move(stated));
}

// K_n⊡K_1 and K_6⊡K_2.
inline Construction complete_k1(const Graph& g, long n, long h_order, int k) {
  Painter p(g, n, h_order, k);
  const long mod = n % 2 == 0 ? n - 1 : n;
  for (long i = 0; i < n; ++i) {
    p.set_u(i, pmod(2 * i, mod));
    p.set_v(i, 0, pmod(2 * i, mod));
    for (long j = i + 1; j < n; ++j) p.set_s(i, j, pmod(i + j, mod));
  }
  if (n % 2 == 0) p.set_s(0, n - 1, 1);
  for (long j = 1; j < h_order; ++j)
    for (long i = 0; i < n; ++i) p.set_v(i, j, 5);
  std::vector<Vertex> stated;
  if (n % 2 == 1)
    for (long i = 0; i < n; ++i) stated.push_back(p.v_id(i, 0));
  return finish(p, std::move(stated));
}

// K_2⊡H from a b-chromatic coloring of H.
inline Construction k2_generic(const Graph& g, const Graph& h, const Coloring& ch) {
  const int k = ch.k + 1;
  Painter p(g, 2, static_cast<long>(h.order()), k);
  p.set_u(0, 0);
  p.set_u(1, 0);
  p.set_s(0, 1, ch.k);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < static_cast<long>(h.order()); ++j) p.set_v(i, j, ch.assignment[j]);
  std::vector<Vertex> stated{p.s_id(0, 1)};
  const auto h_report = verify_b_coloring(h, ch);
  for (Vertex r : *h_report.rainbow) stated.push_back(p.v_id(0, static_cast<long>(r)));
  return finish(p, std::move(stated));
}

// ---------------------------------------------------------------------------
// repair

/// One vertex per color for the repair search to pin as b-vertices: a stated
/// vertex already carrying that color if there is one, otherwise the vertex
/// of degree >= k-1 whose neighbourhood misses the fewest colors. A positive
/// `spread` penalizes neighbours shared with vertices already picked; a
/// nonzero `noise_seed` perturbs the scores for restarts.
inline std::vector<std::pair<Vertex, int>> choose_rainbow(const Graph& g, int k, const std::vector<int>& c0,
                                                          std::span<const Vertex> stated, int spread = 0,
                                                          std::uint32_t noise_seed = 0) {
  std::mt19937 rng(noise_seed);
  std::uniform_int_distribution<long> noise(0, noise_seed ? 3 : 0);
  std::vector<char> taken(g.order(), 0);
  std::vector<int> covered(g.order(), 0);
  std::vector<std::pair<Vertex, int>> rainbow;
  auto eligible = [&](Vertex v) { return !taken[v] && g.degree(v) + 1 >= static_cast<std::size_t>(k); };
  auto missing = [&](Vertex v, int x) {
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (Vertex w : g.neighbors(v))
      if (c0[w] >= 0 && c0[w] != x) seen[c0[w]] = 1;
    return k - 1 - static_cast<int>(std::count(seen.begin(), seen.end(), 1));
  };

  for (int x = 0; x < k; ++x) {
    std::optional<Vertex> pick;
    for (Vertex v : stated)
      if (eligible(v) && c0[v] == x) {
        pick = v;
        break;
      }
    if (!pick) {
      long best = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!eligible(v)) continue;
        long score = missing(v, x) + noise(rng);
        if (c0[v] < 0) score += 1;
        else if (c0[v] != x) score += 2;
        if (spread > 0)
          for (Vertex w : g.neighbors(v)) score += static_cast<long>(spread) * covered[w];
        if (!pick || score < best) {
          best = score;
          pick = v;
        }
      }
    }
    if (!pick) return {};
    taken[*pick] = 1;
    for (Vertex w : g.neighbors(*pick)) ++covered[w];
    rainbow.emplace_back(*pick, x);
  }
  return rainbow;
}

struct RepairOutcome {
  std::optional<std::vector<int>> colors;
  std::string note;
};

inline RepairOutcome repair(const Graph& g, int k, const std::vector<int>& c0, std::span<const Vertex> stated,
                            const SearchBudget& budget) {
  SearchClock clock(budget);
  std::vector<int> out;
  struct Attempt {
    bool use_stated;
    int spread;
  };
  // cheap complete searches first, then local search on the same pins
  for (bool local : {false, true})
    for (const Attempt a : {Attempt{true, 0}, Attempt{false, 0}, Attempt{false, 1}, Attempt{true, 1}, Attempt{false, 50}}) {
      if (a.use_stated && stated.empty()) continue;
      const auto rainbow = choose_rainbow(g, k, c0, a.use_stated ? stated : std::span<const Vertex>{}, a.spread);
      if (rainbow.empty()) continue;
      SearchBudget step = budget;
      step.node_limit = local ? 100'000 : 20'000;
      SearchClock step_clock(step);
      const auto outcome = local ? local_search_rainbow_coloring(g, k, rainbow, c0, step_clock, out)
                                 : search_rainbow_coloring(g, k, rainbow, c0, step_clock, out);
      if (outcome == SearchOutcome::found) {
        std::string note = local ? "recolored by local search around " : "completed around ";
        return {out, note + (a.use_stated ? "the stated b-rainbow set" : "a new b-rainbow set")};
      }
    }
  for (std::uint32_t seed = 1; seed <= 40 && !clock.stopped(); ++seed) {
    const auto rainbow = choose_rainbow(g, k, c0, {}, 0, seed);
    if (rainbow.empty()) break;
    SearchBudget step = budget;
    step.node_limit = 5'000;
    SearchClock step_clock(step);
    if (search_rainbow_coloring(g, k, rainbow, c0, step_clock, out) == SearchOutcome::found)
      return {out, "completed around a randomized b-rainbow set"};
    clock.tick();
  }
  if (g.order() > 40) return {std::nullopt, "repair search ran out of budget"};
  try {
    if (auto found = detail::exists_b_coloring(g, k, clock)) return {found->assignment, "found by exhaustive search"};
  } catch (const BudgetExceeded&) {
    return {std::nullopt, "repair search ran out of budget"};
  }
  return {std::nullopt, "no b-chromatic coloring with this many colors"};
}

inline VerifiedColoring finalize(Construction c, std::string branch, const SearchBudget& budget) {
  VerifiedColoring result{c.graph, Coloring{c.k, c.colors}, {}, std::move(branch), c.plan,
                          std::move(c.stated_rainbow), false, false, c.note};
  const bool complete = std::all_of(c.colors.begin(), c.colors.end(), [](int x) { return x >= 0; });
  if (complete) result.report = verify_b_coloring(result.graph, result.coloring);
  if ((!complete || !result.report.is_b_coloring()) && !c.alternative.empty()) {
    const Coloring alternative{c.k, c.alternative};
    if (auto report = verify_b_coloring(result.graph, alternative); report.is_b_coloring()) {
      result.coloring = alternative;
      result.report = std::move(report);
      result.repaired = true;
      result.repair_note = "printed formula is not b-chromatic; the patched odd-n scheme verifies";
      return result;
    }
    c.colors = c.alternative;
    result.stated_rainbow = c.alternative_rainbow;
  }
  if (!complete || !result.report.is_b_coloring()) {
    auto outcome = repair(result.graph, c.k, c.colors, result.stated_rainbow, budget);
    if (!outcome.colors)
      throw ConstructionInvalid(result.branch + ": formula does not verify and " + outcome.note);
    result.coloring.assignment = std::move(*outcome.colors);
    result.report = verify_b_coloring(result.graph, result.coloring);
    if (!result.report.is_b_coloring()) throw ConstructionInvalid(result.branch + ": repaired coloring fails");
    result.repaired = true;
    if (!result.repair_note.empty()) result.repair_note += "; ";
    if (c.printed) result.repair_note += complete ? "formula coloring is not b-chromatic; " : "formula leaves cells open; ";
    result.repair_note += outcome.note;
  }
  result.stated_rainbow_confirmed =
      !result.stated_rainbow.empty() &&
      std::all_of(result.stated_rainbow.begin(), result.stated_rainbow.end(),
                  [&](Vertex v) { return result.report.is_b_vertex_of(v); });
  return result;
}

inline void require_b_coloring(const Graph& h, const Coloring& ch) {
  if (!verify_b_coloring(h, ch).is_b_coloring())
    throw PreconditionViolated("operand coloring is not a b-chromatic coloring");
}

}  // namespace detail

/// P_n⊡H for n > 2|V(H)| + 3, with 2|V(H)| + 3 colors.
inline VerifiedColoring color_generic_path_corona(int n, const Graph& h, const SearchBudget& budget = default_repair_budget()) {
  const long t = static_cast<long>(h.order());
  if (n <= 2 * t + 3) throw PreconditionViolated("path corona needs n > 2|V(H)| + 3");
  const auto g = svn_corona(build_family({FamilyKind::Path, n}), h);
  return detail::finalize(detail::long_corona(g, n, t, false), "Prop3.1b", budget);
}

/// C_n⊡H for n > 2|V(H)| + 2, with 2|V(H)| + 3 colors.
inline VerifiedColoring color_generic_cycle_corona(int n, const Graph& h, const SearchBudget& budget = default_repair_budget()) {
  const long t = static_cast<long>(h.order());
  if (n <= 2 * t + 2) throw PreconditionViolated("cycle corona needs n > 2|V(H)| + 2");
  const auto g = svn_corona(build_family({FamilyKind::Cycle, n}), h);
  return detail::finalize(detail::long_corona(g, n, t, true), "Prop4.1b", budget);
}

/// S_n⊡H with min{n, |V(H)|+2} + φ(H) colors, given an optimal b-chromatic
/// coloring c_h of H. Requires Δ(H) + 1 < min{n, |V(H)|+2} + φ(H).
inline VerifiedColoring color_generic_star_corona(int n, const Graph& h, const Coloring& c_h,
                                                  const SearchBudget& budget = default_repair_budget()) {
  if (n < 1) throw PreconditionViolated("star needs at least one leaf");
  detail::require_b_coloring(h, c_h);
  const long alpha = std::min<long>(n, static_cast<long>(h.order()) + 2);
  if (static_cast<long>(h.max_degree()) + 1 >= alpha + c_h.k)
    throw HypothesisViolated("Δ(H) + 1 must be below min{n, |V(H)|+2} + φ(H)");
  const auto g = svn_corona(build_family({FamilyKind::Star, n}), h);
  return detail::finalize(detail::star_generic(g, n, h, c_h), "Lemma5.1", budget);
}

/// K_2⊡H with φ(H) + 1 colors from a b-chromatic coloring of H.
inline VerifiedColoring color_k2_corona(const Graph& h, const Coloring& c_h,
                                        const SearchBudget& budget = default_repair_budget()) {
  detail::require_b_coloring(h, c_h);
  const auto g = svn_corona(build_family({FamilyKind::Complete, 2}), h);
  return detail::finalize(detail::k2_generic(g, h, c_h), "Lemma6.1", budget);
}

namespace detail {

/// The formula coloring of left⊡right before verification.
inline Construction formula_coloring(const FamilySpec& left, const FamilySpec& right, const PhiResult& phi) {
  if (!phi.supported) throw Unsupported(to_string(left) + " with " + to_string(right) + ": " + phi.branch);
  const long n = left.size;
  const long t = right.size;
  const int k = *phi.value;
  const auto h = build_family(right);
  const auto g = svn_corona(left, right);
  const long h_order = right.order();
  const bool generic = phi.branch.starts_with("Prop");

  // even n: keep the printed scheme, attach the patched one as fallback
  auto with_patch = [&](auto make) {
    auto printed = make(false);
    if (n % 2 == 0) {
      auto patched = make(true);
      printed.alternative = std::move(patched.colors);
      printed.alternative_rainbow = std::move(patched.stated_rainbow);
    }
    return printed;
  };

  auto build = [&]() -> detail::Construction {
    using K = FamilyKind;
    switch (left.kind) {
      case K::Path:
        if (generic) return detail::long_corona(g, n, h_order, false);
        switch (right.kind) {
          case K::Path: return detail::path_path(g, n, t, k);
          case K::Cycle: return detail::path_cycle(g, n, t, k);
          case K::Star: return detail::path_star(g, n, t, k);
          case K::Complete: return detail::with_complete(g, n, t, k, false);
        }
        break;
      case K::Cycle:
        if (generic) return detail::long_corona(g, n, h_order, true);
        switch (right.kind) {
          case K::Path: return detail::cycle_path(g, n, t, k, false);
          case K::Cycle: return detail::cycle_path(g, n, t, k, true);
          case K::Star: return detail::cycle_star(g, n, t, k);
          case K::Complete: return detail::with_complete(g, n, t, k, true);
        }
        break;
      case K::Star:
        if (right.kind == K::Star && n < t) return detail::star_star_small(g, n, t, k);
        return detail::star_generic(g, n, h, optimal_family_coloring(right));
      case K::Complete: {
        if (n == 2) {
          if (right.kind == K::Path && t == 4) return detail::search_only(g, k, "K2⊡P4 has no printed formula");
          return detail::k2_generic(g, h, optimal_family_coloring(right));
        }
        const bool c3 = (right.kind == K::Cycle || right.kind == K::Complete) && t == 3;
        if (n == 3 && right.kind != K::Star && !(right.kind == K::Complete && t == 1)) {
          if (right.kind == K::Path) return detail::cycle_path(g, n, t, k, false);
          if (right.kind == K::Complete && t == 2) return detail::with_complete(g, n, t, k, true);
          return detail::cycle_path(g, n, t, k, true);
        }
        switch (right.kind) {
          case K::Path:
            if (n == 4) return detail::complete_four(g, t, k);
            if (t == 3) return with_patch([&](bool q) { return detail::complete_scheme(g, n, t, k, q); });
            return with_patch([&](bool q) { return detail::complete_long(g, n, t, k, q); });
          case K::Cycle:
            if (n == 4) return detail::complete_four(g, t, k);
            if (t == 4) return with_patch([&](bool q) { return detail::complete_c4(g, n, k, q); });
            if (t == 3) return with_patch([&](bool q) { return detail::complete_c3(g, n, k, q); });
            return with_patch([&](bool q) { return detail::complete_long(g, n, t, k, q); });
          case K::Star: return with_patch([&](bool q) { return detail::complete_star(g, n, t, k, q); });
          case K::Complete:
            if (n == 4 && c3) return detail::complete_four(g, t, k);
            if (c3) return with_patch([&](bool q) { return detail::complete_c3(g, n, k, q); });
            if ((n == 4 && t <= 2) || (n == 5 && t == 2))
              return detail::search_only(g, k, to_string(left) + "⊡" + to_string(right) + " has no printed formula");
            if (t == 1) return detail::complete_k1(g, n, 1, k);
            if (n == 6) return detail::complete_k1(g, n, 2, k);
            return with_patch([&](bool q) { return detail::complete_scheme(g, n, 2, k, q); });
        }
        break;
      }
    }
    throw Unsupported("no construction for " + to_string(left) + " with " + to_string(right));
  };
  return build();
}

}  // namespace detail

/// A verified b-chromatic coloring of left⊡right with φ colors.
inline VerifiedColoring construct_coloring(const FamilySpec& left, const FamilySpec& right,
                                           const SearchBudget& budget = default_repair_budget()) {
  const auto phi = phi_closed_form(left, right);
  if (!phi.supported) throw Unsupported(to_string(left) + " with " + to_string(right) + ": " + phi.branch);
  return detail::finalize(detail::formula_coloring(left, right, phi), phi.branch, budget);
}

}  // namespace svn
