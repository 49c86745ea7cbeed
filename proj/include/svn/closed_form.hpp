#pragma once

// Closed-form b-chromatic numbers of SVN coronas of the base families.
//
// Each theorem is a table of clauses evaluated top to bottom; every clause
// carries an explicit predicate (no implicit "otherwise") so the tables can
// be checked for gaps and overlaps independently of evaluation order.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "svn/coloring.hpp"
#include "svn/graph.hpp"

namespace svn {

struct PhiResult {
  std::optional<int> value;  // empty iff !supported
  std::string branch;
  bool supported = false;
};

struct Clause {
  std::string_view label;
  bool (*applies)(int n, int t);
  int (*value)(int n, int t);
};

/// One theorem: a (left kind, right kind) pair and its clauses over
/// n >= min_n, t >= min_t. When `scoped`, the clauses only cover the pairs
/// with m(K_n⊡G) <= n + 2 and everything else is unsupported.
struct CaseTable {
  std::string_view name;
  FamilyKind left;
  FamilyKind right;
  int min_n;
  int min_t;
  bool scoped;
  std::span<const Clause> clauses;
};

namespace tables {

inline constexpr Clause path_path[] = {
    {"Thm3.2:n=3,t in {3,4}", [](int n, int t) { return n == 3 && (t == 3 || t == 4); },
     [](int, int) { return 4; }},
    {"Thm3.2:n=3,t>=5 or n in {4,5}", [](int n, int t) { return (n == 3 && t >= 5) || n == 4 || n == 5; },
     [](int, int) { return 5; }},
    {"Thm3.2:6<=n<=2t+3", [](int n, int t) { return 6 <= n && n <= 2 * t + 3; },
     [](int n, int) { return n - 1; }},
    {"Prop3.1b", [](int n, int t) { return n > 2 * t + 3; }, [](int, int t) { return 2 * t + 3; }},
};

inline constexpr Clause path_cycle[] = {
    {"Thm3.3:(n,t)=(3,4)", [](int n, int t) { return n == 3 && t == 4; }, [](int, int) { return 4; }},
    {"Thm3.3:n=3,t!=4 or n in {4,5}", [](int n, int t) { return (n == 3 && t != 4) || n == 4 || n == 5; },
     [](int, int) { return 5; }},
    {"Thm3.3:6<=n<=2t+3", [](int n, int t) { return 6 <= n && n <= 2 * t + 3; },
     [](int n, int) { return n - 1; }},
    {"Prop3.1b", [](int n, int t) { return n > 2 * t + 3; }, [](int, int t) { return 2 * t + 3; }},
};

// ceil((t+4)/2) == (t+5)/2 in integer division.
inline constexpr Clause path_star[] = {
    {"Thm3.4:n<=(t+3)/2", [](int n, int t) { return 2 * n <= t + 3; }, [](int n, int) { return 2 * n - 1; }},
    {"Thm3.4:n=ceil((t+4)/2)", [](int n, int t) { return n == (t + 5) / 2; }, [](int, int t) { return t + 2; }},
    {"Thm3.4:ceil((t+4)/2)<n<=t+4", [](int n, int t) { return n > (t + 5) / 2 && n <= t + 4; },
     [](int, int t) { return t + 3; }},
    {"Thm3.4:t+4<n<=2t+5", [](int n, int t) { return t + 4 < n && n <= 2 * t + 5; },
     [](int n, int) { return n - 1; }},
    {"Prop3.1b", [](int n, int t) { return n > 2 * t + 5; }, [](int, int t) { return 2 * t + 5; }},
};

inline constexpr Clause path_complete[] = {
    {"Thm3.5:n<=t+3", [](int n, int t) { return n <= t + 3; }, [](int, int t) { return t + 2; }},
    {"Thm3.5:t+3<n<=2t+3", [](int n, int t) { return t + 3 < n && n <= 2 * t + 3; },
     [](int n, int) { return n - 1; }},
    {"Prop3.1b", [](int n, int t) { return n > 2 * t + 3; }, [](int, int t) { return 2 * t + 3; }},
};

inline constexpr Clause cycle_path[] = {
    {"Thm4.2:n in {3,4}", [](int n, int) { return n == 3 || n == 4; }, [](int, int) { return 5; }},
    {"Thm4.2:5<=n<=2t+2", [](int n, int t) { return 5 <= n && n <= 2 * t + 2; }, [](int n, int) { return n; }},
    {"Prop4.1b", [](int n, int t) { return n > 2 * t + 2; }, [](int, int t) { return 2 * t + 3; }},
};

inline constexpr Clause cycle_cycle[] = {
    {"Thm4.3:n in {3,4}", [](int n, int) { return n == 3 || n == 4; }, [](int, int) { return 5; }},
    {"Thm4.3:5<=n<=2t+2", [](int n, int t) { return 5 <= n && n <= 2 * t + 2; }, [](int n, int) { return n; }},
    {"Prop4.1b", [](int n, int t) { return n > 2 * t + 2; }, [](int, int t) { return 2 * t + 3; }},
};

inline constexpr Clause cycle_star[] = {
    {"Thm4.4:n<=floor((t+3)/2)", [](int n, int t) { return n <= (t + 3) / 2; }, [](int n, int) { return 2 * n; }},
    {"Thm4.4:floor((t+3)/2)<n<=t+2", [](int n, int t) { return (t + 3) / 2 < n && n <= t + 2; },
     [](int, int t) { return t + 3; }},
    {"Thm4.4:t+3<=n<=2t+4", [](int n, int t) { return t + 3 <= n && n <= 2 * t + 4; },
     [](int n, int) { return n; }},
    {"Prop4.1b", [](int n, int t) { return n > 2 * t + 4; }, [](int, int t) { return 2 * t + 5; }},
};

inline constexpr Clause cycle_complete[] = {
    {"Thm4.5:n<=t+1", [](int n, int t) { return n <= t + 1; }, [](int, int t) { return t + 2; }},
    {"Thm4.5:t+2<=n<=2t+3", [](int n, int t) { return t + 2 <= n && n <= 2 * t + 3; },
     [](int n, int) { return n; }},
    {"Prop4.1b", [](int n, int t) { return n > 2 * t + 3; }, [](int, int t) { return 2 * t + 3; }},
};

// Star left operands: min{n, |V(H)|+2} + φ(H) with φ(H) of the base family.
inline constexpr Clause star_path[] = {
    {"Thm5.3:t=3,n in {3,4,5}", [](int n, int t) { return t == 3 && n <= 5; }, [](int n, int) { return n + 2; }},
    {"Thm5.3:t=4,n in {3,...,6}", [](int n, int t) { return t == 4 && n <= 6; }, [](int n, int) { return n + 2; }},
    {"Thm5.3:n<=t+2,t>4", [](int n, int t) { return t > 4 && n <= t + 2; }, [](int n, int) { return n + 3; }},
    {"Thm5.3:t=3,n>5", [](int n, int t) { return t == 3 && n > 5; }, [](int, int t) { return t + 4; }},
    {"Thm5.3:t=4,n>6", [](int n, int t) { return t == 4 && n > 6; }, [](int, int t) { return t + 4; }},
    {"Thm5.3:n>t+2>6", [](int n, int t) { return t > 4 && n > t + 2; }, [](int, int t) { return t + 5; }},
};

inline constexpr Clause star_cycle[] = {
    {"Thm5.3:t=4,n<=6", [](int n, int t) { return t == 4 && n <= 6; }, [](int n, int) { return n + 2; }},
    {"Thm5.3:t=4,n>6", [](int n, int t) { return t == 4 && n > 6; }, [](int, int t) { return t + 4; }},
    {"Thm5.3:n<=t+2,t!=4", [](int n, int t) { return t != 4 && n <= t + 2; }, [](int n, int) { return n + 3; }},
    {"Thm5.3:n>t+2,t!=4", [](int n, int t) { return t != 4 && n > t + 2; }, [](int, int t) { return t + 5; }},
};

inline constexpr Clause star_complete[] = {
    {"Thm5.3:min{n,t+2}+t", [](int, int) { return true; }, [](int n, int t) { return std::min(n, t + 2) + t; }},
};

inline constexpr Clause star_star[] = {
    {"Thm5.4:n<=(t+1)/2", [](int n, int t) { return 2 * n <= t + 1; }, [](int n, int) { return 2 * n + 1; }},
    {"Thm5.4:(t+1)/2<n<t", [](int n, int t) { return 2 * n > t + 1 && n < t; }, [](int, int t) { return t + 2; }},
    {"Thm5.4:n>=t", [](int n, int t) { return n >= t; }, [](int n, int t) { return std::min(n, t + 3) + 2; }},
};

inline constexpr Clause complete_path[] = {
    {"Thm6.2:n=2,t=3", [](int n, int t) { return n == 2 && t == 3; }, [](int n, int) { return n + 1; }},
    {"Thm6.2:n>=7,t=3", [](int n, int t) { return n >= 7 && t == 3; }, [](int n, int) { return n + 1; }},
    {"Thm6.2:n=2,t>3", [](int n, int t) { return n == 2 && t > 3; }, [](int n, int) { return n + 2; }},
    {"Thm6.2:n in {3,4}", [](int n, int) { return n == 3 || n == 4; }, [](int n, int) { return n + 2; }},
    {"Thm6.2:n>=2t+1>7", [](int n, int t) { return n >= 2 * t + 1 && 2 * t + 1 > 7; },
     [](int n, int) { return n + 2; }},
};

inline constexpr Clause complete_cycle[] = {
    {"Thm6.4:(n,t)=(2,4)", [](int n, int t) { return n == 2 && t == 4; }, [](int n, int) { return n + 1; }},
    {"Thm6.4:n>=9,t=4", [](int n, int t) { return n >= 9 && t == 4; }, [](int n, int) { return n + 1; }},
    {"Thm6.4:n=2,t!=4", [](int n, int t) { return n == 2 && t != 4; }, [](int n, int) { return n + 2; }},
    {"Thm6.4:n in {3,4}", [](int n, int) { return n == 3 || n == 4; }, [](int n, int) { return n + 2; }},
    {"Thm6.4:n>=2t+1,t!=4", [](int n, int t) { return n >= 2 * t + 1 && t != 4; },
     [](int n, int) { return n + 2; }},
};

// K_2⊡S_t: the lower bound φ(S_t)+1 meets m = 3.
inline constexpr Clause complete_star[] = {
    {"Lemma6.1:n=2", [](int n, int) { return n == 2; }, [](int, int) { return 3; }},
    {"Thm6.5:n=2t+3", [](int n, int t) { return n == 2 * t + 3; }, [](int n, int) { return n; }},
    {"Thm6.5:n>=2t+4", [](int n, int t) { return n >= 2 * t + 4; }, [](int n, int) { return n + 1; }},
};

inline constexpr Clause complete_complete[] = {
    {"Thm6.6:t=1,n>4 even", [](int n, int t) { return t == 1 && n > 4 && n % 2 == 0; },
     [](int n, int) { return n - 1; }},
    {"Thm6.6:t=1,n odd or (n,t) in {(2,1),(4,1),(5,2)}",
     [](int n, int t) { return (t == 1 && n % 2 == 1) || (t == 1 && (n == 2 || n == 4)) || (n == 5 && t == 2); },
     [](int n, int) { return n; }},
    {"Thm6.6:(n,t) in {(2,2),(3,2)} or n>=6,t=2", [](int n, int t) { return t == 2 && (n == 2 || n == 3 || n >= 6); },
     [](int n, int) { return n + 1; }},
    {"Thm6.6:(n,t) in {(2,3),(3,3),(4,2),(4,3)} or n>=7,t=3",
     [](int n, int t) { return (t == 3 && (n <= 4 || n >= 7)) || (n == 4 && t == 2); },
     [](int n, int) { return n + 2; }},
};

}  // namespace tables

inline constexpr std::array<CaseTable, 16> case_tables{{
    {"path-path", FamilyKind::Path, FamilyKind::Path, 3, 3, false, tables::path_path},
    {"path-cycle", FamilyKind::Path, FamilyKind::Cycle, 3, 3, false, tables::path_cycle},
    {"path-star", FamilyKind::Path, FamilyKind::Star, 3, 3, false, tables::path_star},
    {"path-complete", FamilyKind::Path, FamilyKind::Complete, 3, 1, false, tables::path_complete},
    {"cycle-path", FamilyKind::Cycle, FamilyKind::Path, 3, 3, false, tables::cycle_path},
    {"cycle-cycle", FamilyKind::Cycle, FamilyKind::Cycle, 3, 3, false, tables::cycle_cycle},
    {"cycle-star", FamilyKind::Cycle, FamilyKind::Star, 3, 3, false, tables::cycle_star},
    {"cycle-complete", FamilyKind::Cycle, FamilyKind::Complete, 3, 1, false, tables::cycle_complete},
    {"star-path", FamilyKind::Star, FamilyKind::Path, 3, 3, false, tables::star_path},
    {"star-cycle", FamilyKind::Star, FamilyKind::Cycle, 3, 3, false, tables::star_cycle},
    {"star-star", FamilyKind::Star, FamilyKind::Star, 3, 3, false, tables::star_star},
    {"star-complete", FamilyKind::Star, FamilyKind::Complete, 3, 1, false, tables::star_complete},
    {"complete-path", FamilyKind::Complete, FamilyKind::Path, 2, 3, true, tables::complete_path},
    {"complete-cycle", FamilyKind::Complete, FamilyKind::Cycle, 2, 3, true, tables::complete_cycle},
    {"complete-star", FamilyKind::Complete, FamilyKind::Star, 2, 3, true, tables::complete_star},
    {"complete-complete", FamilyKind::Complete, FamilyKind::Complete, 2, 1, true, tables::complete_complete},
}};

inline const CaseTable* find_case_table(FamilyKind left, FamilyKind right) {
  for (const auto& table : case_tables)
    if (table.left == left && table.right == right) return &table;
  return nullptr;
}

/// φ of a base family: paths and cycles 2 or 3, stars 2, K_n = n.
inline int family_phi(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::Path: return spec.size <= 4 ? 2 : 3;
    case FamilyKind::Cycle: return spec.size == 4 ? 2 : 3;
    case FamilyKind::Star: return 2;
    case FamilyKind::Complete: return spec.size;
  }
  return 0;
}

/// Degree multiset of a base family as (degree, count) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> family_degrees(const FamilySpec& spec) {
  validate(spec);
  const auto s = static_cast<std::size_t>(spec.size);
  switch (spec.kind) {
    case FamilyKind::Path: return {{1, 2}, {2, s - 2}};
    case FamilyKind::Cycle: return {{2, s}};
    case FamilyKind::Star: return {{s, 1}, {1, s}};
    case FamilyKind::Complete: return {{s - 1, s}};
  }
  return {};
}

/// m(left⊡right) from the operand degree multisets, without building the corona.
inline std::size_t corona_m_degree(const FamilySpec& left, const FamilySpec& right) {
  const auto g = family_degrees(left);
  const auto h = family_degrees(right);
  std::map<std::size_t, std::size_t, std::greater<>> histogram;
  std::size_t edges = 0;
  for (const auto& [d, count] : g) {
    histogram[d] += count;
    edges += d * count;
    for (const auto& [e, copies] : h) histogram[d + e] += count * copies;
  }
  histogram[2 * static_cast<std::size_t>(right.order()) + 2] += edges / 2;
  // walking degrees downwards, position i (1-based) qualifies while degree >= i - 1
  std::size_t seen = 0, m = 0;
  for (const auto& [d, count] : histogram) {
    if (count == 0) continue;
    if (d + 1 > seen) m = std::max(m, std::min(seen + count, d + 1));
    seen += count;
  }
  return m;
}

/// An optimal b-chromatic coloring of a base family.
inline Coloring optimal_family_coloring(const FamilySpec& spec) {
  const int k = family_phi(spec);
  const int order = spec.order();
  Coloring c{k, std::vector<int>(static_cast<std::size_t>(order), 0)};
  for (int j = 0; j < order; ++j) {
    switch (spec.kind) {
      case FamilyKind::Path:
      case FamilyKind::Cycle: c.assignment[j] = j % k; break;
      case FamilyKind::Star: c.assignment[j] = j == 0 ? 0 : 1; break;
      case FamilyKind::Complete: c.assignment[j] = j; break;
    }
  }
  // j mod 3 around a cycle of length 1 (mod 3) would repeat color 0 at the seam.
  if (spec.kind == FamilyKind::Cycle && k == 3 && order % 3 == 1) c.assignment[order - 1] = 1;
  return c;
}

/// Value and branch of φ(left ⊡ right). Malformed family sizes throw
/// OutOfTheoremRange; well-formed pairs no result covers come back with
/// supported = false.
inline PhiResult phi_closed_form(const FamilySpec& left, const FamilySpec& right) {
  for (const auto& spec : {left, right})
    if (spec.size < minimum_size(spec.kind))
      throw OutOfTheoremRange(to_string(spec) + " is not a valid family member");

  const int n = left.size;
  const int t = right.size;
  const int h_order = right.order();

  if (left.kind == FamilyKind::Complete && n == 1) return {std::nullopt, "K1 left operand", false};

  if (const auto* table = find_case_table(left.kind, right.kind); table && n >= table->min_n && t >= table->min_t) {
    for (const auto& clause : table->clauses)
      if (clause.applies(n, t)) return {clause.value(n, t), std::string(clause.label), true};
    return {std::nullopt, std::string(table->name) + ": outside the solved range", false};
  }

  // Arbitrary right operand: only the long path/cycle results apply.
  if (left.kind == FamilyKind::Path && n > 2 * h_order + 3) return {2 * h_order + 3, "Prop3.1b", true};
  if (left.kind == FamilyKind::Cycle && n > 2 * h_order + 2) return {2 * h_order + 3, "Prop4.1b", true};
  return {std::nullopt, "no closed form for " + to_string(left) + " with " + to_string(right), false};
}

/// Colors of u_i and of the path-inserted vertices s_{j,j+1} of S(P_n) or
/// S(C_n): c(u_i) = (i+1) mod modulus, c(s_{j,j+1}) = j mod modulus, and on a
/// cycle c(s_{0,n-1}) = (n-1) mod modulus unless n ≡ 2 (mod modulus), then 0.
/// The assignment follows the vertex layout of the subdivision graph.
inline Coloring skeleton_coloring(int n, int modulus, bool is_cycle) {
  if (modulus < 2) throw PreconditionViolated("skeleton modulus must be at least 2");
  const auto g = subdivision(build_family({is_cycle ? FamilyKind::Cycle : FamilyKind::Path, n}));
  Coloring c{modulus, std::vector<int>(g.order(), 0)};
  for (int i = 0; i < n; ++i) c.assignment[g.id(base(i))] = (i + 1) % modulus;
  for (int j = 0; j + 1 < n; ++j) c.assignment[g.id(inserted(j, j + 1))] = j % modulus;
  if (is_cycle) c.assignment[g.id(inserted(0, n - 1))] = (n % modulus == 2 % modulus) ? 0 : (n - 1) % modulus;
  return c;
}

}  // namespace svn
