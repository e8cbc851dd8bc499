#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"

namespace eggbox {

/// A finite group: its table, identity, and inverse map. Built through
/// from_group_table / cyclic / symmetric / group_product, all of which
/// verify or guarantee the group laws.
struct FiniteGroup {
  CayleyTable table;
  elem identity = 0;
  std::vector<elem> inverse;

  std::size_t order() const { return table.size(); }
  elem mul(elem a, elem b) const { return table.mul(a, b); }
  elem inv(elem a) const { return inverse[a]; }
};

/// Subgroups are sorted member lists; the parent group is passed alongside.
using Subgroup = std::vector<elem>;

inline FiniteGroup from_group_table(CayleyTable t) {
  if (!t.identity()) throw error("from_group_table: no identity element");
  FiniteGroup g;
  g.identity = *t.identity();
  g.inverse.assign(t.size(), 0);
  for (elem x = 0; x < t.size(); ++x) {
    bool found = false;
    for (elem y = 0; y < t.size(); ++y)
      if (t.mul(x, y) == g.identity && t.mul(y, x) == g.identity) {
        g.inverse[x] = y;
        found = true;
        break;
      }
    if (!found) throw error("from_group_table: element has no inverse");
  }
  g.table = std::move(t);
  return g;
}

/// Z_n, elements = residues 0..n-1, labels decimal.
inline FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw error("cyclic: n must be >= 1");
  if (n > default_cap) throw cap_exceeded("cyclic: n exceeds cap");
  std::vector<elem> prod(n * n);
  for (elem i = 0; i < n; ++i)
    for (elem j = 0; j < n; ++j) prod[i * n + j] = static_cast<elem>((i + j) % n);
  CayleyTable t(n, std::move(prod));
  std::vector<std::string> labels;
  for (elem i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  t.set_labels(std::move(labels));
  t.set_generators({n > 1 ? elem(1) : elem(0)});
  return from_group_table(std::move(t));
}

namespace detail {

using Perm = std::vector<std::uint8_t>;  // one-line notation, 0-based

inline Perm perm_compose(const Perm& p, const Perm& q) {
  // (p*q)(x) = p(q(x)): apply q first
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

/// Cycle notation over 1-based points, fixed points omitted; identity "e".
inline std::string perm_label(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    do {
      seen[j] = 1;
      out += std::to_string(j + 1);
      j = p[j];
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace detail

/// S_n for n <= 5 (order 120); permutations in lexicographic one-line
/// order, labels in cycle notation.
inline FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 5) throw error("symmetric: n must be in [1, 5]");
  std::vector<detail::Perm> perms;
  detail::Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto m = static_cast<elem>(perms.size());
  auto index_of = [&](const detail::Perm& q) {
    return static_cast<elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<elem> prod(std::size_t(m) * m);
  for (elem i = 0; i < m; ++i)
    for (elem j = 0; j < m; ++j)
      prod[i * std::size_t(m) + j] = index_of(detail::perm_compose(perms[i], perms[j]));
  CayleyTable t(m, std::move(prod));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(detail::perm_label(q));
  t.set_labels(std::move(labels));
  if (n >= 2) {
    detail::Perm swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % n);
    t.set_generators({index_of(swap01), index_of(cycle)});
  } else {
    t.set_generators({0});
  }
  return from_group_table(std::move(t));
}

inline FiniteGroup group_product(const FiniteGroup& a, const FiniteGroup& b,
                                 std::size_t cap = default_cap) {
  CayleyTable t = direct_product(a.table, b.table, cap);
  const auto nb = static_cast<elem>(b.order());
  std::vector<elem> gens;
  for (elem g : a.table.has_generators() ? a.table.generators() : std::vector<elem>{})
    gens.push_back(g * nb + b.identity);
  for (elem g : b.table.has_generators() ? b.table.generators() : std::vector<elem>{})
    gens.push_back(a.identity * nb + g);
  if (!gens.empty()) t.set_generators(std::move(gens));
  return from_group_table(std::move(t));
}

inline Subgroup subgroup_generated(const FiniteGroup& g, std::span<const elem> seeds) {
  std::vector<elem> with_id(seeds.begin(), seeds.end());
  with_id.push_back(g.identity);
  return closed_subsemigroup(g.table, with_id);  // inverses arise as powers
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return {g.identity}; }

inline Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (!std::binary_search(h.begin(), h.end(), g.identity)) return false;
  for (elem a : h) {
    if (a >= g.order()) return false;
    if (!std::binary_search(h.begin(), h.end(), g.inv(a))) return false;
    for (elem b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  }
  return true;
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, elem y) {
  Subgroup out;
  out.reserve(h.size());
  for (elem x : h) out.push_back(g.mul(g.mul(y, x), g.inv(y)));
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup intersect_subgroups(std::span<const Subgroup> subgroups) {
  if (subgroups.empty()) throw error("intersect_subgroups: nothing to intersect");
  Subgroup acc = subgroups.front();
  for (std::size_t i = 1; i < subgroups.size(); ++i) {
    Subgroup next;
    std::set_intersection(acc.begin(), acc.end(), subgroups[i].begin(), subgroups[i].end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

/// Left cosets gH in deterministic order: sorted members, cosets ordered by
/// minimal representative.
inline std::vector<std::vector<elem>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<elem>> out;
  for (elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<elem> coset;
    for (elem m : h) coset.push_back(g.mul(x, m));
    std::sort(coset.begin(), coset.end());
    for (elem m : coset) seen[m] = 1;
    out.push_back(std::move(coset));
  }
  return out;
}

inline std::vector<std::vector<elem>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<elem>> out;
  for (elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<elem> coset;
    for (elem m : h) coset.push_back(g.mul(m, x));
    std::sort(coset.begin(), coset.end());
    for (elem m : coset) seen[m] = 1;
    out.push_back(std::move(coset));
  }
  return out;
}

/// True iff yHy^{-1} = H for every y.
inline bool normal_closure_check(const FiniteGroup& g, const Subgroup& h) {
  for (elem y = 0; y < g.order(); ++y)
    if (conjugate_subgroup(g, h, y) != h) return false;
  return true;
}

/// All subgroups of g, each sorted, the list ordered lexicographically.
/// Intended for the small test groups (order <= 120 or so).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out{trivial_subgroup(g)};
  // grow by repeatedly adjoining one element to known subgroups
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (elem x = 0; x < g.order(); ++x) {
      if (std::binary_search(out[i].begin(), out[i].end(), x)) continue;
      Subgroup seeds = out[i];
      seeds.push_back(x);
      Subgroup h = closed_subsemigroup(g.table, seeds);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Quotient group G/N (N must be normal); elements are the cosets in
/// min-representative order, labels "[rep]" from the parent's labels.
inline FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!normal_closure_check(g, n)) throw not_normal("quotient_group: subgroup is not normal");
  auto cosets = left_cosets(g, n);
  const auto m = static_cast<elem>(cosets.size());
  std::vector<elem> coset_of(g.order());
  for (elem c = 0; c < m; ++c)
    for (elem x : cosets[c]) coset_of[x] = c;
  std::vector<elem> prod(std::size_t(m) * m);
  for (elem i = 0; i < m; ++i)
    for (elem j = 0; j < m; ++j)
      prod[i * std::size_t(m) + j] = coset_of[g.mul(cosets[i][0], cosets[j][0])];
  CayleyTable t(m, std::move(prod));
  std::vector<std::string> labels;
  for (elem c = 0; c < m; ++c) labels.push_back("[" + g.table.label(cosets[c][0]) + "]");
  t.set_labels(std::move(labels));
  return from_group_table(std::move(t));
}

/// Least k >= 1 with x^k = 1 for all x.
inline std::uint64_t group_exponent(const FiniteGroup& g) {
  std::uint64_t k = 1;
  for (elem x = 0; x < g.order(); ++x) {
    std::uint64_t ord = 1;
    elem cur = x;
    while (cur != g.identity) {
      cur = g.mul(cur, x);
      ++ord;
    }
    k = std::lcm(k, ord);
  }
  return k;
}

}  // namespace eggbox
