#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"

namespace eggbox {

enum class GreenRelation { R, L, J, H, D };

inline const char* to_string(GreenRelation r) {
  switch (r) {
    case GreenRelation::R: return "R";
    case GreenRelation::L: return "L";
    case GreenRelation::J: return "J";
    case GreenRelation::H: return "H";
    case GreenRelation::D: return "D";
  }
  return "?";
}

/// One Green relation on one table: element -> class id, ids numbered
/// 0..class_count-1 by first occurrence in element order (deterministic).
struct GreenPartition {
  GreenRelation relation;
  std::vector<elem> class_of;
  std::size_t class_count = 0;
};

namespace detail {

// Renumbers arbitrary class ids so that ids appear in increasing order of
// their first occurrence.
inline void canonicalize_partition(std::vector<elem>& cls) {
  std::vector<elem> remap(cls.size(), static_cast<elem>(-1));
  elem next = 0;
  for (elem& c : cls) {
    if (remap[c] == static_cast<elem>(-1)) remap[c] = next++;
    c = remap[c];
  }
}

// Iterative Tarjan SCC. adj is a flat adjacency list: successors of v are
// adj[v*deg .. v*deg+deg).
inline std::vector<elem> scc_partition(std::size_t n, const std::vector<elem>& adj,
                                       std::size_t deg) {
  constexpr elem undef = static_cast<elem>(-1);
  std::vector<elem> disc(n, undef), low(n, 0), comp(n, undef);
  std::vector<char> on_stack(n, 0);
  std::vector<elem> stk;
  struct Frame {
    elem v;
    std::size_t ei;
  };
  std::vector<Frame> call;
  elem timer = 0, ncomp = 0;
  for (elem root = 0; root < n; ++root) {
    if (disc[root] != undef) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        disc[v] = low[v] = timer++;
        stk.push_back(v);
        on_stack[v] = 1;
      }
      if (ei < deg) {
        elem w = adj[v * deg + ei];
        ++ei;
        if (disc[w] == undef)
          call.push_back({w, 0});
        else if (on_stack[w])
          low[v] = std::min(low[v], disc[w]);
      } else {
        if (low[v] == disc[v]) {
          for (;;) {
            elem w = stk.back();
            stk.pop_back();
            on_stack[w] = 0;
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
        elem finished = v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
      }
    }
  }
  canonicalize_partition(comp);
  return comp;
}

// Edge alphabet: the recorded generators when present, else all elements.
// Both give the same partitions since the generated one-sided ideals agree.
inline std::vector<elem> edge_alphabet(const CayleyTable& t) {
  if (t.has_generators()) return t.generators();
  std::vector<elem> all(t.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

inline std::vector<elem> reachability_partition(const CayleyTable& t, bool right_edges,
                                                bool left_edges) {
  const std::size_t n = t.size();
  const auto alpha = edge_alphabet(t);
  const std::size_t deg = alpha.size() * ((right_edges ? 1 : 0) + (left_edges ? 1 : 0));
  std::vector<elem> adj(n * deg);
  for (elem v = 0; v < n; ++v) {
    std::size_t k = v * deg;
    if (right_edges)
      for (elem g : alpha) adj[k++] = t.mul(v, g);
    if (left_edges)
      for (elem g : alpha) adj[k++] = t.mul(g, v);
  }
  return scc_partition(n, adj, deg);
}

inline std::vector<elem> meet_partition(const std::vector<elem>& a, const std::vector<elem>& b) {
  std::vector<std::pair<elem, elem>> keys(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) keys[i] = {a[i], b[i]};
  std::vector<elem> cls(a.size());
  std::vector<std::pair<elem, elem>> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), keys[i]);
    if (it == seen.end()) {
      cls[i] = static_cast<elem>(seen.size());
      seen.push_back(keys[i]);
    } else {
      cls[i] = static_cast<elem>(it - seen.begin());
    }
  }
  return cls;
}

inline std::vector<elem> join_partition(const std::vector<elem>& a, const std::vector<elem>& b) {
  const std::size_t n = a.size();
  std::vector<elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](elem x, elem y) { parent[find(x)] = find(y); };
  std::vector<elem> first_a(n, static_cast<elem>(-1)), first_b(n, static_cast<elem>(-1));
  for (elem i = 0; i < n; ++i) {
    if (first_a[a[i]] == static_cast<elem>(-1))
      first_a[a[i]] = i;
    else
      unite(i, first_a[a[i]]);
    if (first_b[b[i]] == static_cast<elem>(-1))
      first_b[b[i]] = i;
    else
      unite(i, first_b[b[i]]);
  }
  std::vector<elem> cls(n);
  for (elem i = 0; i < n; ++i) cls[i] = find(i);
  canonicalize_partition(cls);
  return cls;
}

}  // namespace detail

inline GreenPartition green_classes(const CayleyTable& t, GreenRelation rel) {
  std::vector<elem> cls;
  switch (rel) {
    case GreenRelation::R: cls = detail::reachability_partition(t, true, false); break;
    case GreenRelation::L: cls = detail::reachability_partition(t, false, true); break;
    case GreenRelation::J: cls = detail::reachability_partition(t, true, true); break;
    case GreenRelation::H: {
      auto r = detail::reachability_partition(t, true, false);
      auto l = detail::reachability_partition(t, false, true);
      cls = detail::meet_partition(r, l);
      break;
    }
    case GreenRelation::D: {
      auto r = detail::reachability_partition(t, true, false);
      auto l = detail::reachability_partition(t, false, true);
      cls = detail::join_partition(r, l);
      break;
    }
  }
  detail::canonicalize_partition(cls);
  GreenPartition out{rel, std::move(cls), 0};
  out.class_count = out.class_of.empty()
                        ? 0
                        : std::size_t(*std::max_element(out.class_of.begin(), out.class_of.end())) + 1;
  return out;
}

struct GreenCounts {
  std::size_t r, l, j, h, d;
};

inline GreenCounts green_counts(const CayleyTable& t) {
  auto r = detail::reachability_partition(t, true, false);
  auto l = detail::reachability_partition(t, false, true);
  auto j = detail::reachability_partition(t, true, true);
  auto h = detail::meet_partition(r, l);
  auto d = detail::join_partition(r, l);
  auto count = [](const std::vector<elem>& c) {
    return c.empty() ? std::size_t(0) : std::size_t(*std::max_element(c.begin(), c.end())) + 1;
  };
  return {count(r), count(l), count(j), count(h), count(d)};
}

/// D = J holds in every periodic (here: finite) semigroup; this compares
/// the two partitions rather than assuming it.
inline bool check_d_equals_j(const CayleyTable& t) {
  auto d = green_classes(t, GreenRelation::D);
  auto j = green_classes(t, GreenRelation::J);
  return d.class_of == j.class_of;
}

/// Completely regular: union of groups, i.e. Gr S = S.
inline bool is_completely_regular(const CayleyTable& t) {
  return group_elements(t).size() == t.size();
}

/// Completely simple: completely regular with a single D-class.
inline bool is_completely_simple(const CayleyTable& t) {
  return is_completely_regular(t) && green_classes(t, GreenRelation::D).class_count == 1;
}

struct CliffordDecomposition {
  CayleyTable semilattice;          // the quotient S/D
  std::vector<elem> component_of;   // element -> semilattice index
  std::vector<CayleyTable> components;
};

/// Clifford decomposition of a completely regular table: D is verified to
/// be a congruence, the quotient must be a semilattice, and every D-class
/// must be a completely simple subsemigroup.
inline CliffordDecomposition clifford_decomposition(const CayleyTable& t) {
  if (!is_completely_regular(t))
    throw not_completely_regular("clifford_decomposition: table is not completely regular");
  auto d = green_classes(t, GreenRelation::D);
  CayleyTable q;
  try {
    q = quotient_by_partition(t, d.class_of, d.class_count);
  } catch (const not_a_congruence&) {
    // would falsify Clifford's theorem
    throw std::logic_error("clifford_decomposition: D is not a congruence");
  }
  for (elem x = 0; x < q.size(); ++x) {
    if (q.mul(x, x) != x) throw std::logic_error("clifford_decomposition: quotient not idempotent");
    for (elem y = 0; y < q.size(); ++y)
      if (q.mul(x, y) != q.mul(y, x))
        throw std::logic_error("clifford_decomposition: quotient not commutative");
  }
  CliffordDecomposition out{std::move(q), d.class_of, {}};
  for (std::size_t c = 0; c < d.class_count; ++c) {
    std::vector<elem> members;
    for (elem x = 0; x < t.size(); ++x)
      if (d.class_of[x] == c) members.push_back(x);
    CayleyTable comp = subtable(t, members);
    if (!is_completely_simple(comp))
      throw std::logic_error("clifford_decomposition: component not completely simple");
    out.components.push_back(std::move(comp));
  }
  return out;
}

/// Egg-box picture of one D-class: grid of H-classes indexed by
/// (R-class, L-class), rows and columns in first-occurrence order.
struct EggBox {
  std::vector<std::vector<std::vector<elem>>> cells;  // cells[row][col] = H-class members
  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells.front().size(); }
};

inline EggBox egg_box(const CayleyTable& t, elem d_class) {
  auto d = green_classes(t, GreenRelation::D);
  if (d_class >= d.class_count) throw bad_index("egg_box: no such D-class");
  auto r = green_classes(t, GreenRelation::R);
  auto l = green_classes(t, GreenRelation::L);
  std::vector<elem> rs, ls;
  for (elem x = 0; x < t.size(); ++x) {
    if (d.class_of[x] != d_class) continue;
    if (std::find(rs.begin(), rs.end(), r.class_of[x]) == rs.end()) rs.push_back(r.class_of[x]);
    if (std::find(ls.begin(), ls.end(), l.class_of[x]) == ls.end()) ls.push_back(l.class_of[x]);
  }
  EggBox box;
  box.cells.assign(rs.size(), std::vector<std::vector<elem>>(ls.size()));
  for (elem x = 0; x < t.size(); ++x) {
    if (d.class_of[x] != d_class) continue;
    auto ri = std::find(rs.begin(), rs.end(), r.class_of[x]) - rs.begin();
    auto li = std::find(ls.begin(), ls.end(), l.class_of[x]) - ls.begin();
    box.cells[ri][li].push_back(x);
  }
  return box;
}

}  // namespace eggbox
