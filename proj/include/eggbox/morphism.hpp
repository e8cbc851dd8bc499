#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/construct.hpp"
#include "eggbox/errors.hpp"
#include "eggbox/group.hpp"

namespace eggbox {

/// A total map between two tables. The tables are stored by value: they are
/// small in every use here and the bundle stays self-contained.
struct Mapping {
  CayleyTable source;
  CayleyTable target;
  std::vector<elem> image_of;
};

inline bool is_homomorphism(const Mapping& m, std::pair<elem, elem>* witness = nullptr) {
  const std::size_t n = m.source.size();
  if (m.image_of.size() != n) throw error("is_homomorphism: map is not total");
  for (elem x = 0; x < n; ++x)
    for (elem y = 0; y < n; ++y)
      if (m.image_of[m.source.mul(x, y)] != m.target.mul(m.image_of[x], m.image_of[y])) {
        if (witness) *witness = {x, y};
        return false;
      }
  return true;
}

inline bool is_onto(const Mapping& m) {
  std::vector<char> hit(m.target.size(), 0);
  for (elem v : m.image_of) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool is_injective(const Mapping& m) {
  std::vector<char> hit(m.target.size(), 0);
  for (elem v : m.image_of) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

inline bool is_isomorphism(const Mapping& m) {
  return m.source.size() == m.target.size() && is_injective(m) && is_homomorphism(m);
}

/// product'(a, b) = product(b, a). Generators, labels, identity and zero
/// carry over (a generating set of S generates the dual as the same set).
inline CayleyTable dual_table(const CayleyTable& t) {
  const std::size_t n = t.size();
  std::vector<elem> prod(n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) prod[a * n + b] = t.mul(b, a);
  CayleyTable out(n, std::move(prod));
  if (t.has_labels()) out.set_labels(t.labels());
  if (t.has_generators()) out.set_generators(t.generators());
  return out;
}

namespace detail {

inline elem coset_id(const FiniteGroup& g, const Subgroup& h, elem x) {
  // id of the left coset xH within the min-rep ordering used by the
  // constructions
  auto ci = index_left_cosets(g, h);
  return ci.coset_of[x];
}

}  // namespace detail

/// The map L_H(G) -> L_K(G) (H <= K): g -> g, gH -> gK. Verified onto
/// homomorphism before returning.
inline Mapping phi_subgroups(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!std::includes(k.begin(), k.end(), h.begin(), h.end()))
    throw not_nested("phi_subgroups: H must be contained in K");
  auto ch = detail::index_left_cosets(g, h);
  auto ck = detail::index_left_cosets(g, k);
  const auto ng = static_cast<elem>(g.order());
  Mapping m{l_coset_semigroup(g, h), l_coset_semigroup(g, k), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = x;
  for (elem c = 0; c < ch.cosets.size(); ++c)
    m.image_of[ng + c] = ng + ck.coset_of[ch.cosets[c].front()];
  if (!is_homomorphism(m) || !is_onto(m))
    throw std::logic_error("phi_subgroups: constructed map is not an onto homomorphism");
  return m;
}

/// Flat variant of phi_subgroups; 0 -> 0.
inline Mapping phi_subgroups_flat(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!std::includes(k.begin(), k.end(), h.begin(), h.end()))
    throw not_nested("phi_subgroups_flat: H must be contained in K");
  auto ch = detail::index_left_cosets(g, h);
  auto ck = detail::index_left_cosets(g, k);
  const auto ng = static_cast<elem>(g.order());
  Mapping m{l_flat(g, h), l_flat(g, k), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = x;
  for (elem c = 0; c < ch.cosets.size(); ++c)
    m.image_of[ng + c] = ng + ck.coset_of[ch.cosets[c].front()];
  m.image_of[m.source.size() - 1] = static_cast<elem>(m.target.size() - 1);
  if (!is_homomorphism(m) || !is_onto(m))
    throw std::logic_error("phi_subgroups_flat: constructed map is not an onto homomorphism");
  return m;
}

/// The conjugation isomorphism L_H(G) -> L_K(G) with K = yHy^{-1}:
/// g -> ygy^{-1} and gH -> (ygy^{-1})K, i.e. conjugation applied to the
/// coset as a set. Verified to be an isomorphism before returning.
inline Mapping conjugation_iso(const FiniteGroup& g, const Subgroup& h, elem y) {
  Subgroup k = conjugate_subgroup(g, h, y);
  auto ch = detail::index_left_cosets(g, h);
  auto ck = detail::index_left_cosets(g, k);
  const auto ng = static_cast<elem>(g.order());
  auto conj = [&](elem x) { return g.mul(g.mul(y, x), g.inv(y)); };
  Mapping m{l_coset_semigroup(g, h), l_coset_semigroup(g, k), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = conj(x);
  for (elem c = 0; c < ch.cosets.size(); ++c)
    m.image_of[ng + c] = ng + ck.coset_of[conj(ch.cosets[c].front())];
  if (!is_isomorphism(m))
    throw std::logic_error("conjugation_iso: constructed map is not an isomorphism");
  return m;
}

inline Mapping conjugation_iso_flat(const FiniteGroup& g, const Subgroup& h, elem y) {
  Subgroup k = conjugate_subgroup(g, h, y);
  auto ch = detail::index_left_cosets(g, h);
  auto ck = detail::index_left_cosets(g, k);
  const auto ng = static_cast<elem>(g.order());
  auto conj = [&](elem x) { return g.mul(g.mul(y, x), g.inv(y)); };
  Mapping m{l_flat(g, h), l_flat(g, k), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = conj(x);
  for (elem c = 0; c < ch.cosets.size(); ++c)
    m.image_of[ng + c] = ng + ck.coset_of[conj(ch.cosets[c].front())];
  m.image_of[m.source.size() - 1] = static_cast<elem>(m.target.size() - 1);
  if (!is_isomorphism(m))
    throw std::logic_error("conjugation_iso_flat: constructed map is not an isomorphism");
  return m;
}

/// L_N(G) -> L(G/N) for normal N: g -> gbar, gN -> gbar E. Verified onto
/// homomorphism.
inline Mapping quotient_attachment_map(const FiniteGroup& g, const Subgroup& n) {
  FiniteGroup q = quotient_group(g, n);  // throws not_normal
  auto cn = detail::index_left_cosets(g, n);
  const auto ng = static_cast<elem>(g.order());
  const auto nq = static_cast<elem>(q.order());
  Mapping m{l_coset_semigroup(g, n), l_coset_semigroup(q, trivial_subgroup(q)), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = cn.coset_of[x];
  // with trivial E the coset gbar*E sits at index nq + gbar
  for (elem c = 0; c < cn.cosets.size(); ++c) m.image_of[ng + c] = nq + c;
  if (!is_homomorphism(m) || !is_onto(m))
    throw std::logic_error("quotient_attachment_map: constructed map is not an onto homomorphism");
  return m;
}

inline Mapping quotient_attachment_map_flat(const FiniteGroup& g, const Subgroup& n) {
  FiniteGroup q = quotient_group(g, n);
  auto cn = detail::index_left_cosets(g, n);
  const auto ng = static_cast<elem>(g.order());
  const auto nq = static_cast<elem>(q.order());
  Mapping m{l_flat(g, n), l_flat(q, trivial_subgroup(q)), {}};
  m.image_of.resize(m.source.size());
  for (elem x = 0; x < ng; ++x) m.image_of[x] = cn.coset_of[x];
  for (elem c = 0; c < cn.cosets.size(); ++c) m.image_of[ng + c] = nq + c;
  m.image_of[m.source.size() - 1] = static_cast<elem>(m.target.size() - 1);
  if (!is_homomorphism(m) || !is_onto(m))
    throw std::logic_error("quotient_attachment_map_flat: map is not an onto homomorphism");
  return m;
}

/// The witness for "R-flat(G) divides L-flat(G) x L-flat(G)": the
/// subsemigroup T = {(g,g)} u (Gbar x G) u ({0} x G) of the square, and the
/// onto homomorphism T -> R-flat(G) given by (g,g) -> g,
/// (gbar, h) -> tilde(g^{-1} h), (0, g) -> 0. Both verified.
struct RightLeftWitness {
  CayleyTable square;                         // l_flat(G) x l_flat(G)
  std::vector<elem> member_pairs;             // indices of T inside the square
  Mapping onto_r_flat;                        // T (as subtable) -> r_flat(G)
};

inline RightLeftWitness rightleft_witness(const FiniteGroup& g) {
  const auto ng = static_cast<elem>(g.order());
  CayleyTable lf = l_flat(g, trivial_subgroup(g));
  const auto nl = static_cast<elem>(lf.size());  // ng group + ng cosets + zero
  CayleyTable square = direct_product(lf, lf);
  auto enc = [&](elem x, elem y) { return static_cast<elem>(x * nl + y); };
  std::vector<elem> members;
  for (elem x = 0; x < ng; ++x) members.push_back(enc(x, x));
  for (elem x = 0; x < ng; ++x)
    for (elem y = 0; y < ng; ++y) members.push_back(enc(ng + x, y));  // (gbar, h)
  for (elem y = 0; y < ng; ++y) members.push_back(enc(2 * ng, y));    // (0, g)
  std::sort(members.begin(), members.end());
  // closedness check: T must be a subsemigroup of the square
  CayleyTable sub = subtable(square, members);
  CayleyTable rf = r_flat(g, trivial_subgroup(g));
  Mapping m{sub, rf, std::vector<elem>(members.size())};
  for (std::size_t i = 0; i < members.size(); ++i) {
    elem x = members[i] / nl, y = members[i] % nl;
    if (x < ng)
      m.image_of[i] = x;  // (g,g) -> g
    else if (x < 2 * ng)
      m.image_of[i] = ng + g.mul(g.inv(x - ng), y);  // (gbar,h) -> tilde(g^-1 h)
    else
      m.image_of[i] = static_cast<elem>(rf.size() - 1);  // (0,g) -> 0
  }
  if (!is_homomorphism(m) || !is_onto(m))
    throw std::logic_error("rightleft_witness: map is not an onto homomorphism");
  return {std::move(square), std::move(members), std::move(m)};
}

enum class SearchStatus { found, exhausted, out_of_budget };

struct HomSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Mapping> mapping;
  std::size_t nodes = 0;  // expansions actually spent
};

namespace detail {

struct HomSearchConfig {
  bool require_onto = false;
  bool require_injective = false;
};

// Backtracking over total maps source -> target: elements are assigned in
// index order, candidate images tried in index order, so the first witness
// is the lexicographically least. Pruning: partial products must already
// commute with the map; idempotents must map to idempotents; the image's
// index cannot exceed and period must divide the preimage's.
inline HomSearchResult hom_search(const CayleyTable& s, const CayleyTable& t,
                                  std::size_t budget, HomSearchConfig cfg) {
  const auto ns = static_cast<elem>(s.size());
  const auto nt = static_cast<elem>(t.size());
  HomSearchResult res;
  if (cfg.require_onto && nt > ns) return res;
  if (cfg.require_injective && ns > nt) return res;

  std::vector<IndexPeriod> s_ip(ns), t_ip(nt);
  for (elem x = 0; x < ns; ++x) s_ip[x] = index_period(s, x);
  for (elem x = 0; x < nt; ++x) t_ip[x] = index_period(t, x);
  auto compatible = [&](elem x, elem fx) {
    if (t_ip[fx].index > s_ip[x].index) return false;
    if (s_ip[x].period % t_ip[fx].period != 0) return false;
    return true;
  };

  std::vector<elem> img(ns, nt);  // nt = unassigned
  std::vector<elem> hits(nt, 0);
  elem covered = 0;
  elem depth = 0;
  std::vector<elem> cand(ns, 0);
  while (true) {
    if (depth == ns) {
      Mapping m{s, t, img};
      res.status = SearchStatus::found;
      res.mapping = std::move(m);
      return res;
    }
    bool advanced = false;
    for (elem fx = cand[depth]; fx < nt; ++fx) {
      if (cfg.require_injective && hits[fx]) continue;
      if (!compatible(depth, fx)) continue;
      // surjectivity still reachable?
      if (cfg.require_onto) {
        elem would_cover = covered + (hits[fx] == 0 ? 1 : 0);
        if (would_cover + (ns - depth - 1) < nt) continue;
      }
      // incremental consistency on all products within the assigned prefix
      auto image = [&](elem x) { return x == depth ? fx : img[x]; };
      bool ok = true;
      for (elem i = 0; i <= depth && ok; ++i) {
        elem p = s.mul(i, depth);
        if (p <= depth && t.mul(image(i), fx) != image(p)) ok = false;
        elem q = s.mul(depth, i);
        if (ok && q <= depth && t.mul(fx, image(i)) != image(q)) ok = false;
      }
      if (!ok) continue;
      if (res.nodes >= budget) {
        res.status = SearchStatus::out_of_budget;
        return res;
      }
      ++res.nodes;
      img[depth] = fx;
      cand[depth] = fx + 1;
      if (hits[fx]++ == 0) ++covered;
      ++depth;
      if (depth < ns) cand[depth] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (depth == 0) {
        res.status = SearchStatus::exhausted;
        return res;
      }
      --depth;
      elem fx = img[depth];
      img[depth] = nt;
      if (--hits[fx] == 0) --covered;
    }
  }
}

}  // namespace detail

/// Deterministic backtracking search for a surjective homomorphism S -> T.
/// `budget` bounds node expansions; running out is reported as
/// out_of_budget, distinct from a definite "none exists".
inline HomSearchResult find_onto_homomorphism(const CayleyTable& s, const CayleyTable& t,
                                              std::size_t budget) {
  if (budget < 1) throw error("find_onto_homomorphism: budget must be >= 1");
  return detail::hom_search(s, t, budget, {.require_onto = true, .require_injective = false});
}

/// Deterministic search for an injective homomorphism S -> T (an embedding
/// of S as a subsemigroup of T).
inline HomSearchResult find_embedding(const CayleyTable& s, const CayleyTable& t,
                                      std::size_t budget) {
  if (budget < 1) throw error("find_embedding: budget must be >= 1");
  return detail::hom_search(s, t, budget, {.require_onto = false, .require_injective = true});
}

struct DividesResult {
  SearchStatus status = SearchStatus::exhausted;
  bool answer = false;  // meaningful when status != out_of_budget
  std::vector<elem> witness_generators;  // generator subset of S
  std::vector<elem> witness_elements;    // the generated subsemigroup, sorted
  std::optional<Mapping> surjection;     // subtable(S, witness_elements) -> T
};

/// Does T divide S, i.e. is T a homomorphic image of a subsemigroup of S?
///
/// Subsemigroups are enumerated as closures of generator subsets of size at
/// most |T|+1, by size then lexicographically. That bound suffices: if a
/// subsemigroup U maps onto T, one preimage per element of T generates a
/// subsemigroup that still maps onto T, so subsets of size <= |T| already
/// cover every surjection (|T|+1 is kept as a safety margin and is what the
/// complexity argument in the docs uses). Validated against full-subset
/// enumeration on small tables in the test suite.
inline DividesResult divides(const CayleyTable& t, const CayleyTable& s, std::size_t budget) {
  if (budget < 1) throw error("divides: budget must be >= 1");
  const std::size_t ns = s.size();
  const std::size_t max_size = std::min(ns, t.size() + 1);
  DividesResult out;
  std::size_t spent = 0;
  std::vector<elem> subset;
  // enumerate subsets by size, then lexicographically
  for (std::size_t k = 1; k <= max_size; ++k) {
    subset.assign(k, 0);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
      if (spent >= budget) {
        out.status = SearchStatus::out_of_budget;
        return out;
      }
      ++spent;
      std::vector<elem> closure = closed_subsemigroup(s, subset);
      if (closure.size() >= t.size()) {
        if (spent >= budget) {
          out.status = SearchStatus::out_of_budget;
          return out;
        }
        CayleyTable sub = subtable(s, closure);
        auto r = find_onto_homomorphism(sub, t, budget - spent);
        spent += r.nodes;
        if (r.status == SearchStatus::out_of_budget) {
          out.status = SearchStatus::out_of_budget;
          return out;
        }
        if (r.status == SearchStatus::found) {
          out.status = SearchStatus::found;
          out.answer = true;
          out.witness_generators = subset;
          out.witness_elements = std::move(closure);
          out.surjection = std::move(r.mapping);
          return out;
        }
      }
      // next k-subset of {0..ns-1} in lexicographic order
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == ns - k + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  out.status = SearchStatus::exhausted;
  out.answer = false;
  return out;
}

/// All maps must be onto homomorphisms from the same source and jointly
/// separate points.
inline bool verify_subdirect(const CayleyTable& s, std::span<const Mapping> maps) {
  for (const auto& m : maps) {
    if (m.source.size() != s.size() || m.source.products() != s.products())
      throw error("verify_subdirect: maps must share the source");
    if (!is_homomorphism(m) || !is_onto(m)) return false;
  }
  for (elem x = 0; x < s.size(); ++x)
    for (elem y = x + 1; y < s.size(); ++y) {
      bool separated = false;
      for (const auto& m : maps)
        if (m.image_of[x] != m.image_of[y]) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

}  // namespace eggbox
