#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"
#include "eggbox/group.hpp"

namespace eggbox {

/// The 2- and 3-element semigroups that keep turning up: the zero semigroup
/// N2 = {a,0}, its three idempotent extensions (two-sided / left / right
/// identity on {e,a}), the left/right zero semigroups, and the trivial one.
inline CayleyTable named_small(std::string_view name) {
  auto make = [](std::size_t n, std::initializer_list<elem> prod,
                 std::initializer_list<const char*> labels,
                 std::initializer_list<elem> gens) {
    CayleyTable t(n, std::vector<elem>(prod));
    std::vector<std::string> ls;
    for (const char* l : labels) ls.emplace_back(l);
    t.set_labels(std::move(ls));
    t.set_generators(std::vector<elem>(gens));
    return t;
  };
  // element order e, a, 0 for the three-element ones
  if (name == "N2_1") return make(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, {"e", "a", "0"}, {0, 1});
  if (name == "N2_l") return make(3, {0, 1, 2, 2, 2, 2, 2, 2, 2}, {"e", "a", "0"}, {0, 1});
  if (name == "N2_r") return make(3, {0, 2, 2, 1, 2, 2, 2, 2, 2}, {"e", "a", "0"}, {0, 1});
  if (name == "N2") return make(2, {1, 1, 1, 1}, {"a", "0"}, {0});
  if (name == "L2") return make(2, {0, 0, 1, 1}, {"a", "b"}, {0, 1});
  if (name == "R2") return make(2, {0, 1, 0, 1}, {"a", "b"}, {0, 1});
  if (name == "trivial") return make(1, {0}, {"e"}, {0});
  throw unknown_name("named_small: unknown name '" + std::string(name) + "'");
}

namespace detail {

struct CosetIndex {
  std::vector<std::vector<elem>> cosets;  // min-rep order
  std::vector<elem> coset_of;             // group element -> coset id
};

inline CosetIndex index_left_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw error("coset construction: not a subgroup");
  CosetIndex ci;
  ci.cosets = left_cosets(g, h);
  ci.coset_of.assign(g.order(), 0);
  for (elem c = 0; c < ci.cosets.size(); ++c)
    for (elem x : ci.cosets[c]) ci.coset_of[x] = c;
  return ci;
}

inline CosetIndex index_right_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw error("coset construction: not a subgroup");
  CosetIndex ci;
  ci.cosets = right_cosets(g, h);
  ci.coset_of.assign(g.order(), 0);
  for (elem c = 0; c < ci.cosets.size(); ++c)
    for (elem x : ci.cosets[c]) ci.coset_of[x] = c;
  return ci;
}

inline std::vector<std::string> coset_labels(const FiniteGroup& g, const CosetIndex& ci,
                                             bool left) {
  std::vector<std::string> out;
  for (const auto& coset : ci.cosets) {
    std::string rep = g.table.label(coset.front());
    out.push_back(left ? rep + "H" : "H" + rep);
  }
  return out;
}

inline std::vector<elem> coset_semigroup_generators(const FiniteGroup& g, elem first_coset_index) {
  std::vector<elem> gens = g.table.has_generators() ? g.table.generators() : std::vector<elem>{};
  if (gens.empty()) {
    gens.resize(g.order());
    std::iota(gens.begin(), gens.end(), 0);
  }
  gens.push_back(first_coset_index);
  return gens;
}

}  // namespace detail

/// L_H(G): the group G with the left cosets gH attached as left zeros.
/// Element order: group elements first (group order), then cosets by
/// minimal representative. The coset gH is always a fresh element, distinct
/// from g, even for trivial H.
inline CayleyTable l_coset_semigroup(const FiniteGroup& g, const Subgroup& h) {
  auto ci = detail::index_left_cosets(g, h);
  const auto ng = static_cast<elem>(g.order());
  const auto nc = static_cast<elem>(ci.cosets.size());
  const elem n = ng + nc;
  std::vector<elem> prod(std::size_t(n) * n);
  for (elem a = 0; a < ng; ++a) {
    for (elem b = 0; b < ng; ++b) prod[a * std::size_t(n) + b] = g.mul(a, b);
    for (elem c = 0; c < nc; ++c)
      prod[a * std::size_t(n) + ng + c] = ng + ci.coset_of[g.mul(a, ci.cosets[c].front())];
  }
  for (elem c = 0; c < nc; ++c)
    for (elem b = 0; b < n; ++b) prod[(ng + c) * std::size_t(n) + b] = ng + c;  // left zeros
  CayleyTable t(n, std::move(prod));
  if (g.table.has_labels()) {
    auto labels = g.table.labels();
    for (auto& l : detail::coset_labels(g, ci, true)) labels.push_back(std::move(l));
    t.set_labels(std::move(labels));
  }
  t.set_generators(detail::coset_semigroup_generators(g, ng + ci.coset_of[g.identity]));
  return t;
}

/// R_H(G): dual of l_coset_semigroup, right cosets Hg attached as right
/// zeros.
inline CayleyTable r_coset_semigroup(const FiniteGroup& g, const Subgroup& h) {
  auto ci = detail::index_right_cosets(g, h);
  const auto ng = static_cast<elem>(g.order());
  const auto nc = static_cast<elem>(ci.cosets.size());
  const elem n = ng + nc;
  std::vector<elem> prod(std::size_t(n) * n);
  for (elem a = 0; a < ng; ++a)
    for (elem b = 0; b < ng; ++b) prod[a * std::size_t(n) + b] = g.mul(a, b);
  for (elem c = 0; c < nc; ++c)
    for (elem b = 0; b < ng; ++b)
      prod[(ng + c) * std::size_t(n) + b] = ng + ci.coset_of[g.mul(ci.cosets[c].front(), b)];
  for (elem a = 0; a < n; ++a)
    for (elem c = 0; c < nc; ++c) prod[a * std::size_t(n) + ng + c] = ng + c;  // right zeros
  CayleyTable t(n, std::move(prod));
  if (g.table.has_labels()) {
    auto labels = g.table.labels();
    for (auto& l : detail::coset_labels(g, ci, false)) labels.push_back(std::move(l));
    t.set_labels(std::move(labels));
  }
  t.set_generators(detail::coset_semigroup_generators(g, ng + ci.coset_of[g.identity]));
  return t;
}

/// L-flat of H in G: like L_H(G) but the attached part is a zero semigroup:
/// g1(g2H) = g1g2H and (g1H)g2 = g1H, all other products 0. Size
/// |G| + [G:H] + 1, the zero last; exactly two idempotents (1 and 0).
inline CayleyTable l_flat(const FiniteGroup& g, const Subgroup& h) {
  auto ci = detail::index_left_cosets(g, h);
  const auto ng = static_cast<elem>(g.order());
  const auto nc = static_cast<elem>(ci.cosets.size());
  const elem n = ng + nc + 1;
  const elem zero = n - 1;
  std::vector<elem> prod(std::size_t(n) * n, zero);
  for (elem a = 0; a < ng; ++a) {
    for (elem b = 0; b < ng; ++b) prod[a * std::size_t(n) + b] = g.mul(a, b);
    for (elem c = 0; c < nc; ++c)
      prod[a * std::size_t(n) + ng + c] = ng + ci.coset_of[g.mul(a, ci.cosets[c].front())];
  }
  for (elem c = 0; c < nc; ++c)
    for (elem b = 0; b < ng; ++b) prod[(ng + c) * std::size_t(n) + b] = ng + c;
  CayleyTable t(n, std::move(prod));
  if (g.table.has_labels()) {
    auto labels = g.table.labels();
    for (auto& l : detail::coset_labels(g, ci, true)) labels.push_back(std::move(l));
    labels.push_back("0");
    t.set_labels(std::move(labels));
  }
  t.set_generators(detail::coset_semigroup_generators(g, ng + ci.coset_of[g.identity]));
  return t;
}

/// R-flat: dual of l_flat.
inline CayleyTable r_flat(const FiniteGroup& g, const Subgroup& h) {
  auto ci = detail::index_right_cosets(g, h);
  const auto ng = static_cast<elem>(g.order());
  const auto nc = static_cast<elem>(ci.cosets.size());
  const elem n = ng + nc + 1;
  const elem zero = n - 1;
  std::vector<elem> prod(std::size_t(n) * n, zero);
  for (elem a = 0; a < ng; ++a)
    for (elem b = 0; b < ng; ++b) prod[a * std::size_t(n) + b] = g.mul(a, b);
  for (elem c = 0; c < nc; ++c)
    for (elem b = 0; b < ng; ++b)
      prod[(ng + c) * std::size_t(n) + b] = ng + ci.coset_of[g.mul(ci.cosets[c].front(), b)];
  for (elem a = 0; a < ng; ++a)
    for (elem c = 0; c < nc; ++c) prod[a * std::size_t(n) + ng + c] = ng + c;
  CayleyTable t(n, std::move(prod));
  if (g.table.has_labels()) {
    auto labels = g.table.labels();
    for (auto& l : detail::coset_labels(g, ci, false)) labels.push_back(std::move(l));
    labels.push_back("0");
    t.set_labels(std::move(labels));
  }
  t.set_generators(detail::coset_semigroup_generators(g, ng + ci.coset_of[g.identity]));
  return t;
}

/// L-flat of G in G itself: G together with c (= the single coset G) and 0,
/// where gc = cg = c and all other products are 0.
inline CayleyTable l_flat_full(const FiniteGroup& g) { return l_flat(g, full_subgroup(g)); }

/// Rees matrix semigroup M(G; I, Lambda; P): index sets of the given sizes
/// and a Lambda x I sandwich matrix with entries in G.
struct ReesSpec {
  FiniteGroup group;
  std::size_t i_size = 0;
  std::size_t lambda_size = 0;
  std::vector<std::vector<elem>> sandwich;  // lambda_size rows of i_size entries
};

inline CayleyTable rees_matrix(const ReesSpec& spec, std::size_t cap = default_cap) {
  const std::size_t ni = spec.i_size, nl = spec.lambda_size, ng = spec.group.order();
  if (ni == 0 || nl == 0) throw error("rees_matrix: empty index set");
  if (spec.sandwich.size() != nl) throw error("rees_matrix: sandwich matrix must have Lambda rows");
  for (const auto& row : spec.sandwich) {
    if (row.size() != ni) throw error("rees_matrix: sandwich row must have I entries");
    for (elem p : row)
      if (p >= ng) throw error("rees_matrix: sandwich entry out of range");
  }
  if (ni * ng * nl > cap) throw cap_exceeded("rees_matrix: size exceeds cap");
  const auto n = static_cast<elem>(ni * ng * nl);
  auto enc = [&](std::size_t i, elem gg, std::size_t l) {
    return static_cast<elem>((i * ng + gg) * nl + l);
  };
  std::vector<elem> prod(std::size_t(n) * n);
  for (std::size_t i = 0; i < ni; ++i)
    for (elem a = 0; a < ng; ++a)
      for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t j = 0; j < ni; ++j)
          for (elem b = 0; b < ng; ++b)
            for (std::size_t m = 0; m < nl; ++m)
              prod[enc(i, a, l) * std::size_t(n) + enc(j, b, m)] =
                  enc(i, spec.group.mul(spec.group.mul(a, spec.sandwich[l][j]), b), m);
  CayleyTable t(n, std::move(prod));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < ni; ++i)
    for (elem a = 0; a < ng; ++a)
      for (std::size_t l = 0; l < nl; ++l)
        labels.push_back("(" + std::to_string(i) + "," + spec.group.table.label(a) + "," +
                         std::to_string(l) + ")");
  t.set_labels(std::move(labels));
  return t;
}

}  // namespace eggbox
