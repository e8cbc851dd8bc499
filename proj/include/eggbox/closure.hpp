#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"

namespace eggbox {

/// Result of closing a generator list inside an abstract domain: the dense
/// multiplication table plus the map from table indices back to domain
/// elements.
template <typename Elem>
struct Closure {
  CayleyTable table;
  std::vector<Elem> elements;
};

/// Breadth-first closure of `gens` under `mul`. The enumeration order is
/// deterministic: generators first (duplicates dropped, first occurrence
/// kept), then products by word length, ties broken by generator index.
/// Throws cap_exceeded once the closure would exceed `cap` elements.
///
/// Elem needs operator< (for the canonical-form index) and operator==; Mul
/// must be associative on the generated closure — callers verify with
/// verify_associativity when in doubt.
template <typename Elem, typename Mul>
Closure<Elem> close_generators(const std::vector<Elem>& gens, Mul mul,
                               std::size_t cap = default_cap) {
  if (gens.empty()) throw error("close_generators: no generators");
  if (cap < 1) throw error("close_generators: cap must be >= 1");

  std::vector<Elem> elements;
  std::map<Elem, elem> index;
  std::vector<elem> gen_ids;
  for (const Elem& g : gens) {
    auto [it, inserted] = index.try_emplace(g, static_cast<elem>(elements.size()));
    if (inserted) {
      if (elements.size() >= cap) throw cap_exceeded("close_generators: cap exceeded");
      elements.push_back(g);
    }
    gen_ids.push_back(it->second);
  }
  // BFS by right multiplication: elements are processed in discovery order,
  // so all words of length L are enumerated before any of length L+1.
  for (std::size_t qi = 0; qi < elements.size(); ++qi)
    for (elem g : gen_ids) {
      Elem w = mul(elements[qi], elements[g]);
      auto [it, inserted] = index.try_emplace(std::move(w), static_cast<elem>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) throw cap_exceeded("close_generators: cap exceeded");
        elements.push_back(it->first);
      }
    }

  const auto n = static_cast<elem>(elements.size());
  std::vector<elem> prod(std::size_t(n) * n);
  for (elem i = 0; i < n; ++i)
    for (elem j = 0; j < n; ++j) {
      auto it = index.find(mul(elements[i], elements[j]));
      if (it == index.end())
        throw error("close_generators: product escapes the closure (mul not associative?)");
      prod[i * std::size_t(n) + j] = it->second;
    }
  Closure<Elem> out{CayleyTable(n, std::move(prod)), std::move(elements)};
  std::vector<elem> uniq;
  for (elem g : gen_ids)
    if (std::find(uniq.begin(), uniq.end(), g) == uniq.end()) uniq.push_back(g);
  out.table.set_generators(std::move(uniq));
  return out;
}

}  // namespace eggbox
