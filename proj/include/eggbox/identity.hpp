#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"

namespace eggbox {

/// A semigroup word: a nonempty sequence of 0-based variable ids. Powers
/// are kept flattened.
struct Word {
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
  int max_variable() const {
    return letters.empty() ? -1 : *std::max_element(letters.begin(), letters.end());
  }
};

struct Identity {
  Word lhs, rhs;

  int variable_count() const { return std::max(lhs.max_variable(), rhs.max_variable()) + 1; }
};

inline elem evaluate(const CayleyTable& t, const Word& w, std::span<const elem> assignment) {
  if (w.letters.empty()) throw error("evaluate: empty word");
  for (int v : w.letters)
    if (v < 0 || static_cast<std::size_t>(v) >= assignment.size())
      throw unbound_variable("evaluate: variable x" + std::to_string(v + 1) + " unbound");
  elem acc = assignment[static_cast<std::size_t>(w.letters.front())];
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    acc = t.mul(acc, assignment[static_cast<std::size_t>(w.letters[i])]);
  return acc;
}

/// Exhaustive identity check. Returns nullopt when the identity holds,
/// otherwise the first (odometer-order) witnessing assignment. Throws
/// budget_exceeded when n^vars would exceed the evaluation budget.
inline std::optional<std::vector<elem>> find_identity_witness(const CayleyTable& t,
                                                              const Identity& id,
                                                              std::size_t budget = 10'000'000) {
  const int vars = id.variable_count();
  if (vars == 0) throw error("identity has no variables");
  const std::size_t n = t.size();
  std::size_t total = 1;
  for (int i = 0; i < vars; ++i) {
    if (total > budget / n) throw budget_exceeded("identity check: assignment space too large");
    total *= n;
  }
  std::vector<elem> assign(static_cast<std::size_t>(vars), 0);
  for (;;) {
    if (evaluate(t, id.lhs, assign) != evaluate(t, id.rhs, assign)) return assign;
    // odometer: leftmost variable is the least significant digit
    std::size_t i = 0;
    while (i < assign.size() && ++assign[i] == n) {
      assign[i] = 0;
      ++i;
    }
    if (i == assign.size()) return std::nullopt;
  }
}

inline bool satisfies(const CayleyTable& t, const Identity& id, std::size_t budget = 10'000'000) {
  return !find_identity_witness(t, id, budget).has_value();
}

/// x^m with 0-based variable v.
inline Word power_word(int v, std::size_t m) {
  return Word{std::vector<int>(m, v)};
}

/// Global (index, period) of the table: m = max over elements of the index,
/// k = lcm of the periods; x^m = x^{m+k} holds for every element.
inline IndexPeriod global_index_period(const CayleyTable& t) {
  std::uint32_t m = 1;
  std::uint64_t k = 1;
  for (elem x = 0; x < t.size(); ++x) {
    auto ip = index_period(t, x);
    m = std::max(m, ip.index);
    k = std::lcm(k, static_cast<std::uint64_t>(ip.period));
    if (k > (std::uint64_t(1) << 32)) throw cap_exceeded("global_index_period: period overflow");
  }
  return {m, static_cast<std::uint32_t>(k)};
}

/// The pair scan for s^{omega+1} t = (s^{omega+1} t)^{omega+1}. The omega
/// power is element-level, so this is a predicate over pairs, not a word
/// identity. Returns the first failing pair if any.
inline std::optional<std::pair<elem, elem>> gr_pseudoidentity_witness(const CayleyTable& t) {
  for (elem s = 0; s < t.size(); ++s) {
    const elem sp = omega_plus_one(t, s);
    for (elem u = 0; u < t.size(); ++u) {
      const elem v = t.mul(sp, u);
      if (v != omega_plus_one(t, v)) return std::make_pair(s, u);
    }
  }
  return std::nullopt;
}

inline bool gr_pseudoidentity_holds(const CayleyTable& t) {
  return !gr_pseudoidentity_witness(t).has_value();
}

/// (x_1 ... x_m)^n u = (x_1 ... x_m)^n v where m is the number of distinct
/// variables of u and v (renumbered dense if needed). Requires n >= 2: with
/// n > 1 the prefix collapses to a left zero / 0 as soon as any variable
/// leaves the group part.
inline Identity separating_identity(const Word& u, const Word& v, std::size_t n) {
  if (n < 2) throw bad_exponent("separating_identity: exponent must be >= 2");
  if (u.letters.empty() || v.letters.empty()) throw error("separating_identity: empty word");
  std::vector<int> vars;
  for (const Word* w : {&u, &v})
    for (int x : w->letters)
      if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
  std::sort(vars.begin(), vars.end());
  auto renum = [&](const Word& w) {
    Word out;
    for (int x : w.letters)
      out.letters.push_back(
          static_cast<int>(std::find(vars.begin(), vars.end(), x) - vars.begin()));
    return out;
  };
  Word prefix;
  for (std::size_t rep = 0; rep < n; ++rep)
    for (std::size_t i = 0; i < vars.size(); ++i) prefix.letters.push_back(static_cast<int>(i));
  Identity id;
  id.lhs = prefix;
  id.rhs = prefix;
  for (int x : renum(u).letters) id.lhs.letters.push_back(x);
  for (int x : renum(v).letters) id.rhs.letters.push_back(x);
  return id;
}

/// Zimin words: Z_1 = x_1, Z_{n+1} = Z_n x_{n+1} Z_n. Length 2^n - 1.
inline Word zimin(std::size_t n) {
  if (n < 1) throw error("zimin: n must be >= 1");
  if (n > 20) throw cap_exceeded("zimin: n > 20");
  Word w{{0}};
  for (std::size_t i = 2; i <= n; ++i) {
    Word next = w;
    next.letters.push_back(static_cast<int>(i - 1));
    next.letters.insert(next.letters.end(), w.letters.begin(), w.letters.end());
    w = std::move(next);
  }
  return w;
}

/// Witness pair for (st)^omega != s^omega t^omega, if one exists. The map
/// s -> s^omega is a homomorphism on every finite semigroup with central
/// idempotents.
inline std::optional<std::pair<elem, elem>> omega_map_witness(const CayleyTable& t) {
  std::vector<elem> om(t.size());
  for (elem x = 0; x < t.size(); ++x) om[x] = omega_power(t, x);
  for (elem s = 0; s < t.size(); ++s)
    for (elem u = 0; u < t.size(); ++u)
      if (om[t.mul(s, u)] != t.mul(om[s], om[u])) return std::make_pair(s, u);
  return std::nullopt;
}

inline bool omega_map_is_homomorphism(const CayleyTable& t) {
  return !omega_map_witness(t).has_value();
}

namespace detail {

// Raw variable numerals of "x1 x2^3 x1"-style text (whitespace optional).
inline std::vector<int> parse_raw_word(std::string_view text) {
  std::vector<int> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != 'x') throw parse_error("word: expected 'x' at position " + std::to_string(i));
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw parse_error("word: expected variable number");
    int var = std::stoi(std::string(text.substr(start, i - start)));
    if (var < 1) throw parse_error("word: variables are numbered from x1");
    std::size_t rep = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t pstart = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == pstart) throw parse_error("word: expected exponent after '^'");
      rep = std::stoul(std::string(text.substr(pstart, i - pstart)));
      if (rep < 1) throw parse_error("word: exponent must be >= 1");
    }
    for (std::size_t r = 0; r < rep; ++r) raw.push_back(var);
    skip_ws();
  }
  if (raw.empty()) throw parse_error("word: empty");
  return raw;
}

inline Word renumber_dense(const std::vector<int>& raw, const std::vector<int>& vars) {
  Word w;
  for (int v : raw)
    w.letters.push_back(static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
  return w;
}

}  // namespace detail

/// Parses words like "x1 x2 x1" or "x1^3 x2"; juxtaposition is product,
/// ^k repetition, whitespace optional. Variables are renumbered densely by
/// numeral order (x1 < x2 < ...).
inline Word parse_word(std::string_view text) {
  auto raw = detail::parse_raw_word(text);
  std::vector<int> vars = raw;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return detail::renumber_dense(raw, vars);
}

/// Parses "lhs = rhs". Variables are renumbered densely across both sides.
inline Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw parse_error("identity: missing '='");
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw parse_error("identity: more than one '='");
  auto raw_l = detail::parse_raw_word(text.substr(0, eq));
  auto raw_r = detail::parse_raw_word(text.substr(eq + 1));
  std::vector<int> vars = raw_l;
  vars.insert(vars.end(), raw_r.begin(), raw_r.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return Identity{detail::renumber_dense(raw_l, vars), detail::renumber_dense(raw_r, vars)};
}

}  // namespace eggbox
