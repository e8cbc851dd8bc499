#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eggbox/cayley.hpp"
#include "eggbox/errors.hpp"

namespace eggbox::sapir {

/// Letters of the alphabet A = {a_ij : 1 <= i,j <= r}, r = 6k+2, encoded as
/// (i-1)*r + (j-1). Row/column indices are 1-based throughout this module,
/// matching the matrix construction; the 0-based code is the only boundary.
using letter = std::uint16_t;
using word = std::vector<letter>;

inline int row_size(int k) {
  if (k < 1) throw error("sapir: k must be >= 1");
  return 6 * k + 2;
}

inline letter make_letter(int k, int i, int j) {
  const int r = row_size(k);
  if (i < 1 || i > r || j < 1 || j > r) throw bad_index("sapir: letter index out of range");
  return static_cast<letter>((i - 1) * r + (j - 1));
}

inline int letter_row(int k, letter a) { return int(a) / row_size(k) + 1; }
inline int letter_col(int k, letter a) { return int(a) % row_size(k) + 1; }

/// "a_i_j" display form.
inline std::string letter_token(int k, letter a) {
  return "a_" + std::to_string(letter_row(k, a)) + "_" + std::to_string(letter_col(k, a));
}

inline std::string word_tokens(int k, const word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_token(k, w[i]);
  }
  return out;
}

/// Row t of the letter matrix, 1 <= t <= r^2: in column c the letter is
/// a_{ceil(t/r), c} for odd c and a_{((t-1) mod r)+1, c} for even c
/// (columns counted from 1).
inline word matrix_row(int k, int t) {
  const int r = row_size(k);
  if (t < 1 || t > r * r) throw bad_index("sapir: row index out of range");
  const int odd_row = (t - 1) / r + 1;
  const int even_row = (t - 1) % r + 1;
  word out;
  out.reserve(static_cast<std::size_t>(r));
  for (int c = 1; c <= r; ++c)
    out.push_back(make_letter(k, (c % 2 == 1) ? odd_row : even_row, c));
  return out;
}

/// The substitution: a_ij -> row (i-1)*r + j. |gamma(w)| = r * |w|.
inline word gamma(int k, const word& w, std::size_t length_cap = 1'000'000) {
  const int r = row_size(k);
  if (w.size() > length_cap / static_cast<std::size_t>(r))
    throw cap_exceeded("sapir: gamma output exceeds length cap");
  word out;
  out.reserve(w.size() * static_cast<std::size_t>(r));
  for (letter a : w) {
    word row = matrix_row(k, (letter_row(k, a) - 1) * r + letter_col(k, a));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

/// gamma^m(a_11).
inline word gamma_power(int k, int m, std::size_t length_cap = 1'000'000) {
  word w{make_letter(k, 1, 1)};
  for (int i = 0; i < m; ++i) w = gamma(k, w, length_cap);
  return w;
}

struct SquareWitness {
  std::size_t pos;   // start of the factor uu
  std::size_t len;   // |u|
};

/// O(|w|^2) scan over periods: for each period d a right-to-left pass finds
/// the longest run of positions with w[i] == w[i+d]; a run of length >= d
/// is a square. Returns the witness with the smallest period, then the
/// smallest position.
inline std::optional<SquareWitness> find_square(const word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::size_t run = 0;
    std::optional<std::size_t> best;
    for (std::size_t i = n - d; i-- > 0;) {
      run = (w[i] == w[i + d]) ? run + 1 : 0;
      if (run >= d) best = i;
    }
    if (best) return SquareWitness{*best, d};
  }
  return std::nullopt;
}

inline bool is_square_free(const word& w) { return !find_square(w).has_value(); }

/// The length-bounded factor approximation of V_k: all factors of length
/// <= length_bound of the words gamma^m(a_11), collected until the set is
/// unchanged between consecutive m. Since gamma^m(a_11) is a prefix of
/// gamma^{m+1}(a_11), the sets grow monotonically and a repeat is a
/// fixpoint: length-<=L factors of gamma(w) are determined by the
/// length-<=(ceil(L/r)+1) factors of w, which the set contains once L >= 2
/// (and trivially for L = 1).
struct FactorSet {
  int k = 1;
  std::size_t length_bound = 0;
  std::vector<word> factors;  // sorted by length, then lexicographically
  int stabilized_at = 0;      // first m with factors(gamma^m) == factors(gamma^{m+1})

  bool contains(const word& w) const {
    return std::binary_search(factors.begin(), factors.end(), w, [](const word& a, const word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }
};

namespace detail {

struct WordHash {
  std::size_t operator()(const word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (letter a : w) {
      h ^= a;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

inline FactorSet factors_upto(int k, std::size_t length_bound,
                              std::size_t length_cap = 1'000'000) {
  if (length_bound < 1) throw error("factors_upto: length bound must be >= 1");
  std::unordered_set<word, detail::WordHash> seen;
  word w{make_letter(k, 1, 1)};
  std::size_t prev_count = 0;
  int m = 0;
  for (;;) {
    ++m;
    w = gamma(k, w, length_cap);  // throws cap_exceeded before stabilization if cap too low
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t max_len = std::min(length_bound, w.size() - i);
      for (std::size_t len = 1; len <= max_len; ++len)
        seen.insert(word(w.begin() + i, w.begin() + i + len));
    }
    if (m > 1 && seen.size() == prev_count) break;
    prev_count = seen.size();
  }
  FactorSet fs;
  fs.k = k;
  fs.length_bound = length_bound;
  fs.stabilized_at = m - 1;
  fs.factors.assign(seen.begin(), seen.end());
  std::sort(fs.factors.begin(), fs.factors.end(), [](const word& a, const word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return fs;
}

/// Zero marker for vk_multiply.
inline const word& vk_zero() {
  static const word z;
  return z;
}

/// u . v = uv if uv is in the factor set, 0 otherwise (the empty word
/// stands for 0). Products longer than the bound are 0 by the truncation.
/// Throws not_a_factor if u or v is not a member.
inline word vk_multiply(const FactorSet& fs, const word& u, const word& v) {
  if (!fs.contains(u) || !fs.contains(v)) throw not_a_factor("vk_multiply: not a member of V_k");
  if (u.size() + v.size() > fs.length_bound) return vk_zero();
  word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  if (!fs.contains(uv)) return vk_zero();
  return uv;
}

/// Dense table of the nilsemigroup V_k^0 (truncated at the factor set's
/// length bound): elements are the factors in sorted order, 0 last. Labels
/// are dot-joined letter tokens. The letters are recorded as generators.
inline CayleyTable vk_table(const FactorSet& fs, std::size_t cap = default_cap) {
  const std::size_t nf = fs.factors.size();
  if (nf + 1 > cap) throw cap_exceeded("vk_table: size exceeds cap");
  const auto n = static_cast<elem>(nf + 1);
  const elem zero = n - 1;
  std::unordered_map<word, elem, detail::WordHash> index;
  index.reserve(nf * 2);
  for (std::size_t i = 0; i < nf; ++i) index.emplace(fs.factors[i], static_cast<elem>(i));
  std::vector<elem> prod(std::size_t(n) * n, zero);
  word uv;
  for (std::size_t i = 0; i < nf; ++i) {
    const word& u = fs.factors[i];
    for (std::size_t j = 0; j < nf; ++j) {
      const word& v = fs.factors[j];
      if (u.size() + v.size() > fs.length_bound) continue;
      uv.assign(u.begin(), u.end());
      uv.insert(uv.end(), v.begin(), v.end());
      auto it = index.find(uv);
      if (it != index.end()) prod[i * std::size_t(n) + j] = it->second;
    }
  }
  CayleyTable t(n, std::move(prod));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& f : fs.factors) {
    std::string l;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) l += '.';
      l += letter_token(fs.k, f[i]);
    }
    labels.push_back(std::move(l));
  }
  labels.push_back("0");
  t.set_labels(std::move(labels));
  std::vector<elem> gens;
  for (std::size_t i = 0; i < nf && fs.factors[i].size() == 1; ++i)
    gens.push_back(static_cast<elem>(i));
  if (!gens.empty()) t.set_generators(std::move(gens));
  return t;
}

}  // namespace eggbox::sapir
