#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eggbox/errors.hpp"

namespace eggbox {

/// Index of an element relative to one CayleyTable.
using elem = std::uint32_t;

/// Default size cap for closures and products. Keeps the dense n*n table
/// well below the memory wall; operations throw cap_exceeded instead of
/// thrashing.
inline constexpr std::size_t default_cap = 100'000;

/// A finite semigroup as a dense row-major multiplication table.
///
/// Tables are immutable after construction and safe to share between
/// threads. An identity or zero element, if one exists, is detected at
/// construction time. Associativity is *not* checked here; manual input
/// goes through read_sg_file/verify_associativity, constructed tables are
/// trusted (and spot-checked in the tests).
class CayleyTable {
 public:
  CayleyTable() = default;

  CayleyTable(std::size_t n, std::vector<elem> products) : n_(n), prod_(std::move(products)) {
    if (n_ == 0) throw error("CayleyTable: empty table");
    if (prod_.size() != n_ * n_) throw error("CayleyTable: product array has wrong size");
    for (elem v : prod_)
      if (v >= n_) throw error("CayleyTable: product entry out of range");
    detect_identity_and_zero();
  }

  std::size_t size() const { return n_; }

  elem mul(elem a, elem b) const { return prod_[a * n_ + b]; }

  std::span<const elem> row(elem a) const { return {prod_.data() + a * n_, n_}; }

  const std::vector<elem>& products() const { return prod_; }

  std::optional<elem> identity() const { return identity_; }
  std::optional<elem> zero() const { return zero_; }

  bool has_generators() const { return !gens_.empty(); }
  const std::vector<elem>& generators() const { return gens_; }

  /// Records a generating set; throws if it does not generate all n elements.
  void set_generators(std::vector<elem> gens) {
    if (gens.empty()) throw error("set_generators: empty list");
    for (elem g : gens)
      if (g >= n_) throw error("set_generators: index out of range");
    std::vector<char> seen(n_, 0);
    std::vector<elem> queue;
    for (elem g : gens)
      if (!seen[g]) {
        seen[g] = 1;
        queue.push_back(g);
      }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (elem g : gens) {
        elem w = mul(queue[qi], g);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    if (queue.size() != n_) throw error("set_generators: set does not generate the table");
    gens_ = std::move(gens);
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  void set_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) throw error("set_labels: wrong number of labels");
    for (const auto& l : labels) {
      if (l.empty()) throw error("set_labels: empty label");
      for (char c : l)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          throw error("set_labels: label contains whitespace");
    }
    labels_ = std::move(labels);
  }

  /// Display label of x: the stored label, or the index as text.
  std::string label(elem x) const {
    if (x < labels_.size()) return labels_[x];
    return std::to_string(x);
  }

 private:
  void detect_identity_and_zero() {
    // Probe against element 0 first; a full row/column check only runs for
    // the few candidates that survive.
    for (elem e = 0; e < n_; ++e) {
      if (mul(e, 0) != 0 || mul(0, e) != 0) continue;
      bool ok = true;
      for (elem x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    for (elem z = 0; z < n_; ++z) {
      if (mul(z, 0) != z || mul(0, z) != z) continue;
      bool ok = true;
      for (elem x = 0; x < n_ && ok; ++x) ok = mul(z, x) == z && mul(x, z) == z;
      if (ok) {
        zero_ = z;
        break;
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<elem> prod_;
  std::vector<elem> gens_;
  std::vector<std::string> labels_;
  std::optional<elem> identity_;
  std::optional<elem> zero_;
};

struct TripleWitness {
  elem a, b, c;
};

namespace detail {

// Scans rows [a_begin, a_end) for the lexicographically first violating
// triple. When the table has a (verified) zero z, triples with ab = z and
// bc = z are skipped: both sides then equal z by the zero law, so skipping
// them loses nothing. nonzero_cols[b] lists {c : t[b][c] != z} in order.
inline std::optional<TripleWitness> assoc_scan_range(
    const CayleyTable& t, elem a_begin, elem a_end,
    const std::vector<std::vector<elem>>* nonzero_cols, elem z) {
  const elem n = static_cast<elem>(t.size());
  for (elem a = a_begin; a < a_end; ++a) {
    for (elem b = 0; b < n; ++b) {
      const elem ab = t.mul(a, b);
      if (nonzero_cols && ab == z) {
        for (elem c : (*nonzero_cols)[b]) {
          // lhs = t(z, c) = z by the zero law
          if (z != t.mul(a, t.mul(b, c))) return TripleWitness{a, b, c};
        }
      } else {
        for (elem c = 0; c < n; ++c)
          if (t.mul(ab, c) != t.mul(a, t.mul(b, c))) return TripleWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive associativity check; returns the lexicographically first
/// violating triple, or nullopt if the table is associative. The triple
/// space may be partitioned across `jobs` workers; the result is
/// independent of the partitioning.
inline std::optional<TripleWitness> find_associativity_violation(const CayleyTable& t,
                                                                 unsigned jobs = 1) {
  const elem n = static_cast<elem>(t.size());
  std::vector<std::vector<elem>> nonzero_cols;
  const std::vector<std::vector<elem>>* nz = nullptr;
  elem z = 0;
  if (t.zero()) {
    // The zero law itself was verified during detection, so the skip
    // argument in assoc_scan_range is sound.
    z = *t.zero();
    nonzero_cols.resize(n);
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (t.mul(b, c) != z) nonzero_cols[b].push_back(c);
    nz = &nonzero_cols;
  }
  if (jobs <= 1 || n < 64) return detail::assoc_scan_range(t, 0, n, nz, z);

  const unsigned workers = std::min<unsigned>(jobs, n);
  std::vector<std::optional<TripleWitness>> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    elem lo = static_cast<elem>(std::size_t(n) * w / workers);
    elem hi = static_cast<elem>(std::size_t(n) * (w + 1) / workers);
    threads.emplace_back(
        [&, lo, hi, w] { results[w] = detail::assoc_scan_range(t, lo, hi, nz, z); });
  }
  for (auto& th : threads) th.join();
  for (auto& r : results)
    if (r) return r;  // ranges are in row order, so the first hit is minimal
  return std::nullopt;
}

inline bool verify_associativity(const CayleyTable& t, unsigned jobs = 1) {
  return !find_associativity_violation(t, jobs).has_value();
}

inline std::vector<elem> idempotents(const CayleyTable& t) {
  std::vector<elem> out;
  for (elem x = 0; x < t.size(); ++x)
    if (t.mul(x, x) == x) out.push_back(x);
  return out;
}

/// The unique idempotent among the powers of x (exists since the table is
/// finite).
inline elem omega_power(const CayleyTable& t, elem x) {
  elem cur = x;
  for (std::size_t k = 0; k <= 2 * t.size(); ++k) {
    if (t.mul(cur, cur) == cur) return cur;
    cur = t.mul(cur, x);
  }
  throw error("omega_power: no idempotent power found (table not associative?)");
}

inline elem omega_plus_one(const CayleyTable& t, elem x) { return t.mul(x, omega_power(t, x)); }

struct IndexPeriod {
  std::uint32_t index;   // minimal m >= 1
  std::uint32_t period;  // minimal k >= 1 with x^m = x^{m+k}
};

inline IndexPeriod index_period(const CayleyTable& t, elem x) {
  std::vector<elem> powers{x};
  elem cur = x;
  for (;;) {
    cur = t.mul(cur, x);
    auto it = std::find(powers.begin(), powers.end(), cur);
    if (it != powers.end()) {
      auto m = static_cast<std::uint32_t>(it - powers.begin()) + 1;
      auto k = static_cast<std::uint32_t>(powers.size()) + 1 - m;
      return {m, k};
    }
    powers.push_back(cur);
  }
}

/// Gr S = {s : s = s^{omega+1}}, the union of all subgroups.
inline std::vector<elem> group_elements(const CayleyTable& t) {
  std::vector<elem> out;
  for (elem x = 0; x < t.size(); ++x)
    if (omega_plus_one(t, x) == x) out.push_back(x);
  return out;
}

inline bool is_right_ideal(const CayleyTable& t, std::span<const elem> subset) {
  if (subset.empty()) throw error("is_right_ideal: empty subset");
  std::vector<char> in(t.size(), 0);
  for (elem x : subset) in[x] = 1;
  for (elem x : subset)
    for (elem s = 0; s < t.size(); ++s)
      if (!in[t.mul(x, s)]) return false;
  return true;
}

inline bool is_left_ideal(const CayleyTable& t, std::span<const elem> subset) {
  if (subset.empty()) throw error("is_left_ideal: empty subset");
  std::vector<char> in(t.size(), 0);
  for (elem x : subset) in[x] = 1;
  for (elem x : subset)
    for (elem s = 0; s < t.size(); ++s)
      if (!in[t.mul(s, x)]) return false;
  return true;
}

inline bool is_ideal(const CayleyTable& t, std::span<const elem> subset) {
  return is_right_ideal(t, subset) && is_left_ideal(t, subset);
}

/// Rees quotient S/J: elements of S\J keep their relative order, the fresh
/// zero is appended last. Throws not_an_ideal if J is not an ideal.
inline CayleyTable rees_quotient(const CayleyTable& t, std::span<const elem> ideal) {
  if (!is_ideal(t, ideal)) throw not_an_ideal("rees_quotient: subset is not an ideal");
  const std::size_t n = t.size();
  std::vector<char> in_j(n, 0);
  for (elem x : ideal) in_j[x] = 1;
  std::vector<elem> kept;
  std::vector<elem> to_new(n);
  for (elem x = 0; x < n; ++x)
    if (!in_j[x]) {
      to_new[x] = static_cast<elem>(kept.size());
      kept.push_back(x);
    }
  const auto m = static_cast<elem>(kept.size() + 1);
  const elem zero = m - 1;
  for (elem x = 0; x < n; ++x)
    if (in_j[x]) to_new[x] = zero;
  std::vector<elem> prod(std::size_t(m) * m, zero);
  for (elem i = 0; i < m - 1; ++i)
    for (elem j = 0; j < m - 1; ++j) prod[i * m + j] = to_new[t.mul(kept[i], kept[j])];
  CayleyTable q(m, std::move(prod));
  if (t.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (elem x : kept) labels.push_back(t.labels()[x]);
    labels.push_back("0");
    q.set_labels(std::move(labels));
  }
  return q;
}

/// Componentwise product; the pair (a, b) maps to index a*|B| + b.
inline CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b,
                                  std::size_t cap = default_cap) {
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb > cap) throw cap_exceeded("direct_product: size exceeds cap");
  const auto n = static_cast<elem>(na * nb);
  std::vector<elem> prod(std::size_t(n) * n);
  for (elem x1 = 0; x1 < na; ++x1)
    for (elem y1 = 0; y1 < nb; ++y1)
      for (elem x2 = 0; x2 < na; ++x2)
        for (elem y2 = 0; y2 < nb; ++y2)
          prod[(x1 * nb + y1) * std::size_t(n) + (x2 * nb + y2)] =
              a.mul(x1, x2) * static_cast<elem>(nb) + b.mul(y1, y2);
  CayleyTable p(n, std::move(prod));
  if (a.has_labels() && b.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (elem x = 0; x < na; ++x)
      for (elem y = 0; y < nb; ++y)
        labels.push_back("(" + a.labels()[x] + "," + b.labels()[y] + ")");
    p.set_labels(std::move(labels));
  }
  return p;
}

/// Quotient by a partition, which must be a congruence: the class of a
/// product may depend only on the classes of the factors. class_of maps
/// each element to a class id in [0, class_count).
inline CayleyTable quotient_by_partition(const CayleyTable& t, std::span<const elem> class_of,
                                         std::size_t class_count) {
  const std::size_t n = t.size();
  if (class_of.size() != n) throw error("quotient_by_partition: wrong partition size");
  std::vector<elem> rep(class_count, static_cast<elem>(n));
  for (elem x = 0; x < n; ++x) {
    if (class_of[x] >= class_count) throw error("quotient_by_partition: class id out of range");
    if (rep[class_of[x]] == n) rep[class_of[x]] = x;
  }
  for (std::size_t c = 0; c < class_count; ++c)
    if (rep[c] == n) throw error("quotient_by_partition: empty class");
  // Well-definedness against the class representative implies it for every
  // pair in the class, by transitivity.
  for (elem x = 0; x < n; ++x) {
    const elem r = rep[class_of[x]];
    if (r == x) continue;
    for (elem s = 0; s < n; ++s) {
      if (class_of[t.mul(x, s)] != class_of[t.mul(r, s)])
        throw not_a_congruence("quotient_by_partition: not a congruence", r, x, s);
      if (class_of[t.mul(s, x)] != class_of[t.mul(s, r)])
        throw not_a_congruence("quotient_by_partition: not a congruence", r, x, s);
    }
  }
  const auto m = static_cast<elem>(class_count);
  std::vector<elem> prod(std::size_t(m) * m);
  for (elem i = 0; i < m; ++i)
    for (elem j = 0; j < m; ++j) prod[i * std::size_t(m) + j] = class_of[t.mul(rep[i], rep[j])];
  CayleyTable q(m, std::move(prod));
  if (t.has_generators()) {
    std::vector<elem> gens;
    for (elem g : t.generators()) {
      elem c = class_of[g];
      if (std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
    q.set_generators(std::move(gens));
  }
  return q;
}

/// Returns t unchanged if it already has a two-sided identity; otherwise a
/// table of size n+1 with a fresh identity appended last.
inline CayleyTable adjoin_identity(const CayleyTable& t) {
  if (t.identity()) return t;
  const std::size_t n = t.size();
  const auto m = static_cast<elem>(n + 1);
  std::vector<elem> prod(std::size_t(m) * m);
  for (elem i = 0; i < n; ++i)
    for (elem j = 0; j < n; ++j) prod[i * std::size_t(m) + j] = t.mul(i, j);
  for (elem i = 0; i < m; ++i) {
    prod[i * std::size_t(m) + (m - 1)] = i;
    prod[(m - 1) * std::size_t(m) + i] = i;
  }
  CayleyTable out(m, std::move(prod));
  if (t.has_labels()) {
    auto labels = t.labels();
    labels.push_back("1");
    out.set_labels(std::move(labels));
  }
  if (t.has_generators()) {
    auto gens = t.generators();
    gens.push_back(m - 1);
    out.set_generators(std::move(gens));
  }
  return out;
}

/// True iff the table has a zero and a power of every element equals it.
inline bool is_nilsemigroup(const CayleyTable& t) {
  if (!t.zero()) return false;
  for (elem x = 0; x < t.size(); ++x)
    if (omega_power(t, x) != *t.zero()) return false;
  return true;
}

inline bool has_central_idempotents(const CayleyTable& t) {
  for (elem e : idempotents(t))
    for (elem s = 0; s < t.size(); ++s)
      if (t.mul(e, s) != t.mul(s, e)) return false;
  return true;
}

/// Elements of the subsemigroup generated by `seeds`, sorted ascending.
inline std::vector<elem> closed_subsemigroup(const CayleyTable& t, std::span<const elem> seeds) {
  std::vector<char> seen(t.size(), 0);
  std::vector<elem> queue;
  for (elem s : seeds) {
    if (s >= t.size()) throw error("closed_subsemigroup: seed out of range");
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::size_t gj = 0; gj < queue.size(); ++gj) {
      // closing under products with all current members; order of discovery
      // does not matter since the result is sorted
      elem w1 = t.mul(queue[qi], queue[gj]);
      elem w2 = t.mul(queue[gj], queue[qi]);
      for (elem w : {w1, w2})
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// Restriction of t to a closed subset (throws if not closed). Elements are
/// renumbered by their position in `members`, which must be sorted.
inline CayleyTable subtable(const CayleyTable& t, std::span<const elem> members) {
  const auto m = static_cast<elem>(members.size());
  std::vector<elem> to_new(t.size(), static_cast<elem>(t.size()));
  for (elem i = 0; i < m; ++i) to_new[members[i]] = i;
  std::vector<elem> prod(std::size_t(m) * m);
  for (elem i = 0; i < m; ++i)
    for (elem j = 0; j < m; ++j) {
      elem p = t.mul(members[i], members[j]);
      if (to_new[p] == t.size()) throw error("subtable: subset is not closed");
      prod[i * std::size_t(m) + j] = to_new[p];
    }
  CayleyTable out(m, std::move(prod));
  if (t.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (elem x : members) labels.push_back(t.labels()[x]);
    out.set_labels(std::move(labels));
  }
  return out;
}

}  // namespace eggbox
