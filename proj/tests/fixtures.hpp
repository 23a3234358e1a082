#pragma once

// Shared test data and independent oracles. Nothing here calls the library's
// algebra; the oracles work on dense matrices and explicit sets.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linknet/network.hpp"

namespace linknet::testing {

using Dense = std::vector<std::vector<double>>;

inline NodeSetPtr labeled(const std::string& name, const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return make_node_set(name, std::move(labels));
}

inline SparseNetwork from_dense(NodeSetPtr rows, NodeSetPtr cols, const Dense& m) {
  std::vector<Entry> entries;
  for (Index i = 0; i < m.size(); ++i) {
    for (Index j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != 0.0) entries.push_back({i, j, m[i][j]});
    }
  }
  return SparseNetwork::from_entries(std::move(rows), std::move(cols), std::move(entries));
}

inline Dense to_dense(const SparseNetwork& net) {
  Dense m(net.row_count(), std::vector<double>(net.col_count(), 0.0));
  for (const Entry& e : net.entries()) m[e.row][e.col] = e.weight;
  return m;
}

inline Dense dense_transpose(const Dense& a) {
  if (a.empty()) return {};
  Dense t(a[0].size(), std::vector<double>(a.size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

/// Triple loop over all (i, k, j); k ascending for each entry.
inline Dense dense_multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
  Dense c(a.size(), std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  }
  return c;
}

inline double dense_total(const Dense& m) {
  double s = 0.0;
  for (const auto& r : m)
    for (double v : r) s += v;
  return s;
}

// ---------------------------------------------------------------------------
// the worked example / B
// ---------------------------------------------------------------------------

struct WorkedExample {
  NodeSetPtr works = labeled("works", "w", 5);
  NodeSetPtr authors = labeled("authors", "a", 4);
  NodeSetPtr keywords = labeled("keywords", "k", 4);

  Dense wa_dense{{1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 1}};
  Dense wk_dense{{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 1, 0, 1}};

  SparseNetwork wa = from_dense(works, authors, wa_dense);
  SparseNetwork wk = from_dense(works, keywords, wk_dense);

  /// Product matrix H = WA^T * WK.
  Dense h{{2, 3, 2, 2}, {1, 0, 2, 0}, {1, 3, 1, 2}, {0, 2, 2, 2}};

  /// Outer product terms H_1..H_5.
  std::vector<Dense> terms{
      {{1, 1, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 0}},
      {{1, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
      {{0, 1, 1, 1}, {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}},
      {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}},
      {{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}},
  };

  /// Normalized product AKt, 5 decimals.
  Dense akt{{0.50000, 0.52778, 0.36111, 0.27778},
            {0.25000, 0.00000, 0.75000, 0.00000},
            {0.25000, 0.52778, 0.11111, 0.27778},
            {0.00000, 0.27778, 0.61111, 0.27778}};

  /// WAn and WKn.
  Dense wan{{1. / 2, 0, 1. / 2, 0},
            {1. / 2, 1. / 2, 0, 0},
            {1. / 3, 0, 1. / 3, 1. / 3},
            {0, 1. / 2, 0, 1. / 2},
            {1. / 3, 0, 1. / 3, 1. / 3}};
  Dense wkn{{1. / 2, 1. / 2, 0, 0},
            {1. / 2, 0, 1. / 2, 0},
            {0, 1. / 3, 1. / 3, 1. / 3},
            {0, 0, 1, 0},
            {0, 1. / 2, 0, 1. / 2}};
};

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

enum class Weights { binary, integer, real };

inline Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density,
                          Weights kind) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> integer(1, 5);
  std::uniform_real_distribution<double> real(0.05, 3.0);
  Dense m(rows, std::vector<double>(cols, 0.0));
  for (auto& r : m) {
    for (double& v : r) {
      if (!present(rng)) continue;
      switch (kind) {
        case Weights::binary: v = 1.0; break;
        case Weights::integer: v = integer(rng); break;
        case Weights::real: v = real(rng); break;
      }
    }
  }
  return m;
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Makes every row nonempty by adding one random link where needed.
inline void fill_empty_rows(std::mt19937_64& rng, Dense& m) {
  for (auto& r : m) {
    bool any = false;
    for (double v : r) any = any || v != 0.0;
    if (!any && !r.empty()) r[random_size(rng, 0, r.size() - 1)] = 1.0;
  }
}

// ---------------------------------------------------------------------------
// Set oracle for citation networks
// ---------------------------------------------------------------------------

using RefSets = std::vector<std::set<std::size_t>>;

inline RefSets out_sets(const Dense& ci) {
  RefSets s(ci.size());
  for (std::size_t p = 0; p < ci.size(); ++p)
    for (std::size_t q = 0; q < ci[p].size(); ++q)
      if (ci[p][q] != 0.0) s[p].insert(q);
  return s;
}

inline RefSets in_sets(const Dense& ci) { return out_sets(dense_transpose(ci)); }

inline std::size_t intersection_size(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  std::size_t n = 0;
  for (auto x : a) n += b.count(x);
  return n;
}

inline std::size_t union_size(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return a.size() + b.size() - intersection_size(a, b);
}

inline bool relative_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace linknet::testing
