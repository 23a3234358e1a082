#pragma once

#include <cstdint>
#include <iterator>
#include <optional>

#include "linknet/network.hpp"

namespace linknet {

// -----------------------------------------------------------------------------
// Explosion guard
// -----------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultGuard = 100'000'000;

/// Upper bound on the number of multiply-add operations a product may perform.
/// The estimate is taken before any work is done.
struct ExplosionGuard {
  std::uint64_t max_operations = kDefaultGuard;

  static ExplosionGuard unlimited() { return {UINT64_MAX}; }
};

// -----------------------------------------------------------------------------
// Basic algebra
// -----------------------------------------------------------------------------

/// Swaps rows and columns. Undirected networks are returned unchanged.
SparseNetwork transpose(const SparseNetwork& net);

/// Number of multiply-add operations `multiply(a, b)` performs:
/// the sum over intermediate nodes k of indeg_a(k) * outdeg_b(k).
std::uint64_t predicted_operations(const SparseNetwork& a, const SparseNetwork& b);

/// Sparse product a * b over real addition and multiplication.
///
/// Every entry c[i,j] accumulates a[i,k] * b[k,j] over ascending k, so the
/// result is bit-reproducible and identical to summing the outer product
/// terms of `OuterDecomposition` in pivot order.
///
/// Throws `IncompatibleModes` when a.cols and b.rows differ and
/// `ExplosionAborted` when the predicted cost exceeds the guard.
SparseNetwork multiply(const SparseNetwork& a, const SparseNetwork& b,
                       ExplosionGuard guard = {});

enum class Side { left, right };

/// left: d[i] * net[i,j], right: net[i,j] * d[j].
SparseNetwork diag_scale(const WeightVector& d, const SparseNetwork& net, Side side);

double total_weight(const SparseNetwork& net);

WeightVector out_degrees(const SparseNetwork& net);
WeightVector in_degrees(const SparseNetwork& net);
WeightVector row_sums(const SparseNetwork& net);
WeightVector col_sums(const SparseNetwork& net);

// -----------------------------------------------------------------------------
// Outer product decomposition
// -----------------------------------------------------------------------------

/// One rank-1 term of a product: scale * (column k of A) o (row k of B).
struct OuterTerm {
  Index pivot = 0;
  NodeSetPtr rows;
  NodeSetPtr cols;
  SparseVector row_profile;
  SparseVector col_profile;
  double scale = 1.0;

  double total_weight() const noexcept {
    return scale * row_profile.sum() * col_profile.sum();
  }
};

/// Materializes the term as a network over (rows, cols).
SparseNetwork materialize(const OuterTerm& term);

enum class TermScaling {
  raw,         ///< scale 1: the terms sum to A * B
  fractional,  ///< scale 1 / (S(row profile) * S(col profile)): every term weighs 1
};

/// Lazy sequence of the outer product terms of A * B, one per intermediate
/// node with a nonempty column in A and a nonempty row in B, in ascending
/// pivot order.
class OuterDecomposition {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = OuterTerm;
    using difference_type = std::ptrdiff_t;
    using pointer = const OuterTerm*;
    using reference = const OuterTerm&;

    iterator() = default;

    reference operator*() const { return term_; }
    pointer operator->() const { return &term_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.pivot_ == b.pivot_;
    }

   private:
    friend class OuterDecomposition;
    iterator(const OuterDecomposition* owner, Index pivot);
    void settle();

    const OuterDecomposition* owner_ = nullptr;
    Index pivot_ = 0;
    OuterTerm term_;
  };

  OuterDecomposition(const SparseNetwork& a, const SparseNetwork& b,
                     TermScaling scaling = TermScaling::raw);

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, pivot_count()); }

  std::size_t pivot_count() const noexcept { return a_transposed_.row_count(); }
  NodeSetPtr rows() const { return a_transposed_.cols(); }
  NodeSetPtr cols() const { return b_.cols(); }

 private:
  SparseNetwork a_transposed_;
  SparseNetwork b_;
  TermScaling scaling_;
};

std::vector<OuterTerm> decompose(const SparseNetwork& a, const SparseNetwork& b,
                                 TermScaling scaling = TermScaling::raw);

// -----------------------------------------------------------------------------
// Symmetric folding
// -----------------------------------------------------------------------------

enum class LoopPolicy { keep, drop, extract };

struct FoldResult {
  SparseNetwork network;
  std::optional<WeightVector> loops;  ///< set only for LoopPolicy::extract
};

/// Maximum |net[a,b] - net[b,a]| accepted, relative to max(1, |net[a,b]|).
inline constexpr double kSymmetryTolerance = 1e-9;

/// Replaces each pair of opposite arcs by one edge of weight
/// net[a,b] + net[b,a]. Loops are kept, dropped or extracted as the
/// diagonal vector. Throws `NotOneMode` / `NotSymmetric`.
FoldResult fold_to_undirected(const SparseNetwork& net, LoopPolicy loops);

/// Expands an undirected network into opposite arc pairs of the same weight.
/// Directed networks are returned unchanged.
SparseNetwork unfold(const SparseNetwork& net);

bool is_symmetric(const SparseNetwork& net, double tolerance = kSymmetryTolerance);

}  // namespace linknet
