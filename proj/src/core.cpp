#include "linknet/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linknet/error.hpp"

namespace linknet {

namespace {

void require_directed(const SparseNetwork& net, const char* op) {
  if (!net.directed()) {
    throw Error(std::string(op) + " expects a directed network; unfold() it first");
  }
}

void require_compatible(const NodeSetPtr& left, const NodeSetPtr& right, const char* op) {
  if (!same_mode(left, right)) {
    throw IncompatibleModes(std::string(op) + ": node sets '" + left->name() + "' (" +
                            std::to_string(left->size()) + ") and '" + right->name() +
                            "' (" + std::to_string(right->size()) + ") differ");
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

SparseNetwork transpose(const SparseNetwork& net) {
  if (!net.directed()) return net;
  const std::size_t nr = net.row_count();
  const std::size_t nc = net.col_count();
  std::vector<std::size_t> offsets(nc + 1, 0);
  for (Index c : net.col_indices()) ++offsets[c + 1];
  for (std::size_t c = 0; c < nc; ++c) offsets[c + 1] += offsets[c];

  std::vector<Index> cols(net.nnz());
  std::vector<double> weights(net.nnz());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Rows are visited in ascending order, so each transposed row comes out sorted.
  for (Index i = 0; i < nr; ++i) {
    const auto r = net.row(i);
    for (std::size_t p = 0; p < r.size(); ++p) {
      const std::size_t slot = cursor[r.cols[p]]++;
      cols[slot] = i;
      weights[slot] = r.weights[p];
    }
  }
  return SparseNetwork::from_rows(net.cols(), net.rows(), std::move(offsets),
                                  std::move(cols), std::move(weights));
}

std::uint64_t predicted_operations(const SparseNetwork& a, const SparseNetwork& b) {
  require_compatible(a.cols(), b.rows(), "multiply");
  std::vector<std::uint64_t> indeg(a.col_count(), 0);
  for (Index c : a.col_indices()) ++indeg[c];
  std::uint64_t total = 0;
  for (Index k = 0; k < b.row_count(); ++k) {
    total = saturating_add(total, saturating_mul(indeg[k], b.row(k).size()));
  }
  return total;
}

SparseNetwork multiply(const SparseNetwork& a, const SparseNetwork& b, ExplosionGuard guard) {
  require_directed(a, "multiply");
  require_directed(b, "multiply");
  const std::uint64_t predicted = predicted_operations(a, b);
  if (predicted > guard.max_operations) throw ExplosionAborted(predicted, guard.max_operations);

  // Row-wise accumulation visits the same (i, k, j) triples as the k-outer
  // loop, and for a fixed (i, j) adds the products in ascending k.
  const std::size_t nr = a.row_count();
  const std::size_t nc = b.col_count();
  std::vector<double> accumulator(nc, 0.0);
  std::vector<char> touched(nc, 0);
  std::vector<Index> pattern;

  std::vector<std::size_t> offsets(nr + 1, 0);
  std::vector<Index> cols;
  std::vector<double> weights;

  for (Index i = 0; i < nr; ++i) {
    const auto ra = a.row(i);
    for (std::size_t p = 0; p < ra.size(); ++p) {
      const double aik = ra.weights[p];
      const auto rb = b.row(ra.cols[p]);
      for (std::size_t q = 0; q < rb.size(); ++q) {
        const Index j = rb.cols[q];
        if (touched[j]) {
          accumulator[j] += aik * rb.weights[q];
        } else {
          touched[j] = 1;
          accumulator[j] = aik * rb.weights[q];
          pattern.push_back(j);
        }
      }
    }
    std::sort(pattern.begin(), pattern.end());
    for (Index j : pattern) {
      if (std::abs(accumulator[j]) >= kZeroTolerance) {
        cols.push_back(j);
        weights.push_back(accumulator[j]);
      }
      touched[j] = 0;
    }
    pattern.clear();
    offsets[i + 1] = cols.size();
  }
  return SparseNetwork::from_rows(a.rows(), b.cols(), std::move(offsets), std::move(cols),
                                  std::move(weights));
}

SparseNetwork diag_scale(const WeightVector& d, const SparseNetwork& net, Side side) {
  require_directed(net, "diag_scale");
  require_compatible(d.nodes(), side == Side::left ? net.rows() : net.cols(), "diag_scale");
  std::vector<std::size_t> offsets(net.offsets().begin(), net.offsets().end());
  std::vector<Index> cols(net.col_indices().begin(), net.col_indices().end());
  std::vector<double> weights(net.nnz());
  for (Index i = 0; i < net.row_count(); ++i) {
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) {
      const double factor = side == Side::left ? d[i] : d[cols[p]];
      weights[p] = factor * net.weights()[p];
    }
  }
  return SparseNetwork::from_rows(net.rows(), net.cols(), std::move(offsets), std::move(cols),
                                  std::move(weights));
}

double total_weight(const SparseNetwork& net) {
  double total = 0.0;
  for (double w : net.weights()) total += w;
  return total;
}

WeightVector out_degrees(const SparseNetwork& net) {
  WeightVector deg(net.rows(), 0.0);
  for (Index i = 0; i < net.row_count(); ++i) deg[i] = static_cast<double>(net.row(i).size());
  return deg;
}

WeightVector in_degrees(const SparseNetwork& net) {
  WeightVector deg(net.cols(), 0.0);
  for (Index c : net.col_indices()) deg[c] += 1.0;
  return deg;
}

WeightVector row_sums(const SparseNetwork& net) {
  WeightVector sums(net.rows(), 0.0);
  for (Index i = 0; i < net.row_count(); ++i) {
    for (double w : net.row(i).weights) sums[i] += w;
  }
  return sums;
}

WeightVector col_sums(const SparseNetwork& net) {
  WeightVector sums(net.cols(), 0.0);
  const auto cols = net.col_indices();
  const auto weights = net.weights();
  for (std::size_t p = 0; p < cols.size(); ++p) sums[cols[p]] += weights[p];
  return sums;
}

// -----------------------------------------------------------------------------
// Outer product decomposition
// -----------------------------------------------------------------------------

namespace {

// Columns of `a` indexed by pivot, after checking the pair can be multiplied.
SparseNetwork pivot_columns(const SparseNetwork& a, const SparseNetwork& b) {
  require_directed(a, "decompose");
  require_directed(b, "decompose");
  require_compatible(a.cols(), b.rows(), "decompose");
  return transpose(a);
}

}  // namespace

SparseNetwork materialize(const OuterTerm& term) {
  const std::size_t nr = term.rows->size();
  std::vector<std::size_t> offsets(nr + 1, 0);
  std::vector<Index> cols;
  std::vector<double> weights;
  cols.reserve(term.row_profile.nnz() * term.col_profile.nnz());
  weights.reserve(cols.capacity());
  std::size_t p = 0;
  for (Index i = 0; i < nr; ++i) {
    if (p < term.row_profile.nnz() && term.row_profile.indices[p] == i) {
      const double x = term.scale * term.row_profile.values[p];
      for (std::size_t q = 0; q < term.col_profile.nnz(); ++q) {
        cols.push_back(term.col_profile.indices[q]);
        weights.push_back(x * term.col_profile.values[q]);
      }
      ++p;
    }
    offsets[i + 1] = cols.size();
  }
  return SparseNetwork::from_rows(term.rows, term.cols, std::move(offsets), std::move(cols),
                                  std::move(weights));
}

OuterDecomposition::OuterDecomposition(const SparseNetwork& a, const SparseNetwork& b,
                                       TermScaling scaling)
    : a_transposed_(pivot_columns(a, b)),
      b_(b),
      scaling_(scaling) {}

OuterDecomposition::iterator::iterator(const OuterDecomposition* owner, Index pivot)
    : owner_(owner), pivot_(pivot) {
  settle();
}

OuterDecomposition::iterator& OuterDecomposition::iterator::operator++() {
  ++pivot_;
  settle();
  return *this;
}

void OuterDecomposition::iterator::settle() {
  const SparseNetwork& at = owner_->a_transposed_;
  const SparseNetwork& b = owner_->b_;
  const std::size_t n = owner_->pivot_count();
  while (pivot_ < n && (at.row(pivot_).empty() || b.row(pivot_).empty())) ++pivot_;
  if (pivot_ == n) return;

  const auto x = at.row(pivot_);
  const auto y = b.row(pivot_);
  term_.pivot = pivot_;
  term_.rows = at.cols();
  term_.cols = b.cols();
  term_.row_profile.indices.assign(x.cols.begin(), x.cols.end());
  term_.row_profile.values.assign(x.weights.begin(), x.weights.end());
  term_.col_profile.indices.assign(y.cols.begin(), y.cols.end());
  term_.col_profile.values.assign(y.weights.begin(), y.weights.end());
  term_.scale = owner_->scaling_ == TermScaling::raw
                    ? 1.0
                    : 1.0 / (term_.row_profile.sum() * term_.col_profile.sum());
}

std::vector<OuterTerm> decompose(const SparseNetwork& a, const SparseNetwork& b,
                                 TermScaling scaling) {
  OuterDecomposition d(a, b, scaling);
  return {d.begin(), d.end()};
}

// -----------------------------------------------------------------------------
// Folding
// -----------------------------------------------------------------------------

bool is_symmetric(const SparseNetwork& net, double tolerance) {
  if (!net.directed()) return true;
  if (!net.one_mode()) return false;
  for (Index i = 0; i < net.row_count(); ++i) {
    const auto r = net.row(i);
    for (std::size_t p = 0; p < r.size(); ++p) {
      const double x = r.weights[p];
      const double y = net.at(r.cols[p], i);
      if (std::abs(x - y) > tolerance * std::max(1.0, std::abs(x))) return false;
    }
  }
  return true;
}

FoldResult fold_to_undirected(const SparseNetwork& net, LoopPolicy loops) {
  if (!net.one_mode()) throw NotOneMode("fold requires a one-mode network");
  if (!net.directed()) {
    throw Error("fold expects a directed network; the input is already folded");
  }
  if (!is_symmetric(net)) throw NotSymmetric("fold requires a symmetric network");

  std::optional<WeightVector> diagonal;
  if (loops == LoopPolicy::extract) diagonal.emplace(net.rows(), 0.0);

  const std::size_t n = net.row_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Index> cols;
  std::vector<double> weights;
  for (Index i = 0; i < n; ++i) {
    const auto r = net.row(i);
    for (std::size_t p = 0; p < r.size(); ++p) {
      const Index j = r.cols[p];
      if (j < i) continue;
      if (j == i) {
        if (loops == LoopPolicy::keep) {
          cols.push_back(j);
          weights.push_back(r.weights[p]);
        } else if (loops == LoopPolicy::extract) {
          (*diagonal)[i] = r.weights[p];
        }
        continue;
      }
      cols.push_back(j);
      weights.push_back(r.weights[p] + net.at(j, i));
    }
    offsets[i + 1] = cols.size();
  }
  return {SparseNetwork::from_rows(net.rows(), net.cols(), std::move(offsets), std::move(cols),
                                   std::move(weights), Orientation::undirected),
          std::move(diagonal)};
}

SparseNetwork unfold(const SparseNetwork& net) {
  if (net.directed()) return net;
  std::vector<Entry> arcs;
  arcs.reserve(2 * net.nnz());
  for (const Entry& e : net.entries()) {
    arcs.push_back(e);
    if (e.row != e.col) arcs.push_back({e.col, e.row, e.weight});
  }
  return SparseNetwork::from_entries(net.rows(), net.cols(), std::move(arcs));
}

}  // namespace linknet
