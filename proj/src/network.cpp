#include "linknet/network.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "linknet/error.hpp"

namespace linknet {

NodeSet::NodeSet(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error("node set '" + name_ + "': duplicate label '" + labels_[i] + "'");
    }
  }
}

std::shared_ptr<const NodeSet> NodeSet::numbered(std::string name, std::size_t n,
                                                 std::size_t first) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return std::make_shared<const NodeSet>(std::move(name), std::move(labels));
}

std::optional<Index> NodeSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool NodeSet::same_mode(const NodeSet& other) const noexcept {
  return this == &other || labels_ == other.labels_;
}

NodeSetPtr make_node_set(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const NodeSet>(std::move(name), std::move(labels));
}

bool same_mode(const NodeSetPtr& a, const NodeSetPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_mode(*b);
}

// -----------------------------------------------------------------------------

WeightVector::WeightVector(NodeSetPtr nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (values_.size() != nodes_->size()) {
    throw CompatibilityError("vector of length " + std::to_string(values_.size()) +
                             " does not match node set '" + nodes_->name() +
                             "' of size " + std::to_string(nodes_->size()));
  }
}

WeightVector::WeightVector(NodeSetPtr nodes, double fill)
    : nodes_(std::move(nodes)), values_(nodes_->size(), fill) {}

bool WeightVector::is_missing(Index i) const { return std::isnan(values_[i]); }

double SparseVector::sum() const noexcept {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

// -----------------------------------------------------------------------------

namespace {

bool negligible(double w) { return std::abs(w) < kZeroTolerance; }

}  // namespace

SparseNetwork::SparseNetwork(NodeSetPtr rows, NodeSetPtr cols, Orientation orientation)
    : rows_(std::move(rows)),
      cols_(std::move(cols)),
      orientation_(orientation),
      offsets_(rows_->size() + 1, 0) {
  if (orientation_ == Orientation::undirected && !one_mode()) {
    throw NotOneMode("an undirected network must be one-mode");
  }
}

SparseNetwork SparseNetwork::from_entries(NodeSetPtr rows, NodeSetPtr cols,
                                          std::vector<Entry> entries,
                                          Orientation orientation) {
  SparseNetwork net(std::move(rows), std::move(cols), orientation);
  const std::size_t nr = net.row_count();
  const std::size_t nc = net.col_count();
  for (Entry& e : entries) {
    if (e.row >= nr || e.col >= nc) {
      throw IndexOutOfRange("entry (" + std::to_string(e.row) + ", " +
                            std::to_string(e.col) + ") outside a " + std::to_string(nr) +
                            "x" + std::to_string(nc) + " network");
    }
    if (orientation == Orientation::undirected && e.row > e.col) std::swap(e.row, e.col);
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  net.col_indices_.reserve(entries.size());
  net.weights_.reserve(entries.size());
  std::vector<std::size_t> counts(nr, 0);
  for (std::size_t p = 0; p < entries.size();) {
    const Index r = entries[p].row;
    const Index c = entries[p].col;
    double w = entries[p].weight;
    for (++p; p < entries.size() && entries[p].row == r && entries[p].col == c; ++p) {
      w += entries[p].weight;
    }
    if (negligible(w)) continue;
    net.col_indices_.push_back(c);
    net.weights_.push_back(w);
    ++counts[r];
  }
  for (std::size_t r = 0; r < nr; ++r) net.offsets_[r + 1] = net.offsets_[r] + counts[r];
  return net;
}

SparseNetwork SparseNetwork::from_rows(NodeSetPtr rows, NodeSetPtr cols,
                                       std::vector<std::size_t> offsets,
                                       std::vector<Index> col_indices,
                                       std::vector<double> weights,
                                       Orientation orientation) {
  SparseNetwork net(std::move(rows), std::move(cols), orientation);
  const std::size_t nr = net.row_count();
  if (offsets.size() != nr + 1 || offsets.back() != col_indices.size() ||
      col_indices.size() != weights.size()) {
    throw Error("inconsistent row-major arrays");
  }
  std::size_t out = 0;
  for (std::size_t r = 0; r < nr; ++r) {
    const std::size_t begin = offsets[r];
    const std::size_t end = offsets[r + 1];
    net.offsets_[r] = out;
    for (std::size_t p = begin; p < end; ++p) {
      if (col_indices[p] >= net.col_count()) {
        throw IndexOutOfRange("column index " + std::to_string(col_indices[p]) +
                              " outside node set of size " +
                              std::to_string(net.col_count()));
      }
      assert(p == begin || col_indices[p - 1] < col_indices[p]);
      if (negligible(weights[p])) continue;
      col_indices[out] = col_indices[p];
      weights[out] = weights[p];
      ++out;
    }
  }
  net.offsets_[nr] = out;
  col_indices.resize(out);
  weights.resize(out);
  net.col_indices_ = std::move(col_indices);
  net.weights_ = std::move(weights);
  return net;
}

SparseNetwork::RowView SparseNetwork::row(Index i) const {
  const std::size_t begin = offsets_[i];
  const std::size_t len = offsets_[i + 1] - begin;
  return {std::span<const Index>(col_indices_).subspan(begin, len),
          std::span<const double>(weights_).subspan(begin, len)};
}

double SparseNetwork::at(Index i, Index j) const {
  const RowView r = row(i);
  auto it = std::lower_bound(r.cols.begin(), r.cols.end(), j);
  if (it == r.cols.end() || *it != j) return 0.0;
  return r.weights[static_cast<std::size_t>(it - r.cols.begin())];
}

std::vector<Entry> SparseNetwork::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (Index i = 0; i < row_count(); ++i) {
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      out.push_back({i, col_indices_[p], weights_[p]});
    }
  }
  return out;
}

bool operator==(const SparseNetwork& a, const SparseNetwork& b) {
  return a.orientation_ == b.orientation_ && same_mode(a.rows_, b.rows_) &&
         same_mode(a.cols_, b.cols_) && a.offsets_ == b.offsets_ &&
         a.col_indices_ == b.col_indices_ && a.weights_ == b.weights_;
}

}  // namespace linknet
