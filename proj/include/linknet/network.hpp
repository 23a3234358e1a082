#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace linknet {

using Index = std::size_t;

/// Entries with magnitude below this are treated as zero and never stored.
inline constexpr double kZeroTolerance = 1e-12;

// -----------------------------------------------------------------------------
// NodeSet
// -----------------------------------------------------------------------------

/// An ordered, labeled mode (works, authors, keywords, ...).
///
/// Node sets are immutable and shared between networks through
/// `NodeSetPtr`. Two node sets describe the same mode when they are the same
/// object or carry the same label sequence; the name is descriptive only.
class NodeSet {
 public:
  /// Throws `Error` if a label occurs twice.
  NodeSet(std::string name, std::vector<std::string> labels);

  /// Node set of size `n` labeled by consecutive integers starting at `first`.
  static std::shared_ptr<const NodeSet> numbered(std::string name, std::size_t n,
                                                 std::size_t first = 1);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Index> find(const std::string& label) const;

  bool same_mode(const NodeSet& other) const noexcept;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

using NodeSetPtr = std::shared_ptr<const NodeSet>;

NodeSetPtr make_node_set(std::string name, std::vector<std::string> labels);

bool same_mode(const NodeSetPtr& a, const NodeSetPtr& b) noexcept;

// -----------------------------------------------------------------------------
// WeightVector
// -----------------------------------------------------------------------------

/// Per-node scalar values over a node set. Missing values are NaN.
class WeightVector {
 public:
  static constexpr double missing = std::numeric_limits<double>::quiet_NaN();

  WeightVector(NodeSetPtr nodes, std::vector<double> values);
  WeightVector(NodeSetPtr nodes, double fill);

  const NodeSetPtr& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }
  double& operator[](Index i) { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  bool is_missing(Index i) const;

 private:
  NodeSetPtr nodes_;
  std::vector<double> values_;
};

// -----------------------------------------------------------------------------
// SparseNetwork
// -----------------------------------------------------------------------------

struct Entry {
  Index row;
  Index col;
  double weight;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector with ascending, unique indices.
struct SparseVector {
  std::vector<Index> indices;
  std::vector<double> values;

  std::size_t nnz() const noexcept { return indices.size(); }
  double sum() const noexcept;
};

enum class Orientation {
  directed,    ///< arcs; the stored matrix is the network
  undirected,  ///< folded edges {a,b} stored once with a <= b
};

/// Weighted two-mode network stored as a row-major sparse matrix.
///
/// Rows of each row are sorted by column and never contain a stored zero
/// (see `kZeroTolerance`). A one-mode network is the case where rows and
/// columns are the same mode. Values are immutable once constructed.
class SparseNetwork {
 public:
  struct RowView {
    std::span<const Index> cols;
    std::span<const double> weights;

    std::size_t size() const noexcept { return cols.size(); }
    bool empty() const noexcept { return cols.empty(); }
  };

  /// Empty network between the two modes.
  SparseNetwork(NodeSetPtr rows, NodeSetPtr cols,
                Orientation orientation = Orientation::directed);

  /// Builds from an unordered entry list. Duplicate positions are summed,
  /// near-zero results dropped. Undirected entries are canonicalized to
  /// row <= col. Throws `IndexOutOfRange` / `NotOneMode`.
  static SparseNetwork from_entries(NodeSetPtr rows, NodeSetPtr cols,
                                    std::vector<Entry> entries,
                                    Orientation orientation = Orientation::directed);

  /// Builds from row-major arrays whose rows are already sorted and
  /// duplicate-free. Near-zero weights are dropped.
  static SparseNetwork from_rows(NodeSetPtr rows, NodeSetPtr cols,
                                 std::vector<std::size_t> offsets,
                                 std::vector<Index> col_indices,
                                 std::vector<double> weights,
                                 Orientation orientation = Orientation::directed);

  const NodeSetPtr& rows() const noexcept { return rows_; }
  const NodeSetPtr& cols() const noexcept { return cols_; }
  std::size_t row_count() const noexcept { return rows_->size(); }
  std::size_t col_count() const noexcept { return cols_->size(); }
  std::size_t nnz() const noexcept { return col_indices_.size(); }
  bool empty() const noexcept { return col_indices_.empty(); }

  Orientation orientation() const noexcept { return orientation_; }
  bool directed() const noexcept { return orientation_ == Orientation::directed; }
  bool one_mode() const noexcept { return same_mode(rows_, cols_); }

  RowView row(Index i) const;
  /// Stored weight at (i, j), or 0 when absent.
  double at(Index i, Index j) const;
  std::vector<Entry> entries() const;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const Index> col_indices() const noexcept { return col_indices_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Same orientation, same modes and bit-identical entries.
  friend bool operator==(const SparseNetwork& a, const SparseNetwork& b);

 private:
  NodeSetPtr rows_;
  NodeSetPtr cols_;
  Orientation orientation_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> col_indices_;
  std::vector<double> weights_;
};

}  // namespace linknet
