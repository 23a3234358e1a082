#pragma once

#include "linknet/network.hpp"

namespace linknet {

enum class NormKind {
  row_fractional,  ///< each nonempty row sums to 1
  col_fractional,  ///< each nonempty column sums to 1
  newman,          ///< binary rows divided by max(1, outdeg - 1)
  citation,        ///< one-mode row normalization by max(1, outdeg)
};

/// Divides each row by its sum. Empty rows stay empty.
SparseNetwork normalize_rows(const SparseNetwork& net);

/// Divides each column by its sum. Empty columns stay empty.
///
/// Provided for completeness: for bibliographic networks a column-normalized
/// authorship network has no natural interpretation.
SparseNetwork normalize_cols(const SparseNetwork& net);

/// Newman normalization of a binary network: every entry of a row with
/// outdegree d becomes 1 / max(1, d - 1), crediting collaboration with
/// coauthors only. Rows with d >= 2 therefore sum to d / (d - 1), not 1.
/// Throws `NotBinary`.
SparseNetwork normalize_newman(const SparseNetwork& net);

/// Row normalization of a one-mode citation network, D * Ci with
/// D = diag(1 / max(1, outdeg)). Weighted citations are divided by their row
/// sum instead, so every citing work always distributes exactly 1.
/// Throws `NotOneMode`.
SparseNetwork normalize_citations(const SparseNetwork& ci);

SparseNetwork normalize(const SparseNetwork& net, NormKind kind);

/// True when every stored weight is exactly 1.
bool is_binary(const SparseNetwork& net);

}  // namespace linknet
