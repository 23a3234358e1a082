#include "linknet/normalize.hpp"

#include <algorithm>

#include "linknet/core.hpp"
#include "linknet/error.hpp"

namespace linknet {

namespace {

// 1/S with the empty-row guard S = 1.
WeightVector reciprocal_sums(WeightVector sums, const WeightVector& degrees) {
  for (Index i = 0; i < sums.size(); ++i) {
    sums[i] = degrees[i] > 0 ? 1.0 / sums[i] : 1.0;
  }
  return sums;
}

}  // namespace

bool is_binary(const SparseNetwork& net) {
  return std::all_of(net.weights().begin(), net.weights().end(),
                     [](double w) { return w == 1.0; });
}

SparseNetwork normalize_rows(const SparseNetwork& net) {
  return diag_scale(reciprocal_sums(row_sums(net), out_degrees(net)), net, Side::left);
}

SparseNetwork normalize_cols(const SparseNetwork& net) {
  return diag_scale(reciprocal_sums(col_sums(net), in_degrees(net)), net, Side::right);
}

SparseNetwork normalize_newman(const SparseNetwork& net) {
  if (!is_binary(net)) throw NotBinary("Newman normalization requires a binary network");
  WeightVector factor = out_degrees(net);
  for (Index i = 0; i < factor.size(); ++i) factor[i] = 1.0 / std::max(1.0, factor[i] - 1.0);
  return diag_scale(factor, net, Side::left);
}

SparseNetwork normalize_citations(const SparseNetwork& ci) {
  if (!ci.one_mode()) throw NotOneMode("citation normalization requires a one-mode network");
  // For binary citations the row sum is the outdegree.
  return normalize_rows(ci);
}

SparseNetwork normalize(const SparseNetwork& net, NormKind kind) {
  switch (kind) {
    case NormKind::row_fractional: return normalize_rows(net);
    case NormKind::col_fractional: return normalize_cols(net);
    case NormKind::newman: return normalize_newman(net);
    case NormKind::citation: return normalize_citations(net);
  }
  throw Error("unknown normalization");
}

}  // namespace linknet
