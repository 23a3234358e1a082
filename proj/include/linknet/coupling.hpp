#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "linknet/core.hpp"
#include "linknet/network.hpp"

namespace linknet {

/// biCo = Ci * Ci^T: number of works cited by both p and q.
SparseNetwork bi_coupling(const SparseNetwork& ci, ExplosionGuard guard = {});

/// coCi = Ci^T * Ci: number of works citing both p and q.
SparseNetwork co_citation(const SparseNetwork& ci, ExplosionGuard guard = {});

/// CoCit = Cin^T * Cin. Each citing work spreads a total weight of 1.
SparseNetwork co_citation_normalized(const SparseNetwork& ci, ExplosionGuard guard = {});

/// biC = Cin * Ci^T = D * biCo: the share of p's references that p shares
/// with q. Asymmetric; values in [0, 1]. Requires binary citations.
SparseNetwork bi_coupling_asym(const SparseNetwork& ci, ExplosionGuard guard = {});

enum class MeasureKind { average, minimum, maximum, geometric, harmonic, jaccard };

/// Parses the one-letter codes a, m, M, g, h, j.
std::optional<MeasureKind> measure_from_code(std::string_view code);
std::string_view measure_name(MeasureKind kind);

/// Symmetric coupling similarity of the given kind for every distinct pair of
/// works with at least one common reference. With n = |Ci(p) & Ci(q)|,
/// a = |Ci(p)| and b = |Ci(q)|:
///
///   average    (n/a + n/b) / 2        geometric  n / sqrt(a b)
///   minimum    n / max(a, b)          harmonic   2n / (a + b)
///   maximum    n / min(a, b)          jaccard    n / (a + b - n)
///
/// Pairs without common references are absent; the diagonal is excluded.
/// Requires binary citations.
SparseNetwork bi_coupling_measure(const SparseNetwork& ci, MeasureKind kind,
                                  ExplosionGuard guard = {});

/// Value of one measure from the intersection size and both reference counts.
double coupling_measure(MeasureKind kind, double common, double refs_p, double refs_q);

enum class DissimilarityTransform {
  one_minus,             ///< 1 - s
  reciprocal_minus_one,  ///< 1/s - 1
  negative_log,          ///< -log s
};

/// Explicit values over a sparse pattern. Unlike `SparseNetwork`, zero values
/// are stored: a dissimilarity of 0 marks identical reference lists.
struct PairTable {
  NodeSetPtr rows;
  NodeSetPtr cols;
  std::vector<Entry> entries;  ///< sorted by (row, col)

  bool symmetric() const;
};

/// Applies the transform to every stored similarity. Pairs absent from `sim`
/// share no references and stay absent (maximal, undefined distance).
/// Throws `DomainError` for values outside [0, 1], or outside (0, 1] for the
/// reciprocal and log transforms.
PairTable to_dissimilarity(const SparseNetwork& sim, DissimilarityTransform transform);

}  // namespace linknet
