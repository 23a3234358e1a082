#pragma once

#include "linknet/core.hpp"
#include "linknet/network.hpp"

namespace linknet {

enum class ProjectionSide {
  rows,  ///< WW = WA * WA^T: common authors of two works
  cols,  ///< AA = WA^T * WA: works coauthored by two authors
};

SparseNetwork project(const SparseNetwork& wa, ProjectionSide side, ExplosionGuard guard = {});

enum class CoauthorshipVariant {
  first,   ///< Co  = WA^T * WA (binary WA)
  second,  ///< Cn  = WA^T * WAn, directed with loops
  third,   ///< Ct  = WAn^T * WAn, every authored work contributes 1
  fourth,  ///< Ct' = WAn^T * WAn' folded, loops removed (binary WA)
};

/// Coauthorship network of the requested variant.
///
/// The fourth variant is returned undirected: loops are removed and opposite
/// arcs are merged into one edge of doubled weight, so each work with at
/// least two authors contributes exactly 1 to the total weight.
///
/// Throws `NotBinary` for first/fourth on weighted input and `DomainError`
/// for negative weights.
SparseNetwork coauthorship(const SparseNetwork& wa, CoauthorshipVariant variant,
                           ExplosionGuard guard = {});

struct SelfSufficiency {
  WeightVector selfsufficiency;    ///< cn[a,a] / indeg(a)
  WeightVector collaborativeness;  ///< 1 - selfsufficiency
};

/// Authors without works get missing (NaN) values in both vectors.
SelfSufficiency self_sufficiency(const SparseNetwork& wa);

/// Links the column mode of `wa` through a one-mode network `s` on its rows:
/// WAn^T * S * WAn when normalized, WA^T * S * WA otherwise.
/// Throws `IncompatibleModes` unless s is one-mode on wa's rows.
SparseNetwork link_through(const SparseNetwork& wa, const SparseNetwork& s, bool normalized,
                           ExplosionGuard guard = {});

/// WA^T * WK, or WAn^T * WKn when normalized.
SparseNetwork author_keyword(const SparseNetwork& wa, const SparseNetwork& wk, bool normalized,
                             ExplosionGuard guard = {});

}  // namespace linknet
