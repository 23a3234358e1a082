#include "linknet/derived.hpp"

#include <algorithm>

#include "linknet/error.hpp"
#include "linknet/normalize.hpp"

namespace linknet {

namespace {

void require_binary(const SparseNetwork& wa, const char* what) {
  if (!is_binary(wa)) throw NotBinary(std::string(what) + " requires a binary network");
}

void require_nonnegative(const SparseNetwork& wa, const char* what) {
  const auto w = wa.weights();
  if (std::any_of(w.begin(), w.end(), [](double x) { return x < 0; })) {
    throw DomainError(std::string(what) + " requires nonnegative weights");
  }
}

}  // namespace

SparseNetwork project(const SparseNetwork& wa, ProjectionSide side, ExplosionGuard guard) {
  const SparseNetwork wat = transpose(wa);
  return side == ProjectionSide::rows ? multiply(wa, wat, guard) : multiply(wat, wa, guard);
}

SparseNetwork coauthorship(const SparseNetwork& wa, CoauthorshipVariant variant,
                           ExplosionGuard guard) {
  switch (variant) {
    case CoauthorshipVariant::first:
      require_binary(wa, "first coauthorship variant");
      return project(wa, ProjectionSide::cols, guard);
    case CoauthorshipVariant::second:
      require_nonnegative(wa, "second coauthorship variant");
      return multiply(transpose(wa), normalize_rows(wa), guard);
    case CoauthorshipVariant::third: {
      require_nonnegative(wa, "third coauthorship variant");
      const SparseNetwork wan = normalize_rows(wa);
      return multiply(transpose(wan), wan, guard);
    }
    case CoauthorshipVariant::fourth: {
      require_binary(wa, "fourth coauthorship variant");
      const SparseNetwork strict = multiply(transpose(normalize_rows(wa)), normalize_newman(wa), guard);
      // Dropping loops while folding is the same as zeroing the diagonal first.
      return fold_to_undirected(strict, LoopPolicy::drop).network;
    }
  }
  throw Error("unknown coauthorship variant");
}

SelfSufficiency self_sufficiency(const SparseNetwork& wa) {
  // Only the diagonal of Cn = WA^T * WAn is needed: cn[a,a] = sum_w wa[w,a] * wan[w,a].
  const SparseNetwork wan = normalize_rows(wa);
  std::vector<double> own(wa.col_count(), 0.0);
  for (Index w = 0; w < wa.row_count(); ++w) {
    const auto raw = wa.row(w);
    const auto scaled = wan.row(w);
    for (std::size_t p = 0, q = 0; p < raw.size() && q < scaled.size();) {
      if (raw.cols[p] < scaled.cols[q]) {
        ++p;
      } else if (scaled.cols[q] < raw.cols[p]) {
        ++q;
      } else {
        own[raw.cols[p]] += raw.weights[p] * scaled.weights[q];
        ++p;
        ++q;
      }
    }
  }

  const WeightVector indeg = in_degrees(wa);
  WeightVector s(wa.cols(), WeightVector::missing);
  WeightVector k(wa.cols(), WeightVector::missing);
  for (Index a = 0; a < own.size(); ++a) {
    if (indeg[a] == 0) continue;
    s[a] = own[a] / indeg[a];
    k[a] = 1.0 - s[a];
  }
  return {std::move(s), std::move(k)};
}

SparseNetwork link_through(const SparseNetwork& wa, const SparseNetwork& s, bool normalized,
                           ExplosionGuard guard) {
  if (!s.one_mode() || !same_mode(s.rows(), wa.rows())) {
    throw IncompatibleModes("link-through network must be one-mode on the rows of '" +
                            wa.rows()->name() + "'");
  }
  const SparseNetwork base = normalized ? normalize_rows(wa) : wa;
  return multiply(multiply(transpose(base), s, guard), base, guard);
}

SparseNetwork author_keyword(const SparseNetwork& wa, const SparseNetwork& wk, bool normalized,
                             ExplosionGuard guard) {
  if (!normalized) return multiply(transpose(wa), wk, guard);
  return multiply(transpose(normalize_rows(wa)), normalize_rows(wk), guard);
}

}  // namespace linknet
