#include "linknet/coupling.hpp"

#include <algorithm>
#include <cmath>

#include "linknet/error.hpp"
#include "linknet/normalize.hpp"

namespace linknet {

namespace {

void require_citations(const SparseNetwork& ci, const char* what) {
  if (!ci.one_mode()) throw NotOneMode(std::string(what) + " requires a one-mode network");
}

void require_binary_citations(const SparseNetwork& ci, const char* what) {
  require_citations(ci, what);
  if (!is_binary(ci)) throw NotBinary(std::string(what) + " requires binary citations");
}

}  // namespace

SparseNetwork bi_coupling(const SparseNetwork& ci, ExplosionGuard guard) {
  require_citations(ci, "bibliographic coupling");
  return multiply(ci, transpose(ci), guard);
}

SparseNetwork co_citation(const SparseNetwork& ci, ExplosionGuard guard) {
  require_citations(ci, "co-citation");
  return multiply(transpose(ci), ci, guard);
}

SparseNetwork co_citation_normalized(const SparseNetwork& ci, ExplosionGuard guard) {
  require_citations(ci, "normalized co-citation");
  const SparseNetwork cin = normalize_citations(ci);
  return multiply(transpose(cin), cin, guard);
}

SparseNetwork bi_coupling_asym(const SparseNetwork& ci, ExplosionGuard guard) {
  require_binary_citations(ci, "asymmetric coupling");
  const SparseNetwork bico = bi_coupling(ci, guard);
  const WeightVector refs = out_degrees(ci);
  // n / |Ci(p)| directly, so that biC = D * biCo holds entry by entry.
  std::vector<double> weights(bico.weights().begin(), bico.weights().end());
  for (Index p = 0; p < bico.row_count(); ++p) {
    for (std::size_t e = bico.offsets()[p]; e < bico.offsets()[p + 1]; ++e) {
      weights[e] /= refs[p];
    }
  }
  return SparseNetwork::from_rows(
      bico.rows(), bico.cols(),
      std::vector<std::size_t>(bico.offsets().begin(), bico.offsets().end()),
      std::vector<Index>(bico.col_indices().begin(), bico.col_indices().end()),
      std::move(weights));
}

std::optional<MeasureKind> measure_from_code(std::string_view code) {
  if (code == "a") return MeasureKind::average;
  if (code == "m") return MeasureKind::minimum;
  if (code == "M") return MeasureKind::maximum;
  if (code == "g") return MeasureKind::geometric;
  if (code == "h") return MeasureKind::harmonic;
  if (code == "j") return MeasureKind::jaccard;
  return std::nullopt;
}

std::string_view measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::average: return "average";
    case MeasureKind::minimum: return "minimum";
    case MeasureKind::maximum: return "maximum";
    case MeasureKind::geometric: return "geometric";
    case MeasureKind::harmonic: return "harmonic";
    case MeasureKind::jaccard: return "jaccard";
  }
  return "unknown";
}

double coupling_measure(MeasureKind kind, double common, double refs_p, double refs_q) {
  switch (kind) {
    case MeasureKind::average: return (common / refs_p + common / refs_q) / 2.0;
    case MeasureKind::minimum: return common / std::max(refs_p, refs_q);
    case MeasureKind::maximum: return common / std::min(refs_p, refs_q);
    case MeasureKind::geometric: return common / std::sqrt(refs_p * refs_q);
    case MeasureKind::harmonic: return 2.0 * common / (refs_p + refs_q);
    case MeasureKind::jaccard: return common / (refs_p + refs_q - common);
  }
  throw Error("unknown measure");
}

SparseNetwork bi_coupling_measure(const SparseNetwork& ci, MeasureKind kind,
                                  ExplosionGuard guard) {
  require_binary_citations(ci, "coupling measure");
  const SparseNetwork bico = bi_coupling(ci, guard);
  const WeightVector refs = out_degrees(ci);

  std::vector<std::size_t> offsets(bico.row_count() + 1, 0);
  std::vector<Index> cols;
  std::vector<double> weights;
  cols.reserve(bico.nnz());
  weights.reserve(bico.nnz());
  for (Index p = 0; p < bico.row_count(); ++p) {
    const auto r = bico.row(p);
    for (std::size_t e = 0; e < r.size(); ++e) {
      const Index q = r.cols[e];
      if (q == p) continue;
      cols.push_back(q);
      weights.push_back(coupling_measure(kind, r.weights[e], refs[p], refs[q]));
    }
    offsets[p + 1] = cols.size();
  }
  return SparseNetwork::from_rows(bico.rows(), bico.cols(), std::move(offsets), std::move(cols),
                                  std::move(weights));
}

bool PairTable::symmetric() const {
  if (!same_mode(rows, cols)) return false;
  auto find = [this](Index r, Index c) -> const Entry* {
    auto it = std::lower_bound(entries.begin(), entries.end(), Entry{r, c, 0.0},
                               [](const Entry& a, const Entry& b) {
                                 return a.row != b.row ? a.row < b.row : a.col < b.col;
                               });
    return it != entries.end() && it->row == r && it->col == c ? &*it : nullptr;
  };
  for (const Entry& e : entries) {
    const Entry* mirror = find(e.col, e.row);
    if (mirror == nullptr || mirror->weight != e.weight) return false;
  }
  return true;
}

PairTable to_dissimilarity(const SparseNetwork& sim, DissimilarityTransform transform) {
  PairTable out{sim.rows(), sim.cols(), sim.entries()};
  for (Entry& e : out.entries) {
    const double s = e.weight;
    if (!(s >= 0.0 && s <= 1.0)) {
      throw DomainError("similarity " + std::to_string(s) + " outside [0, 1]");
    }
    switch (transform) {
      case DissimilarityTransform::one_minus:
        e.weight = 1.0 - s;
        break;
      case DissimilarityTransform::reciprocal_minus_one:
        if (s == 0.0) throw DomainError("reciprocal of a zero similarity");
        e.weight = 1.0 / s - 1.0;
        break;
      case DissimilarityTransform::negative_log:
        if (s == 0.0) throw DomainError("logarithm of a zero similarity");
        e.weight = 0.0 - std::log(s);
        break;
    }
  }
  return out;
}

}  // namespace linknet
