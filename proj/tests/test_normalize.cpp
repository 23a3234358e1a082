#include <doctest.h>

#include "fixtures.hpp"
#include "linknet/core.hpp"
#include "linknet/error.hpp"
#include "linknet/normalize.hpp"

using namespace linknet;
using namespace linknet::testing;

TEST_CASE("row normalization of the worked example gives the expected WAn and WKn") {
  WorkedExample ex;
  const Dense wan = to_dense(normalize_rows(ex.wa));
  const Dense wkn = to_dense(normalize_rows(ex.wk));
  for (std::size_t w = 0; w < 5; ++w) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(wan[w][j] == doctest::Approx(ex.wan[w][j]).epsilon(1e-15));
      CHECK(wkn[w][j] == doctest::Approx(ex.wkn[w][j]).epsilon(1e-15));
    }
  }
  CHECK(wan[0] == std::vector<double>{0.5, 0, 0.5, 0});
  CHECK(wkn[4] == std::vector<double>{0, 0.5, 0, 0.5});
}

TEST_CASE("empty rows stay empty") {
  WorkedExample ex;
  Dense wa = ex.wa_dense;
  wa[1] = {0, 0, 0, 0};
  const SparseNetwork n = normalize_rows(from_dense(ex.works, ex.authors, wa));
  CHECK(n.row(1).empty());
  CHECK(row_sums(n)[0] == 1.0);
}

TEST_CASE("normalized rows sum to 0 or 1 and normalization is idempotent") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const SparseNetwork net = from_dense(labeled("w", "w", 30), labeled("a", "a", 20),
                                         random_dense(rng, 30, 20, 0.1, Weights::real));
    const SparseNetwork n = normalize_rows(net);
    const WeightVector s = row_sums(n);
    for (Index i = 0; i < s.size(); ++i) {
      CHECK((s[i] == 0.0 || std::abs(s[i] - 1.0) <= 1e-12));
    }
    const SparseNetwork twice = normalize_rows(n);
    for (std::size_t p = 0; p < n.nnz(); ++p) {
      CHECK(twice.weights()[p] == doctest::Approx(n.weights()[p]).epsilon(1e-12));
    }
  }
}

TEST_CASE("column normalization") {
  WorkedExample ex;
  const SparseNetwork n = normalize_cols(ex.wa);
  // a2 is authored by w2 and w4 only.
  CHECK(n.at(1, 1) == 0.5);
  CHECK(n.at(3, 1) == 0.5);
  CHECK(col_sums(n)[1] == 1.0);

  SUBCASE("all-zero columns stay empty") {
    Dense wa = ex.wa_dense;
    for (auto& r : wa) r[1] = 0;
    const SparseNetwork m = normalize_cols(from_dense(ex.works, ex.authors, wa));
    CHECK(in_degrees(m)[1] == 0.0);
  }

  SUBCASE("duality with row normalization") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
      const SparseNetwork net = from_dense(labeled("r", "r", 15), labeled("c", "c", 11),
                                           random_dense(rng, 15, 11, 0.2, Weights::real));
      CHECK(normalize_cols(transpose(net)) == transpose(normalize_rows(net)));
    }
  }
}

TEST_CASE("Newman normalization") {
  WorkedExample ex;
  const SparseNetwork n = normalize_newman(ex.wa);
  // w3 has three authors: 1 / (3 - 1)
  CHECK(n.at(2, 0) == 0.5);
  CHECK(n.at(2, 2) == 0.5);
  CHECK(n.at(2, 3) == 0.5);
  // w1 has two authors: 1 / (2 - 1)
  CHECK(n.at(0, 0) == 1.0);

  SUBCASE("single-author rows keep weight 1") {
    const auto w = labeled("w", "w", 1);
    const auto a = labeled("a", "a", 3);
    const auto single = SparseNetwork::from_entries(w, a, {{0, 2, 1.0}});
    CHECK(normalize_newman(single).at(0, 2) == 1.0);
  }

  SUBCASE("weighted input is rejected") {
    CHECK_THROWS_AS(normalize_newman(normalize_rows(ex.wa)), NotBinary);
  }
}

TEST_CASE("Newman rows sum to d / (d - 1), or 1 for a single author") {
  std::mt19937_64 rng(43);
  for (std::size_t d = 1; d <= 12; ++d) {
    const auto w = labeled("w", "w", 1);
    const auto a = labeled("a", "a", 12);
    std::vector<Entry> entries;
    for (Index j = 0; j < d; ++j) entries.push_back({0, j, 1.0});
    const SparseNetwork n = normalize_newman(SparseNetwork::from_entries(w, a, entries));
    const double expected = d == 1 ? 1.0 : static_cast<double>(d) / static_cast<double>(d - 1);
    CAPTURE(d);
    CHECK(row_sums(n)[0] == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("citation normalization") {
  const auto works = labeled("works", "p", 7);
  std::vector<Entry> arcs;
  for (Index q = 1; q <= 5; ++q) arcs.push_back({0, q, 1.0});
  const auto ci = SparseNetwork::from_entries(works, works, arcs);
  const SparseNetwork cin = normalize_citations(ci);
  for (double w : cin.weights()) CHECK(w == 0.2);
  CHECK(cin.row(6).empty());

  CHECK_THROWS_AS(normalize_citations(WorkedExample{}.wa), NotOneMode);

  SUBCASE("random citation DAGs") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
      Dense m = random_dense(rng, 25, 25, 0.2, Weights::binary);
      for (std::size_t p = 0; p < 25; ++p)
        for (std::size_t q = 0; q <= p; ++q) m[p][q] = 0;  // cite older (higher index) works only
      const auto w = labeled("w", "w", 25);
      const SparseNetwork c = from_dense(w, w, m);
      const SparseNetwork n = normalize_citations(c);
      CHECK(n == normalize_rows(c));
      const WeightVector s = row_sums(n);
      const WeightVector deg = out_degrees(c);
      for (Index p = 0; p < 25; ++p) {
        if (deg[p] > 0) CHECK(std::abs(s[p] - 1.0) <= 1e-12);
        else CHECK(s[p] == 0.0);
      }
    }
  }
}

TEST_CASE("dispatch by kind") {
  WorkedExample ex;
  CHECK(normalize(ex.wa, NormKind::row_fractional) == normalize_rows(ex.wa));
  CHECK(normalize(ex.wa, NormKind::col_fractional) == normalize_cols(ex.wa));
  CHECK(normalize(ex.wa, NormKind::newman) == normalize_newman(ex.wa));
}
