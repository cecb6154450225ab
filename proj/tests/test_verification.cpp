#include <doctest.h>

#include "pathalg/error.hpp"
#include "pathalg/relations.hpp"
#include "pathalg/sparse_echelon.hpp"
#include "pathalg/verification.hpp"
#include "support.hpp"

using namespace testing;

namespace {

SparseRowEchelon::Row row_of(const std::vector<Scalar>& dense) {
  SparseRowEchelon::RationalRow row;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) row.emplace_back(i, dense[i]);
  return SparseRowEchelon::integerize(std::move(row));
}

}  // namespace

TEST_SUITE("verification") {
  TEST_CASE("echelon rank agrees with dense elimination") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> denom(1, 3);
    std::uniform_int_distribution<int> shape(1, 9);
    std::bernoulli_distribution sparse(0.6);
    for (int trial = 0; trial < 300; ++trial) {
      const int rows = shape(rng);
      const int cols = shape(rng);
      std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
      for (auto& r : m)
        for (auto& x : r) x = sparse(rng) ? Scalar(0) : Scalar(entry(rng), denom(rng));
      // duplicate a combination now and then so rank deficits occur
      if (rows > 2) {
        for (int c = 0; c < cols; ++c) m[rows - 1][c] = m[0][c] * 2 - m[1][c] / 3;
      }
      SparseRowEchelon e;
      for (const auto& r : m) e.insert(row_of(r));
      CHECK(e.rank() == dense_rank(m));
      for (const auto& r : m) CHECK(e.contains(row_of(r)));
    }
  }

  TEST_CASE("echelon membership") {
    SparseRowEchelon e;
    CHECK(e.insert(row_of({1, 2, 0})));
    CHECK_FALSE(e.insert(row_of({Scalar(1, 2), 1, 0})));
    CHECK(e.contains(row_of({0, 0, 0})));
    CHECK_FALSE(e.contains(row_of({0, 1, 0})));
    CHECK(e.insert(row_of({0, 1, 5})));
    CHECK(e.contains(row_of({1, 3, 5})));
    CHECK(e.rank() == 2);
  }

  TEST_CASE("basis enumeration on boolean2") {
    const auto& g = boolean2();
    const auto b1 = enumerate_basis(g, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0].empty());
    CHECK(b1[1] == seq(g, {{"{1}", 1}}));
    CHECK(b1[2] == seq(g, {{"{2}", 1}}));
    std::size_t level2 = 0;
    for (const auto& b : enumerate_basis(g, 2)) level2 += seq_level(g, b) == 2;
    CHECK(level2 == 5);
  }

  TEST_CASE("basis enumeration agrees with filtering all sequences") {
    for (const auto& [name, g] : graph_set()) {
      CAPTURE(name);
      const int d = 4;
      std::set<std::vector<std::pair<std::string, int>>> got;
      for (const auto& b : enumerate_basis(g, d)) {
        std::vector<std::pair<std::string, int>> s;
        for (const auto& p : b.pairs) s.emplace_back(g.vertex_id(p.vertex), p.mult);
        got.insert(s);
      }
      const auto expected = brute_basis(g.raw(), d);
      CHECK(got == expected);
      std::vector<std::uint64_t> by_level(d + 1, 0);
      for (const auto& b : enumerate_basis(g, d)) ++by_level[seq_level(g, b)];
      CHECK(hilbert_series(g, d) == by_level);
    }
  }

  TEST_CASE("enumeration order is graded") {
    const auto g = boolean_lattice(3);
    const auto all = enumerate_basis(g, 4);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(graded_seq_less(g, all[i - 1], all[i]));
  }

  TEST_CASE("hilbert series") {
    CHECK(hilbert_series(boolean2(), 3) == std::vector<std::uint64_t>{1, 2, 5, 11});
    CHECK(hilbert_series(chain(1), 6) == std::vector<std::uint64_t>(7, 1));
    const auto g = boolean_lattice(3);
    CHECK(hilbert_series(g, 4) == hilbert_series(g.with_alternate_chosen(), 4));
  }

  TEST_CASE("brute force dimensions on boolean2") {
    const auto& g = boolean2();
    const auto report = brute_force_dims(g, 2, GeneratorChoice::Reduced);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[1].dimT == 3);
    CHECK(report.rows[1].dimR == 0);
    CHECK(report.rows[1].dimA == 3);
    CHECK(report.rows[2].dimT == 9);
    CHECK(report.rows[2].dimR == 1);
    CHECK(report.rows[2].dimA == 8);
    CHECK(report.pass);
    const auto pairs = brute_force_dims(g, 3, GeneratorChoice::PathPairs);
    const auto reduced = brute_force_dims(g, 3, GeneratorChoice::Reduced);
    for (std::size_t d = 0; d < pairs.rows.size(); ++d) CHECK(pairs.rows[d].dimR == reduced.rows[d].dimR);
  }

  TEST_CASE("free algebra on one edge") {
    const auto report = brute_force_dims(chain(1), 8, GeneratorChoice::Reduced);
    for (const auto& r : report.rows) CHECK(r.dimA == static_cast<std::size_t>(r.degree) + 1);
  }

  TEST_CASE("verify passes and renders") {
    const auto report = verify_basis(boolean2(), 3);
    CHECK(report.pass);
    std::vector<std::size_t> dims;
    for (const auto& r : report.rows) dims.push_back(r.dimA);
    CHECK(dims == std::vector<std::size_t>{1, 3, 8, 19});
    const auto table = render_table(report);
    CHECK(table.substr(table.size() - 5) == "pass\n");
    CHECK(render_tsv(report).find("2\t9\t1\t8\t8\tpass\n") != std::string::npos);
  }

  TEST_CASE("dropping the cover generator is detected") {
    const auto& g = boolean2();
    VerifyOptions options;
    options.reduced_override = std::vector<NcPoly>{reduced_relations(g)[0].poly};
    const auto report = verify_basis(g, 3, options);
    CHECK_FALSE(report.pass);
    REQUIRE(report.failure_degree.has_value());
    CHECK(*report.failure_degree == 3);
    CHECK_FALSE(report.counterexample.empty());
    CHECK(render_table(report).find("fail\n") != std::string::npos);
  }

  TEST_CASE("resource limits") {
    VerifyLimits limits;
    limits.max_words = 10;
    try {
      (void)brute_force_dims(boolean2(), 3, GeneratorChoice::Reduced, limits);
      FAIL("expected BoundTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoundTooLarge);
    }
    limits = {};
    limits.max_rows = 3;
    CHECK_THROWS_AS(verify_basis(boolean2(), 3, {limits}), Error);
  }
}
