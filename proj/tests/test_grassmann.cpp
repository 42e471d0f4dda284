#include <doctest.h>

#include <fstream>
#include <sstream>

#include "grinv/error.hpp"
#include "grinv/grassmann.hpp"
#include "grinv/io.hpp"
#include "support.hpp"

using namespace grinv;
using grinv::testing::random_invertible_mat;
using grinv::testing::random_mat;
using grinv::testing::random_right_factors;

namespace {

MatQ unit_cols(std::size_t n, std::initializer_list<std::size_t> idx) {
  MatQ m(n, idx.size());
  std::size_t c = 0;
  for (auto i : idx) m(i, c++) = 1;
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// g = [[P, 0], [Q, R]] with P of size top x top.
MatQ lower_block_triangular(SplitMix64& rng, std::size_t n, std::size_t top) {
  MatQ g(n, n);
  g.set_block(0, 0, random_invertible_mat(rng, top, 5));
  g.set_block(top, 0, random_mat(rng, n - top, top, 5));
  g.set_block(top, top, random_invertible_mat(rng, n - top, 5));
  return g;
}

}  // namespace

TEST_SUITE("grassmann") {
  TEST_CASE("canonicalize examples") {
    CHECK(canonicalize(Subspace(MatQ{{2, 0}, {0, 3}})).basis() == MatQ::identity(2));
    const Subspace v(MatQ{{1, 0}, {3, 1}, {4, 2}});
    CHECK(canonicalize(canonicalize(v)).basis() == canonicalize(v).basis());
    CHECK(canonicalize(Subspace(MatQ{{1}, {1}})).basis() == canonicalize(Subspace(MatQ{{2}, {2}})).basis());
  }

  TEST_CASE("rank-deficient bases are rejected") {
    try {
      Subspace bad(MatQ{{1, 2}, {2, 4}});
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
    }
  }

  TEST_CASE("intersect examples") {
    const Subspace a(unit_cols(3, {0, 1})), b(unit_cols(3, {1, 2}));
    CHECK(intersect(a, b).basis() == unit_cols(3, {1}));
    CHECK(intersect(a, a).basis() == canonicalize(a).basis());
    CHECK(intersect(Subspace(unit_cols(3, {0})), Subspace(unit_cols(3, {1}))).dim() == 0);
    CHECK_THROWS_AS((void)intersect(a, Subspace(unit_cols(4, {0}))), Error);
  }

  TEST_CASE("property: dim(a cap b) + dim(a + b) = dim a + dim b") {
    SplitMix64 rng(21);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 4);
      const std::size_t da = 1 + rng.uniform(0, static_cast<std::int64_t>(n) - 1);
      const std::size_t db = 1 + rng.uniform(0, static_cast<std::int64_t>(n) - 1);
      MatQ ma = random_mat(rng, n, da, 2), mb = random_mat(rng, n, db, 2);
      if (rank(ma) < da || rank(mb) < db) continue;
      if (t % 4 == 0) mb.set_block(0, 0, ma.cols_range(0, 1));  // force a shared direction
      if (rank(mb) < db) continue;
      const Subspace a(ma), b(mb);
      const Subspace cap = intersect(a, b);
      CHECK(cap.dim() + span_sum(a, b).dim() == da + db);
      // every intersection vector lies in both spans
      CHECK(rank(hcat({ma, cap.basis()})) == da);
      CHECK(rank(hcat({mb, cap.basis()})) == db);
    }
  }

  TEST_CASE("classify_case examples") {
    CHECK(classify_case(4, 2) == CaseTag{CaseKind::Divisible, 2, 0});
    CHECK(classify_case(3, 2) == CaseTag{CaseKind::OddMultiple, 1, 1});
    CHECK(classify_case(5, 3).kind == CaseKind::Unsupported);
    CHECK(classify_case(10, 4) == CaseTag{CaseKind::OddMultiple, 2, 2});
    CHECK(classify_case(2, 1) == CaseTag{CaseKind::Divisible, 2, 0});
    CHECK(classify_case(3, 3).kind == CaseKind::Unsupported);
  }

  TEST_CASE("classify_case for planes is decided by parity") {
    for (std::size_t n = 3; n <= 20; ++n) {
      const CaseTag t = classify_case(n, 2);
      if (n % 2 == 0) {
        CHECK(t == CaseTag{CaseKind::Divisible, n / 2, 0});
      } else {
        CHECK(t == CaseTag{CaseKind::OddMultiple, (n - 1) / 2, 1});
      }
    }
  }

  TEST_CASE("general_position examples") {
    const Subspace e1(unit_cols(4, {0, 1})), e2(unit_cols(4, {2, 3}));
    const Subspace diag(MatQ{{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    CHECK(general_position(Config(4, 2, {e1, e2, diag})));
    CHECK_FALSE(general_position(Config(4, 2, {e1, e2, Subspace(unit_cols(4, {0, 2}))})));
    const Config c = sample_config(4, 2, 5, 5, 10);
    std::vector<Subspace> dup = c.subspaces();
    dup[1] = dup[0];
    CHECK_FALSE(general_position(Config(4, 2, dup)));
    const Config odd = sample_config(5, 2, 5, 5, 10);
    std::vector<Subspace> dup_odd = odd.subspaces();
    dup_odd[1] = dup_odd[0];
    CHECK_FALSE(general_position(Config(5, 2, dup_odd)));
  }

  TEST_CASE("sample_config is deterministic and generic") {
    for (auto [n, d, s] : {std::tuple{4, 2, 5}, {3, 2, 6}, {5, 2, 5}, {6, 3, 4}, {2, 1, 4}}) {
      const Config a = sample_config(n, d, s, 42, 10);
      const Config b = sample_config(n, d, s, 42, 10);
      CHECK(a == b);
      CHECK(a.s() == static_cast<std::size_t>(s));
      CHECK(general_position(a));
      for (const auto& v : a.subspaces())
        for (const auto& x : v.basis().entries()) {
          CHECK(x.denominator() == 1);
          CHECK(x <= Rat(10));
          CHECK(x >= Rat(-10));
        }
    }
    CHECK_FALSE(sample_config(4, 2, 5, 1, 10) == sample_config(4, 2, 5, 2, 10));
  }

  TEST_CASE("sample_config matches the frozen golden file") {
    const Config c = sample_config(4, 2, 5, 1, 10);
    const std::string golden = slurp(GRINV_TEST_DATA "/config_4_2_5_seed1.json");
    REQUIRE_FALSE(golden.empty());
    CHECK(io::dump(io::config_to_json(c)) == golden);
  }

  TEST_CASE("sampling errors") {
    CHECK_THROWS_AS((void)sample_config(5, 3, 4, 1, 10), Error);
    try {
      (void)sample_config(4, 2, 5, 1, 0);
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ShapeMismatch);
    }
  }

  TEST_CASE("act_left and act_right examples") {
    SplitMix64 rng(22);
    const Config c = sample_config(4, 2, 5, 9, 10);
    CHECK(act_left(MatQ::identity(4), c) == c);
    const MatQ g = random_invertible_mat(rng, 4);
    CHECK(act_left(g, act_left(inverse(g), c)).same_subspaces(c));
    CHECK(act_left(Rat(2) * MatQ::identity(4), c).same_subspaces(c));
    const std::vector<MatQ> ids(5, MatQ::identity(2));
    CHECK(act_right(ids, c) == c);
    CHECK(act_right(random_right_factors(rng, 5, 2), c).same_subspaces(c));
    CHECK_THROWS_AS((void)act_left(MatQ(4, 4), c), Error);
    CHECK_THROWS_AS((void)act_right(std::vector<MatQ>(5, MatQ(2, 2)), c), Error);
    CHECK_THROWS_AS((void)act_right(ids, sample_config(4, 2, 4, 9, 10)), Error);
  }

  TEST_CASE("property: divisible general position is preserved by both actions") {
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
      MatQ stacked = random_mat(rng, 4, 10, 2);
      if (t % 5 == 0) stacked.set_block(0, 8, stacked.cols_range(0, 1));  // sometimes degenerate
      std::vector<Subspace> subs;
      bool full = true;
      for (std::size_t i = 0; i < 5; ++i) {
        const MatQ b = stacked.cols_range(2 * i, 2);
        if (rank(b) < 2) full = false;
        subs.emplace_back(full ? b : MatQ::identity(4).cols_range(0, 2));
      }
      if (!full) continue;
      const Config c(4, 2, subs);
      const bool gp = general_position(c);
      CHECK(general_position(act_left(random_invertible_mat(rng, 4), c)) == gp);
      CHECK(general_position(act_right(random_right_factors(rng, 5, 2), c)) == gp);
    }
  }

  TEST_CASE("property: odd general position is preserved by right factors and chart-preserving g") {
    SplitMix64 rng(24);
    for (auto [n, d, s] : {std::tuple{3, 2, 5}, {5, 2, 5}}) {
      for (int t = 0; t < 50; ++t) {
        const Config c = sample_config(n, d, s, 2400 + t, 6);
        CHECK(general_position(act_right(random_right_factors(rng, s, d), c)));
        CHECK(general_position(act_left(lower_block_triangular(rng, n, d), c)));
      }
    }
  }
}
