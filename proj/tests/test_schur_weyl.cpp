#include <doctest.h>

#include "oracles.hpp"
#include "ubp/error.hpp"
#include "ubp/exact_rank.hpp"
#include "ubp/schur_weyl.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

#include <random>

using namespace ubp;

namespace {
  ActionMatrix from_entries(std::vector<std::vector<int>> const& rows, int r = 1) {
    ActionMatrix out(rows.size(), r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (rows[i][j] != 0) {
          out.add(i, j, CycScalar::monomial(r, 0, rows[i][j]));
        }
      }
    }
    return out;
  }

  bool all_commute(int n, int m, int r) {
    for (auto const& res : commutation_report(n, m, r)) {
      if (!res.commutes) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_SUITE("schur-weyl") {
  TEST_CASE("cyclotomic scalars") {
    auto const z = CycScalar::monomial(3, 1);
    CHECK(z * z * z == CycScalar::monomial(3, 0));
    CHECK(CycScalar::monomial(3, -1) == z * z);
    CHECK((z + z).coefficients() == std::vector<Integer>{0, 2, 0});
    CHECK(CycScalar(4).is_zero());
    CHECK(to_string(CycScalar::monomial(1, 5, 7)) == "7");
  }

  TEST_CASE("words") {
    CHECK(word_index({1, 1}, 2) == 0);
    CHECK(word_index({2, 1}, 2) == 2);
    CHECK(word_at(5, 3, 2) == std::vector<int>{2, 3});
    for (std::size_t w = 0; w < 27; ++w) {
      CHECK(word_index(word_at(w, 3, 3), 3) == w);
    }
    CHECK(checked_power(3, 4, 81) == 81);
    CHECK_THROWS_AS(checked_power(3, 5, 81), CeilingError);
    CHECK(act_on_word({1, 2}, generator_b(2, 1)) == std::nullopt);
    CHECK(act_on_word({2, 2}, generator_b(2, 1)) == std::vector<int>{2, 2});
    CHECK(act_on_word({1, 2, 3}, parse_ubp("{1,3}->{1,2};{2}->{3}")) == std::nullopt);
    CHECK(act_on_word({1, 1, 3}, parse_ubp("{1,3}->{1,2};{2}->{3}")) == std::vector<int>{1, 3, 1});
  }

  TEST_CASE("generator matrices") {
    CHECK(ubp_action_matrix(generator_b(2, 1), 2) == from_entries({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}));
    CHECK(ubp_action_matrix(generator_s(2, 1), 2) == from_entries({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
    CHECK(ubp_action_matrix(identity(3), 2) == ActionMatrix::identity(8, 1));
    CHECK(ubp_action_matrix(Ubp(), 4) == ActionMatrix::identity(1, 1));
    CHECK(ubp_action_matrix(generator_b(3, 2), 3).nonzeros() == 9);
    CHECK_THROWS_AS(ubp_action_matrix(identity(5), 6, 1000), CeilingError);
  }

  TEST_CASE("torus generators") {
    GroupElement t1{{1, 0}, Permutation::identity(2)};
    auto const   m1 = group_action_matrix(t1, 2, 3, 1);
    CHECK(m1.entry(0, 0) == CycScalar::monomial(3, 1));
    CHECK(m1.entry(1, 1) == CycScalar::monomial(3, 0));
    auto const m2 = group_action_matrix(t1, 2, 2, 2);
    CHECK(m2.entry(0, 0) == CycScalar::monomial(2, 0));
    CHECK(m2.entry(1, 1) == CycScalar::monomial(2, 1));
    CHECK(m2.entry(3, 3) == CycScalar::monomial(2, 0));
    for (int r = 1; r <= 4; ++r) {
      auto const t     = group_action_matrix(t1, 2, r, 2);
      auto       power = ActionMatrix::identity(4, r);
      for (int k = 0; k < r; ++k) {
        power = power * t;
      }
      CHECK(power == ActionMatrix::identity(4, r));
    }
    CHECK_THROWS_AS(group_action_matrix(t1, 3, 2, 1), ValidationError);
  }

  TEST_CASE("commutation") {
    CHECK(all_commute(2, 2, 2));
    CHECK(all_commute(2, 4, 3));
    CHECK(all_commute(3, 3, 2));
    auto const report = commutation_report(2, 2, 2);
    // Generators id, s1, b1 times t1, t2 and (1 2).
    CHECK(report.size() == 9);
    // A diagonal matrix that is not a scalar fails to commute with the swap.
    auto const diag = from_entries({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 4}});
    auto const swap = ubp_action_matrix(generator_s(2, 1), 2);
    CHECK(diag * swap != swap * diag);
    CHECK(verify::commutation_all(3, 64, 3).passed());
  }

  TEST_CASE("span ranks") {
    CHECK(action_span_rank(1, 1) == 1);
    CHECK(action_span_rank(2, 4) == 3);
    CHECK(action_span_rank(3, 6) == 16);
    // Below m = 2n the rank can drop: with one letter every diagram acts as 1.
    CHECK(action_span_rank(2, 1) == 1);
    CHECK(action_span_rank(0, 1) == 1);
  }

  TEST_CASE("integer rank against rational elimination") {
    CHECK(integer_rank({}) == 0);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank({{1}, {0, 1}}) == 2);
    std::mt19937                    rng(11);
    std::uniform_int_distribution<> value(-3, 3);
    std::uniform_int_distribution<> shape(1, 6);
    for (int t = 0; t < 200; ++t) {
      int const                         rows = shape(rng), cols = shape(rng);
      std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows));
      std::vector<std::vector<mpq_class>> q(static_cast<std::size_t>(rows));
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          // Sparse entries make rank deficiency common.
          int const v = value(rng) * (value(rng) > 0 ? 1 : 0);
          a[static_cast<std::size_t>(i)].push_back(v);
          q[static_cast<std::size_t>(i)].push_back(v);
        }
      }
      CHECK(integer_rank(a) == oracle::rational_rank(q));
    }
  }

  TEST_CASE("convolution") {
    auto const id1 = identity(1);
    CHECK(convolution_action(id1, id1, 2) == element_action_matrix(product(id1, id1), 2, 2));
    CHECK(convolution_action(Ubp(), generator_b(2, 1), 3) == ubp_action_matrix(generator_b(2, 1), 3));
    CHECK(verify::convolution_matches_product(3, 2).passed());
    CHECK(verify::action_orientation(2, 3).passed());
    CHECK(verify::action_relations(3, 2).passed());
    CHECK(verify::action_direct_matches_generators(3, 2).passed());
  }
}
