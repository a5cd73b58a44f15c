#include <doctest.h>

#include "oracles.hpp"
#include "ubp/error.hpp"
#include "ubp/monoid.hpp"
#include "ubp/shuffles.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

#include <random>

using namespace ubp;

namespace {
  Ubp u(char const* text) {
    return parse_ubp(text);
  }

  SetPartition sp(char const* text) {
    return parse_set_partition(text);
  }
}  // namespace

TEST_SUITE("monoid") {
  TEST_CASE("construction and validation") {
    auto const f = make_ubp(sp("{1,3}{2}"), sp("{1,2}{3}"), {0, 1});
    CHECK(to_text(f) == "{1,3}->{1,2};{2}->{3}");
    CHECK(make_ubp(SetPartition(), SetPartition(), {}) == Ubp());

    try {
      make_ubp(sp("{1,3}{2}"), sp("{1,2}{3}"), {1, 0});
      FAIL("non-uniform map accepted");
    } catch (ValidationError const& e) {
      std::string const what = e.what();
      CHECK(what.find("non-uniform") != std::string::npos);
      CHECK(what.find("{1,3}") != std::string::npos);
      CHECK(what.find("{3}") != std::string::npos);
    }
    CHECK_THROWS_AS(make_ubp(sp("{1}{2}"), sp("{1}{2}"), {0, 0}), ValidationError);
    CHECK_THROWS_AS(make_ubp(sp("{1}{2}"), sp("{1,2}"), {0}), ValidationError);
    CHECK_THROWS_AS(make_ubp(sp("{1}{2}"), sp("{1}{2}{3}"), {0, 1}), ValidationError);
  }

  TEST_CASE("composition") {
    for (int n = 2; n <= 4; ++n) {
      for (int i = 1; i < n; ++i) {
        CHECK(compose(generator_s(n, i), generator_b(n, i)) == generator_b(n, i));
        CHECK(compose(generator_b(n, i), generator_s(n, i)) == generator_b(n, i));
      }
    }
    CHECK(to_text(compose(generator_b(3, 1), generator_b(3, 2))) == "{1,2,3}->{1,2,3}");
    auto const f = u("{1,3}->{1,2};{2}->{3}");
    CHECK(compose(identity(3), f) == f);
    CHECK(compose(f, identity(3)) == f);
    CHECK_THROWS_AS(compose(identity(2), identity(3)), ValidationError);
  }

  TEST_CASE("composition agrees with explicit graph gluing") {
    for (int n = 0; n <= 3; ++n) {
      auto const all = enumerate_ubp(n);
      for (auto const& g : all) {
        for (auto const& f : all) {
          CHECK(compose(g, f) == oracle::glue(g, f));
        }
      }
    }
    std::mt19937 rng(7);
    auto const   all = enumerate_ubp(5);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 3000; ++t) {
      auto const& g = all[pick(rng)];
      auto const& f = all[pick(rng)];
      CHECK(compose(g, f) == oracle::glue(g, f));
    }
  }

  TEST_CASE("special elements") {
    for (int n = 0; n <= 4; ++n) {
      CHECK(id_of_partition(SetPartition::singletons(n)) == identity(n));
      CHECK(from_permutation(Permutation::identity(n)) == identity(n));
    }
    CHECK(to_text(generator_b(2, 1)) == "{1,2}->{1,2}");
    CHECK(to_text(generator_s(2, 1)) == "{1}->{2};{2}->{1}");
    CHECK_THROWS_AS(generator_s(3, 3), ValidationError);
    CHECK_THROWS_AS(generator_b(3, 0), ValidationError);
    auto const parts = enumerate_set_partitions(4);
    for (auto const& a : parts) {
      for (auto const& b : parts) {
        CHECK(compose(id_of_partition(a), id_of_partition(b)) == id_of_partition(coarsen_meet(a, b)));
      }
    }
    auto const perms = enumerate_permutations(4);
    for (auto const& s : perms) {
      for (auto const& t : perms) {
        CHECK(from_permutation(s * t) == compose(from_permutation(s), from_permutation(t)));
      }
    }
  }

  TEST_CASE("tilde") {
    for (auto const& s : enumerate_permutations(4)) {
      CHECK(tilde(from_permutation(s)) == from_permutation(s.inverse()));
    }
    for (auto const& f : enumerate_ubp(4)) {
      CHECK(tilde(tilde(f)) == f);
    }
    CHECK(tilde(u("{1,3}->{1,2};{2}->{3}")) == u("{1,2}->{1,3};{3}->{2}"));
  }

  TEST_CASE("concatenation") {
    auto const f = u("{1,3}->{1,2};{2}->{3}");
    auto const g = u("{1}->{2};{2}->{1}");
    CHECK(to_text(concat(f, g)) == "{1,3}->{1,2};{2}->{3};{4}->{5};{5}->{4}");
    CHECK(concat(f, Ubp()) == f);
    CHECK(concat(Ubp(), f) == f);
    auto const h = generator_b(2, 1);
    CHECK(concat(concat(f, g), h) == concat(f, concat(g, h)));
    // A diagram of P_4 next to one of P_5.
    auto const big = concat(u("{1,2}->{3,4};{3}->{1};{4}->{2}"), u("{1,4,5}->{1,2,5};{2}->{3};{3}->{4}"));
    CHECK(to_text(big) == "{1,2}->{3,4};{3}->{1};{4}->{2};{5,8,9}->{5,6,9};{6}->{7};{7}->{8}");
  }

  TEST_CASE("enumeration, closure and counting") {
    std::vector<long> const expected{1, 1, 3, 16, 131, 1496, 22482};
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(count_ubp(n) == expected[static_cast<std::size_t>(n)]);
      CHECK(count_ubp_recursive(n) == expected[static_cast<std::size_t>(n)]);
    }
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      auto const listed = enumerate_ubp(n);
      CHECK(listed.size() == static_cast<std::size_t>(expected[static_cast<std::size_t>(n)]));
      CHECK(std::is_sorted(listed.begin(), listed.end()));
      CHECK(closure_from_generators(n) == listed);
      CHECK(oracle::count_ubp_pairs(n) == count_ubp(n));
    }
    CHECK(enumerate_ubp(0) == std::vector<Ubp>{Ubp()});
    CHECK(enumerate_ubp(1) == std::vector<Ubp>{identity(1)});
    CHECK(enumerate_ubp(2).size() == 3);
    CHECK_THROWS_AS(enumerate_ubp(7), CeilingError);
    CHECK_THROWS_AS(closure_from_generators(4, 3), CeilingError);
    CHECK(count_ubp(10) == count_ubp_recursive(10));
    CHECK(count_ubp(30) == count_ubp_recursive(30));
  }

  TEST_CASE("breaking points") {
    for (auto const& s : enumerate_permutations(4)) {
      CHECK(breaking_points(from_permutation(s)) == std::vector<int>{0, 1, 2, 3, 4});
    }
    CHECK(breaking_points(u("{1,2,3}->{1,2,3}")) == std::vector<int>{0, 3});
    auto const f = u("{1,3}->{1,2};{2}->{3}");
    auto const split = split_at_breaking_point(f, 2);
    CHECK(to_text(split.left) == "{1,2}->{1,2}");
    CHECK(to_text(split.right) == "{1}->{1}");
    auto const zero = split_at_breaking_point(f, 0);
    CHECK(zero.left == Ubp());
    CHECK(zero.right == f);
    CHECK(zero.xi == Permutation::identity(3));
    auto const top = split_at_breaking_point(f, 3);
    CHECK(top.left == f);
    CHECK(top.right == Ubp());
    CHECK_THROWS_AS(split_at_breaking_point(f, 1), ValidationError);
    CHECK(verify::breaking_point_splits(4).passed());
  }

  TEST_CASE("shuffle factorization") {
    for (auto const& a : enumerate_set_partitions(4)) {
      CHECK(shuffle_factorization(id_of_partition(a)).xi == Permutation::identity(4));
    }
    for (auto const& s : enumerate_permutations(3)) {
      auto const cert = shuffle_factorization(from_permutation(s));
      CHECK(cert.xi == s);
      CHECK(cert.dom == SetPartition::singletons(3));
    }
    auto const cert = shuffle_factorization(u("{1,3}->{1,2};{2}->{3}"));
    CHECK(cert.xi == Permutation({1, 3, 2}));
    CHECK(verify::factorizable(5).passed());
  }

  TEST_CASE("weak order on P_n") {
    auto const f = u("{1,3}->{1,2};{2}->{3}");
    CHECK(ubp_leq(f, f));
    for (auto const& g : enumerate_ubp(4)) {
      CHECK(ubp_leq(id_of_partition(g.domain()), g));
    }
    CHECK_FALSE(ubp_leq(generator_b(2, 1), generator_s(2, 1)));
    CHECK_FALSE(ubp_leq(generator_s(2, 1), generator_b(2, 1)));
    CHECK_THROWS_AS(ubp_leq(identity(2), identity(3)), ValidationError);
  }

  TEST_CASE("Hasse components") {
    CHECK(hasse_component(SetPartition::single_block(4)).nodes.size() == 1);
    CHECK(hasse_component(sp("{1,2}{3}{4}")).nodes.size() == 12);
    CHECK(hasse_component(sp("{1,4}{2,3}")).nodes.size() == 6);
    std::size_t total = 0;
    for (auto const& a : enumerate_set_partitions(4)) {
      auto const h = hasse_component(a);
      total += h.nodes.size();
      CHECK(std::is_sorted(h.nodes.begin(), h.nodes.end()));
    }
    CHECK(total == 131);
    // Component of the singletons is the weak order on S_3: a hexagon.
    auto const hex = hasse_component(SetPartition::singletons(3));
    CHECK(hex.nodes.size() == 6);
    CHECK(hex.edges.size() == 6);
    CHECK(verify::hasse_components(4).passed());
  }

  TEST_CASE("presentation, inverse monoid and relabelling") {
    for (int relation = 1; relation <= 5; ++relation) {
      CAPTURE(relation);
      CHECK(verify::presentation_relation(relation, 5).passed());
    }
    CHECK(verify::inverse_monoid_identities(4).passed());
    CHECK(verify::idempotents_are_partition_identities(4).passed());
    CHECK(verify::composition_associative(3, 5).passed());
    CHECK(verify::relabeling_laws(4).passed());
  }
}
