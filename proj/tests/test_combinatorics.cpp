#include <doctest.h>

#include "oracles.hpp"
#include "ubp/error.hpp"
#include "ubp/set_partition.hpp"
#include "ubp/shuffles.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

using namespace ubp;

namespace {
  SetPartition sp(char const* text) {
    return parse_set_partition(text);
  }

  Permutation perm(std::vector<int> images) {
    return Permutation(std::move(images));
  }
}  // namespace

TEST_SUITE("set partitions") {
  TEST_CASE("construction sorts blocks by minimum") {
    auto const a = make_set_partition(8, {{2, 5, 7}, {1, 3}, {6, 8}, {4}});
    CHECK(to_text(a) == "{1,3}{2,5,7}{4}{6,8}");
    CHECK(make_set_partition(0, {}).block_count() == 0);
    CHECK(to_text(make_set_partition(3, {{1}, {2}, {3}})) == "{1}{2}{3}");
    CHECK(make_set_partition(3, {{3, 1}, {2}}) == sp("{1,3}{2}"));
  }

  TEST_CASE("invalid blocks name the offending element") {
    auto message = [](int n, std::vector<Block> blocks) {
      try {
        make_set_partition(n, std::move(blocks));
      } catch (ValidationError const& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message(3, {{1, 2}, {2, 3}}).find('2') != std::string::npos);
    CHECK(message(3, {{1, 2}, {4}}).find('4') != std::string::npos);
    CHECK(message(3, {{1, 2}}).find('3') != std::string::npos);
    CHECK_THROWS_AS(make_set_partition(2, {{1}, {}, {2}}), ValidationError);
  }

  TEST_CASE("enumeration matches the restricted growth string oracle") {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      auto const parts = enumerate_set_partitions(n);
      CHECK(parts.size() == oracle::bell(n));
      std::set<SetPartition> distinct(parts.begin(), parts.end());
      CHECK(distinct.size() == parts.size());
      std::set<SetPartition> expected;
      for (auto const& rgs : oracle::restricted_growth_strings(n)) {
        expected.insert(make_set_partition(n, oracle::blocks_of(rgs)));
      }
      CHECK(distinct == expected);
    }
    CHECK(enumerate_set_partitions(0).size() == 1);
    CHECK(enumerate_set_partitions(3).size() == 5);
    CHECK(enumerate_set_partitions(5).size() == 52);
  }

  TEST_CASE("type counts") {
    CHECK(count_partitions_of_type(PartitionType({0, 2})) == 3);
    for (int n = 0; n <= 6; ++n) {
      std::vector<int> all_ones(1, n);
      CHECK(count_partitions_of_type(PartitionType(all_ones)) == 1);
    }
    CHECK(verify::type_counts(6).passed());
  }

  TEST_CASE("permutation action on partitions") {
    auto const a = sp("{1,2}{3}");
    CHECK(partition_action(Permutation::identity(3), a) == a);
    CHECK(partition_action(perm({2, 1, 3}), a) == a);
    CHECK(to_text(partition_action(perm({2, 3, 1}), a)) == "{1}{2,3}");
    CHECK_THROWS_AS(partition_action(Permutation::identity(2), a), ValidationError);
    CHECK(verify::partition_action_laws(4).passed());
  }

  TEST_CASE("meet and refinement") {
    auto const a = sp("{1,2}{3}");
    CHECK(coarsen_meet(a, a) == a);
    CHECK(to_text(coarsen_meet(a, sp("{1}{2,3}"))) == "{1,2,3}");
    CHECK(coarsen_meet(SetPartition::singletons(3), a) == a);
    CHECK(refines_leq(a, a));
    CHECK(refines_leq(sp("{1,2,3}"), a));
    CHECK_FALSE(refines_leq(a, sp("{1,3}{2}")));
    CHECK_THROWS_AS(coarsen_meet(a, sp("{1}{2}")), ValidationError);
    CHECK(verify::meet_laws(5).passed());
  }

  TEST_CASE("restriction and cross product") {
    auto const a = sp("{1,5}{2,7}{3,4,6}");
    std::vector<std::size_t> first_two{0, 1};
    CHECK(to_text(restrict_standardize(a, first_two)) == "{1,3}{2,4}");
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(restrict_standardize(a, all) == a);
    std::vector<std::size_t> last{2};
    CHECK(to_text(restrict_standardize(a, last)) == "{1,2,3}");
    std::vector<std::size_t> bad{5};
    CHECK_THROWS_AS(restrict_standardize(a, bad), ValidationError);

    auto const x = cross_partition(sp("{1,3,4}{2,5}{6}"), sp("{1,4}{2}{3,5}"));
    CHECK(to_text(x) == "{1,3,4}{2,5}{6}{7,10}{8}{9,11}");
    CHECK(cross_partition(a, SetPartition()) == a);
    std::vector<std::size_t> right{3, 4, 5};
    CHECK(to_text(restrict_standardize(x, right)) == "{1,4}{2}{3,5}");
  }
}

TEST_SUITE("permutations and shuffles") {
  TEST_CASE("permutation validation and composition") {
    CHECK_THROWS_AS(perm({1, 1}), ValidationError);
    CHECK_THROWS_AS(perm({0, 1}), ValidationError);
    auto const s = perm({2, 3, 1});
    auto const t = perm({2, 1, 3});
    // (s * t)(i) = s(t(i)).
    CHECK((s * t)(1) == s(t(1)));
    CHECK(s * s.inverse() == Permutation::identity(3));
    CHECK(direct_sum(perm({2, 1}), perm({1})) == perm({2, 1, 3}));
  }

  TEST_CASE("inversions") {
    CHECK(inversions(Permutation::identity(4)).empty());
    CHECK(inversions(perm({2, 1})) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(inversions(perm({3, 4, 1, 2})) == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    for (auto const& s : enumerate_permutations(4)) {
      auto const inv = inversions(s);
      CHECK(std::set(inv.begin(), inv.end()) == oracle::inversion_pairs(s));
      CHECK(inv.size() == s.length());
    }
  }

  TEST_CASE("weak order against the inversion oracle") {
    auto const xi = perm({3, 4, 1, 2});
    CHECK(weak_leq(Permutation::identity(4), xi));
    CHECK(weak_leq(xi, xi));
    CHECK(weak_leq(perm({2, 1, 3, 4}), xi) == oracle::inversion_leq(perm({2, 1, 3, 4}), xi));
    CHECK_FALSE(weak_leq(perm({2, 1, 3, 4}), xi));
    auto const all = enumerate_permutations(4);
    for (auto const& s : all) {
      for (auto const& t : all) {
        CHECK(weak_leq(s, t) == oracle::inversion_leq(s, t));
      }
    }
    CHECK_THROWS_AS(weak_leq(Permutation::identity(2), Permutation::identity(3)), ValidationError);
    CHECK(verify::weak_order_is_partial_order(5).passed());
  }

  TEST_CASE("shuffles") {
    CHECK(enumerate_shuffles(1, 1) == std::vector<Permutation>{Permutation::identity(2), perm({2, 1})});
    CHECK(enumerate_shuffles(0, 3) == std::vector<Permutation>{Permutation::identity(3)});
    CHECK(enumerate_shuffles(2, 2).size() == 6);
    CHECK(max_shuffle(1, 1) == perm({2, 1}));
    CHECK(max_shuffle(3, 0) == Permutation::identity(3));
    CHECK(max_shuffle(2, 2) == perm({3, 4, 1, 2}));
    CHECK(beta_shuffle(3, 4) == perm({5, 6, 7, 1, 2, 3, 4}));
    CHECK(beta_shuffle(3, 0) == Permutation::identity(3));
    for (int n = 0; n <= 4; ++n) {
      for (int m = 0; m <= 4; ++m) {
        CHECK(beta_shuffle(n, m) * beta_shuffle(m, n) == Permutation::identity(n + m));
      }
    }
    // Exhaustive check of the definition.
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 3; ++q) {
        std::vector<Permutation> expected;
        for (auto const& s : enumerate_permutations(p + q)) {
          bool ok = true;
          for (int i = 1; i < p + q; ++i) {
            if (i != p && s(i) > s(i + 1)) {
              ok = false;
            }
          }
          if (ok) {
            expected.push_back(s);
          }
        }
        auto got = enumerate_shuffles(p, q);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("A-shuffles and parabolic subgroups") {
    CHECK(enumerate_A_shuffles(SetPartition::singletons(4)).size() == 24);
    CHECK(enumerate_A_shuffles(SetPartition::single_block(4)) == std::vector<Permutation>{Permutation::identity(4)});
    CHECK(enumerate_A_shuffles(sp("{1,2}{3}{4}")).size() == 12);
    CHECK(parabolic_stabilizer(SetPartition::single_block(3)).size() == 6);
    CHECK(parabolic_stabilizer(SetPartition::singletons(3)) == std::vector<Permutation>{Permutation::identity(3)});
    for (auto const& a : enumerate_set_partitions(5)) {
      CHECK(enumerate_A_shuffles(a).size() * parabolic_stabilizer(a).size() == 120);
      for (auto const& s : enumerate_A_shuffles(a)) {
        for (auto const& blk : a.blocks()) {
          for (std::size_t i = 1; i < blk.size(); ++i) {
            CHECK(s(blk[i - 1]) < s(blk[i]));
          }
        }
      }
    }
  }

  TEST_CASE("order-theoretic properties") {
    CHECK(verify::shuffle_sets_are_lower_ideals(5).passed());
    CHECK(verify::max_shuffle_is_maximum(6).passed());
    CHECK(verify::unique_coset_factorization(5).passed());
    CHECK(verify::component_sizes_sum_to_count(5).passed());
  }
}
