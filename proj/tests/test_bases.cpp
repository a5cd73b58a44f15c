#include <doctest.h>

#include "oracles.hpp"
#include "ubp/bases.hpp"
#include "ubp/shuffles.hpp"
#include "ubp/text_format.hpp"
#include "ubp/verify.hpp"

using namespace ubp;

namespace {
  Element e(char const* text) {
    return Element::basis(parse_ubp(text));
  }

  // X_g by brute force over all of P_n, with the order given as a predicate
  // on the shuffle parts.
  template <class Leq>
  Element brute_x(Ubp const& g, Leq leq) {
    Element    sum;
    auto const xi_g = shuffle_factorization(g).xi;
    for (auto const& f : enumerate_ubp(g.size())) {
      if (f.domain() == g.domain() && leq(shuffle_factorization(f).xi, xi_g)) {
        sum.add(f, 1);
      }
    }
    return sum;
  }
}  // namespace

TEST_SUITE("X and Z bases") {
  TEST_CASE("degree two") {
    auto const id2 = e("{1}->{1};{2}->{2}");
    auto const s1  = e("{1}->{2};{2}->{1}");
    auto const b1  = e("{1,2}->{1,2}");
    CHECK(X_element(identity(2)) == id2);
    CHECK(X_element(generator_s(2, 1)) == id2 + s1);
    CHECK(X_element(generator_b(2, 1)) == b1);
    CHECK(Z_element(identity(2)) == id2 + s1);
    CHECK(Z_element(generator_s(2, 1)) == s1);
    CHECK(Z_element(generator_b(2, 1)) == b1);
    CHECK(to_X_basis(s1) == Element::basis(generator_s(2, 1)) - Element::basis(identity(2)));
    CHECK(to_Z_basis(id2) == Element::basis(identity(2)) - Element::basis(generator_s(2, 1)));
  }

  TEST_CASE("X product of two identities") {
    auto const x1 = X_element(identity(1));
    CHECK(product(x1, x1) == X_element(generator_s(2, 1)));
    CHECK(product(Z_element(identity(1)), Z_element(identity(1))) == Z_element(identity(2)));
  }

  TEST_CASE("X_g agrees with the inversion-set oracle") {
    for (int n = 0; n <= 4; ++n) {
      for (auto const& g : enumerate_ubp(n)) {
        CHECK(X_element(g) == brute_x(g, oracle::inversion_leq));
      }
    }
  }

  TEST_CASE("comparing inverses instead breaks the X-product rule") {
    auto inverse_leq = [](Permutation const& s, Permutation const& t) {
      return oracle::inversion_leq(s.inverse(), t.inverse());
    };
    std::size_t mismatches = 0;
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; p + q <= 4; ++q) {
        for (auto const& g1 : enumerate_ubp(p)) {
          for (auto const& g2 : enumerate_ubp(q)) {
            auto const target = left_multiply(max_shuffle(p, q), concat(g1, g2));
            if (product(brute_x(g1, inverse_leq), brute_x(g2, inverse_leq)) != brute_x(target, inverse_leq)) {
              ++mismatches;
            }
          }
        }
      }
    }
    CHECK(mismatches > 0);
  }

  TEST_CASE("round trips and products") {
    auto const x = e("{1,3}->{1,2};{2}->{3}") - 3 * e("{1}->{2};{2}->{1}") + e("{1}->{1}");
    CHECK(from_X_basis(to_X_basis(x)) == x);
    CHECK(to_X_basis(from_X_basis(x)) == x);
    CHECK(from_Z_basis(to_Z_basis(x)) == x);
    CHECK(to_Z_basis(from_Z_basis(x)) == x);
    CHECK(to_X_basis(Element()) == Element());
    CHECK(verify::x_round_trip(4).passed());
    CHECK(verify::z_round_trip(4).passed());
    CHECK(verify::x_product(4).passed());
    CHECK(verify::z_product(4).passed());
    CHECK(verify::z_of_partition_matches(4).passed());
  }

  TEST_CASE("Z of a top element is a single term") {
    for (auto const& a : enumerate_set_partitions(4)) {
      auto const top = hasse_component(a);
      for (auto const& g : top.nodes) {
        bool maximal = true;
        for (auto const& h : top.nodes) {
          maximal = maximal && (h == g || !ubp_leq(g, h));
        }
        if (maximal) {
          CHECK(Z_element(g) == Element::basis(g));
        }
      }
    }
  }
}
