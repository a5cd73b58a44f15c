#include <doctest.h>

#include "ubp/error.hpp"
#include "ubp/json_format.hpp"
#include "ubp/text_format.hpp"

using namespace ubp;

namespace {
  std::string parse_message(std::string_view text) {
    try {
      parse_element(text);
    } catch (ParseError const& e) {
      return e.what();
    }
    return {};
  }
}  // namespace

TEST_SUITE("formats") {
  TEST_CASE("text round trips") {
    for (int n = 0; n <= 4; ++n) {
      for (auto const& a : enumerate_set_partitions(n)) {
        CHECK(parse_set_partition(to_text(a)) == a);
        CHECK(parse_ncsym(to_text(NCSymElement::basis(a, -2))) == NCSymElement::basis(a, -2));
      }
      for (auto const& f : enumerate_ubp(n)) {
        CHECK(parse_ubp(to_text(f)) == f);
        auto const x = Element::basis(f, 3) - Element::basis(identity(n));
        CHECK(parse_element(to_text(x)) == x);
        auto const t = tensor(x, Element::basis(tilde(f)));
        CHECK(parse_tensor(to_text(t)) == t);
      }
      for (auto const& s : enumerate_permutations(n)) {
        CHECK(parse_permutation(to_text(s)) == s);
      }
    }
    CHECK(to_text(Element()) == "0");
    CHECK(parse_element("0") == Element());
    CHECK(to_text(SetPartition()) == "{}");
    CHECK(to_text(Ubp()) == "{}->{}");
    CHECK(to_text(Permutation::identity(0)) == "[]");
    CHECK(to_text(Permutation({2, 3, 1})) == "[2,3,1]");
    auto const nt = p_coproduct(NCSymElement::basis(parse_set_partition("{1}{2}")));
    CHECK(parse_ncsym_tensor(to_text(nt)) == nt);
  }

  TEST_CASE("parse errors report a position") {
    CHECK(parse_message("1*{1}->{1} +").find("at position") != std::string::npos);
    CHECK(parse_message("x*{1}->{1}").find("at position 0") != std::string::npos);
    CHECK_THROWS_AS(parse_ubp("{1}->{1};{2}->{3}"), ParseError);
    CHECK_THROWS_AS(parse_set_partition("{1,2}{2}"), ParseError);
    CHECK_THROWS_AS(parse_set_partition("{1,2"), ParseError);
    CHECK_THROWS_AS(parse_permutation("[1,1]"), ParseError);
    CHECK_THROWS_AS(parse_ncsym("1*{1}"), ParseError);
  }

  TEST_CASE("non-canonical input is rejected with a hint") {
    try {
      parse_set_partition("{2}{1}");
      FAIL("accepted");
    } catch (ParseError const& e) {
      CHECK(std::string(e.what()).find("{1}{2}") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_set_partition("{2,1}"), ParseError);
    CHECK_THROWS_AS(parse_ubp("{2}->{2};{1}->{1}"), ParseError);
  }

  TEST_CASE("json round trips") {
    for (int n = 0; n <= 4; ++n) {
      for (auto const& a : enumerate_set_partitions(n)) {
        CHECK(partition_from_json(to_json(a)) == a);
      }
      for (auto const& f : enumerate_ubp(n)) {
        CHECK(ubp_from_json(to_json(f)) == f);
        auto const x = Element::basis(f, -5) + Element::basis(identity(n));
        CHECK(element_from_json(to_json(x)) == x);
        CHECK(element_from_json(nlohmann::json::parse(to_json(x).dump())) == x);
      }
    }
    auto const j = to_json(parse_ubp("{1,3}->{1,2};{2}->{3}"));
    CHECK(j["n"] == 3);
    CHECK(j["blocks"] == nlohmann::json::parse("[[1,3],[2]]"));
    CHECK(j["images"] == nlohmann::json::parse("[[1,2],[3]]"));
    CHECK(j["map"] == nlohmann::json::parse("[0,1]"));
    CHECK_THROWS_AS(ubp_from_json(nlohmann::json::parse(R"({"n":2,"blocks":[[1],[2]],"images":[[1],[2]],"map":[0,0]})")),
                    ValidationError);
  }

  TEST_CASE("big integers") {
    Integer const big("123456789012345678901234567890");
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(-7)) == -7);
    CHECK(integer_from_json(nlohmann::json(42)) == 42);
    auto const x = Element::basis(identity(1), big);
    CHECK(element_from_json(to_json(x)) == x);
    CHECK(parse_element(to_text(x)) == x);
  }
}
