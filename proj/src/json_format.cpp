#include "ubp/json_format.hpp"

#include "ubp/error.hpp"

namespace ubp {

  using nlohmann::json;

  json integer_to_json(Integer const& x) {
    if (x.fits_slong_p()) {
      return json(x.get_si());
    }
    return json(x.get_str());
  }

  Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
      return Integer(j.get<std::string>());
    }
    throw ValidationError("expected an integer");
  }

  json to_json(SetPartition const& a) {
    return json{{"n", a.size()}, {"blocks", a.blocks()}};
  }

  json to_json(Ubp const& f) {
    return json{{"n", f.size()},
                {"blocks", f.domain().blocks()},
                {"images", f.codomain().blocks()},
                {"map", std::vector<std::size_t>(f.block_map().begin(), f.block_map().end())}};
  }

  json to_json(Element const& x) {
    json terms = json::array();
    for (auto const& [f, coeff] : x) {
      terms.push_back({{"coeff", integer_to_json(coeff)}, {"ubp", to_json(f)}});
    }
    return json{{"terms", terms}};
  }

  json to_json(TensorElement const& t) {
    json terms = json::array();
    for (auto const& [pair, coeff] : t) {
      terms.push_back({{"coeff", integer_to_json(coeff)},
                       {"left", to_json(pair.first)},
                       {"right", to_json(pair.second)}});
    }
    return json{{"terms", terms}};
  }

  json to_json(NCSymElement const& u) {
    json terms = json::array();
    for (auto const& [a, coeff] : u) {
      terms.push_back({{"coeff", integer_to_json(coeff)}, {"p", to_json(a)}});
    }
    return json{{"terms", terms}};
  }

  json to_json(NCSymTensor const& t) {
    json terms = json::array();
    for (auto const& [pair, coeff] : t) {
      terms.push_back({{"coeff", integer_to_json(coeff)},
                       {"left", to_json(pair.first)},
                       {"right", to_json(pair.second)}});
    }
    return json{{"terms", terms}};
  }

  SetPartition partition_from_json(json const& j) {
    try {
      return SetPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<Block>>());
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed partition JSON: ") + e.what());
    }
  }

  Ubp ubp_from_json(json const& j) {
    try {
      int const  n      = j.at("n").get<int>();
      auto const blocks = j.at("blocks").get<std::vector<Block>>();
      auto const images = j.at("images").get<std::vector<Block>>();
      SetPartition domain(n, blocks);
      SetPartition codomain(n, images);
      if (domain.blocks() != blocks || codomain.blocks() != images) {
        throw ValidationError("blocks and images must be listed in canonical order");
      }
      return Ubp(std::move(domain), std::move(codomain), j.at("map").get<std::vector<std::size_t>>());
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed uniform block permutation JSON: ") + e.what());
    }
  }

  Element element_from_json(json const& j) {
    Element result;
    try {
      for (auto const& term : j.at("terms")) {
        result.add(ubp_from_json(term.at("ubp")), integer_from_json(term.at("coeff")));
      }
    } catch (json::exception const& e) {
      throw ValidationError(std::string("malformed element JSON: ") + e.what());
    }
    return result;
  }

}  // namespace ubp
