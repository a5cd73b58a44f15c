#pragma once

#include <json.hpp>

#include "ubp/hopf.hpp"
#include "ubp/integer.hpp"
#include "ubp/monoid.hpp"
#include "ubp/ncsym.hpp"
#include "ubp/set_partition.hpp"

namespace ubp {

  // JSON forms. Integers that fit in a signed 64-bit value are emitted as
  // numbers, larger ones as decimal strings.
  //
  //   partition  {"n": 3, "blocks": [[1, 3], [2]]}
  //   ubp        {"n": 3, "blocks": [[1, 3], [2]], "images": [[1, 2], [3]], "map": [0, 1]}
  //              blocks are the domain blocks, images the codomain blocks (both
  //              canonical) and map[k] the index in images of the block that
  //              blocks[k] is sent to.
  //   element    {"terms": [{"coeff": 1, "ubp": {...}}, ...]}
  //   tensor     {"terms": [{"coeff": 1, "left": {...}, "right": {...}}, ...]}
  //   ncsym      {"terms": [{"coeff": 1, "p": {...partition...}}, ...]}

  nlohmann::json integer_to_json(Integer const& x);
  Integer        integer_from_json(nlohmann::json const& j);

  nlohmann::json to_json(SetPartition const& a);
  nlohmann::json to_json(Ubp const& f);
  nlohmann::json to_json(Element const& x);
  nlohmann::json to_json(TensorElement const& t);
  nlohmann::json to_json(NCSymElement const& u);
  nlohmann::json to_json(NCSymTensor const& t);

  SetPartition partition_from_json(nlohmann::json const& j);
  Ubp          ubp_from_json(nlohmann::json const& j);
  Element      element_from_json(nlohmann::json const& j);

}  // namespace ubp
