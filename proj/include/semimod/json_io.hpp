#ifndef SEMIMOD_JSON_IO_HPP_
#define SEMIMOD_JSON_IO_HPP_

#include <json.hpp>

#include "counting.hpp"
#include "syzygy.hpp"

namespace semimod {

  // {"alpha": int, "beta": int, "generators": [int, ...]} ascending
  nlohmann::json to_json(Semimodule const& M);
  // Accepts generators in any order; they are minimised. Malformed documents
  // throw InvalidInput.
  Semimodule semimodule_from_json(nlohmann::json const& j);

  // {"I": [...], "J": [...]} in couple order
  nlohmann::json to_json(FundamentalCouple const& couple);
  FundamentalCouple couple_from_json(nlohmann::json const& j);

  // {"n": int, "rows": [{"ell", "A", "exact", "orbits"}, ...]}
  nlohmann::json to_json(CountTable const& table);
  CountTable count_table_from_json(nlohmann::json const& j);

}  // namespace semimod

#endif  // SEMIMOD_JSON_IO_HPP_
