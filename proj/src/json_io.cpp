#include "semimod/json_io.hpp"

namespace semimod {

  using nlohmann::json;

  namespace {
    template <typename T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw InvalidInput(std::string("bad JSON field \"") + key
                           + "\": " + e.what());
      }
    }
  }  // namespace

  json to_json(Semimodule const& M) {
    return {{"alpha", M.semigroup().alpha()},
            {"beta", M.semigroup().beta()},
            {"generators", M.generators()}};
  }

  Semimodule semimodule_from_json(json const& j) {
    SemigroupPair const S(field<Int>(j, "alpha"), field<Int>(j, "beta"));
    auto const          gens = field<std::vector<Int>>(j, "generators");
    return Semimodule(S, gens);
  }

  json to_json(FundamentalCouple const& couple) {
    return {{"I", couple.I}, {"J", couple.J}};
  }

  FundamentalCouple couple_from_json(json const& j) {
    return {field<std::vector<Int>>(j, "I"), field<std::vector<Int>>(j, "J")};
  }

  json to_json(CountTable const& table) {
    json rows = json::array();
    for (auto const& r : table.rows) {
      rows.push_back({{"ell", r.ell},
                      {"A", r.periodic},
                      {"exact", r.exact},
                      {"orbits", r.orbits}});
    }
    return {{"n", table.n}, {"rows", rows}};
  }

  CountTable count_table_from_json(json const& j) {
    CountTable table{field<Int>(j, "n"), {}};
    auto const rows = field<json>(j, "rows");
    if (!rows.is_array()) {
      throw InvalidInput("\"rows\" must be an array");
    }
    for (auto const& r : rows) {
      table.rows.push_back({field<Int>(r, "ell"),
                            field<Int>(r, "A"),
                            field<Int>(r, "exact"),
                            field<Int>(r, "orbits")});
    }
    return table;
  }

}  // namespace semimod
