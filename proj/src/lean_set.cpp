#include "semimod/lean_set.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace semimod {

  namespace {

    std::vector<Int> sorted_unique(std::span<Int const> xs) {
      std::vector<Int> v(xs.begin(), xs.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    bool by_a_then_b(GapPoint const& x, GapPoint const& y) {
      return x.a < y.a || (x.a == y.a && x.b < y.b);
    }

    bool is_chain(std::span<GapPoint const> pts) {
      for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i - 1].a < pts[i].a && pts[i - 1].b > pts[i].b)) {
          return false;
        }
      }
      return true;
    }

    // Depth-first chain search shared by all enumeration entry points.
    class ChainSearch {
     public:
      explicit ChainSearch(SemigroupPair const& S) : _S(S), _points(gaps(S)) {
        std::sort(_points.begin(), _points.end(), by_a_then_b);
        // first index with a strictly greater than a given a
        _next_column.assign(static_cast<std::size_t>(S.beta()) + 1,
                            _points.size());
        for (std::size_t i = _points.size(); i-- > 0;) {
          _next_column[_points[i].a - 1] = i;
        }
        for (std::size_t a = _next_column.size() - 1; a-- > 0;) {
          _next_column[a] = std::min(_next_column[a], _next_column[a + 1]);
        }
      }

      std::vector<GapPoint> const& points() const noexcept {
        return _points;
      }

      // Calls on_chain(chain) for every chain in the subtree below `chain`
      // (inclusive) whose length matches the filter.
      template <typename F>
      void descend(std::vector<GapPoint>& chain,
                   std::optional<Int>     filter,
                   F&&                    on_chain) const {
        Int const depth = static_cast<Int>(chain.size());
        if (!filter || *filter == depth) {
          on_chain(chain);
        }
        if (filter && depth >= *filter) {
          return;
        }
        Int last_a = 0, last_b = _S.alpha();
        if (!chain.empty()) {
          last_a = chain.back().a;
          last_b = chain.back().b;
        }
        if (filter) {
          // remaining points need distinct a in (last_a, beta) and distinct
          // b in [1, last_b)
          Int const remaining = *filter - depth;
          if (_S.beta() - 1 - last_a < remaining || last_b - 1 < remaining) {
            return;
          }
        }
        for (std::size_t i = _next_column[last_a]; i < _points.size(); ++i) {
          if (_points[i].b < last_b) {
            chain.push_back(_points[i]);
            descend(chain, filter, on_chain);
            chain.pop_back();
          }
        }
      }

     private:
      SemigroupPair            _S;
      std::vector<GapPoint>    _points;
      std::vector<std::size_t> _next_column;
    };

    void check_filter(SemigroupPair const& S, std::optional<Int> filter) {
      if (filter && (*filter < 0 || *filter > S.alpha() - 1)) {
        throw InvalidInput("gap filter must lie in [0, alpha - 1], got "
                           + std::to_string(*filter));
      }
    }

  }  // namespace

  LeanSet LeanSet::from_members(SemigroupPair const& S,
                                std::span<Int const> xs) {
    if (!is_lean(S, xs)) {
      throw InvalidInput("the set is not lean for <" + std::to_string(S.alpha())
                         + "," + std::to_string(S.beta()) + ">");
    }
    auto members = sorted_unique(xs);
    std::vector<GapPoint> points;
    points.reserve(members.size() - 1);
    for (auto it = members.begin() + 1; it != members.end(); ++it) {
      points.push_back(gap_point(S, *it));
    }
    std::sort(points.begin(), points.end(), by_a_then_b);
    return LeanSet(S, std::move(members), std::move(points));
  }

  LeanSet LeanSet::from_points(SemigroupPair const& S,
                               std::vector<GapPoint> points) {
    for (auto const& pt : points) {
      if (pt.a < 1 || pt.b < 1 || point_value(S, pt.a, pt.b) != pt.value
          || pt.value <= 0) {
        throw InvalidInput("not a gap point: (" + std::to_string(pt.a) + ","
                           + std::to_string(pt.b) + ")");
      }
    }
    if (!is_chain(points)) {
      throw InvalidInput("gap points must have a increasing and b decreasing");
    }
    std::vector<Int> members;
    members.reserve(points.size() + 1);
    members.push_back(0);
    for (auto const& pt : points) {
      members.push_back(pt.value);
    }
    std::sort(members.begin(), members.end());
    return LeanSet(S, std::move(members), std::move(points));
  }

  bool is_lean(SemigroupPair const& S, std::span<Int const> xs) {
    auto const members = sorted_unique(xs);
    if (members.empty() || members.front() != 0) {
      throw InvalidInput("a lean set must contain 0; normalize first");
    }
    std::vector<GapPoint> points;
    points.reserve(members.size() - 1);
    for (auto it = members.begin() + 1; it != members.end(); ++it) {
      if (!is_gap(S, *it)) {
        return false;
      }
      points.push_back(gap_point(S, *it));
    }
    std::sort(points.begin(), points.end(), by_a_then_b);
    bool const result = is_chain(points);
    assert(result == is_lean_pairwise(S, xs));
    return result;
  }

  bool is_lean_pairwise(SemigroupPair const& S, std::span<Int const> xs) {
    auto const members = sorted_unique(xs);
    if (members.empty() || members.front() != 0) {
      throw InvalidInput("a lean set must contain 0; normalize first");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (is_member(S, members[j] - members[i])) {
          return false;
        }
      }
    }
    return true;
  }

  void for_each_lean_set(SemigroupPair const&  S,
                         std::optional<Int>    gap_filter,
                         LeanSetVisitor const& visit) {
    check_filter(S, gap_filter);
    ChainSearch const     search(S);
    std::vector<GapPoint> chain;
    search.descend(chain, gap_filter, [&](std::vector<GapPoint> const& c) {
      visit(LeanSet::from_points(S, c));
    });
  }

  std::vector<LeanSet> enumerate_lean_sets(SemigroupPair const& S,
                                           std::optional<Int>   gap_filter) {
    std::vector<LeanSet> result;
    for_each_lean_set(
        S, gap_filter, [&](LeanSet const& L) { result.push_back(L); });
    return result;
  }

  Int count_enumerated_lean_sets(SemigroupPair const& S,
                                 std::optional<Int>   gap_filter) {
    check_filter(S, gap_filter);
    ChainSearch const     search(S);
    std::vector<GapPoint> chain;
    Int                   count = 0;
    search.descend(chain, gap_filter, [&](std::vector<GapPoint> const&) {
      count = checked_add(count, 1);
    });
    return count;
  }

  std::size_t lean_set_partition_count(SemigroupPair const& S) {
    return static_cast<std::size_t>(S.gap_count()) + 1;
  }

  void for_each_lean_set_in_partition(SemigroupPair const&  S,
                                      std::size_t           partition,
                                      std::optional<Int>    gap_filter,
                                      LeanSetVisitor const& visit) {
    check_filter(S, gap_filter);
    if (partition >= lean_set_partition_count(S)) {
      throw InvalidInput("partition index out of range");
    }
    if (partition == 0) {
      if (!gap_filter || *gap_filter == 0) {
        visit(LeanSet::from_points(S, {}));
      }
      return;
    }
    if (gap_filter && *gap_filter == 0) {
      return;
    }
    ChainSearch const     search(S);
    std::vector<GapPoint> chain{search.points()[partition - 1]};
    search.descend(chain, gap_filter, [&](std::vector<GapPoint> const& c) {
      visit(LeanSet::from_points(S, c));
    });
  }

}  // namespace semimod
