#ifndef SEMIMOD_LEAN_SET_HPP_
#define SEMIMOD_LEAN_SET_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "semigroup.hpp"

namespace semimod {

  // A set {0, x_1, ..., x_r} whose pairwise differences are all gaps. Two
  // views are kept: `members()` ascending by value, and `points()` with the
  // gap points of x_1..x_r ascending by a-coordinate (so b descends).
  class LeanSet {
   public:
    // Throws InvalidInput if xs lacks 0 or is not lean. Duplicates and order
    // are ignored.
    static LeanSet from_members(SemigroupPair const& S,
                                std::span<Int const> xs);

    // Points must be gap points with a strictly increasing and b strictly
    // decreasing; throws InvalidInput otherwise.
    static LeanSet from_points(SemigroupPair const& S,
                               std::vector<GapPoint> points);

    SemigroupPair const& semigroup() const noexcept {
      return _semigroup;
    }
    std::vector<Int> const& members() const noexcept {
      return _members;
    }
    std::vector<GapPoint> const& points() const noexcept {
      return _points;
    }
    // Number of nonzero members, r.
    std::size_t gap_count() const noexcept {
      return _points.size();
    }
    std::size_t size() const noexcept {
      return _members.size();
    }

    friend bool operator==(LeanSet const& x, LeanSet const& y) {
      return x._semigroup == y._semigroup && x._members == y._members;
    }

   private:
    LeanSet(SemigroupPair const& S,
            std::vector<Int> members,
            std::vector<GapPoint> points)
        : _semigroup(S),
          _members(std::move(members)),
          _points(std::move(points)) {}

    SemigroupPair         _semigroup;
    std::vector<Int>      _members;
    std::vector<GapPoint> _points;
  };

  // Lean test via the monotone criterion: sorted by a ascending, b must be
  // strictly descending. Throws InvalidInput if 0 is not in xs.
  bool is_lean(SemigroupPair const& S, std::span<Int const> xs);

  // Lean test straight from the definition (all pairwise differences are
  // non-members). Quadratic; used as a cross-check.
  bool is_lean_pairwise(SemigroupPair const& S, std::span<Int const> xs);

  using LeanSetVisitor = std::function<void(LeanSet const&)>;

  // Visits every lean set once, optionally only those with exactly
  // `gap_filter` gaps. Order: lexicographic on the sequence of gap points
  // compared as (a, b) pairs, i.e. depth-first over chains with a strictly
  // increasing and b strictly decreasing, children in (a, b) order.
  void for_each_lean_set(SemigroupPair const&       S,
                         std::optional<Int>         gap_filter,
                         LeanSetVisitor const&      visit);

  std::vector<LeanSet> enumerate_lean_sets(SemigroupPair const& S,
                                           std::optional<Int> gap_filter
                                           = std::nullopt);

  // Counts by the same depth-first search without materialising sets.
  Int count_enumerated_lean_sets(SemigroupPair const& S,
                                 std::optional<Int>   gap_filter
                                 = std::nullopt);

  // The stream split by first gap point: partition 0 holds {0} alone,
  // partition k >= 1 the sets whose first point is the k-th gap point in
  // (a, b) order. Visiting partitions 0..partition_count-1 in turn reproduces
  // for_each_lean_set exactly.
  std::size_t lean_set_partition_count(SemigroupPair const& S);

  void for_each_lean_set_in_partition(SemigroupPair const&  S,
                                      std::size_t           partition,
                                      std::optional<Int>    gap_filter,
                                      LeanSetVisitor const& visit);

}  // namespace semimod

#endif  // SEMIMOD_LEAN_SET_HPP_
