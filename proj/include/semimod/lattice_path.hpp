#ifndef SEMIMOD_LATTICE_PATH_HPP_
#define SEMIMOD_LATTICE_PATH_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "lean_set.hpp"

namespace semimod {

  // Coordinates used throughout: x runs rightward from 0 to beta, y is the
  // height above the bottom edge, so paths start at (0, alpha) in the top
  // left and end at (beta, 0). Paths alternate a run of South (down) steps
  // with a run of East (right) steps. An ES-turn is a corner where an East
  // run ends and a South run begins; an SE-turn is the opposite corner.
  struct GridPoint {
    Int x;
    Int y;

    friend bool operator==(GridPoint const&, GridPoint const&) = default;
  };

  // Column i holds the run lengths (down[i], right[i]) between the
  // (i-1)-th and i-th turning points, the 0-th and (r+1)-th being the
  // endpoints. All entries are >= 1.
  struct PathMatrix {
    std::vector<Int> down;
    std::vector<Int> right;

    std::size_t columns() const noexcept {
      return down.size();
    }

    friend bool operator==(PathMatrix const&, PathMatrix const&) = default;
  };

  struct LatticePath {
    std::vector<GridPoint> es_turns;
  };

  struct Rotation {
    std::size_t index;
    PathMatrix  matrix;
  };

  // Throws InvalidInput unless both rows have the same positive length and
  // all entries are >= 1.
  void check_shape(PathMatrix const& M);

  // check_shape plus row sums alpha (down) and beta (right).
  void check_matrix(SemigroupPair const& S, PathMatrix const& M);

  // The r ES-turns (a_t, b_t) with a_t the sum of the first t right runs and
  // b_t = alpha minus the sum of the first t down runs.
  LatticePath lattice_path(SemigroupPair const& S, PathMatrix const& M);

  // The r + 1 SE-turns (a_t, b_{t+1}) for t = 0..r, where a_0 = 0 and
  // b_{r+1} = 0; the first and last lie on the axes.
  std::vector<GridPoint> se_turns(SemigroupPair const& S, PathMatrix const& M);

  PathMatrix path_from_lean_set(LeanSet const& L);

  // Throws InvalidInput if the path does not stay below the diagonal.
  LeanSet lean_set_from_path(SemigroupPair const& S, PathMatrix const& M);

  bool stays_below_diagonal(SemigroupPair const& S, PathMatrix const& M);

  // Simultaneous left rotation of both rows by k columns; column k of M
  // becomes column 0.
  PathMatrix rotate_columns(PathMatrix const& M, std::size_t k);

  std::vector<PathMatrix> cyclic_rotations(PathMatrix const& M);

  // The unique rotation that stays below the diagonal.
  Rotation admissible_rotation(SemigroupPair const& S, PathMatrix const& M);

  // A uniformly random pair of compositions of alpha and beta into r + 1
  // parts, 0 <= r < alpha. Usually not below the diagonal.
  PathMatrix random_path_matrix(SemigroupPair const& S,
                                Int                  r,
                                std::mt19937_64&     rng);

}  // namespace semimod

#endif  // SEMIMOD_LATTICE_PATH_HPP_
