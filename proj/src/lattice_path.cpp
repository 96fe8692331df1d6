#include "semimod/lattice_path.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace semimod {

  void check_shape(PathMatrix const& M) {
    if (M.down.empty() || M.down.size() != M.right.size()) {
      throw InvalidInput("path matrix rows must be non-empty and equally long");
    }
    auto const positive = [](Int v) { return v >= 1; };
    if (!std::all_of(M.down.begin(), M.down.end(), positive)
        || !std::all_of(M.right.begin(), M.right.end(), positive)) {
      throw InvalidInput("path matrix entries must be >= 1");
    }
  }

  void check_matrix(SemigroupPair const& S, PathMatrix const& M) {
    check_shape(M);
    Int const down  = std::accumulate(M.down.begin(), M.down.end(), Int{0});
    Int const right = std::accumulate(M.right.begin(), M.right.end(), Int{0});
    if (down != S.alpha() || right != S.beta()) {
      throw InvalidInput("path matrix rows must sum to alpha = "
                         + std::to_string(S.alpha()) + " and beta = "
                         + std::to_string(S.beta()) + ", got "
                         + std::to_string(down) + " and "
                         + std::to_string(right));
    }
  }

  LatticePath lattice_path(SemigroupPair const& S, PathMatrix const& M) {
    check_matrix(S, M);
    LatticePath path;
    path.es_turns.reserve(M.columns() - 1);
    Int x = 0, y = S.alpha();
    for (std::size_t i = 0; i + 1 < M.columns(); ++i) {
      y -= M.down[i];
      x += M.right[i];
      path.es_turns.push_back({x, y});
    }
    return path;
  }

  std::vector<GridPoint> se_turns(SemigroupPair const& S, PathMatrix const& M) {
    check_matrix(S, M);
    std::vector<GridPoint> result;
    result.reserve(M.columns());
    Int x = 0, y = S.alpha();
    for (std::size_t i = 0; i < M.columns(); ++i) {
      y -= M.down[i];
      result.push_back({x, y});
      x += M.right[i];
    }
    return result;
  }

  PathMatrix path_from_lean_set(LeanSet const& L) {
    auto const&  S   = L.semigroup();
    auto const&  pts = L.points();
    PathMatrix   M;
    M.down.reserve(pts.size() + 1);
    M.right.reserve(pts.size() + 1);
    Int prev_a = 0, prev_b = S.alpha();
    for (auto const& pt : pts) {
      M.down.push_back(prev_b - pt.b);
      M.right.push_back(pt.a - prev_a);
      prev_a = pt.a;
      prev_b = pt.b;
    }
    M.down.push_back(prev_b);
    M.right.push_back(S.beta() - prev_a);
    return M;
  }

  // The outer corners of a staircase going down and right are exactly its
  // ES-turns, and the diagonal alpha*x + beta*y = alpha*beta contains no
  // lattice point other than the endpoints when gcd(alpha, beta) = 1. So the
  // path stays below the diagonal iff every ES-turn lies strictly below it.
  bool stays_below_diagonal(SemigroupPair const& S, PathMatrix const& M) {
    auto const path = lattice_path(S, M);
    return std::all_of(path.es_turns.begin(),
                       path.es_turns.end(),
                       [&](GridPoint const& p) {
                         return point_value(S, p.x, p.y) > 0;
                       });
  }

  LeanSet lean_set_from_path(SemigroupPair const& S, PathMatrix const& M) {
    if (!stays_below_diagonal(S, M)) {
      throw InvalidInput("path crosses the diagonal and encodes no lean set");
    }
    auto const            path = lattice_path(S, M);
    std::vector<GapPoint> points;
    points.reserve(path.es_turns.size());
    for (auto const& p : path.es_turns) {
      points.push_back({point_value(S, p.x, p.y), p.x, p.y});
    }
    return LeanSet::from_points(S, std::move(points));
  }

  PathMatrix rotate_columns(PathMatrix const& M, std::size_t k) {
    check_shape(M);
    k %= M.columns();
    PathMatrix R = M;
    std::rotate(R.down.begin(), R.down.begin() + k, R.down.end());
    std::rotate(R.right.begin(), R.right.begin() + k, R.right.end());
    return R;
  }

  std::vector<PathMatrix> cyclic_rotations(PathMatrix const& M) {
    check_shape(M);
    std::vector<PathMatrix> result;
    result.reserve(M.columns());
    for (std::size_t k = 0; k < M.columns(); ++k) {
      result.push_back(rotate_columns(M, k));
    }
    return result;
  }

  // Rotation k starts at the k-th turning point P_k (P_0 = (0, alpha)). The
  // doubled path repeats every P_j shifted by (beta, -alpha), which leaves
  // alpha*x + beta*y unchanged, so rotation k stays below its diagonal iff
  // P_k is the unique maximiser of alpha*x + beta*y among P_0..P_r.
  Rotation admissible_rotation(SemigroupPair const& S, PathMatrix const& M) {
    check_matrix(S, M);
    std::size_t best       = 0;
    Int         best_level = S.product();  // level of P_0
    bool        tie        = false;
    Int         x = 0, y = S.alpha();
    for (std::size_t i = 0; i + 1 < M.columns(); ++i) {
      y -= M.down[i];
      x += M.right[i];
      Int const level = S.alpha() * x + S.beta() * y;
      if (level > best_level) {
        best       = i + 1;
        best_level = level;
        tie        = false;
      } else if (level == best_level) {
        tie = true;
      }
    }
    SEMIMOD_ENSURE(!tie, "two turning points share the supporting line");
    Rotation result{best, rotate_columns(M, best)};
    SEMIMOD_ENSURE(stays_below_diagonal(S, result.matrix),
                   "selected rotation crosses the diagonal");
#ifndef NDEBUG
    std::size_t admissible = 0;
    for (auto const& R : cyclic_rotations(M)) {
      admissible += stays_below_diagonal(S, R) ? 1 : 0;
    }
    SEMIMOD_ENSURE(admissible == 1, "cycle lemma violated");
#endif
    return result;
  }

  namespace {
    // A random composition of total into parts pieces: choose parts - 1
    // distinct cut points in 1..total-1.
    std::vector<Int> random_composition(Int total,
                                        Int parts,
                                        std::mt19937_64& rng) {
      std::vector<Int> cuts(static_cast<std::size_t>(total - 1));
      std::iota(cuts.begin(), cuts.end(), Int{1});
      std::vector<Int> chosen;
      std::sample(cuts.begin(), cuts.end(), std::back_inserter(chosen),
                  parts - 1, rng);
      chosen.push_back(total);
      std::vector<Int> result;
      Int prev = 0;
      for (Int c : chosen) {
        result.push_back(c - prev);
        prev = c;
      }
      return result;
    }
  }  // namespace

  PathMatrix random_path_matrix(SemigroupPair const& S,
                                Int                  r,
                                std::mt19937_64&     rng) {
    if (r < 0 || r >= S.alpha()) {
      throw InvalidInput("turn count must lie in [0, alpha - 1]");
    }
    return {random_composition(S.alpha(), r + 1, rng),
            random_composition(S.beta(), r + 1, rng)};
  }

}  // namespace semimod
