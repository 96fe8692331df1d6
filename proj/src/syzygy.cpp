#include "semimod/syzygy.hpp"

#include <algorithm>
#include <numeric>

namespace semimod {

  FundamentalCouple fundamental_couple(LeanSet const& L) {
    auto const& S   = L.semigroup();
    auto const& pts = L.points();
    std::size_t const r = pts.size();
    FundamentalCouple couple;
    couple.I.reserve(r + 1);
    couple.J.reserve(r + 1);
    couple.I.push_back(0);
    for (std::size_t t = r; t-- > 0;) {
      couple.I.push_back(pts[t].value);
    }
    // SE-turn t sits at (a_t, b_{t+1}) with a_0 = 0 and b_{r+1} = 0; list
    // them from t = r down to t = 0.
    for (std::size_t t = r + 1; t-- > 0;) {
      Int const a = t == 0 ? 0 : pts[t - 1].a;
      Int const b = t == r ? 0 : pts[t].b;
      couple.J.push_back(point_value(S, a, b));
    }
    return couple;
  }

  CoupleCheck validate_fundamental_couple(SemigroupPair const& S,
                                          std::span<Int const> I,
                                          std::span<Int const> J) {
    auto fail = [](std::string clause, std::size_t index, std::string msg) {
      return CoupleCheck{false, std::move(clause), index, std::move(msg)};
    };
    if (I.empty() || I.size() != J.size()) {
      return fail("shape", 0, "I and J must be non-empty and equally long");
    }
    std::size_t const m     = I.size() - 1;
    Int const         alpha = S.alpha(), beta = S.beta();
    // (0)
    if (I[0] != 0) {
      return fail("0", 0, "i_0 must be 0");
    }
    // (1)
    for (std::size_t k = 1; k <= m; ++k) {
      if (!is_gap(S, I[k])) {
        return fail("1", k, "i_" + std::to_string(k) + " = "
                                + std::to_string(I[k]) + " is not a gap");
      }
    }
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      if (!is_gap(S, J[k])) {
        return fail("1", k, "j_" + std::to_string(k) + " = "
                                + std::to_string(J[k]) + " is not a gap");
      }
    }
    if (J[0] > S.product()) {
      return fail("1", 0, "j_0 exceeds alpha*beta");
    }
    if (J[m] > S.product()) {
      return fail("1", m, "j_m exceeds alpha*beta");
    }
    // (2)
    for (std::size_t k = 0; k <= m; ++k) {
      if (mod_floor(J[k] - I[k], alpha) != 0 || !(I[k] < J[k])) {
        return fail("2", k, "need j_k = i_k (mod alpha) and i_k < j_k at k = "
                                + std::to_string(k));
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (mod_floor(J[k] - I[k + 1], beta) != 0 || !(J[k] > I[k + 1])) {
        return fail("2", k,
                    "need j_k = i_{k+1} (mod beta) and j_k > i_{k+1} at k = "
                        + std::to_string(k));
      }
    }
    if (mod_floor(J[m] - I[0], beta) != 0 || !(J[m] >= I[0])) {
      return fail("2", m, "need j_m = i_0 (mod beta) and j_m >= i_0");
    }
    // (3)
    for (std::size_t k = 1; k <= m; ++k) {
      for (std::size_t l = k + 1; l <= m; ++l) {
        Int const d = I[k] > I[l] ? I[k] - I[l] : I[l] - I[k];
        if (!is_gap(S, d)) {
          return fail("3", k, "|i_" + std::to_string(k) + " - i_"
                                  + std::to_string(l) + "| is not a gap");
        }
      }
    }
    return {};
  }

  Semimodule syzygy(Semimodule const& M) {
    if (!M.is_normalized()) {
      return syzygy(normalize(M)).shifted(M.min());
    }
    auto const couple = fundamental_couple(M.lean_set());
    Semimodule result(M.semigroup(), couple.J);
    SEMIMOD_ENSURE(result.generator_count() == couple.J.size(),
                   "J does not generate its syzygy minimally");
    return result;
  }

  Semimodule syzygy_power(Semimodule const& M, std::size_t k) {
    Semimodule cur = M;
    for (std::size_t i = 0; i < k; ++i) {
      cur = syzygy(cur);
    }
    return cur;
  }

  namespace {

    // Elements in [0, bound] lying in at least two of the cosets i + Gamma
    // for i in the pairs selected by `pairs`.
    template <typename Pairs>
    std::vector<Int> coset_intersections(SemigroupPair const& S,
                                         std::span<Int const> I,
                                         Int                  bound,
                                         Pairs const&         pairs) {
      auto const       gamma = membership_table(S, bound);
      auto const       in    = [&](Int v, Int i) {
        return v >= i && gamma[v - i];
      };
      std::vector<Int> result;
      for (Int v = 0; v <= bound; ++v) {
        for (auto const& [x, y] : pairs) {
          if (in(v, I[x]) && in(v, I[y])) {
            result.push_back(v);
            break;
          }
        }
      }
      return result;
    }

  }  // namespace

  std::vector<Int> syzygy_elements_all_pairs(SemigroupPair const& S,
                                             std::span<Int const> I,
                                             Int                  bound) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < I.size(); ++x) {
      for (std::size_t y = x + 1; y < I.size(); ++y) {
        pairs.emplace_back(x, y);
      }
    }
    return coset_intersections(S, I, bound, pairs);
  }

  std::vector<Int> syzygy_elements_consecutive(SemigroupPair const& S,
                                               std::span<Int const> I,
                                               Int                  bound) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k + 1 < I.size(); ++k) {
      pairs.emplace_back(k, k + 1);
    }
    if (I.size() > 2) {
      pairs.emplace_back(0, I.size() - 1);
    }
    return coset_intersections(S, I, bound, pairs);
  }

  Semimodule syzygy_oracle(Semimodule const& M) {
    if (M.generator_count() < 2) {
      throw InvalidInput(
          "the pairwise-intersection syzygy needs at least two generators");
    }
    auto const&      S      = M.semigroup();
    auto const&      gens   = M.generators();
    Int const        bound  = checked_add(2 * S.product(), gens.back());
    auto const       gamma  = membership_table(S, bound);
    std::vector<Int> elements;
    for (Int v = M.min(); v <= bound; ++v) {
      int hits = 0;
      for (Int g : gens) {
        if (g > v) {
          break;
        }
        if (gamma[v - g] && ++hits == 2) {
          elements.push_back(v);
          break;
        }
      }
    }
    SEMIMOD_ENSURE(!elements.empty(), "empty syzygy for >= 2 generators");
    return Semimodule(S, elements);
  }

  PathMatrix syzygy_matrix(PathMatrix const& M) {
    check_shape(M);
    PathMatrix R = M;
    std::rotate(R.down.begin(), R.down.begin() + 1, R.down.end());
    return R;
  }

  PathMatrix normalized_syzygy_matrix(SemigroupPair const& S,
                                      PathMatrix const&    M) {
    return admissible_rotation(S, syzygy_matrix(M)).matrix;
  }

  OrbitReport syzygy_period(Semimodule const& M) {
    auto const&       S     = M.semigroup();
    Semimodule const  start = normalize(M);
    std::size_t const n     = start.generator_count();
    OrbitReport       report{n, 0, {start}};
    Semimodule        cur = start;
    for (std::size_t t = 1; t <= n; ++t) {
      cur = normalize(syzygy(cur));
      if (cur == start) {
        report.period = t;
        break;
      }
      report.cycle.push_back(cur);
    }
    SEMIMOD_ENSURE(report.period != 0, "no recurrence within n syzygies");
    SEMIMOD_ENSURE(n % report.period == 0, "period does not divide n");
    SEMIMOD_ENSURE(divides(static_cast<Int>(n / report.period), S.product()),
                   "n / period does not divide alpha*beta");
    return report;
  }

  std::size_t syzygy_period(SemigroupPair const& S, PathMatrix const& M) {
    if (!stays_below_diagonal(S, M)) {
      throw InvalidInput("period requires a path below the diagonal");
    }
    std::size_t const n   = M.columns();
    PathMatrix        cur = M;
    for (std::size_t t = 1; t <= n; ++t) {
      cur = normalized_syzygy_matrix(S, cur);
      if (cur == M) {
        SEMIMOD_ENSURE(n % t == 0, "period does not divide n");
        return t;
      }
    }
    SEMIMOD_ENSURE(false, "no recurrence within n syzygies");
    return 0;
  }

  PathMatrix orbit_witness_matrix(SemigroupPair const& S, Int n, Int ell) {
    if (n < 1 || ell < 1 || n % ell != 0) {
      throw InvalidInput("orbit witness needs ell >= 1 dividing n >= 1");
    }
    if (n >= S.alpha()) {
      throw InvalidInput("orbit witness needs n < alpha");
    }
    Int const q = n / ell;
    if (!divides(q, S.product())) {
      throw InvalidInput("no " + std::to_string(ell) + "-orbit with "
                         + std::to_string(n) + " generators: n/ell = "
                         + std::to_string(q) + " does not divide alpha*beta");
    }
    Int const down_blocks  = std::gcd(S.alpha(), q);  // m'
    Int const right_blocks = std::gcd(S.beta(), q);   // k'
    Int const down_len     = ell * right_blocks;      // m
    Int const right_len    = ell * down_blocks;       // k
    auto block = [](Int len, Int sum) {
      std::vector<Int> b(static_cast<std::size_t>(len), 1);
      b.back() = sum - len + 1;
      return b;
    };
    auto const down_block  = block(down_len, S.alpha() / down_blocks);
    auto const right_block = block(right_len, S.beta() / right_blocks);
    PathMatrix M;
    for (Int i = 0; i < down_blocks; ++i) {
      M.down.insert(M.down.end(), down_block.begin(), down_block.end());
    }
    for (Int i = 0; i < right_blocks; ++i) {
      M.right.insert(M.right.end(), right_block.begin(), right_block.end());
    }
    SEMIMOD_ENSURE(static_cast<Int>(M.columns()) == n
                       && static_cast<Int>(M.right.size()) == n,
                   "block matrix has the wrong width");
    check_matrix(S, M);
    return M;
  }

  Semimodule orbit_witness(SemigroupPair const& S, Int n, Int ell) {
    auto const M = orbit_witness_matrix(S, n, ell);
    return Semimodule(lean_set_from_path(S, admissible_rotation(S, M).matrix));
  }

}  // namespace semimod
