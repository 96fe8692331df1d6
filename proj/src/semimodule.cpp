#include "semimod/semimodule.hpp"

#include <algorithm>
#include <string>

namespace semimod {

  namespace {
    // keeps the sweep bitmaps bounded for hostile inputs
    constexpr Int max_window = Int{1} << 28;
  }  // namespace

  std::vector<Int> minimal_generators(SemigroupPair const& S,
                                      std::span<Int const> xs) {
    if (xs.empty()) {
      throw InvalidInput("a semimodule needs at least one generator");
    }
    auto const [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    Int const lo = *lo_it, hi = *hi_it;
    if (lo < 0) {
      throw InvalidInput("generators must be non-negative");
    }
    Int const width = checked_add(checked_sub(hi, lo), S.frobenius() + 2);
    if (width > max_window) {
      throw InvalidInput("generator spread too large for the sweep window");
    }
    auto const gamma = membership_table(S, width - 1);
    // in_delta[t] and covered[t] refer to the integer lo + t
    std::vector<bool> in_delta(width, false), covered(width, false);
    auto const        mark = [&](std::vector<bool>& bits, Int offset) {
      for (Int t = offset; t < width; ++t) {
        if (gamma[t - offset]) {
          bits[t] = true;
        }
      }
    };
    std::vector<Int> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Int x : sorted) {
      mark(in_delta, x - lo);
    }
    std::vector<Int> gens;
    for (Int t = 0; t < width; ++t) {
      if (in_delta[t] && !covered[t]) {
        gens.push_back(lo + t);
        mark(covered, t);
      }
    }
    return gens;
  }

  Semimodule::Semimodule(SemigroupPair const& S, std::span<Int const> xs)
      : _semigroup(S), _gens(minimal_generators(S, xs)) {}

  Semimodule::Semimodule(LeanSet const& L)
      : _semigroup(L.semigroup()), _gens(L.members()) {}

  bool Semimodule::contains(Int n) const {
    return std::any_of(_gens.begin(), _gens.end(), [&](Int g) {
      return n >= g && is_member(_semigroup, n - g);
    });
  }

  LeanSet Semimodule::lean_set() const {
    if (!is_normalized()) {
      throw InvalidInput("semimodule is not normalized");
    }
    return LeanSet::from_members(_semigroup, _gens);
  }

  Semimodule Semimodule::shifted(Int shift) const {
    if (checked_add(_gens.front(), shift) < 0) {
      throw InvalidInput("shift would produce negative elements");
    }
    std::vector<Int> g = _gens;
    for (auto& x : g) {
      x = checked_add(x, shift);
    }
    return Semimodule(_semigroup, std::move(g), Trusted{});
  }

  Semimodule normalize(Semimodule const& M) {
    std::vector<Int> g = M.generators();
    Int const        m = g.front();
    for (auto& x : g) {
      x -= m;
    }
    return Semimodule(M.semigroup(), g);
  }

  Semimodule normalize(SemigroupPair const& S, std::span<Int const> gens) {
    return normalize(Semimodule(S, gens));
  }

  bool is_isomorphic(Semimodule const& A, Semimodule const& B) {
    return normalize(A) == normalize(B);
  }

  std::vector<Int> elements_up_to(Semimodule const& M, Int bound) {
    if (bound < 0) {
      throw InvalidInput("bound must be non-negative");
    }
    auto const       gamma = membership_table(M.semigroup(), bound);
    std::vector<Int> result;
    for (Int n = M.min(); n <= bound; ++n) {
      for (Int g : M.generators()) {
        if (g > n) {
          break;
        }
        if (gamma[n - g]) {
          result.push_back(n);
          break;
        }
      }
    }
    return result;
  }

}  // namespace semimod
