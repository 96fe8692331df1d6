#ifndef SEMIMOD_SEMIMODULE_HPP_
#define SEMIMOD_SEMIMODULE_HPP_

#include <span>
#include <vector>

#include "lean_set.hpp"

namespace semimod {

  // A semimodule Delta = union of (x + Gamma) over its minimal generators x.
  // Generators are stored ascending; the pairwise differences are gaps.
  // Equality compares generator sets, so normalized semimodules are equal
  // exactly when isomorphic.
  class Semimodule {
   public:
    // The semimodule generated by xs (any non-empty set of non-negative
    // integers); the generators are minimised.
    Semimodule(SemigroupPair const& S, std::span<Int const> xs);

    explicit Semimodule(LeanSet const& L);

    SemigroupPair const& semigroup() const noexcept {
      return _semigroup;
    }
    std::vector<Int> const& generators() const noexcept {
      return _gens;
    }
    std::size_t generator_count() const noexcept {
      return _gens.size();
    }
    Int min() const noexcept {
      return _gens.front();
    }
    bool is_normalized() const noexcept {
      return _gens.front() == 0;
    }
    bool contains(Int n) const;

    // Generators of a normalized semimodule as a lean set; throws
    // InvalidInput when not normalized.
    LeanSet lean_set() const;

    // Delta + shift; throws InvalidInput if the result would go negative.
    Semimodule shifted(Int shift) const;

    friend bool operator==(Semimodule const& x, Semimodule const& y) {
      return x._semigroup == y._semigroup && x._gens == y._gens;
    }

   private:
    struct Trusted {};
    Semimodule(SemigroupPair const& S, std::vector<Int> gens, Trusted)
        : _semigroup(S), _gens(std::move(gens)) {}

    SemigroupPair    _semigroup;
    std::vector<Int> _gens;
  };

  // Greedy sweep: x_1 = min Delta, x_{k+1} = min Delta \ (x_1..x_k + Gamma),
  // run over [min xs, max xs + frobenius + 1]; past that window every
  // element of Delta is already covered. Throws InvalidInput for an empty
  // set or negative members.
  std::vector<Int> minimal_generators(SemigroupPair const& S,
                                      std::span<Int const> xs);

  // Delta - min Delta.
  Semimodule normalize(Semimodule const& M);
  Semimodule normalize(SemigroupPair const& S, std::span<Int const> gens);

  bool is_isomorphic(Semimodule const& A, Semimodule const& B);

  // Elements of Delta not exceeding bound, ascending.
  std::vector<Int> elements_up_to(Semimodule const& M, Int bound);

}  // namespace semimod

#endif  // SEMIMOD_SEMIMODULE_HPP_
