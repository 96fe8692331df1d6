#include "semimod/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "semimod/counting.hpp"
#include "semimod/lattice_path.hpp"
#include "semimod/lean_set.hpp"
#include "semimod/syzygy.hpp"

namespace semimod {

  namespace {

    std::string describe(std::vector<Int> const& xs) {
      std::ostringstream out;
      out << '{';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? "," : "") << xs[i];
      }
      out << '}';
      return out.str();
    }

    // Collects failures; the first one becomes the detail line.
    class Check {
     public:
      explicit Check(std::string name) : _name(std::move(name)) {}

      void expect(bool ok, std::string const& what) {
        ++_cases;
        if (!ok && _failures++ == 0) {
          _first = what;
        }
      }

      void note(std::string text) {
        _note = std::move(text);
      }

      CheckResult result() const {
        std::ostringstream detail;
        if (_failures == 0) {
          detail << _cases << " cases";
          if (!_note.empty()) {
            detail << ", " << _note;
          }
        } else {
          detail << _failures << " of " << _cases << " failed; first: "
                 << _first;
        }
        return {_name, _failures == 0, detail.str()};
      }

     private:
      std::string _name;
      std::string _first;
      std::string _note;
      Int         _cases    = 0;
      Int         _failures = 0;
    };

    template <typename F>
    CheckResult guarded(std::string const& name, F&& body) {
      try {
        return body();
      } catch (std::exception const& e) {
        return {name, false, std::string("exception: ") + e.what()};
      }
    }

    // All lean sets when there are at most `limit`, otherwise `samples`
    // admissible rotations of random composition pairs.
    std::vector<LeanSet> lean_sets_or_sample(SemigroupPair const& S,
                                             VerifyOptions const& opt,
                                             std::mt19937_64&     rng,
                                             bool&                exhaustive) {
      Int total = 0;
      try {
        total = count_lean_sets_total(S);
      } catch (OverflowError const&) {
        total = opt.exhaustive_limit + 1;
      }
      exhaustive = total <= opt.exhaustive_limit;
      if (exhaustive) {
        return enumerate_lean_sets(S);
      }
      std::vector<LeanSet>                    result;
      std::uniform_int_distribution<Int>      pick_r(0, S.alpha() - 1);
      for (Int i = 0; i < opt.samples; ++i) {
        auto const M = random_path_matrix(S, pick_r(rng), rng);
        result.push_back(
            lean_set_from_path(S, admissible_rotation(S, M).matrix));
      }
      return result;
    }

    CheckResult check_arithmetic(SemigroupPair const& S) {
      Check     c("presentation and membership");
      Int const top = 3 * S.product();
      // naive membership: i*alpha + j*beta
      std::vector<bool> naive(top + 1, false);
      for (Int i = 0; i * S.alpha() <= top; ++i) {
        for (Int j = 0; i * S.alpha() + j * S.beta() <= top; ++j) {
          naive[i * S.alpha() + j * S.beta()] = true;
        }
      }
      std::set<Int> gap_values;
      for (auto const& g : gaps(S)) {
        gap_values.insert(g.value);
        c.expect(g.a * S.alpha() + g.b * S.beta() < S.product(),
                 "gap point outside the triangle");
      }
      c.expect(static_cast<Int>(gap_values.size()) == S.gap_count(),
               "gap count");
      for (Int n = 0; n <= top; ++n) {
        c.expect(is_member(S, n) == naive[n],
                 "membership of " + std::to_string(n));
        if (n == 0) {
          continue;
        }
        auto const pr = presentation(S, n);
        c.expect(presentation_value(S, pr) == n && pr.p > 0 && pr.a >= 0
                     && pr.a < S.beta() && pr.b >= 0 && pr.b < S.alpha(),
                 "presentation of " + std::to_string(n));
        if (n <= S.product()) {
          bool const gap_form = pr.p == 1 && pr.a >= 1 && pr.b >= 1;
          c.expect(gap_form == !naive[n] && gap_form == gap_values.contains(n),
                   "gap criterion at " + std::to_string(n));
        }
        if (n > S.frobenius()) {
          c.expect(naive[n], "member beyond frobenius");
        }
      }
      return c.result();
    }

    CheckResult check_enumeration(SemigroupPair const& S,
                                  VerifyOptions const& opt) {
      Check c("lean-set enumeration vs formulas");
      Int   total = 0;
      for (Int r = 0; r < S.alpha(); ++r) {
        Int const counted = count_enumerated_lean_sets(S, r);
        c.expect(counted == count_lean_sets(S, r),
                 "r = " + std::to_string(r) + ": enumerated "
                     + std::to_string(counted) + ", formula "
                     + std::to_string(count_lean_sets(S, r)));
        total += counted;
      }
      c.expect(total == count_lean_sets_total(S), "total");
      c.expect(count_enumerated_lean_sets(S) == total, "unfiltered total");
      if (opt.deep && total <= opt.exhaustive_limit) {
        auto const all = enumerate_lean_sets(S);
        std::set<std::vector<Int>> seen;
        for (auto const& L : all) {
          c.expect(seen.insert(L.members()).second,
                   "duplicate " + describe(L.members()));
          c.expect(is_lean(S, L.members()) && is_lean_pairwise(S, L.members()),
                   "not lean " + describe(L.members()));
        }
        for (Int r = 0; r < S.alpha(); ++r) {
          std::vector<LeanSet> sub;
          std::copy_if(all.begin(), all.end(), std::back_inserter(sub),
                       [&](auto const& L) {
                         return static_cast<Int>(L.gap_count()) == r;
                       });
          c.expect(sub == enumerate_lean_sets(S, r),
                   "filtered stream r = " + std::to_string(r));
        }
        std::vector<LeanSet> merged;
        for (std::size_t p = 0; p < lean_set_partition_count(S); ++p) {
          for_each_lean_set_in_partition(
              S, p, std::nullopt, [&](LeanSet const& L) { merged.push_back(L); });
        }
        c.expect(merged == all, "partition merge order");
      }
      return c.result();
    }

    CheckResult check_bijections(SemigroupPair const&        S,
                                 std::vector<LeanSet> const& sets,
                                 bool                        exhaustive) {
      Check                      c("path and semimodule bijections");
      std::set<std::vector<Int>> classes;
      for (auto const& L : sets) {
        auto const M = path_from_lean_set(L);
        c.expect(stays_below_diagonal(S, M), "below diagonal");
        c.expect(lean_set_from_path(S, M) == L,
                 "path round trip " + describe(L.members()));
        c.expect(path_from_lean_set(lean_set_from_path(S, M)) == M,
                 "matrix round trip");
        auto const gens = minimal_generators(S, L.members());
        c.expect(gens == L.members(), "lean set is not minimal");
        classes.insert(normalize(S, L.members()).generators());
      }
      if (exhaustive) {
        c.expect(static_cast<Int>(classes.size()) == count_lean_sets_total(S),
                 "isomorphism classes");
      }
      c.note(exhaustive ? "exhaustive" : "sampled");
      return c.result();
    }

    CheckResult check_cycle_lemma(SemigroupPair const& S,
                                  VerifyOptions const& opt,
                                  std::mt19937_64&     rng) {
      Check c("cycle lemma");
      auto  one = [&](PathMatrix const& M) {
        std::size_t admissible = 0;
        for (auto const& R : cyclic_rotations(M)) {
          admissible += stays_below_diagonal(S, R) ? 1 : 0;
        }
        c.expect(admissible == 1, "admissible rotations != 1");
        auto const rot = admissible_rotation(S, M);
        c.expect(stays_below_diagonal(S, rot.matrix)
                     && rotate_columns(M, rot.index) == rot.matrix,
                 "admissible_rotation");
      };
      Int pairs = 0;
      try {
        pairs = binomial(S.alpha() + S.beta() - 2, S.alpha() - 1);
      } catch (OverflowError const&) {
        pairs = opt.exhaustive_limit + 1;
      }
      if (pairs <= opt.exhaustive_limit) {
        // compositions <-> subsets of cut points, as bitmasks
        auto compositions = [](Int total, Int parts) {
          std::vector<std::vector<Int>> result;
          for (Int mask = 0; mask < (Int{1} << (total - 1)); ++mask) {
            if (__builtin_popcountll(mask) != parts - 1) {
              continue;
            }
            std::vector<Int> comp;
            Int              prev = 0;
            for (Int cut = 1; cut < total; ++cut) {
              if (mask & (Int{1} << (cut - 1))) {
                comp.push_back(cut - prev);
                prev = cut;
              }
            }
            comp.push_back(total - prev);
            result.push_back(std::move(comp));
          }
          return result;
        };
        for (Int r = 0; r < S.alpha(); ++r) {
          auto const downs  = compositions(S.alpha(), r + 1);
          auto const rights = compositions(S.beta(), r + 1);
          Int        below  = 0;
          for (auto const& d : downs) {
            for (auto const& rt : rights) {
              PathMatrix const M{d, rt};
              one(M);
              below += stays_below_diagonal(S, M) ? 1 : 0;
            }
          }
          c.expect(static_cast<Int>(downs.size() * rights.size())
                           == binomial(S.alpha() - 1, r)
                                  * binomial(S.beta() - 1, r)
                       && below * (r + 1)
                              == static_cast<Int>(downs.size() * rights.size())
                       && below == count_lean_sets(S, r),
                   "composition-pair count at r = " + std::to_string(r));
        }
        c.note("exhaustive");
      } else {
        std::uniform_int_distribution<Int> pick_r(0, S.alpha() - 1);
        for (Int i = 0; i < opt.samples; ++i) {
          one(random_path_matrix(S, pick_r(rng), rng));
        }
        c.note("sampled");
      }
      return c.result();
    }

    CheckResult check_syzygy(SemigroupPair const&        S,
                             std::vector<LeanSet> const& sets,
                             bool                        exhaustive) {
      Check c("syzygy routes");
      for (auto const& L : sets) {
        Semimodule const D(L);
        auto const       syz    = syzygy(D);
        auto const       couple = fundamental_couple(L);
        auto const       check  = validate_fundamental_couple(S, couple.I, couple.J);
        c.expect(check.valid, "couple invalid for " + describe(L.members())
                                  + ": " + check.message);
        if (D.generator_count() >= 2) {
          c.expect(syzygy_oracle(D) == syz,
                   "oracle differs on " + describe(L.members()));
        }
        Int const bound = 2 * S.product() + L.members().back();
        c.expect(syzygy_elements_all_pairs(S, couple.I, bound)
                     == syzygy_elements_consecutive(S, couple.I, bound),
                 "all pairs vs consecutive pairs on " + describe(L.members()));
        auto const normal = normalize(syz);
        c.expect(normal.generators()
                     == lean_set_from_path(
                            S, normalized_syzygy_matrix(S, path_from_lean_set(L)))
                            .members(),
                 "matrix route on " + describe(L.members()));
        c.expect(is_lean(S, normal.generators())
                     && normal.generator_count() == L.size(),
                 "J not lean after shift");
      }
      c.note(exhaustive ? "exhaustive" : "sampled");
      return c.result();
    }

    CheckResult check_periodicity(SemigroupPair const&        S,
                                  std::vector<LeanSet> const& sets,
                                  bool                        exhaustive) {
      Check c("syzygy periods");
      for (auto const& L : sets) {
        Semimodule const D(L);
        auto const       report = syzygy_period(D);
        std::size_t const g     = D.generator_count();
        c.expect(g % report.period == 0
                     && divides(static_cast<Int>(g / report.period),
                                S.product()),
                 "period constraint on " + describe(L.members()));
        c.expect(report.cycle.size() == report.period,
                 "cycle length on " + describe(L.members()));
        std::set<std::vector<Int>> distinct;
        for (auto const& m : report.cycle) {
          distinct.insert(m.generators());
        }
        c.expect(distinct.size() == report.cycle.size(), "cycle repeats");
        c.expect(is_isomorphic(syzygy_power(D, g), D),
                 "Syz^(g) not isomorphic on " + describe(L.members()));
        c.expect(syzygy_period(S, path_from_lean_set(L)) == report.period,
                 "matrix period on " + describe(L.members()));
      }
      c.note(exhaustive ? "exhaustive" : "sampled");
      return c.result();
    }

    CheckResult check_orbit_tables(SemigroupPair const& S,
                                   VerifyOptions const& opt) {
      Check c("orbit tables vs brute force");
      Int   done = 0;
      for (Int n = 1; n <= S.alpha(); ++n) {
        c.expect(count_fixed_points(S, n) == count_ell_periodic(S, n, 1),
                 "fixed points vs ell = 1 at n = " + std::to_string(n));
        c.expect(count_ell_periodic(S, n, n) == count_lean_sets(S, n - 1),
                 "ell = n at n = " + std::to_string(n));
        auto const table = orbit_count_table(S, n);
        Int        sum   = 0;
        for (auto const& row : table.rows) {
          sum += row.exact;
        }
        c.expect(sum == count_lean_sets(S, n - 1), "exact counts sum");
        Int const size = count_lean_sets(S, n - 1);
        if (size <= (opt.deep ? 50 * opt.exhaustive_limit
                              : opt.exhaustive_limit)) {
          auto const brute = brute_force_orbit_table(S, n);
          c.expect(brute == table, "table mismatch at n = " + std::to_string(n));
          ++done;
        }
      }
      c.note(std::to_string(done) + " of " + std::to_string(S.alpha())
             + " generator counts brute-forced");
      return c.result();
    }

    CheckResult check_witnesses(SemigroupPair const& S) {
      Check c("orbit witnesses");
      for (Int n = 1; n < S.alpha(); ++n) {
        for (Int ell : divisors(n)) {
          if (!divides(n / ell, S.product())) {
            continue;
          }
          auto const W = orbit_witness(S, n, ell);
          c.expect(static_cast<Int>(W.generator_count()) == n,
                   "witness size");
          c.expect(static_cast<Int>(syzygy_period(W).period) == ell,
                   "witness period for n = " + std::to_string(n)
                       + ", ell = " + std::to_string(ell));
        }
      }
      return c.result();
    }

  }  // namespace

  std::vector<CheckResult> run_verification(SemigroupPair const& S,
                                            VerifyOptions const& opt) {
    std::mt19937_64          rng(opt.seed);
    std::vector<CheckResult> results;
    results.push_back(
        guarded("presentation and membership", [&] { return check_arithmetic(S); }));
    results.push_back(guarded("lean-set enumeration vs formulas",
                              [&] { return check_enumeration(S, opt); }));
    bool exhaustive = false;
    std::vector<LeanSet> sets;
    try {
      sets = lean_sets_or_sample(S, opt, rng, exhaustive);
    } catch (std::exception const& e) {
      results.push_back({"lean-set sample", false, e.what()});
      return results;
    }
    results.push_back(guarded("path and semimodule bijections", [&] {
      return check_bijections(S, sets, exhaustive);
    }));
    results.push_back(
        guarded("cycle lemma", [&] { return check_cycle_lemma(S, opt, rng); }));
    results.push_back(guarded("syzygy routes",
                              [&] { return check_syzygy(S, sets, exhaustive); }));
    results.push_back(guarded("syzygy periods", [&] {
      return check_periodicity(S, sets, exhaustive);
    }));
    results.push_back(guarded("orbit tables vs brute force",
                              [&] { return check_orbit_tables(S, opt); }));
    if (opt.deep) {
      results.push_back(
          guarded("orbit witnesses", [&] { return check_witnesses(S); }));
    }
    return results;
  }

}  // namespace semimod
