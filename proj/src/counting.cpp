#include "semimod/counting.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>
#include <thread>

#include "semimod/lattice_path.hpp"
#include "semimod/lean_set.hpp"
#include "semimod/syzygy.hpp"

namespace semimod {

  namespace {
    void check_generator_count(SemigroupPair const& S, Int n) {
      if (n < 1 || n > S.alpha()) {
        throw InvalidInput("generator count must lie in [1, alpha], got "
                           + std::to_string(n));
      }
    }
  }  // namespace

  Int count_lean_sets(SemigroupPair const& S, Int r) {
    if (r < 0) {
      throw InvalidInput("gap count must be non-negative");
    }
    if (r >= S.alpha()) {
      return 0;
    }
    Int const paths
        = checked_mul(binomial(S.alpha() - 1, r), binomial(S.beta() - 1, r));
    return exact_div(paths, r + 1, "lean sets with r gaps");
  }

  Int count_lean_sets_total(SemigroupPair const& S) {
    Int const n = checked_add(S.alpha(), S.beta());
    return exact_div(binomial(n, S.alpha()), n, "total lean sets");
  }

  Int narayana(Int alpha, Int r) {
    return count_lean_sets(SemigroupPair(alpha, alpha + 1), r);
  }

  Int catalan(Int alpha) {
    return count_lean_sets_total(SemigroupPair(alpha, alpha + 1));
  }

  Int count_ell_periodic(SemigroupPair const& S, Int n, Int ell) {
    check_generator_count(S, n);
    if (ell < 1 || n % ell != 0) {
      throw InvalidInput("ell must be a positive divisor of n");
    }
    Int const q = n / ell;
    if (!divides(q, S.product())) {
      return 0;
    }
    Int const down_blocks  = std::gcd(q, S.alpha());
    Int const right_blocks = std::gcd(q, S.beta());
    Int const ways = checked_mul(
        binomial(S.alpha() / down_blocks - 1, ell * right_blocks - 1),
        binomial(S.beta() / right_blocks - 1, ell * down_blocks - 1));
    return exact_div(ways, n, "ell-periodic semimodules");
  }

  Int count_fixed_points(SemigroupPair const& S, Int n) {
    check_generator_count(S, n);
    if (!divides(n, S.product())) {
      return 0;
    }
    Int const ways
        = checked_mul(binomial(S.alpha() / std::gcd(n, S.alpha()) - 1,
                               std::gcd(n, S.beta()) - 1),
                      binomial(S.beta() / std::gcd(n, S.beta()) - 1,
                               std::gcd(n, S.alpha()) - 1));
    return exact_div(ways, n, "fixed points");
  }

  CountRow const& CountTable::row(Int ell) const {
    auto it = std::find_if(
        rows.begin(), rows.end(), [&](auto const& r) { return r.ell == ell; });
    if (it == rows.end()) {
      throw InvalidInput(std::to_string(ell) + " does not divide "
                         + std::to_string(n));
    }
    return *it;
  }

  namespace {
    // Fills exact and orbits from periodic: A_ell = sum_{d | ell} exact_d.
    void invert_rows(CountTable& table) {
      for (auto& row : table.rows) {
        Int exact = 0;
        for (Int d : divisors(row.ell)) {
          int const mu = mobius(row.ell / d);
          if (mu != 0) {
            exact = checked_add(exact, mu * table.row(d).periodic);
          }
        }
        row.exact  = exact;
        row.orbits = exact_div(exact, row.ell, "orbit count");
      }
    }
  }  // namespace

  CountTable orbit_count_table(SemigroupPair const& S, Int n) {
    check_generator_count(S, n);
    CountTable table{n, {}};
    for (Int ell : divisors(n)) {
      table.rows.push_back({ell, count_ell_periodic(S, n, ell), 0, 0});
    }
    invert_rows(table);
    Int total = 0;
    for (auto const& row : table.rows) {
      total = checked_add(total, row.exact);
    }
    SEMIMOD_ENSURE(total == count_lean_sets(S, n - 1),
                   "exact-period counts do not sum to all semimodules");
    return table;
  }

  std::map<Int, Int> brute_force_periods(SemigroupPair const& S,
                                         Int                  n,
                                         unsigned             threads) {
    check_generator_count(S, n);
    std::size_t const parts = lean_set_partition_count(S);
    if (threads == 0) {
      threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, parts));
    auto worker = [&](unsigned w) {
      std::map<Int, Int> hist;
      for (std::size_t p = w; p < parts; p += threads) {
        for_each_lean_set_in_partition(S, p, n - 1, [&](LeanSet const& L) {
          auto const period = syzygy_period(S, path_from_lean_set(L));
          ++hist[static_cast<Int>(period)];
        });
      }
      return hist;
    };
    std::vector<std::future<std::map<Int, Int>>> jobs;
    for (unsigned w = 1; w < threads; ++w) {
      jobs.push_back(std::async(std::launch::async, worker, w));
    }
    std::map<Int, Int> total = worker(0);
    for (auto& job : jobs) {
      for (auto const& [period, count] : job.get()) {
        total[period] += count;
      }
    }
    return total;
  }

  CountTable brute_force_orbit_table(SemigroupPair const& S,
                                     Int                  n,
                                     unsigned             threads) {
    auto const hist = brute_force_periods(S, n, threads);
    CountTable table{n, {}};
    for (Int ell : divisors(n)) {
      Int periodic = 0;
      for (auto const& [period, count] : hist) {
        SEMIMOD_ENSURE(n % period == 0, "period does not divide n");
        if (ell % period == 0) {
          periodic += count;
        }
      }
      Int const exact = hist.contains(ell) ? hist.at(ell) : 0;
      table.rows.push_back(
          {ell, periodic, exact, exact_div(exact, ell, "orbit count")});
    }
    return table;
  }

}  // namespace semimod
