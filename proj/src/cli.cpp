#include "semimod/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "semimod/counting.hpp"
#include "semimod/json_io.hpp"
#include "semimod/lean_set.hpp"
#include "semimod/render.hpp"
#include "semimod/syzygy.hpp"
#include "semimod/verify.hpp"

namespace semimod::cli {

  namespace {

    std::string join(std::vector<Int> const& xs, char const* sep = ",") {
      std::ostringstream out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i ? sep : "") << xs[i];
      }
      return out.str();
    }

    struct Options {
      Int                alpha = 0;
      Int                beta  = 0;
      Int                number = 0;
      std::optional<Int> gens;
      std::vector<Int>   set;
      bool               json      = false;
      bool               brute     = false;
      bool               normalize = false;
      bool               deep      = false;
      bool               points    = false;
      std::size_t        iterate   = 1;
      std::string        format    = "ascii";
      bool               labels    = false;
      bool               no_diagonal = false;
      bool               no_markers  = false;
      int                cell        = 40;
      unsigned           threads     = 0;
    };

    class Runner {
     public:
      Runner(Options const& opt, std::ostream& out, std::ostream& err)
          : _opt(opt), _out(out), _err(err), _S(opt.alpha, opt.beta) {}

      int gaps() {
        auto const gs = semimod::gaps(_S);
        if (_opt.json) {
          nlohmann::json j = nlohmann::json::array();
          for (auto const& g : gs) {
            j.push_back({{"value", g.value}, {"a", g.a}, {"b", g.b}});
          }
          _out << j.dump() << '\n';
        } else if (_opt.points) {
          for (auto const& g : gs) {
            _out << g.value << ' ' << g.a << ' ' << g.b << '\n';
          }
        } else {
          std::vector<Int> values;
          for (auto const& g : gs) {
            values.push_back(g.value);
          }
          _out << join(values, " ") << '\n';
        }
        return exit_ok;
      }

      int member() {
        _out << (is_member(_S, _opt.number) ? "true" : "false") << '\n';
        return exit_ok;
      }

      int enumerate() {
        for_each_lean_set(_S, gap_filter(), [&](LeanSet const& L) {
          if (_opt.json) {
            _out << to_json(Semimodule(L)).dump() << '\n';
          } else {
            _out << join(L.members()) << '\n';
          }
        });
        return exit_ok;
      }

      int count() {
        auto const filter  = gap_filter();
        Int const  formula = filter ? count_lean_sets(_S, *filter)
                                    : count_lean_sets_total(_S);
        if (!_opt.brute) {
          _out << formula << '\n';
          return exit_ok;
        }
        Int const counted = count_enumerated_lean_sets(_S, filter);
        _out << counted << '\n';
        if (counted != formula) {
          _err << "enumerated " << counted << " lean sets, formula gives "
               << formula << '\n';
          return exit_internal;
        }
        return exit_ok;
      }

      int couple() {
        auto const c = fundamental_couple(lean_set());
        if (_opt.json) {
          _out << to_json(c).dump() << '\n';
        } else {
          _out << "I=[" << join(c.I) << "]\nJ=[" << join(c.J) << "]\n";
        }
        return exit_ok;
      }

      int syzygy() {
        Semimodule result = syzygy_power(Semimodule(lean_set()), _opt.iterate);
        if (_opt.normalize) {
          result = semimod::normalize(result);
        }
        print(result);
        return exit_ok;
      }

      int orbit() {
        auto const report = syzygy_period(Semimodule(lean_set()));
        if (_opt.json) {
          nlohmann::json cycle = nlohmann::json::array();
          for (auto const& m : report.cycle) {
            cycle.push_back(m.generators());
          }
          _out << nlohmann::json{{"alpha", _S.alpha()},
                                 {"beta", _S.beta()},
                                 {"generator_count", report.generator_count},
                                 {"period", report.period},
                                 {"cycle", cycle}}
                      .dump()
               << '\n';
        } else {
          _out << "generators: " << report.generator_count << '\n'
               << "period: " << report.period << '\n';
          for (auto const& m : report.cycle) {
            _out << join(m.generators()) << '\n';
          }
        }
        return exit_ok;
      }

      int orbits() {
        Int const  n       = *_opt.gens;
        auto const formula = orbit_count_table(_S, n);
        auto const table
            = _opt.brute ? brute_force_orbit_table(_S, n, _opt.threads) : formula;
        if (_opt.json) {
          _out << to_json(table).dump() << '\n';
        } else {
          _out << "ell\tA\texact\torbits\n";
          for (auto const& row : table.rows) {
            _out << row.ell << '\t' << row.periodic << '\t' << row.exact << '\t'
                 << row.orbits << '\n';
          }
        }
        if (table != formula) {
          _err << "brute-force orbit table differs from the formulas\n";
          return exit_internal;
        }
        return exit_ok;
      }

      int fixed_points() {
        if (_opt.gens) {
          _out << count_fixed_points(_S, *_opt.gens) << '\n';
          return exit_ok;
        }
        for (Int n = 1; n <= _S.alpha(); ++n) {
          _out << n << '\t' << count_fixed_points(_S, n) << '\n';
        }
        return exit_ok;
      }

      int render() {
        RenderSpec spec;
        if (_opt.format == "svg") {
          spec.format = RenderFormat::svg;
        } else if (_opt.format != "ascii") {
          throw InvalidInput("unknown format " + _opt.format);
        }
        spec.cell_size = _opt.cell;
        spec.labels    = _opt.labels;
        spec.diagonal  = !_opt.no_diagonal;
        spec.markers   = !_opt.no_markers;
        _out << semimod::render(lean_set(), spec);
        return exit_ok;
      }

      int verify() {
        VerifyOptions vo;
        vo.deep = _opt.deep;
        bool ok = true;
        for (auto const& r : run_verification(_S, vo)) {
          _out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
               << r.detail << '\n';
          ok = ok && r.passed;
        }
        return ok ? exit_ok : exit_internal;
      }

     private:
      std::optional<Int> gap_filter() const {
        if (!_opt.gens) {
          return std::nullopt;
        }
        if (*_opt.gens < 1 || *_opt.gens > _S.alpha()) {
          throw InvalidInput("--gens must lie in [1, alpha]");
        }
        return *_opt.gens - 1;
      }

      LeanSet lean_set() const {
        return LeanSet::from_members(_S, _opt.set);
      }

      void print(Semimodule const& m) {
        if (_opt.json) {
          _out << to_json(m).dump() << '\n';
        } else {
          _out << join(m.generators()) << '\n';
        }
      }

      Options const& _opt;
      std::ostream&  _out;
      std::ostream&  _err;
      SemigroupPair  _S;
    };

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semimodules over two-generator numerical semigroups",
                 "semimod"};
    app.require_subcommand(1);
    Options opt;

    auto pair = [&](CLI::App* sub) {
      sub->add_option("A", opt.alpha, "smaller generator alpha")->required();
      sub->add_option("B", opt.beta, "larger generator beta")->required();
    };
    auto set_option = [&](CLI::App* sub) {
      sub->add_option("--set", opt.set, "lean set, comma separated")
          ->delimiter(',')
          ->required();
    };

    auto* gaps = app.add_subcommand("gaps", "list the gaps");
    pair(gaps);
    gaps->add_flag("--points", opt.points, "print value a b per line");
    gaps->add_flag("--json", opt.json);

    auto* member = app.add_subcommand("member", "semigroup membership");
    pair(member);
    member->add_option("N", opt.number)->required()->check(CLI::NonNegativeNumber);

    auto* enumerate = app.add_subcommand("enumerate", "list lean sets, one per line");
    pair(enumerate);
    enumerate->add_option("--gens", opt.gens, "only sets with N elements");
    enumerate->add_flag("--json", opt.json);

    auto* count = app.add_subcommand("count", "number of lean sets");
    pair(count);
    count->add_option("--gens", opt.gens, "only sets with N elements");
    count->add_flag("--brute", opt.brute, "count by enumeration");

    auto* couple = app.add_subcommand("couple", "fundamental couple of a lean set");
    pair(couple);
    set_option(couple);
    couple->add_flag("--json", opt.json);

    auto* syz = app.add_subcommand("syzygy", "syzygy generators");
    pair(syz);
    set_option(syz);
    syz->add_option("--iterate", opt.iterate, "number of syzygies to take");
    syz->add_flag("--normalize", opt.normalize);
    syz->add_flag("--json", opt.json);

    auto* orbit = app.add_subcommand("orbit", "syzygy period and cycle");
    pair(orbit);
    set_option(orbit);
    orbit->add_flag("--json", opt.json);

    auto* orbits = app.add_subcommand("orbits", "orbit count table");
    pair(orbits);
    orbits->add_option("--gens", opt.gens, "generator count n")->required();
    orbits->add_flag("--brute", opt.brute, "tally periods by enumeration");
    orbits->add_option("--threads", opt.threads, "workers for --brute");
    orbits->add_flag("--json", opt.json);

    auto* fixed = app.add_subcommand("fixed-points", "number of fixed points");
    pair(fixed);
    fixed->add_option("--gens", opt.gens, "generator count n");

    auto* render = app.add_subcommand("render", "draw the lattice path");
    pair(render);
    set_option(render);
    render->add_option("--format", opt.format)
        ->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--labels", opt.labels);
    render->add_option("--cell", opt.cell, "svg pixels per step")
        ->check(CLI::Range(4, 1000));
    render->add_flag("--no-diagonal", opt.no_diagonal);
    render->add_flag("--no-markers", opt.no_markers);

    auto* verify = app.add_subcommand("verify", "run the cross-check suites");
    pair(verify);
    verify->add_flag("--deep", opt.deep);

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_invalid;
    }

    try {
      Runner runner(opt, out, err);
      if (gaps->parsed()) return runner.gaps();
      if (member->parsed()) return runner.member();
      if (enumerate->parsed()) return runner.enumerate();
      if (count->parsed()) return runner.count();
      if (couple->parsed()) return runner.couple();
      if (syz->parsed()) return runner.syzygy();
      if (orbit->parsed()) return runner.orbit();
      if (orbits->parsed()) return runner.orbits();
      if (fixed->parsed()) return runner.fixed_points();
      if (render->parsed()) return runner.render();
      if (verify->parsed()) return runner.verify();
    } catch (InvalidInput const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    } catch (OverflowError const& e) {
      err << "error: " << e.what() << " (inputs too large)\n";
      return exit_invalid;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_internal;
    }
    return exit_invalid;
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    std::vector<char const*> argv{"semimod"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

}  // namespace semimod::cli
