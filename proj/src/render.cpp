#include "semimod/render.hpp"

#include <sstream>

#include "semimod/lattice_path.hpp"

namespace semimod {

  namespace {

    // every lattice point visited by the path, in order
    std::vector<GridPoint> path_points(SemigroupPair const& S,
                                       PathMatrix const&    M) {
      std::vector<GridPoint> pts{{0, S.alpha()}};
      Int                    x = 0, y = S.alpha();
      for (std::size_t i = 0; i < M.columns(); ++i) {
        for (Int k = 0; k < M.down[i]; ++k) {
          pts.push_back({x, --y});
        }
        for (Int k = 0; k < M.right[i]; ++k) {
          pts.push_back({++x, y});
        }
      }
      return pts;
    }

    std::string render_ascii(LeanSet const& L, RenderSpec const& spec) {
      auto const& S = L.semigroup();
      auto const  M = path_from_lean_set(L);
      std::size_t const rows = S.alpha() + 1, cols = S.beta() + 1;
      std::vector<std::string> grid(rows, std::string(cols, ' '));
      auto at = [&](Int x, Int y) -> char& { return grid[S.alpha() - y][x]; };
      if (spec.diagonal) {
        for (Int y = 0; y <= S.alpha(); ++y) {
          // nearest x to beta*(alpha - y)/alpha, halves rounded up
          Int const x = (2 * S.beta() * (S.alpha() - y) + S.alpha())
                        / (2 * S.alpha());
          at(x, y) = '.';
        }
      }
      for (auto const& p : path_points(S, M)) {
        at(p.x, p.y) = '#';
      }
      auto const es = lattice_path(S, M).es_turns;
      auto const se = se_turns(S, M);
      if (spec.markers) {
        for (auto const& p : es) {
          at(p.x, p.y) = 'E';
        }
        for (auto const& p : se) {
          at(p.x, p.y) = 'S';
        }
      }
      std::ostringstream out;
      for (auto const& row : grid) {
        out << row << '\n';
      }
      if (spec.labels) {
        out << "ES:";
        for (auto const& p : es) {
          out << " (" << p.x << "," << p.y << ")=" << point_value(S, p.x, p.y);
        }
        out << "\nSE:";
        for (auto const& p : se) {
          out << " (" << p.x << "," << p.y << ")=" << point_value(S, p.x, p.y);
        }
        out << '\n';
      }
      return out.str();
    }

    std::string render_svg(LeanSet const& L, RenderSpec const& spec) {
      if (spec.cell_size < 4) {
        throw InvalidInput("svg cell size must be at least 4");
      }
      auto const& S    = L.semigroup();
      auto const  M    = path_from_lean_set(L);
      Int const   cell = spec.cell_size;
      Int const   width = (S.beta() + 2) * cell, height = (S.alpha() + 2) * cell;
      auto px = [&](Int x) { return cell + x * cell; };
      auto py = [&](Int y) { return cell + (S.alpha() - y) * cell; };
      Int const radius = std::max<Int>(2, cell / 8);

      std::ostringstream out;
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
          << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
          << ' ' << height << "\">\n";
      out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
      for (Int x = 0; x <= S.beta(); ++x) {
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(S.alpha())
            << "\" x2=\"" << px(x) << "\" y2=\"" << py(0) << "\"/>\n";
      }
      for (Int y = 0; y <= S.alpha(); ++y) {
        out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
            << px(S.beta()) << "\" y2=\"" << py(y) << "\"/>\n";
      }
      out << "</g>\n";
      if (spec.diagonal) {
        out << "<line class=\"diagonal\" x1=\"" << px(0) << "\" y1=\""
            << py(S.alpha()) << "\" x2=\"" << px(S.beta()) << "\" y2=\""
            << py(0)
            << "\" stroke=\"#000000\" stroke-width=\"1\" "
               "stroke-dasharray=\"6,4\"/>\n";
      }
      out << "<polyline class=\"path\" fill=\"none\" stroke=\"#000000\" "
             "stroke-width=\""
          << std::max<Int>(2, cell / 10) << "\" points=\"";
      out << px(0) << ',' << py(S.alpha());
      Int x = 0, y = S.alpha();
      for (std::size_t i = 0; i < M.columns(); ++i) {
        y -= M.down[i];
        out << ' ' << px(x) << ',' << py(y);
        x += M.right[i];
        out << ' ' << px(x) << ',' << py(y);
      }
      out << "\"/>\n";
      if (spec.markers) {
        for (auto const& p : lattice_path(S, M).es_turns) {
          out << "<circle class=\"es\" cx=\"" << px(p.x) << "\" cy=\""
              << py(p.y) << "\" r=\"" << radius
              << "\" fill=\"#000000\" stroke=\"#000000\"/>\n";
        }
        for (auto const& p : se_turns(S, M)) {
          out << "<circle class=\"se\" cx=\"" << px(p.x) << "\" cy=\""
              << py(p.y) << "\" r=\"" << radius
              << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
        }
      }
      if (spec.labels) {
        out << "<g font-family=\"sans-serif\" font-size=\""
            << std::max<Int>(4, cell / 3) << "\">\n";
        for (auto const& g : gaps(S)) {
          out << "<text x=\"" << px(g.a) << "\" y=\"" << py(g.b) << "\" dx=\""
              << cell / 10 << "\" dy=\"" << cell / 3 << "\">" << g.value
              << "</text>\n";
        }
        out << "</g>\n";
      }
      out << "</svg>\n";
      return out.str();
    }

  }  // namespace

  std::string render(LeanSet const& L, RenderSpec const& spec) {
    switch (spec.format) {
      case RenderFormat::ascii:
        return render_ascii(L, spec);
      case RenderFormat::svg:
        return render_svg(L, spec);
    }
    throw InvalidInput("unknown render format");
  }

}  // namespace semimod
