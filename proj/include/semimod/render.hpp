#ifndef SEMIMOD_RENDER_HPP_
#define SEMIMOD_RENDER_HPP_

#include <string>

#include "lean_set.hpp"

namespace semimod {

  enum class RenderFormat { ascii, svg };

  struct RenderSpec {
    RenderFormat format    = RenderFormat::ascii;
    // pixels per lattice step, svg only; at least 4
    int          cell_size = 40;
    bool         diagonal  = true;
    bool         markers   = true;
    bool         labels    = false;
  };

  // Draws the lattice path of a lean set. ascii: (alpha+1) rows of
  // (beta+1) characters, top-left is (0, alpha); '#' path, 'E' ES-turn,
  // 'S' SE-turn, '.' the diagonal sampled once per row. With labels a
  // legend of turn values follows the grid. svg: SVG 1.1 with the path as a
  // polyline, a dashed diagonal, filled ES and hollow SE circles and, with
  // labels, the value of every gap at its lattice point.
  std::string render(LeanSet const& L, RenderSpec const& spec = {});

}  // namespace semimod

#endif  // SEMIMOD_RENDER_HPP_
