#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgblock/enumeration.hpp"
#include "cgblock/geometry.hpp"

namespace cgblock {

enum class Style { solid, dotted, bold, punctured };

Style parse_style(std::string_view s);
std::string style_name(Style s);

struct Layer {
  int m = 0;
  std::vector<Edge> edges;
  Style style = Style::solid;
  std::string label;
};

struct RenderSpec {
  int m = 0;
  std::vector<Layer> layers;  // drawn in order
  bool vertex_labels = true;
  bool highlight_angles = false;  // print each edge's direction at its midpoint
};

Layer edge_layer(const EdgeSet& s, const Context& ctx, Style style, std::string label = {});
Layer path_layer(const SimplePath& p, const Context& ctx, Style style, std::string label = {});

// "<source>:<style>[:<label>]" where source is an edge list "0-1,1-2", a
// vertex path "4>5>6", a direction class "D3", or "all".
Layer parse_layer(std::string_view text, const Context& ctx);

// Regular 2m-gon on a 512x512 canvas, vertex 0 at 12 o'clock, labels
// increasing clockwise. Output depends only on the spec.
std::string render_svg(const RenderSpec& spec);

}  // namespace cgblock
