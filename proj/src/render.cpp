#include "cgblock/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace cgblock {

Style parse_style(std::string_view s) {
  if (s == "solid") return Style::solid;
  if (s == "dotted") return Style::dotted;
  if (s == "bold") return Style::bold;
  if (s == "punctured") return Style::punctured;
  throw DomainError("unknown style '" + std::string(s) + "' (solid|dotted|bold|punctured)");
}

std::string style_name(Style s) {
  switch (s) {
    case Style::solid: return "solid";
    case Style::dotted: return "dotted";
    case Style::bold: return "bold";
    case Style::punctured: return "punctured";
  }
  return "solid";
}

Layer edge_layer(const EdgeSet& s, const Context& ctx, Style style, std::string label) {
  return {ctx.m(), s.edges(ctx), style, std::move(label)};
}

Layer path_layer(const SimplePath& p, const Context& ctx, Style style, std::string label) {
  return {ctx.m(), p.edges(), style, std::move(label)};
}

Layer parse_layer(std::string_view text, const Context& ctx) {
  auto c1 = text.find(':');
  if (c1 == std::string_view::npos) throw DomainError("layer '" + std::string(text) + "' needs a style");
  auto source = text.substr(0, c1);
  auto rest = text.substr(c1 + 1);
  auto c2 = rest.find(':');
  Style style = parse_style(rest.substr(0, c2));
  std::string label = c2 == std::string_view::npos ? "" : std::string(rest.substr(c2 + 1));

  if (source == "all") return edge_layer(full_edge_set(ctx), ctx, style, label);
  if (!source.empty() && source.front() == 'D') {
    int k = -1;
    auto [p, ec] = std::from_chars(source.data() + 1, source.data() + source.size(), k);
    if (ec != std::errc{} || p != source.data() + source.size()) throw DomainError("malformed class '" + std::string(source) + "'");
    return edge_layer(direction_class(k, ctx), ctx, style, label);
  }
  if (source.find('>') != std::string_view::npos) {
    SimplePath path;
    while (!source.empty()) {
      auto gt = source.find('>');
      auto tok = source.substr(0, gt);
      int v = -1;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size() || !ctx.valid_vertex(v))
        throw DomainError("malformed path vertex '" + std::string(tok) + "'");
      path.vertices.push_back(v);
      if (gt == std::string_view::npos) break;
      source.remove_prefix(gt + 1);
    }
    return path_layer(path, ctx, style, label);
  }
  return Layer{ctx.m(), parse_edge_list(source, ctx), style, label};
}

namespace {

constexpr double kSize = 512.0;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 216.0;

struct Point {
  double x, y;
};

Point vertex_point(int v, int n, double radius = kRadius) {
  double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * v / n;
  return {kCenter + radius * std::cos(theta), kCenter + radius * std::sin(theta)};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

std::string stroke_attrs(Style s) {
  switch (s) {
    case Style::solid: return R"(stroke="#000000" stroke-width="2")";
    case Style::dotted: return R"(stroke="#808080" stroke-width="1" stroke-dasharray="1,4" stroke-linecap="round")";
    case Style::bold: return R"(stroke="#000000" stroke-width="4.5")";
    case Style::punctured: return R"(stroke="#000000" stroke-width="2" stroke-dasharray="8,5")";
  }
  return "";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  Context ctx(spec.m);
  for (const auto& layer : spec.layers)
    if (layer.m != spec.m)
      throw DomainError("layer for m=" + std::to_string(layer.m) + " in a drawing for m=" + std::to_string(spec.m));
  const int n = ctx.n();

  std::string svg;
  svg += R"(<?xml version="1.0" encoding="UTF-8"?>)" "\n";
  svg += R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="512" height="512" viewBox="0 0 512 512">)" "\n";
  svg += R"(<rect x="0" y="0" width="512" height="512" fill="#ffffff"/>)" "\n";

  for (std::size_t li = 0; li < spec.layers.size(); ++li) {
    const auto& layer = spec.layers[li];
    svg += "<g id=\"layer" + std::to_string(li) + "\" class=\"" + style_name(layer.style) + "\" fill=\"none\" " +
           stroke_attrs(layer.style) + ">\n";
    if (!layer.label.empty()) svg += "<title>" + escape(layer.label) + "</title>\n";
    for (const auto& e : layer.edges) {
      auto p = vertex_point(e.a, n), q = vertex_point(e.b, n);
      svg += "<line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(q.x) + "\" y2=\"" + fmt(q.y) + "\"/>\n";
    }
    svg += "</g>\n";
    if (spec.highlight_angles) {
      svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#b03030\" text-anchor=\"middle\">\n";
      for (const auto& e : layer.edges) {
        auto p = vertex_point(e.a, n), q = vertex_point(e.b, n);
        svg += "<text x=\"" + fmt((p.x + q.x) / 2) + "\" y=\"" + fmt((p.y + q.y) / 2 - 3) + "\">" +
               std::to_string(direction(e, ctx)) + "</text>\n";
      }
      svg += "</g>\n";
    }
  }

  svg += "<g fill=\"#000000\">\n";
  for (int v = 0; v < n; ++v) {
    auto p = vertex_point(v, n);
    svg += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"4\"/>\n";
  }
  svg += "</g>\n";
  if (spec.vertex_labels) {
    svg += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"#000000\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (int v = 0; v < n; ++v) {
      auto p = vertex_point(v, n, kRadius + 20);
      svg += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\">" + std::to_string(v) + "</text>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cgblock
