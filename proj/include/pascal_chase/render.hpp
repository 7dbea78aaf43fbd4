#pragma once

// Static diagram emission: standalone SVG and TikZ renderings of weighted
// configurations and proof scripts. Cell (n,k) sits at
//   x = (k - n/2) * s * sqrt(3),  y = n * 1.5 * s
// with pointy-top hexagons of circumradius s. Output is a pure function of
// (input, options): equal inputs give byte-equal text.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "pascal_chase/chase.hpp"

namespace pascal_chase {

enum class Shade { None, Light, Mid, Dark };
enum class LabelMode { Weights, Values, Both };
enum class ArrowStyle { PerStep, Down };

struct RenderOptions {
    double cell_size = 40;  // hexagon circumradius in px
    std::map<Shade, std::string> fills = {{Shade::None, "none"},
                                          {Shade::Light, "#e6e6e6"},
                                          {Shade::Mid, "#c9c9c9"},
                                          {Shade::Dark, "#b0b0b0"}};
    std::map<Coord, Shade> shading;
    LabelMode labels = LabelMode::Weights;
    ArrowStyle arrows = ArrowStyle::PerStep;
};

namespace render_detail {

inline std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // avoid the "-0.00" vs "0.00" instability
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

inline double cx(Coord c, double s) {
    return (static_cast<double>(c.k) - static_cast<double>(c.n) / 2.0) * s * std::sqrt(3.0);
}
inline double cy(Coord c, double s) { return static_cast<double>(c.n) * 1.5 * s; }

inline std::string xml_escape(const std::string& in) {
    std::string out;
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

inline constexpr double kPi = 3.14159265358979323846;

inline std::string hexagon_points(double x, double y, double s) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        double angle = (30.0 + 60.0 * i) * kPi / 180.0;
        if (i) out += " ";
        out += num(x + s * std::cos(angle)) + "," + num(y + s * std::sin(angle));
    }
    return out;
}

struct Box {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;
    void include(double x, double y, double r) {
        if (!any) {
            min_x = x - r;
            max_x = x + r;
            min_y = y - r;
            max_y = y + r;
            any = true;
            return;
        }
        min_x = std::min(min_x, x - r);
        max_x = std::max(max_x, x + r);
        min_y = std::min(min_y, y - r);
        max_y = std::max(max_y, y + r);
    }
};

struct Arrow {
    Coord from, to;
    bool double_headed = false;
};

// Arrows a step draws: the cells weight leaves and the cells it enters.
inline std::vector<Arrow> step_arrows(const RuleStep& s, ArrowStyle style) {
    std::vector<Arrow> out;
    auto edge = [&](Coord src, Coord dst) {
        // ArrowStyle::Down forces the Pascal reading: arrows between rows
        // always point down the triangle.
        if (style == ArrowStyle::Down && src.n > dst.n)
            out.push_back({dst, src, false});
        else
            out.push_back({src, dst, false});
    };
    switch (s.rule) {
        case Rule::Lift:
            edge({s.n, s.k}, {s.n - 1, s.k - 1});
            edge({s.n, s.k}, {s.n - 1, s.k});
            break;
        case Rule::Drop:
            edge({s.n, s.k}, {s.n + 1, s.k + 1});
            edge({s.n, s.k + 1}, {s.n + 1, s.k + 1});
            break;
        case Rule::ShiftRight:
            out.push_back({{s.n, s.k}, {s.n, s.k + 1}, false});      // horizontal
            out.push_back({{s.n, s.k}, {s.n + 1, s.k + 1}, false});  // diagonal
            break;
        case Rule::SwapSym:
            if (s.k != s.n - s.k) out.push_back({{s.n, s.k}, {s.n, s.n - s.k}, true});
            break;
    }
    return out;
}

inline std::string config_svg(const WeightedConfig& config, const RenderOptions& o,
                              const std::vector<Arrow>& arrows) {
    double s = o.cell_size;
    Box box;
    for (const auto& [coord, w] : config.cells()) box.include(cx(coord, s), cy(coord, s), s);
    for (const auto& a : arrows) {
        box.include(cx(a.from, s), cy(a.from, s), s);
        box.include(cx(a.to, s), cy(a.to, s), s);
    }
    if (!box.any) box.include(0, 0, s);
    double pad = s * 0.25;
    double w = box.max_x - box.min_x + 2 * pad;
    double h = box.max_y - box.min_y + 2 * pad;
    double ox = -box.min_x + pad, oy = -box.min_y + pad;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
    if (!arrows.empty()) {
        svg += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
               "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
               "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    }
    for (const auto& [coord, weight] : config.cells()) {
        double x = cx(coord, s) + ox, y = cy(coord, s) + oy;
        Shade shade = Shade::None;
        if (auto it = o.shading.find(coord); it != o.shading.end()) shade = it->second;
        std::string fill = o.fills.count(shade) ? o.fills.at(shade) : "none";
        svg += "  <g class=\"cell\" data-n=\"" + std::to_string(coord.n) + "\" data-k=\"" +
               std::to_string(coord.k) + "\">\n";
        svg += "    <polygon points=\"" + hexagon_points(x, y, s) + "\" fill=\"" + fill +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        std::string weight_label = xml_escape(weight.str());
        std::string value_label = xml_escape(binom(coord.n, coord.k).str());
        double font = s * 0.32;
        if (o.labels == LabelMode::Both) {
            svg += "    <text x=\"" + num(x) + "\" y=\"" + num(y - font * 0.25) +
                   "\" font-size=\"" + num(font) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
                   "font-family=\"sans-serif\">" +
                   weight_label + "</text>\n";
            svg += "    <text x=\"" + num(x) + "\" y=\"" + num(y + font * 0.95) +
                   "\" font-size=\"" + num(font * 0.8) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
                   "font-family=\"sans-serif\" fill=\"#555555\">" +
                   value_label + "</text>\n";
        } else {
            svg += "    <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(font) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
                   "font-family=\"sans-serif\">" +
                   (o.labels == LabelMode::Weights ? weight_label : value_label) + "</text>\n";
        }
        svg += "  </g>\n";
    }
    for (const auto& a : arrows) {
        double x1 = cx(a.from, s) + ox, y1 = cy(a.from, s) + oy;
        double x2 = cx(a.to, s) + ox, y2 = cy(a.to, s) + oy;
        double dx = x2 - x1, dy = y2 - y1;
        double len = std::sqrt(dx * dx + dy * dy);
        if (len == 0) continue;
        double shrink = s * 0.55;
        x1 += dx / len * shrink;
        y1 += dy / len * shrink;
        x2 -= dx / len * shrink;
        y2 -= dy / len * shrink;
        svg += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
               "\" y2=\"" + num(y2) +
               "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"" +
               (a.double_headed ? " marker-start=\"url(#arrow)\"" : "") + "/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace render_detail

inline std::string render_config_svg(const WeightedConfig& config, const RenderOptions& options) {
    return render_detail::config_svg(config, options, {});
}

// Panel 0 is the initial configuration; panel i shows the configuration
// produced by step i with that step's cells arrowed, so the last panel is
// the final configuration.
inline std::vector<std::string> render_script_svg(const ProofScript& script,
                                                  const RenderOptions& options) {
    CheckReport report = check_script(script);
    if (!report.valid) throw ChaseError("cannot render invalid script: " + report.message);
    std::vector<std::string> panels;
    panels.push_back(render_detail::config_svg(script.initial, options, {}));
    WeightedConfig config = script.initial;
    for (const auto& step : script.steps) {
        config = apply_step(config, step);
        panels.push_back(render_detail::config_svg(
            config, options, render_detail::step_arrows(step, options.arrows)));
    }
    return panels;
}

inline std::string render_tikz(const WeightedConfig& config, const RenderOptions& options) {
    using render_detail::num;
    double u = options.cell_size / 40.0;  // 40 px = 1 cm
    std::string out;
    out += "\\begin{tikzpicture}[hexagon/.style={draw, regular polygon, "
           "regular polygon sides=6, minimum size=" +
           num(2 * u) + "cm, inner sep=0pt, rotate=30}]\n";
    for (const auto& [coord, weight] : config.cells()) {
        double x = render_detail::cx(coord, u);
        double y = -render_detail::cy(coord, u);  // TikZ y grows upward
        Shade shade = Shade::None;
        if (auto it = options.shading.find(coord); it != options.shading.end())
            shade = it->second;
        std::string fill;
        switch (shade) {
            case Shade::None: fill = ""; break;
            case Shade::Light: fill = ", fill=black!10"; break;
            case Shade::Mid: fill = ", fill=black!22"; break;
            case Shade::Dark: fill = ", fill=black!30"; break;
        }
        std::string label;
        switch (options.labels) {
            case LabelMode::Weights: label = weight.str(); break;
            case LabelMode::Values: label = binom(coord.n, coord.k).str(); break;
            case LabelMode::Both:
                label = weight.str() + "\\cdot" + binom(coord.n, coord.k).str();
                break;
        }
        out += "  \\node[hexagon" + fill + "] at (" + num(x) + ", " + num(y) + ") {$" + label +
               "$};\n";
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace pascal_chase
