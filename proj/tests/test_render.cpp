#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "pascal_chase/render.hpp"
#include "pascal_chase/scripts.hpp"

using namespace pascal_chase;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::string label(const std::string& text) { return ">" + text + "</text>"; }

}  // namespace

TEST_CASE("config SVG labels match the weight codec") {
    ProofScript lagrange = generate_script("lagrange", {{"n", 4}});
    RenderOptions opts;
    std::string svg = render_config_svg(lagrange.expected_final, opts);
    CHECK(svg.find(label("1")) != std::string::npos);
    CHECK(svg.find(label("4")) != std::string::npos);
    CHECK(svg.find(label("6")) != std::string::npos);
    CHECK(count_occurrences(svg, "<g class=\"cell\"") == lagrange.expected_final.cells().size());

    ProofScript hor = generate_script("hor_row_form", {{"n", 4}});
    std::string hor_svg = render_config_svg(hor.initial, opts);
    CHECK(hor_svg.find(label("-35")) != std::string::npos);
    CHECK(hor_svg.find(label("70")) != std::string::npos);
}

TEST_CASE("empty config renders an SVG with zero cells") {
    std::string svg = render_config_svg(WeightedConfig(), RenderOptions());
    CHECK(count_occurrences(svg, "<g class=\"cell\"") == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    ProofScript s = generate_script("boscarol", {{"m", 2}, {"n", 5}});
    RenderOptions opts;
    CHECK(render_config_svg(s.initial, opts) == render_config_svg(s.initial, opts));
    CHECK(render_tikz(s.initial, opts) == render_tikz(s.initial, opts));
}

TEST_CASE("script panels") {
    RenderOptions opts;
    ProofScript row = generate_script("row_sum", {{"n", 2}});
    auto panels = render_script_svg(row, opts);
    CHECK(panels.size() == row.steps.size() + 1);

    ProofScript stick = generate_script("hockey_stick", {{"m", 2}, {"n", 5}});
    auto stick_panels = render_script_svg(stick, opts);
    REQUIRE(!stick_panels.empty());
    CHECK(count_occurrences(stick_panels.back(), "<g class=\"cell\"") == 1);
    CHECK(stick_panels.back().find("data-n=\"6\" data-k=\"3\"") != std::string::npos);

    ProofScript bos = generate_script("boscarol", {{"m", 3}, {"n", 7}});
    auto bos_panels = render_script_svg(bos, opts);
    // the final panel is the all-2 row
    CHECK(count_occurrences(bos_panels.back(), label("2")) == 8);

    // arrows appear on step panels but not on the initial one
    CHECK(panels[0].find("marker-end") == std::string::npos);
    CHECK(panels[1].find("marker-end") != std::string::npos);

    // invalid scripts render nothing
    ProofScript broken = row;
    broken.steps[0].w = Weight(7);
    CHECK_THROWS_AS(render_script_svg(broken, opts), ChaseError);
}

TEST_CASE("label modes") {
    WeightedConfig c;
    c.add({4, 2}, Weight(-3));
    RenderOptions opts;
    opts.labels = LabelMode::Values;
    CHECK(render_config_svg(c, opts).find(label("6")) != std::string::npos);
    opts.labels = LabelMode::Both;
    std::string both = render_config_svg(c, opts);
    CHECK(both.find(label("-3")) != std::string::npos);
    CHECK(both.find(label("6")) != std::string::npos);
}

TEST_CASE("tikz output is structurally sound") {
    ProofScript s = generate_script("lagrange", {{"n", 4}});
    RenderOptions opts;
    std::string tikz = render_tikz(s.expected_final, opts);
    CHECK(count_occurrences(tikz, "\\node[hexagon") == s.expected_final.cells().size());
    CHECK(count_occurrences(tikz, "{") == count_occurrences(tikz, "}"));
    CHECK(tikz.find("{$1$}") != std::string::npos);
    CHECK(tikz.find("{$4$}") != std::string::npos);
    CHECK(tikz.find("{$6$}") != std::string::npos);
    CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
    CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
}

TEST_CASE("shading uses the configured fills") {
    WeightedConfig c;
    c.add({2, 1}, Weight(1));
    c.add({2, 2}, Weight(1));
    RenderOptions opts;
    opts.shading[{2, 1}] = Shade::Light;
    std::string svg = render_config_svg(c, opts);
    CHECK(svg.find("fill=\"#e6e6e6\"") != std::string::npos);
    CHECK(svg.find("fill=\"none\"") != std::string::npos);
}
