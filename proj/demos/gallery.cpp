// Renders the reference diagram gallery: one SVG per named configuration.
// The frozen copies under tests/golden/ are byte-compared by the test suite;
// regenerate with this tool when the renderer changes intentionally.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pascal_chase/pascal_chase.hpp"

using namespace pascal_chase;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
    std::ofstream out(dir / (name + ".svg"), std::ios::binary);
    out << text;
    std::cout << "wrote " << (dir / (name + ".svg")).string() << "\n";
}

WeightedConfig after_rounds(const ProofScript& script, std::size_t steps) {
    WeightedConfig c = script.initial;
    for (std::size_t i = 0; i < steps && i < script.steps.size(); ++i)
        c = apply_step(c, script.steps[i]);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "gallery";
    std::filesystem::create_directories(dir);
    RenderOptions opts;

    // All-ones row, the 2^n row sum start.
    {
        ProofScript s = generate_script("row_sum", {{"n", 6}});
        RenderOptions shaded = opts;
        for (long long k = 0; k <= 6; ++k) shaded.shading[{6, k}] = Shade::Light;
        write(dir, "row_sum_n6", render_config_svg(s.initial, shaded));
    }
    // Hockey stick column before the chase.
    {
        ProofScript s = generate_script("hockey_stick", {{"m", 2}, {"n", 5}});
        RenderOptions shaded = opts;
        for (long long r = 2; r <= 5; ++r) shaded.shading[{r, 2}] = Shade::Light;
        write(dir, "hockey_stick_m2_n5", render_config_svg(s.initial, shaded));
    }
    // Weighted row 0..6 after one lift round: 1,3,5,7,9,11.
    {
        ProofScript s = generate_script("weighted_row", {{"n", 6}});
        write(dir, "weighted_row_n6_lifted", render_config_svg(after_rounds(s, 6), opts));
    }
    // Squared row sum: the inverted triangle's last row 1,4,6,4,1.
    {
        ProofScript s = generate_script("lagrange", {{"n", 4}});
        write(dir, "lagrange_n4", render_config_svg(s.expected_final, opts));
    }
    // Alternating column weights 1,-4,10,-20,35,-56 on row 8.
    {
        ProofScript s = generate_script("alt_binom", {{"n", 8}, {"m", 3}});
        write(dir, "alt_binom_n8_m3", render_config_svg(s.initial, opts));
    }
    // Two 2^k columns meeting at (7,3).
    {
        ProofScript s = generate_script("boscarol", {{"m", 3}, {"n", 7}});
        write(dir, "boscarol_m3_n7", render_config_svg(s.initial, opts));
    }
    // Rotated alternating triangle read as a weighted row: 70,-35,15,-5,1.
    {
        ProofScript s = generate_script("hor_row_form", {{"n", 4}});
        write(dir, "hor_row_form_n4", render_config_svg(s.initial, opts));
    }
    return 0;
}
