// Minimal library tour: build a weighted row, lift it, check a generated
// proof script, and sweep an identity.

#include <iostream>

#include "pascal_chase/pascal_chase.hpp"

using namespace pascal_chase;

int main() {
    // A weighted configuration is a finite map cell -> exact weight; its
    // value is the weight/binomial dot product.
    WeightedConfig row;
    for (long long k = 0; k <= 6; ++k) row.add({6, k}, Weight(Int(k)));
    std::cout << "row 6 with weight k: value = " << row.value().str() << "\n";

    // The weight rule lifts a whole row one level up without changing the
    // value.
    WeightedConfig lifted = lift_row(row, 6);
    std::cout << "after lift_row(6):  value = " << lifted.value().str() << ", row 5 =";
    for (const auto& w : lifted.row_weights(5)) std::cout << " " << w.str();
    std::cout << "\n";

    // Every catalog theorem has a script generator; check_script replays it
    // and compares against both sides of the identity.
    ProofScript script = generate_script("hockey_stick", {{"m", 2}, {"n", 5}});
    CheckReport report = check_script(script);
    std::cout << "hockey_stick m=2 n=5: " << report.message << ", value " << report.value.str()
              << ", " << script.steps.size() << " steps\n";

    // Brute-force verification over a parameter range.
    SweepReport sweep_report =
        sweep(make_sweep_spec(builtin_identity("lagrange"), {"n=0..12"}));
    std::cout << "lagrange sweep n=0..12: " << sweep_report.passed << " passed, "
              << sweep_report.failed << " failed\n";
    return 0;
}
