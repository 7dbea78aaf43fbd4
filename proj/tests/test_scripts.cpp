#include <catch2/catch_amalgamated.hpp>

#include "pascal_chase/scripts.hpp"

using namespace pascal_chase;

namespace {

std::vector<Int> row_ints(const WeightedConfig& c, long long n) {
    std::vector<Int> out;
    for (const auto& w : c.row_weights(n)) out.push_back(w.is_zero() ? Int(0) : w.as_integer());
    return out;
}

// Configs after each whole-row lift round, assuming the script is made of
// row-by-row lifts (as the row proofs are).
std::vector<WeightedConfig> round_snapshots(const ProofScript& script) {
    std::vector<WeightedConfig> out{script.initial};
    WeightedConfig c = script.initial;
    long long current_row = -1;
    for (const auto& s : script.steps) {
        if (s.rule == Rule::Lift && s.n != current_row && current_row != -1) out.push_back(c);
        current_row = s.n;
        c = apply_step(c, s);
    }
    out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("catalog shape") {
    auto entries = catalog_list();
    CHECK(entries.size() == 22);
    CHECK(entries.front().id == "row_sum");
    CHECK(entries.back().id == "fib_quarterly");

    bool found_boscarol = false;
    for (const auto& e : entries) {
        if (e.id == "boscarol") {
            found_boscarol = true;
            REQUIRE(e.constraints.size() == 1);
            CHECK(e.constraints[0] == "m <= n");
        }
        if (e.has_script) CHECK_FALSE(e.figure_ref.empty());
        // every identity text is canonical and parseable
        CHECK(format_identity(parse_identity(e.identity)) == e.identity);
    }
    CHECK(found_boscarol);

    // ids are unique
    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());
}

TEST_CASE("builtin_identity") {
    CHECK_THROWS_AS(builtin_identity("nope"), CatalogError);
    IdentityAst corrected = builtin_identity("lagrange");
    IdentityAst printed = builtin_identity("lagrange_as_printed");
    CHECK_FALSE(identity_equal(corrected, printed));
    CHECK(check_instance(corrected, {{"n", Int(2)}}) == InstanceOutcome::Pass);
    CHECK(check_instance(printed, {{"n", Int(2)}}) == InstanceOutcome::Fail);
}

TEST_CASE("row_sum script n=2") {
    ProofScript s = generate_script("row_sum", {{"n", 2}});
    CHECK(row_ints(s.initial, 2) == std::vector<Int>{1, 1, 1});
    CHECK(s.steps.size() == 5);  // three lifts from row 2, two from row 1
    CHECK(s.expected_final.cells().size() == 1);
    CHECK(s.expected_final.at({0, 0}) == Weight(4));
    CHECK(check_script(s).valid);
}

TEST_CASE("lagrange script builds the inverted triangle") {
    ProofScript s = generate_script("lagrange", {{"n", 4}});
    auto rounds = round_snapshots(s);
    REQUIRE(rounds.size() == 5);
    CHECK(row_ints(rounds[0], 8) == std::vector<Int>{0, 0, 0, 0, 1, 0, 0, 0, 0});
    CHECK(row_ints(rounds[1], 7) == std::vector<Int>{0, 0, 0, 1, 1, 0, 0, 0});
    CHECK(row_ints(rounds[2], 6) == std::vector<Int>{0, 0, 1, 2, 1, 0, 0});
    CHECK(row_ints(rounds[3], 5) == std::vector<Int>{0, 1, 3, 3, 1, 0});
    CHECK(row_ints(rounds[4], 4) == std::vector<Int>{1, 4, 6, 4, 1});
    for (const auto& c : rounds) CHECK(c.value() == Weight(70));
    CHECK(check_script(s).valid);
}

TEST_CASE("boscarol script m=3 n=7") {
    ProofScript s = generate_script("boscarol", {{"m", 3}, {"n", 7}});
    CHECK(s.initial.at({3, 3}) == Weight(16));
    CHECK(s.initial.at({4, 0}) == Weight(8));
    CHECK(s.initial.at({7, 3}) == Weight(2));
    CHECK(row_ints(s.expected_final, 7) == std::vector<Int>{2, 2, 2, 2, 2, 2, 2, 2});
    CheckReport report = check_script(s);
    CHECK(report.valid);
    CHECK(report.value == Weight(256));

    // the merged 16 shows up at (4,4) mid-chase
    bool saw_16_at_44 = false;
    WeightedConfig c = s.initial;
    for (const auto& step : s.steps) {
        c = apply_step(c, step);
        if (c.at({4, 4}) == Weight(16)) saw_16_at_44 = true;
    }
    CHECK(saw_16_at_44);
}

TEST_CASE("alt_binom script walks the rotated triangle down to alternating ones") {
    ProofScript s = generate_script("alt_binom", {{"n", 8}, {"m", 3}});
    auto rounds = round_snapshots(s);
    REQUIRE(rounds.size() == 5);  // initial, three intermediate rows, empty final
    auto tail = [](const std::vector<Int>& v, std::size_t from) {
        return std::vector<Int>(v.begin() + from, v.end());
    };
    CHECK(tail(row_ints(rounds[0], 8), 3) == std::vector<Int>{1, -4, 10, -20, 35, -56});
    CHECK(tail(row_ints(rounds[1], 7), 2) == std::vector<Int>{1, -3, 6, -10, 15, -21});
    CHECK(tail(row_ints(rounds[2], 6), 1) == std::vector<Int>{1, -2, 3, -4, 5, -6});
    CHECK(row_ints(rounds[3], 5) == std::vector<Int>{1, -1, 1, -1, 1, -1});
    CHECK(rounds[4].empty());
    for (const auto& c : rounds) CHECK(c.value().is_zero());
    CHECK(check_script(s).valid);
}

TEST_CASE("weighted_row script lifts then swaps") {
    ProofScript s = generate_script("weighted_row", {{"n", 6}});
    // after the first lift round, row 5 reads 1,3,5,7,9,11
    WeightedConfig c = s.initial;
    std::size_t i = 0;
    for (; i < s.steps.size() && s.steps[i].rule == Rule::Lift && s.steps[i].n == 6; ++i)
        c = apply_step(c, s.steps[i]);
    CHECK(row_ints(c, 5) == std::vector<Int>{1, 3, 5, 7, 9, 11});
    // two symmetry swaps follow
    REQUIRE(i + 1 < s.steps.size());
    CHECK(s.steps[i] == RuleStep::swap_sym(5, 1));
    CHECK(s.steps[i + 1] == RuleStep::swap_sym(5, 2));
    c = apply_step(c, s.steps[i]);
    c = apply_step(c, s.steps[i + 1]);
    CHECK(row_ints(c, 5) == std::vector<Int>{1, 9, 7, 5, 3, 11});
    CheckReport report = check_script(s);
    CHECK(report.valid);
    CHECK(report.value == Weight(192));
    CHECK(s.expected_final.at({0, 0}) == Weight(192));
}

TEST_CASE("hockey_gen balances the designated columns exactly") {
    ProofScript s = generate_script("hockey_gen", {{"l", 3}, {"m", 3}, {"n", 8}});
    // initial: the l+1 alternating cells of row n+1 in columns m+1..m+l+1
    CHECK(s.initial.cells().size() == 4);
    CHECK(s.initial.at({9, 4}) == Weight(56));
    CHECK(s.initial.at({9, 5}) == Weight(-21));
    CHECK(s.initial.at({9, 6}) == Weight(6));
    CHECK(s.initial.at({9, 7}) == Weight(-1));
    // final: everything sits in column m
    for (const auto& [coord, w] : s.expected_final.cells()) CHECK(coord.k == 3);
    for (long long k = 3; k <= 8; ++k)
        CHECK(s.expected_final.at({k, 3}) == Weight(binom(k, 3)));
    CHECK(check_script(s).valid);
}

TEST_CASE("generate_script validates inputs") {
    CHECK_THROWS_AS(generate_script("nope", {}), CatalogError);
    CHECK_THROWS_WITH(generate_script("fib_row", {{"n", 3}}),
                      "no script available — verify via sweep");
    CHECK_THROWS_WITH(generate_script("hockey_stick", {{"m", 4}, {"n", 2}}), "requires m <= n");
    CHECK_THROWS_WITH(generate_script("alt_binom", {{"n", 3}, {"m", 3}}), "requires m < n");
    CHECK_THROWS_AS(generate_script("row_sum", {}), CatalogError);
    CHECK_THROWS_AS(generate_script("row_sum", {{"n", -1}}), CatalogError);
    CHECK_THROWS_AS(generate_script("row_sum", {{"n", 3}, {"zz", 1}}), CatalogError);
}

TEST_CASE("every generator is valid across small parameters") {
    auto run = [](const std::string& id, std::map<std::string, long long> params) {
        ProofScript s = generate_script(id, params);
        CheckReport r = check_script(s);
        INFO(id << " " << [&] {
            std::string out;
            for (auto& [k, v] : params) out += k + "=" + std::to_string(v) + " ";
            return out;
        }());
        CHECK(r.valid);
    };
    const long long top = 8;
    for (long long n = 0; n <= top; ++n) {
        run("row_sum", {{"n", n}});
        run("lagrange", {{"n", n}});
        run("hor", {{"n", n}});
        run("hor_row_form", {{"n", n}});
        run("binomial_theorem", {{"n", n}});
        if (n >= 1) {
            run("half_row_even", {{"n", n}});
            run("half_row_odd", {{"n", n}});
            run("weighted_row", {{"n", n}});
            run("alternating", {{"n", n}});
        }
        if (n >= 2) run("alternating_k", {{"n", n}});
        if (n >= 3) {
            run("weighted_half_even", {{"n", n}});
            run("weighted_half_odd", {{"n", n}});
        }
        for (long long m = 0; m <= top; ++m) {
            if (m <= n) {
                run("hockey_stick", {{"m", m}, {"n", n}});
                run("boscarol", {{"m", m}, {"n", n}});
            }
            if (m < n) {
                run("alt_binom", {{"n", n}, {"m", m}});
                run("hockey_variant", {{"m", m}, {"n", n}});
            }
            for (long long l = 0; l <= top; ++l) {
                if (l <= m && l <= n) run("chu_vandermonde", {{"l", l}, {"m", m}, {"n", n}});
                if (l <= n && m <= n) run("hockey_gen", {{"l", l}, {"m", m}, {"n", n}});
                if (l + m <= n) run("upside_down_cv", {{"l", l}, {"m", m}, {"n", n}});
            }
        }
    }
    for (long long m = 0; m <= 5; ++m)
        for (long long n = 0; n <= 5; ++n)
            for (long long p = 0; p <= 5; ++p) run("knuth", {{"m", m}, {"n", n}, {"p", p}});
}

TEST_CASE("script values match both identity sides") {
    for (const auto& entry : catalog_list()) {
        if (!entry.has_script) continue;
        std::map<std::string, long long> params;
        for (const auto& name : entry.params) params[name] = 4;
        if (entry.id == "alt_binom" || entry.id == "hockey_variant") params["n"] = 6;
        if (entry.id == "upside_down_cv") params["n"] = 9;
        ProofScript s = generate_script(entry.id, params);
        CheckReport r = check_script(s);
        REQUIRE(r.valid);
        IdentityAst ast = builtin_identity(entry.id);
        Bindings bindings;
        for (const auto& [name, v] : params) bindings[name] = Int(v);
        std::set<std::string> indets(ast.indeterminates.begin(), ast.indeterminates.end());
        CHECK(eval_expr(ast.lhs, bindings, indets) == r.value);
        CHECK(eval_expr(ast.rhs, bindings, indets) == r.value);
        CHECK(s.initial.value() == r.value);
        CHECK(s.expected_final.value() == r.value);
    }
}
