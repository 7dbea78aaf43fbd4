#include <catch2/catch_amalgamated.hpp>

#include "pascal_chase/harness.hpp"

using namespace pascal_chase;

TEST_CASE("sweep row_sum") {
    SweepReport r = sweep(make_sweep_spec(builtin_identity("row_sum"), {"n=0..30"}));
    CHECK(r.total == 31);
    CHECK(r.passed == 31);
    CHECK(r.failed == 0);
    CHECK(r.skipped == 0);
    CHECK_FALSE(r.incomplete);
}

TEST_CASE("sweep with dependent ranges") {
    SweepReport r = sweep(
        make_sweep_spec(builtin_identity("upside_down_cv"), {"n=0..20", "m=0..n", "l=0..n-m"}));
    // all tuples satisfy l+m <= n by construction of the ranges
    CHECK(r.skipped == 0);
    CHECK(r.failed == 0);
    long long expected = 0;
    for (long long n = 0; n <= 20; ++n) expected += (n + 1) * (n + 2) / 2;
    CHECK(r.passed == expected);
}

TEST_CASE("sweep demonstrates the printed lower-bound erratum") {
    SweepReport printed =
        sweep(make_sweep_spec(builtin_identity("lagrange_as_printed"), {"n=1..10"}));
    CHECK(printed.failed == 10);
    CHECK(printed.passed == 0);
    REQUIRE(printed.failures.size() == 10);
    for (const auto& f : printed.failures) {
        // each LHS falls short of the RHS by exactly 1
        Int lhs(f.lhs), rhs(f.rhs);
        CHECK(lhs == rhs - 1);
    }
    SweepReport corrected = sweep(make_sweep_spec(builtin_identity("lagrange"), {"n=1..10"}));
    CHECK(corrected.passed == 10);
    CHECK(corrected.failed == 0);
}

TEST_CASE("sweep spec validation") {
    CHECK_THROWS_AS(make_sweep_spec(builtin_identity("hockey_stick"), {"m=0..n", "n=0..20"}),
                    HarnessError);
    CHECK_THROWS_AS(make_sweep_spec(builtin_identity("row_sum"), {}), HarnessError);
    CHECK_THROWS_AS(make_sweep_spec(builtin_identity("row_sum"), {"n=0..5", "n=0..5"}),
                    HarnessError);
    CHECK_THROWS_AS(make_sweep_spec(builtin_identity("row_sum"), {"n=0..5", "m=0..5"}),
                    HarnessError);
    CHECK_THROWS_AS(parse_range("n==0..5"), HarnessError);
    CHECK_THROWS_AS(parse_range("n=0"), HarnessError);
}

TEST_CASE("sweep budget produces a flagged partial report") {
    SweepLimits limits;
    limits.max_instances = 5;
    SweepReport r = sweep(make_sweep_spec(builtin_identity("row_sum"), {"n=0..30"}, limits));
    CHECK(r.incomplete);
    CHECK(r.total == 5);
}

TEST_CASE("sweep determinism") {
    auto spec = make_sweep_spec(builtin_identity("lagrange_as_printed"), {"n=1..8"});
    SweepReport a = sweep(spec);
    SweepReport b = sweep(spec);
    CHECK(a.content_equal(b));
}

TEST_CASE("oracle_sum examples") {
    CHECK(oracle_sum("lagrange", {{"n", 4}}) == Weight(70));
    CHECK(oracle_sum("boscarol", {{"m", 3}, {"n", 7}}) == Weight(256));
    CHECK(oracle_sum("alternating", {{"n", 5}}).is_zero());
    CHECK(oracle_sum("hor", {{"n", 4}}) == Weight(1));
    CHECK_THROWS_AS(oracle_sum("nope", {}), CatalogError);
}

TEST_CASE("oracle agrees with DSL evaluation on spot checks") {
    for (const auto& entry : catalog_list()) {
        IdentityAst ast = parse_identity(entry.identity);
        std::set<std::string> indets(ast.indeterminates.begin(), ast.indeterminates.end());
        const std::size_t arity = ast.params.size();
        long long checked = 0;
        std::vector<long long> tuple(arity, 0);
        for (long long flat = 0; flat < 343 && checked < 12; ++flat) {
            long long rest = flat;
            for (std::size_t i = 0; i < arity; ++i) {
                tuple[i] = rest % 7;
                rest /= 7;
            }
            if (rest > 0) break;
            std::map<std::string, long long> params;
            Bindings bindings;
            for (std::size_t i = 0; i < arity; ++i) {
                params[ast.params[i]] = tuple[i];
                bindings[ast.params[i]] = Int(tuple[i]);
            }
            bool ok = true;
            for (const auto& c : ast.constraints) ok = ok && cond_holds(c, bindings);
            if (!ok) continue;
            ++checked;
            INFO(entry.id << " at instance " << flat);
            CHECK(eval_expr(ast.lhs, bindings, indets) == oracle_sum(entry.id, params));
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("independent fibonacci handles both sign extensions") {
    CHECK(iterative_fib(10) == 55);
    CHECK(iterative_fib(-3) == 2);
    CHECK(iterative_fib(-4) == -3);
    CHECK(iterative_fib(-3, true) == -2);
    CHECK(iterative_fib(-4, true) == 3);
}

TEST_CASE("fibonacci convention report is deterministic and total") {
    auto a = fib_quarterly_convention_report(12);
    auto b = fib_quarterly_convention_report(12);
    REQUIRE(a.size() == 2);
    CHECK(a[0].total == 78);  // pairs 0 <= n < m <= 12
    CHECK(a[0].passed + a[0].failed == a[0].total);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].convention == b[i].convention);
        CHECK(a[i].passed == b[i].passed);
        CHECK(a[i].failed == b[i].failed);
    }
}

TEST_CASE("certificate round trip") {
    ProofScript script = generate_script("lagrange", {{"n", 4}});
    CheckReport report = check_script(script);
    Certificate cert = make_certificate(script, report);
    CHECK(cert.checked);
    std::string bytes = serialize(cert);
    Certificate back = deserialize(bytes);
    CHECK(serialize(back) == bytes);
    CHECK(back.theorem_id == cert.theorem_id);
    CHECK(back.params == cert.params);
    CHECK(back.initial == cert.initial);
    CHECK(back.final_config == cert.final_config);
    CHECK(back.value == cert.value);
    CHECK(check_certificate(back).valid);
}

TEST_CASE("hand-reordered certificate steps are caught on replay") {
    // Reordering around a symmetry swap changes what the swap exchanges.
    ProofScript script = generate_script("weighted_row", {{"n", 6}});
    Certificate cert = make_certificate(script, check_script(script));
    REQUIRE(cert.steps[1] == RuleStep::lift(6, 2, Weight(2)));
    REQUIRE(cert.steps[6] == RuleStep::swap_sym(5, 1));
    std::rotate(cert.steps.begin() + 1, cert.steps.begin() + 2, cert.steps.begin() + 7);
    CheckReport report = check_certificate(cert);
    CHECK_FALSE(report.valid);
    CHECK(report.message.find("final config mismatch") != std::string::npos);
}

TEST_CASE("certificate schema violations name the JSON path") {
    ProofScript script = generate_script("row_sum", {{"n", 2}});
    Certificate cert = make_certificate(script, check_script(script));
    std::string bytes = serialize(cert);

    auto expect_error = [](std::string text, const std::string& needle) {
        try {
            deserialize(text);
            FAIL("expected certificate error for " << needle);
        } catch (const CertificateError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("{]", "invalid JSON");
    expect_error("[]", "expected object");
    {
        auto broken = bytes;
        auto pos = broken.find("\"schema_version\": \"1\"");
        broken.replace(pos, std::string("\"schema_version\": \"1\"").size(),
                       "\"schema_version\": \"9\"");
        expect_error(broken, "/schema_version");
    }
    {
        auto broken = bytes;
        auto pos = broken.find("\"rule\": \"lift\"");
        broken.replace(pos, std::string("\"rule\": \"lift\"").size(), "\"rule\": \"warp\"");
        expect_error(broken, "/steps/0/rule");
    }
    {
        auto broken = bytes;
        auto pos = broken.find("\"value\"");
        broken.replace(pos, std::string("\"value\"").size(), "\"velue\"");
        expect_error(broken, "/value");
    }
}

TEST_CASE("large values survive the round trip as decimal text") {
    ProofScript script = generate_script("row_sum", {{"n", 64}});
    CheckReport report = check_script(script);
    REQUIRE(report.valid);
    Certificate cert = make_certificate(script, report);
    Certificate back = deserialize(serialize(cert));
    CHECK(back.value == Weight(Int(1) << 64));
    CHECK(back.value.str() == (Int(1) << 64).str());
}

TEST_CASE("TOML sweep specs") {
    std::string text =
        "# squared row sums\n"
        "id = \"lagrange\"\n"
        "range = [\"n=0..12\"]\n"
        "max_instances = 100\n";
    SweepFileSpec spec = parse_sweep_toml(text);
    REQUIRE(spec.id.has_value());
    CHECK(*spec.id == "lagrange");
    REQUIRE(spec.ranges.size() == 1);
    CHECK(spec.ranges[0] == "n=0..12");
    REQUIRE(spec.limits.max_instances.has_value());
    CHECK(*spec.limits.max_instances == 100);

    SweepReport r = sweep(make_sweep_spec(builtin_identity(*spec.id), spec.ranges, spec.limits));
    CHECK(r.passed == 13);

    CHECK_THROWS_AS(parse_sweep_toml("range = [\"n=0..5\"]\n"), HarnessError);
    CHECK_THROWS_AS(parse_sweep_toml("id = \"a\"\nidentity = \"b\"\n"), HarnessError);
    CHECK_THROWS_AS(parse_sweep_toml("mystery = 4\n"), HarnessError);

    std::string inline_identity =
        "identity = \"sum(k=0..n, C(n,k)) == 2^n for n\"\n"
        "range = \"n=0..5\"\n";
    SweepFileSpec spec2 = parse_sweep_toml(inline_identity);
    REQUIRE(spec2.identity.has_value());
    SweepReport r2 = sweep(make_sweep_spec(parse_identity(*spec2.identity), spec2.ranges));
    CHECK(r2.passed == 6);
}
