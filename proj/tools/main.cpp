// pascal-chase: verify binomial identities exactly, generate and check
// arrow-chasing proof certificates, and render configuration diagrams.
//
// Exit codes: 0 all pass / valid, 1 verification failure, 2 usage or IO error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pascal_chase/pascal_chase.hpp"

namespace pc = pascal_chase;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

void apply_row_cap_env() {
    if (const char* cap = std::getenv("PASCAL_CHASE_MAX_ROW")) {
        try {
            pc::set_max_row(std::stoll(cap));
        } catch (const std::exception& e) {
            throw pc::HarnessError(std::string("bad PASCAL_CHASE_MAX_ROW: ") + e.what());
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pc::HarnessError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& params) {
    std::map<std::string, long long> out;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw pc::HarnessError("bad --param '" + p + "': expected name=value");
        std::string name = p.substr(0, eq);
        out[name] = std::stoll(p.substr(eq + 1));
    }
    return out;
}

json report_to_json(const std::string& name, const pc::SweepReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        json bindings = json::object();
        for (const auto& [k, v] : f.bindings) bindings[k] = v;
        failures.push_back({{"bindings", bindings}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return json{{"identity", name},    {"total", r.total},   {"passed", r.passed},
                {"failed", r.failed},  {"skipped", r.skipped}, {"incomplete", r.incomplete},
                {"wall_ms", r.wall_ms}, {"failures", failures}};
}

void print_report_human(const std::string& name, const pc::SweepReport& r) {
    std::cout << name << ": " << r.passed << " passed, " << r.failed << " failed, " << r.skipped
              << " skipped";
    if (r.incomplete) std::cout << " (incomplete: budget exceeded)";
    std::cout << " [" << static_cast<long long>(r.wall_ms) << " ms]\n";
    for (const auto& f : r.failures) {
        std::cout << "  FAIL at";
        for (const auto& [k, v] : f.bindings) std::cout << " " << k << "=" << v;
        std::cout << ": lhs " << f.lhs << " != rhs " << f.rhs << "\n";
    }
}

struct VerifyTarget {
    std::string name;
    pc::IdentityAst ast;
    bool is_fib_quarterly = false;
};

int run_verify(const std::string& id, const std::string& file, const std::string& spec_path,
               std::vector<std::string> ranges, std::optional<long long> max_instances,
               std::optional<long long> time_budget_ms, bool as_json) {
    pc::SweepLimits limits{max_instances, time_budget_ms};
    std::vector<VerifyTarget> targets;

    if (!spec_path.empty()) {
        pc::SweepFileSpec file_spec = pc::parse_sweep_toml(read_file(spec_path));
        if (file_spec.id) {
            targets.push_back({*file_spec.id, pc::builtin_identity(*file_spec.id),
                               *file_spec.id == "fib_quarterly"});
        } else {
            targets.push_back({"identity", pc::parse_identity(*file_spec.identity), false});
        }
        if (ranges.empty()) ranges = file_spec.ranges;
        if (!limits.max_instances) limits.max_instances = file_spec.limits.max_instances;
        if (!limits.time_budget_ms) limits.time_budget_ms = file_spec.limits.time_budget_ms;
    } else if (!id.empty()) {
        targets.push_back({id, pc::builtin_identity(id), id == "fib_quarterly"});
    } else if (!file.empty()) {
        std::istringstream in(read_file(file));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string trimmed = line;
            auto hash = trimmed.find('#');
            if (hash != std::string::npos) trimmed = trimmed.substr(0, hash);
            if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                targets.push_back(
                    {file + ":" + std::to_string(lineno), pc::parse_identity(trimmed), false});
            } catch (const pc::SyntaxError& e) {
                throw pc::HarnessError(file + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (targets.empty()) throw pc::HarnessError(file + ": no identities found");
    } else {
        throw pc::HarnessError("verify needs one of --id, --file or --spec");
    }

    bool any_failed = false;
    json out = json::array();
    for (auto& target : targets) {
        for (const auto& w : target.ast.warnings) std::cerr << "warning: " << w << "\n";
        pc::SweepSpec spec = pc::make_sweep_spec(target.ast, ranges, limits);
        pc::SweepReport report = pc::sweep(spec);
        any_failed = any_failed || report.failed > 0;
        if (as_json) {
            json entry = report_to_json(target.name, report);
            if (target.is_fib_quarterly) {
                json convs = json::array();
                for (const auto& tally : pc::fib_quarterly_convention_report(25))
                    convs.push_back({{"convention", tally.convention},
                                     {"passed", tally.passed},
                                     {"failed", tally.failed},
                                     {"total", tally.total}});
                entry["fibonacci_conventions"] = convs;
            }
            out.push_back(std::move(entry));
        } else {
            print_report_human(target.name, report);
            if (target.is_fib_quarterly) {
                for (const auto& tally : pc::fib_quarterly_convention_report(25))
                    std::cout << "  convention " << tally.convention << ": " << tally.passed
                              << "/" << tally.total << " instances pass\n";
            }
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return any_failed ? kExitVerificationFailed : kExitOk;
}

int run_prove(const std::string& id, const std::vector<std::string>& params,
              const std::string& out_path, bool as_json) {
    pc::ProofScript script = pc::generate_script(id, parse_params(params));
    pc::CheckReport report = pc::check_script(script);
    pc::Certificate cert = pc::make_certificate(script, report);
    if (!report.valid) {
        std::cerr << report.message << "\n";
        return kExitVerificationFailed;
    }
    pc::write_certificate_file(cert, out_path);
    if (as_json) {
        std::cout << json{{"theorem_id", id},
                          {"out", out_path},
                          {"steps", script.steps.size()},
                          {"value", report.value.str()},
                          {"valid", true}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "VALID, value " << report.value.str() << "; wrote " << out_path << " ("
                  << script.steps.size() << " steps)\n";
    }
    return kExitOk;
}

int run_check(const std::string& cert_path, bool as_json) {
    pc::Certificate cert = pc::read_certificate_file(cert_path);
    pc::CheckReport report = pc::check_certificate(cert);
    if (as_json) {
        json out{{"theorem_id", cert.theorem_id},
                 {"valid", report.valid},
                 {"steps", cert.steps.size()},
                 {"message", report.message}};
        if (report.valid) out["value"] = report.value.str();
        if (report.failing_step) out["failing_step"] = *report.failing_step;
        std::cout << out.dump(2) << "\n";
    } else if (report.valid) {
        std::cout << "VALID, value " << report.value.str() << "\n";
    } else {
        std::cout << report.message << "\n";
    }
    return report.valid ? kExitOk : kExitVerificationFailed;
}

int run_render(const std::string& cert_path, const std::string& format,
               const std::string& out_dir, double cell_size, const std::string& label_mode) {
    pc::Certificate cert = pc::read_certificate_file(cert_path);
    pc::ProofScript script = pc::to_script(cert);
    pc::RenderOptions options;
    options.cell_size = cell_size;
    if (label_mode == "weights") options.labels = pc::LabelMode::Weights;
    else if (label_mode == "values") options.labels = pc::LabelMode::Values;
    else if (label_mode == "both") options.labels = pc::LabelMode::Both;
    else throw pc::HarnessError("bad --labels '" + label_mode + "'");

    std::filesystem::create_directories(out_dir);
    auto panel_path = [&](std::size_t i, const char* ext) {
        char name[32];
        std::snprintf(name, sizeof name, "panel_%03zu.%s", i, ext);
        return std::filesystem::path(out_dir) / name;
    };

    if (format == "svg") {
        std::vector<std::string> panels = pc::render_script_svg(script, options);
        for (std::size_t i = 0; i < panels.size(); ++i) {
            std::ofstream out(panel_path(i, "svg"), std::ios::binary);
            out << panels[i];
        }
        std::cout << "wrote " << panels.size() << " SVG panels to " << out_dir << "\n";
    } else if (format == "tikz") {
        pc::CheckReport report = pc::check_script(script);
        if (!report.valid) throw pc::ChaseError("cannot render invalid script: " + report.message);
        pc::WeightedConfig config = script.initial;
        std::size_t count = 0;
        {
            std::ofstream out(panel_path(count, "tex"), std::ios::binary);
            out << pc::render_tikz(config, options);
        }
        for (const auto& step : script.steps) {
            config = pc::apply_step(config, step);
            ++count;
            std::ofstream out(panel_path(count, "tex"), std::ios::binary);
            out << pc::render_tikz(config, options);
        }
        std::cout << "wrote " << (count + 1) << " TikZ panels to " << out_dir << "\n";
    } else {
        throw pc::HarnessError("bad --format '" + format + "' (svg or tikz)");
    }
    return kExitOk;
}

int run_oracle(const std::string& id, const std::vector<std::string>& params, bool as_json) {
    auto bindings = parse_params(params);
    pc::IdentityAst ast = pc::builtin_identity(id);
    pc::Bindings dsl_bindings;
    for (const auto& [name, v] : bindings) dsl_bindings[name] = pc::Int(v);
    std::set<std::string> indets(ast.indeterminates.begin(), ast.indeterminates.end());
    pc::Weight dsl = pc::eval_expr(ast.lhs, dsl_bindings, indets);
    pc::Weight oracle = pc::oracle_sum(id, bindings);
    bool agree = dsl == oracle;
    if (as_json) {
        std::cout << json{{"id", id},
                          {"dsl", dsl.str()},
                          {"oracle", oracle.str()},
                          {"agree", agree}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "dsl eval : " << dsl.str() << "\n";
        std::cout << "oracle   : " << oracle.str() << "\n";
        std::cout << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

int run_list(bool as_json) {
    auto entries = pc::catalog_list();
    if (as_json) {
        json out = json::array();
        for (const auto& e : entries) {
            json params = json::array();
            for (const auto& p : e.params) params.push_back(p);
            json constraints = json::array();
            for (const auto& c : e.constraints) constraints.push_back(c);
            out.push_back({{"id", e.id},
                           {"identity", e.identity},
                           {"params", params},
                           {"constraints", constraints},
                           {"figure_ref", e.figure_ref},
                           {"has_script", e.has_script}});
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& e : entries) {
        std::cout << e.id;
        if (!e.has_script) std::cout << " (verify only)";
        std::cout << "\n    " << e.identity << "\n";
        if (!e.constraints.empty()) {
            std::cout << "    constraints:";
            for (const auto& c : e.constraints) std::cout << " " << c;
            std::cout << "\n";
        }
        if (!e.figure_ref.empty()) std::cout << "    diagram: " << e.figure_ref << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and arrow-chasing proof certificates for binomial identities"};
    app.require_subcommand(1);

    bool json_list = false;
    auto* list = app.add_subcommand("list", "Show the theorem catalog");
    list->add_flag("--json", json_list, "machine-readable output");

    std::string verify_id, verify_file, verify_spec;
    std::vector<std::string> verify_ranges;
    std::optional<long long> max_instances, time_budget_ms;
    bool json_verify = false;
    auto* verify = app.add_subcommand("verify", "Brute-force verify identities over ranges");
    verify->add_option("--id", verify_id, "catalog id (e.g. row_sum)");
    verify->add_option("--file", verify_file, "identity file, one identity per line");
    verify->add_option("--spec", verify_spec, "TOML sweep spec");
    verify->add_option("--range", verify_ranges,
                       "parameter range, e.g. \"n=0..30\" or \"m=0..n\" (repeatable)");
    verify->add_option("--max-instances", max_instances, "stop after this many instances");
    verify->add_option("--time-budget-ms", time_budget_ms, "stop after this many milliseconds");
    verify->add_flag("--json", json_verify, "machine-readable output");

    std::string prove_id, prove_out = "cert.json";
    std::vector<std::string> prove_params;
    bool json_prove = false;
    auto* prove = app.add_subcommand("prove", "Generate and check a proof certificate");
    prove->add_option("--id", prove_id, "catalog id")->required();
    prove->add_option("--param", prove_params, "parameter, e.g. n=6 (repeatable)");
    prove->add_option("--out", prove_out, "output certificate path");
    prove->add_flag("--json", json_prove, "machine-readable output");

    std::string check_cert;
    bool json_check = false;
    auto* check = app.add_subcommand("check", "Replay and validate a certificate");
    check->add_option("--cert", check_cert, "certificate path")->required();
    check->add_flag("--json", json_check, "machine-readable output");

    std::string render_cert, render_format = "svg", render_out = "panels", render_labels = "weights";
    double cell_size = 40;
    auto* render = app.add_subcommand("render", "Render a certificate's panels");
    render->add_option("--cert", render_cert, "certificate path")->required();
    render->add_option("--format", render_format, "svg or tikz");
    render->add_option("--out-dir", render_out, "output directory");
    render->add_option("--cell-size", cell_size, "hexagon size in px (default 40)");
    render->add_option("--labels", render_labels, "weights | values | both");

    std::string oracle_id;
    std::vector<std::string> oracle_params;
    bool json_oracle = false;
    auto* oracle = app.add_subcommand("oracle", "Print both evaluation paths for an identity LHS");
    oracle->add_option("--id", oracle_id, "catalog id")->required();
    oracle->add_option("--param", oracle_params, "parameter, e.g. n=4 (repeatable)");
    oracle->add_flag("--json", json_oracle, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        apply_row_cap_env();
        if (list->parsed()) return run_list(json_list);
        if (verify->parsed())
            return run_verify(verify_id, verify_file, verify_spec, verify_ranges, max_instances,
                              time_budget_ms, json_verify);
        if (prove->parsed()) return run_prove(prove_id, prove_params, prove_out, json_prove);
        if (check->parsed()) return run_check(check_cert, json_check);
        if (render->parsed())
            return run_render(render_cert, render_format, render_out, cell_size, render_labels);
        if (oracle->parsed()) return run_oracle(oracle_id, oracle_params, json_oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
