#pragma once

// Parameter sweeps over identities, the independent summation oracle, and
// certificate serialization.
//
// The oracle path shares no code with the library's binomial/Fibonacci
// recurrences: binomials come from memoized factorials, Fibonacci numbers
// from a separate iterative loop. Certificates carry every number as
// canonical decimal/weight text, never as native JSON numbers, since values
// such as 2^200 overflow doubles immediately.

#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal_chase/chase.hpp"
#include "pascal_chase/lang.hpp"
#include "pascal_chase/scripts.hpp"

#include <json.hpp>

namespace pascal_chase {

struct HarnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//
// Independent oracle
//

namespace oracle_detail {

inline Int factorial(long long n) {
    static std::vector<Int> memo{Int(1)};
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    while (static_cast<long long>(memo.size()) <= n)
        memo.push_back(memo.back() * Int(memo.size()));
    return memo[static_cast<std::size_t>(n)];
}

inline Int sign(long long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace oracle_detail

// n! / (k! (n-k)!) with the out-of-range convention.
inline Int factorial_binom(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial upper index must be nonnegative");
    if (k < 0 || k > n) return 0;
    return oracle_detail::factorial(n) /
           (oracle_detail::factorial(k) * oracle_detail::factorial(n - k));
}

// Plain iterative Fibonacci; sign = +1 flips to the alternate extension
// F_{-i} = (-1)^i F_i used when reporting which convention validates.
inline Int iterative_fib(long long i, bool alternate_negative_sign = false) {
    bool flip;
    if (i >= 0) {
        flip = false;
    } else {
        long long j = -i;
        flip = alternate_negative_sign ? (j % 2 != 0) : (j % 2 == 0);
        i = j;
    }
    Int prev = 0, cur = 1;
    for (long long step = 0; step < i; ++step) {
        Int next = prev + cur;
        prev = cur;
        cur = next;
    }
    return flip ? Int(-prev) : prev;
}

// The left-hand side of each builtin identity by naive summation.
inline Weight oracle_sum(const std::string& id, const std::map<std::string, long long>& bindings) {
    auto fb = factorial_binom;
    auto p = [&](const char* name) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw HarnessError("missing parameter '" + std::string(name) + "'");
        return it->second;
    };
    auto pow2 = [](long long e) { return Int(1) << e; };

    Int acc = 0;
    if (id == "row_sum") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k) acc += fb(n, k);
    } else if (id == "half_row_even") {
        long long n = p("n");
        for (long long k = 0; 2 * k <= n; ++k) acc += fb(n, 2 * k);
    } else if (id == "half_row_odd") {
        long long n = p("n");
        for (long long k = 0; 2 * k + 1 <= n; ++k) acc += fb(n, 2 * k + 1);
    } else if (id == "hockey_stick") {
        long long m = p("m"), n = p("n");
        for (long long k = m; k <= n; ++k) acc += fb(k, m);
    } else if (id == "weighted_row") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k) acc += Int(k) * fb(n, k);
    } else if (id == "weighted_half_even") {
        long long n = p("n");
        for (long long k = 0; 2 * k <= n; ++k) acc += Int(k) * fb(n, 2 * k);
    } else if (id == "weighted_half_odd") {
        long long n = p("n");
        for (long long k = 0; 2 * k + 1 <= n; ++k) acc += Int(k) * fb(n, 2 * k + 1);
    } else if (id == "lagrange" || id == "lagrange_as_printed") {
        long long n = p("n");
        for (long long k = (id == "lagrange" ? 0 : 1); k <= n; ++k) acc += fb(n, k) * fb(n, k);
    } else if (id == "chu_vandermonde") {
        long long l = p("l"), m = p("m"), n = p("n");
        for (long long k = 0; k <= l; ++k) acc += fb(n, k) * fb(m, l - k);
    } else if (id == "alternating") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k) acc += oracle_detail::sign(k) * fb(n, k);
    } else if (id == "alternating_k") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k) acc += oracle_detail::sign(k) * Int(k) * fb(n, k);
    } else if (id == "alt_binom") {
        long long m = p("m"), n = p("n");
        for (long long k = m; k <= n; ++k) acc += oracle_detail::sign(k) * fb(n, k) * fb(k, m);
    } else if (id == "binomial_theorem") {
        long long n = p("n");
        Weight a = Weight::variable("a"), b = Weight::variable("b");
        Weight out;
        for (long long k = 0; k <= n; ++k)
            out += Weight(fb(n, k)) * a.pow(n - k) * b.pow(k);
        return out;
    } else if (id == "hockey_variant") {
        long long m = p("m"), n = p("n");
        for (long long k = m; k <= n; ++k) acc += Int(k) * fb(k, m);
    } else if (id == "hockey_gen") {
        long long l = p("l"), m = p("m"), n = p("n");
        for (long long k = 0; k <= n; ++k) acc += fb(k, l) * fb(k, m);
    } else if (id == "upside_down_cv") {
        long long l = p("l"), m = p("m"), n = p("n");
        for (long long k = m; k <= n - l; ++k) acc += fb(k, m) * fb(n - k, l);
    } else if (id == "boscarol") {
        long long m = p("m"), n = p("n");
        for (long long k = m; k <= n; ++k) acc += fb(k, m) * pow2(n - k);
        for (long long k = n - m; k <= n; ++k) acc += fb(k, n - m) * pow2(n - k);
    } else if (id == "hor") {
        long long n = p("n");
        for (long long k = n; k <= 2 * n; ++k)
            acc += oracle_detail::sign(k) * fb(k, n) * fb(n, k - n);
    } else if (id == "hor_row_form") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k)
            acc += oracle_detail::sign(k) * fb(n, k) * fb(2 * n - k, n);
    } else if (id == "knuth") {
        long long m = p("m"), n = p("n"), pp = p("p");
        for (long long k = pp; k <= pp + n; ++k)
            acc += oracle_detail::sign(pp + n - k) * fb(k, m) * fb(n, k - pp);
    } else if (id == "fib_row") {
        long long n = p("n");
        for (long long k = 0; k <= n; ++k) acc += fb(n, k) * iterative_fib(k);
    } else if (id == "fib_quarterly") {
        long long m = p("m"), n = p("n");
        for (long long k = 0; k <= n; ++k)
            acc += fb(m, k) * oracle_detail::sign(n + k) * iterative_fib(m - 2 * k);
    } else {
        throw CatalogError("unknown theorem id '" + id + "'");
    }
    return Weight(acc);
}

//
// Sweeps
//

struct RangeDecl {
    std::string param;
    ExprPtr lo, hi;
    std::string text;  // as given, e.g. "m=0..n"
};

struct SweepLimits {
    std::optional<long long> max_instances;
    std::optional<long long> time_budget_ms;
};

struct SweepSpec {
    IdentityAst identity;
    std::vector<RangeDecl> ranges;
    SweepLimits limits;
};

struct SweepFailure {
    std::map<std::string, std::string> bindings;  // param -> decimal text
    std::string lhs, rhs;                         // value texts
};

struct SweepReport {
    long long total = 0, passed = 0, failed = 0, skipped = 0;
    std::vector<SweepFailure> failures;
    bool incomplete = false;
    double wall_ms = 0;

    bool content_equal(const SweepReport& o) const {
        if (total != o.total || passed != o.passed || failed != o.failed ||
            skipped != o.skipped || incomplete != o.incomplete)
            return false;
        if (failures.size() != o.failures.size()) return false;
        for (std::size_t i = 0; i < failures.size(); ++i)
            if (failures[i].bindings != o.failures[i].bindings ||
                failures[i].lhs != o.failures[i].lhs || failures[i].rhs != o.failures[i].rhs)
                return false;
        return true;
    }
};

inline void collect_free_vars(const ExprPtr& e, std::set<std::string>& bound,
                              std::set<std::string>& out) {
    if (!e) return;
    if (e->kind == Expr::Kind::Var) {
        if (!bound.count(e->name)) out.insert(e->name);
        return;
    }
    if (e->kind == Expr::Kind::Sum) {
        collect_free_vars(e->a, bound, out);
        collect_free_vars(e->b, bound, out);
        bool inserted = bound.insert(e->name).second;
        collect_free_vars(e->c, bound, out);
        if (inserted) bound.erase(e->name);
        return;
    }
    collect_free_vars(e->a, bound, out);
    collect_free_vars(e->b, bound, out);
    collect_free_vars(e->c, bound, out);
}

// "n=0..25" or "m=0..n" (bounds may reference earlier params only).
inline RangeDecl parse_range(const std::string& text) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos || (eq + 1 < text.size() && text[eq + 1] == '='))
        throw HarnessError("malformed range '" + text + "': expected name=lo..hi");
    std::string name = text.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw HarnessError("malformed range '" + text + "': missing parameter name");
    std::string rest = text.substr(eq + 1);
    std::size_t dots = rest.find("..");
    if (dots == std::string::npos)
        throw HarnessError("malformed range '" + text + "': expected '..'");
    RangeDecl decl;
    decl.param = name;
    decl.text = text;
    try {
        decl.lo = parse_expression(rest.substr(0, dots));
        decl.hi = parse_expression(rest.substr(dots + 2));
    } catch (const SyntaxError& e) {
        throw HarnessError("malformed range '" + text + "': " + e.what());
    }
    return decl;
}

// Ranges must cover the identity's parameters exactly, and a bound may
// reference only parameters declared to its left.
inline SweepSpec make_sweep_spec(IdentityAst identity, const std::vector<std::string>& ranges,
                                 SweepLimits limits = {}) {
    SweepSpec spec;
    spec.identity = std::move(identity);
    spec.limits = limits;
    std::set<std::string> declared;
    for (const auto& text : ranges) {
        RangeDecl decl = parse_range(text);
        std::set<std::string> bound, free;
        collect_free_vars(decl.lo, bound, free);
        collect_free_vars(decl.hi, bound, free);
        for (const auto& v : free)
            if (!declared.count(v))
                throw HarnessError("range '" + text + "' references '" + v +
                                   "' before it is declared");
        if (declared.count(decl.param))
            throw HarnessError("duplicate range for parameter '" + decl.param + "'");
        declared.insert(decl.param);
        spec.ranges.push_back(std::move(decl));
    }
    for (const auto& p : spec.identity.params)
        if (!declared.count(p)) throw HarnessError("no range given for parameter '" + p + "'");
    for (const auto& r : spec.ranges)
        if (std::find(spec.identity.params.begin(), spec.identity.params.end(), r.param) ==
            spec.identity.params.end())
            throw HarnessError("range for '" + r.param + "' does not match any parameter");
    return spec;
}

inline SweepReport sweep(const SweepSpec& spec) {
    auto start = std::chrono::steady_clock::now();
    SweepReport report;
    std::set<std::string> indets(spec.identity.indeterminates.begin(),
                                 spec.identity.indeterminates.end());
    Bindings bindings;

    auto out_of_budget = [&] {
        if (spec.limits.max_instances && report.total >= *spec.limits.max_instances) return true;
        if (spec.limits.time_budget_ms) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (ms >= *spec.limits.time_budget_ms) return true;
        }
        return false;
    };

    // Odometer walk in declaration order; the rightmost range moves fastest.
    auto walk = [&](auto&& self, std::size_t depth) -> void {
        if (report.incomplete) return;
        if (depth == spec.ranges.size()) {
            if (out_of_budget()) {
                report.incomplete = true;
                return;
            }
            ++report.total;
            switch (check_instance(spec.identity, bindings)) {
                case InstanceOutcome::Pass: ++report.passed; break;
                case InstanceOutcome::Skipped: ++report.skipped; break;
                case InstanceOutcome::Fail: {
                    ++report.failed;
                    SweepFailure f;
                    for (const auto& [name, v] : bindings) f.bindings[name] = v.str();
                    f.lhs = eval_expr(spec.identity.lhs, bindings, indets).str();
                    f.rhs = eval_expr(spec.identity.rhs, bindings, indets).str();
                    report.failures.push_back(std::move(f));
                    break;
                }
            }
            return;
        }
        const RangeDecl& r = spec.ranges[depth];
        Int lo = eval_int_expr(r.lo, bindings);
        Int hi = eval_int_expr(r.hi, bindings);
        for (Int v = lo; v <= hi && !report.incomplete; ++v) {
            bindings[r.param] = v;
            self(self, depth + 1);
        }
        bindings.erase(r.param);
    };
    walk(walk, 0);

    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    return report;
}

// Evaluates the Fibonacci column identity under both negative-index sign
// extensions and tallies each, so the validating convention is reported
// rather than assumed.
struct FibConventionTally {
    std::string convention;
    long long passed = 0, failed = 0, total = 0;
};

inline std::vector<FibConventionTally> fib_quarterly_convention_report(long long max_m) {
    std::vector<FibConventionTally> out;
    for (bool alternate : {false, true}) {
        FibConventionTally tally;
        tally.convention = alternate ? "F(-i) = (-1)^i * F(i)" : "F(-i) = (-1)^(i+1) * F(i)";
        for (long long m = 1; m <= max_m; ++m) {
            for (long long n = 0; n < m; ++n) {
                Int lhs = 0, rhs = 0;
                for (long long k = 0; k <= n; ++k)
                    lhs += factorial_binom(m, k) * oracle_detail::sign(n + k) *
                           iterative_fib(m - 2 * k, alternate);
                for (long long k = n; k <= m - 1; ++k)
                    rhs += factorial_binom(k, n) * iterative_fib(k - 2 * n - 1, alternate);
                ++tally.total;
                if (lhs == rhs) ++tally.passed;
                else ++tally.failed;
            }
        }
        out.push_back(std::move(tally));
    }
    return out;
}

//
// Certificates
//

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Certificate {
    std::string schema_version = "1";
    std::string theorem_id;
    std::map<std::string, long long> params;
    std::string identity;  // canonical DSL text
    WeightedConfig initial;
    std::vector<RuleStep> steps;
    WeightedConfig final_config;
    Weight value;
    bool checked = false;
};

inline Certificate make_certificate(const ProofScript& script, const CheckReport& report) {
    Certificate cert;
    cert.theorem_id = script.theorem_id;
    cert.params = script.params;
    IdentityAst ast = builtin_identity(script.theorem_id);
    cert.identity = format_identity(ast);
    cert.initial = script.initial;
    cert.steps = script.steps;
    cert.final_config = script.expected_final;
    cert.value = report.step_values.empty() ? script.initial.value() : report.step_values.front();
    cert.checked = report.valid;
    return cert;
}

inline ProofScript to_script(const Certificate& cert) {
    ProofScript script;
    script.theorem_id = cert.theorem_id;
    script.params = cert.params;
    script.initial = cert.initial;
    script.steps = cert.steps;
    script.expected_final = cert.final_config;
    IdentityAst ast = parse_identity(cert.identity);
    script.lhs_text = format_expression(ast.lhs);
    script.rhs_text = format_expression(ast.rhs);
    script.indeterminates = ast.indeterminates;
    return script;
}

// check_script plus agreement with the certificate's stored value text.
inline CheckReport check_certificate(const Certificate& cert) {
    CheckReport report = check_script(to_script(cert));
    if (report.valid && !(report.value == cert.value)) {
        report.valid = false;
        report.message = "INVALID: stored value " + cert.value.str() +
                         " != replayed value " + report.value.str();
    }
    return report;
}

namespace cert_detail {

using nlohmann::json;

inline json cells_to_json(const WeightedConfig& config) {
    json out = json::array();
    for (const auto& [coord, w] : config.cells())
        out.push_back(json::array({coord.n, coord.k, w.str()}));
    return out;
}

[[noreturn]] inline void bad(const std::string& path, const std::string& what) {
    throw CertificateError(path + ": " + what);
}

inline const json& field(const json& j, const std::string& path, const char* name) {
    if (!j.contains(name)) bad(path + "/" + name, "missing field");
    return j.at(name);
}

inline std::string str_field(const json& j, const std::string& path, const char* name) {
    const json& v = field(j, path, name);
    if (!v.is_string()) bad(path + "/" + name, "expected string");
    return v.get<std::string>();
}

inline long long int_field(const json& j, const std::string& path, const char* name) {
    const json& v = field(j, path, name);
    if (!v.is_number_integer()) bad(path + "/" + name, "expected integer");
    return v.get<long long>();
}

inline WeightedConfig cells_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected array of [n, k, weight] cells");
    WeightedConfig out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& cell = j[i];
        std::string at = path + "/" + std::to_string(i);
        if (!cell.is_array() || cell.size() != 3) bad(at, "expected [n, k, weight]");
        if (!cell[0].is_number_integer() || !cell[1].is_number_integer())
            bad(at, "coordinates must be integers");
        if (!cell[2].is_string()) bad(at, "weight must be canonical text");
        Coord c{cell[0].get<long long>(), cell[1].get<long long>()};
        if (c.n < 0) bad(at, "row must be nonnegative");
        if (c.phantom()) bad(at, "phantom coordinate " + c.str());
        try {
            out.add(c, Weight::parse(cell[2].get<std::string>()));
        } catch (const WeightParseError& e) {
            bad(at + "/2", e.what());
        }
    }
    return out;
}

}  // namespace cert_detail

inline std::string serialize(const Certificate& cert) {
    using cert_detail::json;
    json j;
    j["schema_version"] = cert.schema_version;
    j["theorem_id"] = cert.theorem_id;
    json params = json::object();
    for (const auto& [name, v] : cert.params) params[name] = v;
    j["params"] = params;
    j["identity"] = cert.identity;
    j["initial"] = cert_detail::cells_to_json(cert.initial);
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json step;
        step["rule"] = rule_name(s.rule);
        step["n"] = s.n;
        step["k"] = s.k;
        if (s.rule != Rule::SwapSym) step["w"] = s.w.str();
        steps.push_back(std::move(step));
    }
    j["steps"] = steps;
    j["final"] = cert_detail::cells_to_json(cert.final_config);
    j["value"] = cert.value.str();
    j["checked"] = cert.checked;
    return j.dump(2) + "\n";
}

inline Certificate deserialize(const std::string& bytes) {
    using cert_detail::json;
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw CertificateError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) cert_detail::bad("", "expected object");
    Certificate cert;
    cert.schema_version = cert_detail::str_field(j, "", "schema_version");
    if (cert.schema_version != "1")
        cert_detail::bad("/schema_version", "unknown schema_version '" + cert.schema_version + "'");
    cert.theorem_id = cert_detail::str_field(j, "", "theorem_id");
    const json& params = cert_detail::field(j, "", "params");
    if (!params.is_object()) cert_detail::bad("/params", "expected object");
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (!it.value().is_number_integer())
            cert_detail::bad("/params/" + it.key(), "expected integer");
        cert.params[it.key()] = it.value().get<long long>();
    }
    cert.identity = cert_detail::str_field(j, "", "identity");
    try {
        parse_identity(cert.identity);
    } catch (const SyntaxError& e) {
        cert_detail::bad("/identity", e.what());
    }
    cert.initial = cert_detail::cells_from_json(cert_detail::field(j, "", "initial"), "/initial");
    const json& steps = cert_detail::field(j, "", "steps");
    if (!steps.is_array()) cert_detail::bad("/steps", "expected array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string at = "/steps/" + std::to_string(i);
        const json& sj = steps[i];
        if (!sj.is_object()) cert_detail::bad(at, "expected object");
        RuleStep step;
        std::string rule = cert_detail::str_field(sj, at, "rule");
        auto parsed = rule_from_name(rule);
        if (!parsed) cert_detail::bad(at + "/rule", "unknown rule '" + rule + "'");
        step.rule = *parsed;
        step.n = cert_detail::int_field(sj, at, "n");
        step.k = cert_detail::int_field(sj, at, "k");
        if (step.rule != Rule::SwapSym) {
            try {
                step.w = Weight::parse(cert_detail::str_field(sj, at, "w"));
            } catch (const WeightParseError& e) {
                cert_detail::bad(at + "/w", e.what());
            }
        }
        cert.steps.push_back(std::move(step));
    }
    cert.final_config = cert_detail::cells_from_json(cert_detail::field(j, "", "final"), "/final");
    try {
        cert.value = Weight::parse(cert_detail::str_field(j, "", "value"));
    } catch (const WeightParseError& e) {
        cert_detail::bad("/value", e.what());
    }
    const auto& checked = cert_detail::field(j, "", "checked");
    if (!checked.is_boolean()) cert_detail::bad("/checked", "expected boolean");
    cert.checked = checked.get<bool>();
    return cert;
}

inline void write_certificate_file(const Certificate& cert, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw HarnessError("cannot open '" + path + "' for writing");
    out << serialize(cert);
}

inline Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw HarnessError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

//
// TOML sweep specs (small subset: key = "string" | integer | ["a", "b"])
//

struct SweepFileSpec {
    std::optional<std::string> id;
    std::optional<std::string> identity;
    std::vector<std::string> ranges;
    SweepLimits limits;
};

namespace toml_detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::string parse_string(const std::string& v, int line) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw HarnessError("sweep spec line " + std::to_string(line) + ": expected \"string\"");
    return v.substr(1, v.size() - 2);
}

}  // namespace toml_detail

inline SweepFileSpec parse_sweep_toml(const std::string& text) {
    SweepFileSpec spec;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        // strip comments outside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line = line.substr(0, i);
                break;
            }
        }
        line = toml_detail::trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw HarnessError("sweep spec line " + std::to_string(lineno) + ": expected key = value");
        std::string key = toml_detail::trim(line.substr(0, eq));
        std::string value = toml_detail::trim(line.substr(eq + 1));
        if (key == "id") {
            spec.id = toml_detail::parse_string(value, lineno);
        } else if (key == "identity") {
            spec.identity = toml_detail::parse_string(value, lineno);
        } else if (key == "range") {
            if (!value.empty() && value.front() == '[') {
                if (value.back() != ']')
                    throw HarnessError("sweep spec line " + std::to_string(lineno) +
                                       ": unterminated array");
                std::string inner = value.substr(1, value.size() - 2);
                std::string item;
                bool q = false;
                for (char c : inner) {
                    if (c == '"') q = !q;
                    if (c == ',' && !q) {
                        spec.ranges.push_back(
                            toml_detail::parse_string(toml_detail::trim(item), lineno));
                        item.clear();
                    } else {
                        item += c;
                    }
                }
                if (!toml_detail::trim(item).empty())
                    spec.ranges.push_back(
                        toml_detail::parse_string(toml_detail::trim(item), lineno));
            } else {
                spec.ranges.push_back(toml_detail::parse_string(value, lineno));
            }
        } else if (key == "max_instances") {
            spec.limits.max_instances = std::stoll(value);
        } else if (key == "time_budget_ms") {
            spec.limits.time_budget_ms = std::stoll(value);
        } else {
            throw HarnessError("sweep spec line " + std::to_string(lineno) + ": unknown key '" +
                               key + "'");
        }
    }
    if (spec.id && spec.identity)
        throw HarnessError("sweep spec: give either 'id' or 'identity', not both");
    if (!spec.id && !spec.identity) throw HarnessError("sweep spec: missing 'id' or 'identity'");
    return spec;
}

}  // namespace pascal_chase
