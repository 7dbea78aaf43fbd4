#pragma once

// The theorem catalog and the per-theorem proof-script generators. Each
// generator emits a rewrite-step sequence between a configuration encoding
// one side of the identity and a configuration encoding the other, mirroring
// the figure-by-figure chases.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal_chase/chase.hpp"
#include "pascal_chase/lang.hpp"

namespace pascal_chase {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string id;
    std::string identity;  // canonical DSL text
    std::string figure_ref;  // diagram slug of the entry's demo instance ("" = none)
    bool has_script = true;
    std::vector<std::string> params;            // derived from the identity
    std::vector<std::string> constraints;       // formatted constraint texts
};

namespace catalog_detail {

struct RawEntry {
    const char* id;
    const char* identity;
    const char* figure_ref;
    bool has_script;
};

// The catalog, in its fixed presentation order (row and column sums first,
// then weighted rows, then weighted columns, then the Fibonacci entries).
// The often-printed lower bound k=1 of the squared-row-sum identity is off
// by one; the catalog carries the corrected k=0 form and the k=1 form stays
// reachable as "lagrange_as_printed" for demonstration.
inline const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> entries = {
        {"row_sum", "sum(k=0..n, C(n,k)) == 2^n for n", "row_sum_n6", true},
        {"half_row_even", "sum(k=0..n, C(n,2*k)) == 2^(n-1) for n where n >= 1",
         "half_row_even_n6", true},
        {"half_row_odd", "sum(k=0..n, C(n,2*k+1)) == 2^(n-1) for n where n >= 1",
         "half_row_odd_n6", true},
        {"hockey_stick", "sum(k=m..n, C(k,m)) == C(n+1,m+1) for n, m where m <= n",
         "hockey_stick_m2_n5", true},
        {"weighted_row", "sum(k=0..n, k*C(n,k)) == n*2^(n-1) for n where n >= 1",
         "weighted_row_n6", true},
        {"weighted_half_even", "sum(k=0..n, k*C(n,2*k)) == n*2^(n-3) for n where n >= 3",
         "weighted_half_even_n7", true},
        {"weighted_half_odd", "sum(k=0..n, k*C(n,2*k+1)) == (n-2)*2^(n-3) for n where n >= 3",
         "weighted_half_odd_n6", true},
        {"lagrange", "sum(k=0..n, C(n,k)^2) == C(2*n,n) for n", "lagrange_n4", true},
        {"chu_vandermonde",
         "sum(k=0..l, C(n,k)*C(m,l-k)) == C(m+n,l) for l, m, n where l <= m, l <= n",
         "chu_vandermonde_l2_m3_n4", true},
        {"alternating", "sum(k=0..n, (-1)^k*C(n,k)) == 0 for n where n >= 1", "alternating_n5",
         true},
        {"alternating_k", "sum(k=0..n, (-1)^k*k*C(n,k)) == 0 for n where n >= 2",
         "alternating_k_n5", true},
        {"alt_binom", "sum(k=m..n, (-1)^k*C(n,k)*C(k,m)) == 0 for n, m where m < n",
         "alt_binom_n8_m3", true},
        {"binomial_theorem", "sum(k=0..n, C(n,k)*a^(n-k)*b^k) == (a+b)^n for n indet a, b",
         "binomial_theorem_n5", true},
        {"hockey_variant",
         "sum(k=m..n, k*C(k,m)) == n*C(n+1,m+1)-C(n+1,m+2) for n, m where m < n",
         "hockey_variant_m1_n5", true},
        {"hockey_gen",
         "sum(k=0..n, C(k,l)*C(k,m)) == "
         "sum(k=0..l, (-1)^k*C(n+1,m+k+1)*C(n-k,l-k)) for l, m, n where l <= n, m <= n",
         "hockey_gen_l3_m3_n8", true},
        {"upside_down_cv",
         "sum(k=m..n-l, C(k,m)*C(n-k,l)) == C(n+1,l+m+1) for l, m, n where l+m <= n",
         "upside_down_cv_l3_m1_n7", true},
        {"boscarol",
         "sum(k=m..n, C(k,m)*2^(n-k))+sum(k=n-m..n, C(k,n-m)*2^(n-k)) == 2^(n+1) "
         "for n, m where m <= n",
         "boscarol_m3_n7", true},
        {"hor", "sum(k=n..2*n, (-1)^k*C(k,n)*C(n,k-n)) == 1 for n", "hor_n4", true},
        {"hor_row_form", "sum(k=0..n, (-1)^k*C(n,k)*C(2*n-k,n)) == 1 for n", "hor_row_form_n4",
         true},
        {"knuth",
         "sum(k=p..p+n, (-1)^(p+n-k)*C(k,m)*C(n,k-p)) == C(p,m-n) for m, n, p", "knuth_m3_n2_p4",
         true},
        {"fib_row", "sum(k=0..n, C(n,k)*fib(k)) == fib(2*n) for n", "", false},
        {"fib_quarterly",
         "sum(k=0..n, C(m,k)*(-1)^(n+k)*fib(m-2*k)) == "
         "sum(k=n..m-1, C(k,n)*fib(k-2*n-1)) for n, m where n < m",
         "", false},
    };
    return entries;
}

inline const RawEntry* find_raw(const std::string& id) {
    for (const auto& e : raw_entries())
        if (id == e.id) return &e;
    return nullptr;
}

constexpr const char* kLagrangeAsPrinted = "sum(k=1..n, C(n,k)^2) == C(2*n,n) for n";

}  // namespace catalog_detail

inline std::vector<CatalogEntry> catalog_list() {
    std::vector<CatalogEntry> out;
    for (const auto& raw : catalog_detail::raw_entries()) {
        CatalogEntry e;
        e.id = raw.id;
        e.identity = raw.identity;
        e.figure_ref = raw.figure_ref;
        e.has_script = raw.has_script;
        IdentityAst ast = parse_identity(raw.identity);
        e.params = ast.params;
        for (const auto& c : ast.constraints) e.constraints.push_back(format_cond(c));
        out.push_back(std::move(e));
    }
    return out;
}

// Catalog identities plus the demonstrably-false printed variant
// "lagrange_as_printed" (lower bound k=1), kept out of catalog_list.
inline IdentityAst builtin_identity(const std::string& id) {
    if (id == "lagrange_as_printed")
        return parse_identity(catalog_detail::kLagrangeAsPrinted);
    const auto* raw = catalog_detail::find_raw(id);
    if (!raw) throw CatalogError("unknown theorem id '" + id + "'");
    return parse_identity(raw->identity);
}

inline bool is_builtin_id(const std::string& id) {
    return id == "lagrange_as_printed" || catalog_detail::find_raw(id) != nullptr;
}

//
// Script generators
//

namespace script_detail {

// Replays steps as they are recorded so generators can read the current
// configuration while emitting.
class StepWriter {
  public:
    explicit StepWriter(WeightedConfig initial)
        : initial_(std::move(initial)), config_(initial_) {}

    void push(RuleStep s) {
        config_ = apply_step(config_, s);
        steps_.push_back(std::move(s));
    }

    void lift_row(long long n) {
        for (auto& s : lift_row_steps(config_, n)) push(std::move(s));
    }

    void lift_row_excluding(long long n, const std::set<long long>& frozen_cols) {
        for (auto& s : lift_row_steps(config_, n))
            if (!frozen_cols.count(s.k)) push(std::move(s));
    }

    void lift_rounds_to_apex(long long top_row) {
        for (long long r = top_row; r >= 1; --r) lift_row(r);
    }

    const WeightedConfig& config() const { return config_; }
    const WeightedConfig& initial() const { return initial_; }
    std::vector<RuleStep> take_steps() { return std::move(steps_); }

  private:
    WeightedConfig initial_;
    WeightedConfig config_;
    std::vector<RuleStep> steps_;
};

inline Int alt(long long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

// A step is dropped from a script when every cell it touches is phantom;
// such a step moves weight between cells whose binomial value is zero.
inline bool touches_real_cell(const RuleStep& s) {
    switch (s.rule) {
        case Rule::Lift:
            return !Coord{s.n, s.k}.phantom() || !Coord{s.n - 1, s.k - 1}.phantom() ||
                   !Coord{s.n - 1, s.k}.phantom();
        case Rule::Drop:
            return !Coord{s.n, s.k}.phantom() || !Coord{s.n, s.k + 1}.phantom() ||
                   !Coord{s.n + 1, s.k + 1}.phantom();
        case Rule::ShiftRight:
            return !Coord{s.n, s.k}.phantom() || !Coord{s.n, s.k + 1}.phantom() ||
                   !Coord{s.n + 1, s.k + 1}.phantom();
        case Rule::SwapSym: return true;
    }
    return true;
}

// Row-sum style proofs: a single weighted row funneled to the apex.
inline StepWriter row_to_apex(WeightedConfig initial, long long n) {
    StepWriter w(std::move(initial));
    for (long long r = n; r >= 1; --r) w.lift_row(r);
    return w;
}

inline WeightedConfig single_cell(long long n, long long k, Weight w) {
    WeightedConfig c;
    c.add({n, k}, std::move(w));
    return c;
}

//
// Per-theorem builders: initial configuration + step list.
//

inline StepWriter build_row_sum(long long n) {
    WeightedConfig c;
    for (long long k = 0; k <= n; ++k) c.add({n, k}, Weight(1));
    return row_to_apex(std::move(c), n);
}

inline StepWriter build_half_row(long long n, long long parity) {
    WeightedConfig c;
    for (long long k = parity; k <= n; k += 2) c.add({n, k}, Weight(1));
    return row_to_apex(std::move(c), n);
}

inline StepWriter build_hockey_stick(long long m, long long n) {
    WeightedConfig c;
    for (long long r = m; r <= n; ++r) c.add({r, m}, Weight(1));
    StepWriter w(std::move(c));
    // The accumulator travels down column m+1; the first drop's removal at
    // (m,m+1) hits a phantom, which is the C(m,m) = C(m+1,m+1) edge move.
    for (long long r = m; r <= n; ++r) w.push(RuleStep::drop(r, m, Weight(1)));
    return w;
}

inline StepWriter build_weighted_row(long long n) {
    WeightedConfig c;
    for (long long k = 1; k <= n; ++k) c.add({n, k}, Weight(Int(k)));
    StepWriter w(std::move(c));
    w.lift_row(n);
    // Symmetry swaps on the lifted row before funneling to the apex.
    long long r = n - 1;
    for (long long k = 1; 2 * k < r; ++k) w.push(RuleStep::swap_sym(r, k));
    w.lift_rounds_to_apex(r);
    return w;
}

inline StepWriter build_weighted_half(long long n, long long parity) {
    WeightedConfig c;
    for (long long j = 1; 2 * j + parity <= n; ++j)
        c.add({n, 2 * j + parity}, Weight(Int(j)));
    return row_to_apex(std::move(c), n);
}

inline StepWriter build_lagrange(long long n) {
    StepWriter w(single_cell(2 * n, n, Weight(1)));
    for (long long r = 2 * n; r >= n + 1; --r) w.lift_row(r);
    return w;
}

inline StepWriter build_chu_vandermonde(long long l, long long m, long long n) {
    StepWriter w(single_cell(m + n, l, Weight(1)));
    for (long long r = m + n; r >= m + 1; --r) w.lift_row(r);
    return w;
}

inline StepWriter build_alternating(long long n) {
    WeightedConfig c;
    for (long long k = 0; k <= n; ++k) c.add({n, k}, Weight(alt(k)));
    StepWriter w(std::move(c));
    w.lift_row(n);
    return w;
}

inline StepWriter build_alternating_k(long long n) {
    WeightedConfig c;
    for (long long k = 1; k <= n; ++k) c.add({n, k}, Weight(alt(k) * k));
    StepWriter w(std::move(c));
    w.lift_row(n);
    w.lift_row(n - 1);
    return w;
}

inline StepWriter build_alt_binom(long long n, long long m) {
    WeightedConfig c;
    for (long long k = m; k <= n; ++k) c.add({n, k}, Weight(alt(k - m) * binom(k, m)));
    StepWriter w(std::move(c));
    for (long long r = n; r >= n - m; --r) w.lift_row(r);
    return w;
}

inline StepWriter build_binomial_theorem(long long n) {
    Weight a = Weight::variable("a"), b = Weight::variable("b");
    WeightedConfig c;
    for (long long k = 0; k <= n; ++k) c.add({n, k}, a.pow(n - k) * b.pow(k));
    return row_to_apex(std::move(c), n);
}

// Shared column chase: initial column m carries weights C(k,l); shift/drop
// moves push everything into the l+1 alternating cells of row n+1. Emitted
// in the upward (lift) direction: seeded from the row-(n+1) cells, ending in
// the weighted column.
inline StepWriter build_column_balance(long long l, long long m, long long n) {
    WeightedConfig rhs;
    for (long long j = 0; j <= l; ++j)
        rhs.add({n + 1, m + 1 + j}, Weight(alt(j) * binom(n - j, l - j)));

    std::vector<RuleStep> down;
    for (long long r = std::max(l, m); r <= n; ++r) {
        down.push_back(RuleStep::shift_right(r, m, Weight(binom(r, l))));
        for (long long j = 1; j <= l; ++j) {
            RuleStep s = RuleStep::drop(r, m + j, Weight(alt(j) * binom(r - j, l - j)));
            if (touches_real_cell(s)) down.push_back(std::move(s));
        }
    }

    StepWriter w(std::move(rhs));
    for (auto it = down.rbegin(); it != down.rend(); ++it)
        w.push(RuleStep::lift(it->n + 1, it->k + 1, it->w));
    return w;
}

inline StepWriter build_upside_down_cv(long long l, long long m, long long n) {
    StepWriter w(single_cell(n + 1, l + m + 1, Weight(1)));
    // Full lift rounds, except that column m freezes once the left edge
    // reaches it.
    for (long long r = n + 1; r >= m + 1; --r) w.lift_row_excluding(r, {m});
    return w;
}

inline StepWriter build_boscarol(long long m, long long n) {
    // Upward chase from the all-2 row, freezing column m and the reflected
    // diagonal through (n-m, 0); recorded steps are then inverted so the
    // script runs from the two-column side down to the row.
    WeightedConfig row;
    for (long long k = 0; k <= n; ++k) row.add({n, k}, Weight(2));

    StepWriter up(row);
    for (long long r = n; r >= 1; --r) {
        std::set<long long> frozen = {m};
        if (r - (n - m) >= 0) frozen.insert(r - (n - m));
        up.lift_row_excluding(r, frozen);
    }

    std::vector<RuleStep> lifts = up.take_steps();
    StepWriter w(up.config());
    for (auto it = lifts.rbegin(); it != lifts.rend(); ++it)
        w.push(RuleStep::drop(it->n - 1, it->k - 1, it->w));
    return w;
}

// Rightward shift chase: column j carries the alternating entries of row j.
inline StepWriter build_shift_chase(long long base_row, long long base_col, long long n) {
    StepWriter w(single_cell(base_row, base_col, Weight(1)));
    for (long long l = 0; l < n; ++l) {
        for (long long i = 0; i <= l; ++i) {
            RuleStep s =
                RuleStep::shift_right(base_row + i, base_col + l, Weight(alt(i + l) * binom(l, i)));
            if (touches_real_cell(s)) w.push(std::move(s));
        }
    }
    return w;
}

inline StepWriter build_hor(long long n) { return build_shift_chase(n, 0, n); }

inline StepWriter build_knuth(long long m, long long n, long long p) {
    return build_shift_chase(p, m - n, n);
}

inline StepWriter build_hor_row_form(long long n) {
    WeightedConfig c;
    for (long long k = 0; k <= n; ++k) c.add({n, k}, Weight(alt(k) * binom(2 * n - k, n)));
    return row_to_apex(std::move(c), n);
}

}  // namespace script_detail

inline ProofScript generate_script(const std::string& id,
                                   const std::map<std::string, long long>& params) {
    const auto* raw = catalog_detail::find_raw(id);
    if (!raw) throw CatalogError("unknown theorem id '" + id + "'");
    if (!raw->has_script) throw CatalogError("no script available — verify via sweep");

    IdentityAst ast = parse_identity(raw->identity);
    Bindings bindings;
    for (const auto& name : ast.params) {
        auto it = params.find(name);
        if (it == params.end()) throw CatalogError("missing parameter '" + name + "'");
        if (it->second < 0)
            throw CatalogError("parameter '" + name + "' must be nonnegative");
        bindings[name] = Int(it->second);
    }
    for (const auto& [name, value] : params)
        if (!bindings.count(name)) throw CatalogError("unknown parameter '" + name + "'");
    for (const auto& c : ast.constraints)
        if (!cond_holds(c, bindings)) throw CatalogError("requires " + format_cond(c));

    auto get = [&](const char* name) { return params.at(name); };
    std::optional<script_detail::StepWriter> built;
    if (id == "row_sum") built = script_detail::build_row_sum(get("n"));
    else if (id == "half_row_even") built = script_detail::build_half_row(get("n"), 0);
    else if (id == "half_row_odd") built = script_detail::build_half_row(get("n"), 1);
    else if (id == "hockey_stick") built = script_detail::build_hockey_stick(get("m"), get("n"));
    else if (id == "weighted_row") built = script_detail::build_weighted_row(get("n"));
    else if (id == "weighted_half_even") built = script_detail::build_weighted_half(get("n"), 0);
    else if (id == "weighted_half_odd") built = script_detail::build_weighted_half(get("n"), 1);
    else if (id == "lagrange") built = script_detail::build_lagrange(get("n"));
    else if (id == "chu_vandermonde")
        built = script_detail::build_chu_vandermonde(get("l"), get("m"), get("n"));
    else if (id == "alternating") built = script_detail::build_alternating(get("n"));
    else if (id == "alternating_k") built = script_detail::build_alternating_k(get("n"));
    else if (id == "alt_binom") built = script_detail::build_alt_binom(get("n"), get("m"));
    else if (id == "binomial_theorem") built = script_detail::build_binomial_theorem(get("n"));
    else if (id == "hockey_variant")
        built = script_detail::build_column_balance(1, get("m"), get("n"));
    else if (id == "hockey_gen")
        built = script_detail::build_column_balance(get("l"), get("m"), get("n"));
    else if (id == "upside_down_cv")
        built = script_detail::build_upside_down_cv(get("l"), get("m"), get("n"));
    else if (id == "boscarol") built = script_detail::build_boscarol(get("m"), get("n"));
    else if (id == "hor") built = script_detail::build_hor(get("n"));
    else if (id == "hor_row_form") built = script_detail::build_hor_row_form(get("n"));
    else if (id == "knuth") built = script_detail::build_knuth(get("m"), get("n"), get("p"));
    else throw CatalogError("no generator wired for '" + id + "'");

    ProofScript script;
    script.theorem_id = id;
    script.params = params;
    script.initial = built->initial();
    script.expected_final = built->config();
    script.steps = built->take_steps();
    script.lhs_text = format_expression(ast.lhs);
    script.rhs_text = format_expression(ast.rhs);
    script.indeterminates = ast.indeterminates;
    return script;
}

}  // namespace pascal_chase
