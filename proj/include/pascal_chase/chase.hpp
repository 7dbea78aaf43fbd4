#pragma once

// Weighted configurations on the triangle and the four value-preserving
// rewrite rules, plus the proof-script checker. The value of a configuration
// is the exact dot product of weights and binomials; every rule changes it
// by zero:
//
//   lift        w moves from (n,k) up to (n-1,k-1) and (n-1,k)
//   drop        w moves from (n,k) and (n,k+1) down to (n+1,k+1)
//   shift_right w moves from (n,k) to (n+1,k+1), with -w left at (n,k+1)
//   swap_sym    the weights at (n,k) and (n,n-k) trade places
//
// Cells with k < 0 or k > n are phantom: their binomial is 0, so they are
// removed on the spot. Rule weights are caller-chosen; moving part of a
// cell's weight (or more than it holds) is legal.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal_chase/exact.hpp"
#include "pascal_chase/lang.hpp"
#include "pascal_chase/triangle.hpp"

namespace pascal_chase {

struct ChaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Coord {
    long long n = 0;
    long long k = 0;
    auto operator<=>(const Coord&) const = default;
    bool phantom() const { return k < 0 || k > n; }
    std::string str() const { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
};

class WeightedConfig {
  public:
    using CellMap = std::map<Coord, Weight>;

    WeightedConfig() = default;

    const CellMap& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    Weight at(Coord c) const {
        auto it = cells_.find(c);
        return it == cells_.end() ? Weight() : it->second;
    }

    // Canonicalizing accumulate: phantom coords and zero results vanish.
    void add(Coord c, const Weight& w) {
        if (c.phantom() || w.is_zero()) return;
        auto it = cells_.find(c);
        if (it == cells_.end()) {
            cells_.emplace(c, w);
        } else {
            it->second += w;
            if (it->second.is_zero()) cells_.erase(it);
        }
    }

    void set(Coord c, const Weight& w) {
        if (c.phantom()) return;
        if (w.is_zero())
            cells_.erase(c);
        else
            cells_[c] = w;
    }

    Weight value() const {
        Weight total;
        for (const auto& [c, w] : cells_) total += w * Weight(binom(c.n, c.k));
        return total;
    }

    // Weights of one row as a dense vector [w_0, ..., w_n].
    std::vector<Weight> row_weights(long long n) const {
        std::vector<Weight> out(static_cast<std::size_t>(n) + 1);
        for (auto it = cells_.lower_bound({n, 0}); it != cells_.end() && it->first.n == n; ++it)
            out[static_cast<std::size_t>(it->first.k)] = it->second;
        return out;
    }

    bool operator==(const WeightedConfig& o) const { return cells_ == o.cells_; }

  private:
    CellMap cells_;
};

inline Weight eval_config(const WeightedConfig& c) { return c.value(); }

enum class Rule { Lift, Drop, ShiftRight, SwapSym };

inline std::string rule_name(Rule r) {
    switch (r) {
        case Rule::Lift: return "lift";
        case Rule::Drop: return "drop";
        case Rule::ShiftRight: return "shift_right";
        case Rule::SwapSym: return "swap_sym";
    }
    return "?";
}

inline std::optional<Rule> rule_from_name(const std::string& s) {
    if (s == "lift") return Rule::Lift;
    if (s == "drop") return Rule::Drop;
    if (s == "shift_right") return Rule::ShiftRight;
    if (s == "swap_sym") return Rule::SwapSym;
    return std::nullopt;
}

struct RuleStep {
    Rule rule = Rule::Lift;
    long long n = 0;
    long long k = 0;
    Weight w;  // unused for swap_sym

    static RuleStep lift(long long n, long long k, Weight w) {
        return {Rule::Lift, n, k, std::move(w)};
    }
    static RuleStep drop(long long n, long long k, Weight w) {
        return {Rule::Drop, n, k, std::move(w)};
    }
    static RuleStep shift_right(long long n, long long k, Weight w) {
        return {Rule::ShiftRight, n, k, std::move(w)};
    }
    static RuleStep swap_sym(long long n, long long k) { return {Rule::SwapSym, n, k, Weight()}; }

    std::string str() const {
        std::string out = rule_name(rule) + Coord{n, k}.str();
        if (rule != Rule::SwapSym) out += " w=" + w.str();
        return out;
    }

    bool operator==(const RuleStep& o) const {
        return rule == o.rule && n == o.n && k == o.k && w == o.w;
    }
};

inline WeightedConfig apply_step(const WeightedConfig& c, const RuleStep& s) {
    WeightedConfig out = c;
    switch (s.rule) {
        case Rule::Lift:
            if (s.n < 1) throw ChaseError("cannot lift above apex");
            out.add({s.n, s.k}, -s.w);
            out.add({s.n - 1, s.k - 1}, s.w);
            out.add({s.n - 1, s.k}, s.w);
            break;
        case Rule::Drop:
            if (s.n < 0) throw ChaseError("drop requires a nonnegative row");
            out.add({s.n, s.k}, -s.w);
            out.add({s.n, s.k + 1}, -s.w);
            out.add({s.n + 1, s.k + 1}, s.w);
            break;
        case Rule::ShiftRight:
            if (s.n < 0) throw ChaseError("shift_right requires a nonnegative row");
            out.add({s.n, s.k}, -s.w);
            out.add({s.n + 1, s.k + 1}, s.w);
            out.add({s.n, s.k + 1}, -s.w);
            break;
        case Rule::SwapSym: {
            Coord a{s.n, s.k}, b{s.n, s.n - s.k};
            if (a.phantom() || b.phantom())
                throw ChaseError("swap_sym on phantom coord " + a.str());
            Weight wa = out.at(a), wb = out.at(b);
            out.set(a, wb);
            out.set(b, wa);
            break;
        }
    }
    return out;
}

// Whole-row weight rule: lift every weighted cell of row n, left to right.
// Row n-1 then carries a_j + a_{j+1} on top of whatever it already held.
inline std::vector<RuleStep> lift_row_steps(const WeightedConfig& c, long long n) {
    if (n < 1) throw ChaseError("cannot lift above apex");
    std::vector<RuleStep> steps;
    for (const auto& [coord, w] : c.cells()) {
        if (coord.n != n) continue;
        steps.push_back(RuleStep::lift(coord.n, coord.k, w));
    }
    return steps;
}

inline WeightedConfig lift_row(const WeightedConfig& c, long long n) {
    WeightedConfig out = c;
    for (const auto& s : lift_row_steps(c, n)) out = apply_step(out, s);
    return out;
}

//
// Proof scripts
//

struct ProofScript {
    std::string theorem_id;
    std::map<std::string, long long> params;
    WeightedConfig initial;
    std::vector<RuleStep> steps;
    WeightedConfig expected_final;
    std::string lhs_text, rhs_text;
    std::vector<std::string> indeterminates;
};

struct CheckReport {
    bool valid = false;
    Weight value;                     // the common value when valid
    std::vector<Weight> step_values;  // value of the initial config, then after every step
    std::optional<std::size_t> failing_step;
    std::string message;
};

// Replays the steps, checking that every intermediate value equals the
// initial one, that the replay ends in expected_final, and that both DSL
// side expressions evaluate to the same value.
inline CheckReport check_script(const ProofScript& s) {
    CheckReport report;
    Weight expected = s.initial.value();
    report.step_values.push_back(expected);
    WeightedConfig config = s.initial;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        try {
            config = apply_step(config, s.steps[i]);
        } catch (const ChaseError& e) {
            report.failing_step = i;
            report.message = "INVALID: step " + std::to_string(i) + " (" + s.steps[i].str() +
                             ") failed to apply: " + e.what();
            return report;
        }
        Weight v = config.value();
        report.step_values.push_back(v);
        if (v != expected) {
            report.failing_step = i;
            report.message = "INVALID: value changed at step " + std::to_string(i) + " (" +
                             s.steps[i].str() + "): " + expected.str() + " != " + v.str();
            return report;
        }
    }
    if (!(config == s.expected_final)) {
        for (const auto& [coord, w] : s.expected_final.cells()) {
            Weight got = config.at(coord);
            if (got != w) {
                report.message = "INVALID: final config mismatch at " + coord.str() + ": replay " +
                                 got.str() + " != expected " + w.str();
                return report;
            }
        }
        for (const auto& [coord, w] : config.cells()) {
            if (s.expected_final.at(coord).is_zero()) {
                report.message = "INVALID: final config mismatch at " + coord.str() + ": replay " +
                                 w.str() + " != expected 0";
                return report;
            }
        }
        report.message = "INVALID: final config mismatch";
        return report;
    }
    Bindings bindings;
    for (const auto& [name, v] : s.params) bindings[name] = Int(v);
    std::set<std::string> indets(s.indeterminates.begin(), s.indeterminates.end());
    try {
        Weight lhs = eval_expr(parse_expression(s.lhs_text), bindings, indets);
        if (lhs != expected) {
            report.message =
                "INVALID: lhs value mismatch: " + lhs.str() + " != " + expected.str();
            return report;
        }
        Weight rhs = eval_expr(parse_expression(s.rhs_text), bindings, indets);
        if (rhs != expected) {
            report.message =
                "INVALID: rhs value mismatch: " + rhs.str() + " != " + expected.str();
            return report;
        }
    } catch (const std::exception& e) {
        report.message = std::string("INVALID: side expression error: ") + e.what();
        return report;
    }
    report.valid = true;
    report.value = expected;
    report.message = "VALID";
    return report;
}

}  // namespace pascal_chase
