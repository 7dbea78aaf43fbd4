#pragma once

// The identity DSL: lexer, recursive-descent parser, AST, canonical
// formatter and exact evaluator.
//
// Grammar:
//   identity := expr "==" expr "for" IDENT ("," IDENT)*
//               ["indet" IDENT ("," IDENT)*] ["where" cond ("," cond)*]
//   cond     := expr ("<"|"<="|"=="|">="|">") expr
//   expr     := term (("+"|"-") term)*
//   term     := unary ("*" unary)*
//   unary    := ["-"] factor
//   factor   := atom ["^" atom]
//   atom     := UINT | IDENT | "(" expr ")" | "C(" expr "," expr ")"
//             | "fib(" expr ")" | "sum(" IDENT "=" expr ".." expr "," expr ")"
//
// There is no implicit multiplication, and `^` does not bind through a bare
// unary minus: `-1^k` is -(1^k); an alternating sign must be written `(-1)^k`.

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascal_chase/exact.hpp"
#include "pascal_chase/triangle.hpp"

namespace pascal_chase {

struct SyntaxError : std::runtime_error {
    SyntaxError(int line, int col, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { IntLit, Var, Neg, Add, Sub, Mul, Pow, Binom, Fib, Sum };

    Kind kind;
    Int value;         // IntLit
    std::string name;  // Var name, Sum bound variable
    ExprPtr a, b, c;   // Neg/Fib: a; Add/Sub/Mul/Pow/Binom: a,b; Sum: a=lo, b=hi, c=body
    int line = 0, col = 0;
};

struct Cond {
    ExprPtr lhs;
    std::string op;  // "<", "<=", "==", ">=", ">"
    ExprPtr rhs;
};

struct IdentityAst {
    ExprPtr lhs, rhs;
    std::vector<std::string> params;
    std::vector<std::string> indeterminates;
    std::vector<Cond> constraints;
    std::vector<std::string> warnings;
};

//
// AST construction helpers
//

namespace ast {

inline ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }
inline ExprPtr lit(Int v) { return make({Expr::Kind::IntLit, std::move(v), {}, {}, {}, {}}); }
inline ExprPtr var(std::string n) { return make({Expr::Kind::Var, 0, std::move(n), {}, {}, {}}); }
inline ExprPtr neg(ExprPtr a) { return make({Expr::Kind::Neg, 0, {}, std::move(a), {}, {}}); }
inline ExprPtr add(ExprPtr a, ExprPtr b) {
    return make({Expr::Kind::Add, 0, {}, std::move(a), std::move(b), {}});
}
inline ExprPtr sub(ExprPtr a, ExprPtr b) {
    return make({Expr::Kind::Sub, 0, {}, std::move(a), std::move(b), {}});
}
inline ExprPtr mul(ExprPtr a, ExprPtr b) {
    return make({Expr::Kind::Mul, 0, {}, std::move(a), std::move(b), {}});
}
inline ExprPtr pow(ExprPtr a, ExprPtr b) {
    return make({Expr::Kind::Pow, 0, {}, std::move(a), std::move(b), {}});
}
inline ExprPtr binom(ExprPtr a, ExprPtr b) {
    return make({Expr::Kind::Binom, 0, {}, std::move(a), std::move(b), {}});
}
inline ExprPtr fib(ExprPtr a) { return make({Expr::Kind::Fib, 0, {}, std::move(a), {}, {}}); }
inline ExprPtr sum(std::string v, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return make({Expr::Kind::Sum, 0, std::move(v), std::move(lo), std::move(hi), std::move(body)});
}

}  // namespace ast

inline bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    if (x->kind != y->kind) return false;
    if (x->value != y->value || x->name != y->name) return false;
    return expr_equal(x->a, y->a) && expr_equal(x->b, y->b) && expr_equal(x->c, y->c);
}

inline bool identity_equal(const IdentityAst& x, const IdentityAst& y) {
    if (!expr_equal(x.lhs, y.lhs) || !expr_equal(x.rhs, y.rhs)) return false;
    if (x.params != y.params || x.indeterminates != y.indeterminates) return false;
    if (x.constraints.size() != y.constraints.size()) return false;
    for (std::size_t i = 0; i < x.constraints.size(); ++i) {
        const auto& a = x.constraints[i];
        const auto& b = y.constraints[i];
        if (a.op != b.op || !expr_equal(a.lhs, b.lhs) || !expr_equal(a.rhs, b.rhs)) return false;
    }
    return true;
}

//
// Canonical formatting
//

namespace lang_detail {

// Precedence levels: 0 add/sub, 1 mul, 2 unary minus, 3 pow, 4 atom.
inline int expr_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 0;
        case Expr::Kind::Mul: return 1;
        case Expr::Kind::Neg: return 2;
        case Expr::Kind::Pow: return 3;
        default: return 4;
    }
}

inline void format_expr(const ExprPtr& e, int min_level, std::string& out);

inline void format_child(const ExprPtr& e, int min_level, std::string& out) {
    if (expr_level(*e) < min_level) {
        out += "(";
        format_expr(e, 0, out);
        out += ")";
    } else {
        format_expr(e, 0, out);
    }
}

inline void format_expr(const ExprPtr& e, int, std::string& out) {
    switch (e->kind) {
        case Expr::Kind::IntLit: out += e->value.str(); break;
        case Expr::Kind::Var: out += e->name; break;
        case Expr::Kind::Neg:
            out += "-";
            format_child(e->a, 3, out);
            break;
        case Expr::Kind::Add:
            format_child(e->a, 0, out);
            out += "+";
            format_child(e->b, 1, out);
            break;
        case Expr::Kind::Sub:
            format_child(e->a, 0, out);
            out += "-";
            format_child(e->b, 1, out);
            break;
        case Expr::Kind::Mul:
            format_child(e->a, 1, out);
            out += "*";
            format_child(e->b, 2, out);
            break;
        case Expr::Kind::Pow:
            format_child(e->a, 4, out);
            out += "^";
            format_child(e->b, 4, out);
            break;
        case Expr::Kind::Binom:
            out += "C(";
            format_child(e->a, 0, out);
            out += ",";
            format_child(e->b, 0, out);
            out += ")";
            break;
        case Expr::Kind::Fib:
            out += "fib(";
            format_child(e->a, 0, out);
            out += ")";
            break;
        case Expr::Kind::Sum:
            out += "sum(" + e->name + "=";
            format_child(e->a, 0, out);
            out += "..";
            format_child(e->b, 0, out);
            out += ", ";
            format_child(e->c, 0, out);
            out += ")";
            break;
    }
}

}  // namespace lang_detail

inline std::string format_expression(const ExprPtr& e) {
    std::string out;
    lang_detail::format_child(e, 0, out);
    return out;
}

inline std::string format_identity(const IdentityAst& ast) {
    std::string out = format_expression(ast.lhs) + " == " + format_expression(ast.rhs) + " for ";
    for (std::size_t i = 0; i < ast.params.size(); ++i) {
        if (i) out += ", ";
        out += ast.params[i];
    }
    if (!ast.indeterminates.empty()) {
        out += " indet ";
        for (std::size_t i = 0; i < ast.indeterminates.size(); ++i) {
            if (i) out += ", ";
            out += ast.indeterminates[i];
        }
    }
    if (!ast.constraints.empty()) {
        out += " where ";
        for (std::size_t i = 0; i < ast.constraints.size(); ++i) {
            if (i) out += ", ";
            out += format_expression(ast.constraints[i].lhs) + " " + ast.constraints[i].op + " " +
                   format_expression(ast.constraints[i].rhs);
        }
    }
    return out;
}

//
// Lexer + parser
//

namespace lang_detail {

enum class Tok {
    UInt,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Assign,   // =
    DotDot,   // ..
    EqEq,     // ==
    Lt,
    Le,
    Ge,
    Gt,
    KwFor,
    KwIndet,
    KwWhere,
    KwSum,
    KwFib,
    KwC,
    End,
};

inline std::string tok_name(Tok t) {
    switch (t) {
        case Tok::UInt: return "integer";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Assign: return "'='";
        case Tok::DotDot: return "'..'";
        case Tok::EqEq: return "'=='";
        case Tok::Lt: return "'<'";
        case Tok::Le: return "'<='";
        case Tok::Ge: return "'>='";
        case Tok::Gt: return "'>'";
        case Tok::KwFor: return "'for'";
        case Tok::KwIndet: return "'indet'";
        case Tok::KwWhere: return "'where'";
        case Tok::KwSum: return "'sum'";
        case Tok::KwFib: return "'fib'";
        case Tok::KwC: return "'C'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        int tl = line, tc = col;
        auto take1 = [&](Tok k) {
            push(k, std::string(1, c), tl, tc);
            ++i;
            ++col;
        };
        if (isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
                ++col;
            }
            push(Tok::UInt, std::string(text.substr(start, i - start)), tl, tc);
            continue;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
                ++col;
            }
            std::string word(text.substr(start, i - start));
            Tok k = Tok::Ident;
            if (word == "for") k = Tok::KwFor;
            else if (word == "indet") k = Tok::KwIndet;
            else if (word == "where") k = Tok::KwWhere;
            else if (word == "sum") k = Tok::KwSum;
            else if (word == "fib") k = Tok::KwFib;
            else if (word == "C") k = Tok::KwC;
            push(k, std::move(word), tl, tc);
            continue;
        }
        switch (c) {
            case '+': take1(Tok::Plus); break;
            case '-': take1(Tok::Minus); break;
            case '*': take1(Tok::Star); break;
            case '^': take1(Tok::Caret); break;
            case '(': take1(Tok::LParen); break;
            case ')': take1(Tok::RParen); break;
            case ',': take1(Tok::Comma); break;
            case '.':
                if (i + 1 < text.size() && text[i + 1] == '.') {
                    push(Tok::DotDot, "..", tl, tc);
                    i += 2;
                    col += 2;
                } else {
                    throw SyntaxError(tl, tc, "stray '.'; did you mean '..'?");
                }
                break;
            case '=':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(Tok::EqEq, "==", tl, tc);
                    i += 2;
                    col += 2;
                } else {
                    take1(Tok::Assign);
                }
                break;
            case '<':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(Tok::Le, "<=", tl, tc);
                    i += 2;
                    col += 2;
                } else {
                    take1(Tok::Lt);
                }
                break;
            case '>':
                if (i + 1 < text.size() && text[i + 1] == '=') {
                    push(Tok::Ge, ">=", tl, tc);
                    i += 2;
                    col += 2;
                } else {
                    take1(Tok::Gt);
                }
                break;
            default:
                throw SyntaxError(tl, tc, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    ExprPtr parse_expression_only() {
        ExprPtr e = parse_expr();
        expect(Tok::End);
        return e;
    }

    IdentityAst parse_identity() {
        IdentityAst ast;
        warnings_ = &ast.warnings;
        ast.lhs = parse_expr();
        expect(Tok::EqEq);
        ast.rhs = parse_expr();
        expect(Tok::KwFor);
        ast.params.push_back(expect(Tok::Ident).text);
        while (peek() == Tok::Comma) {
            advance();
            ast.params.push_back(expect(Tok::Ident).text);
        }
        if (peek() == Tok::KwIndet) {
            advance();
            ast.indeterminates.push_back(expect(Tok::Ident).text);
            while (peek() == Tok::Comma) {
                advance();
                ast.indeterminates.push_back(expect(Tok::Ident).text);
            }
        }
        if (peek() == Tok::KwWhere) {
            advance();
            ast.constraints.push_back(parse_cond());
            while (peek() == Tok::Comma) {
                advance();
                ast.constraints.push_back(parse_cond());
            }
        }
        expect(Tok::End);
        validate(ast);
        return ast;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string>* warnings_ = nullptr;

    const Token& cur() const { return tokens_[pos_]; }
    Tok peek() const { return tokens_[pos_].kind; }
    void advance() {
        if (peek() != Tok::End) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = cur();
        throw SyntaxError(t.line, t.col,
                          "expected " + expected + ", got " +
                              (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"));
    }

    Token expect(Tok k) {
        if (peek() != k) fail(tok_name(k));
        Token t = cur();
        advance();
        return t;
    }

    Cond parse_cond() {
        Cond c;
        c.lhs = parse_expr();
        switch (peek()) {
            case Tok::Lt: c.op = "<"; break;
            case Tok::Le: c.op = "<="; break;
            case Tok::EqEq: c.op = "=="; break;
            case Tok::Ge: c.op = ">="; break;
            case Tok::Gt: c.op = ">"; break;
            default: fail("one of '<', '<=', '==', '>=', '>'");
        }
        advance();
        c.rhs = parse_expr();
        return c;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek() == Tok::Plus || peek() == Tok::Minus) {
            bool plus = peek() == Tok::Plus;
            advance();
            ExprPtr r = parse_term();
            e = plus ? ast::add(e, r) : ast::sub(e, r);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (peek() == Tok::Star) {
            advance();
            e = ast::mul(e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (peek() == Tok::Minus) {
            Token minus = cur();
            advance();
            ExprPtr inner = parse_factor();
            if (warnings_ && inner->kind == Expr::Kind::Pow &&
                inner->a->kind == Expr::Kind::IntLit && inner->a->value == 1) {
                warnings_->push_back(
                    std::to_string(minus.line) + ":" + std::to_string(minus.col) +
                    ": '-1^e' parses as -(1^e); write (-1)^e for an alternating sign");
            }
            return ast::neg(inner);
        }
        return parse_factor();
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (peek() == Tok::Caret) {
            advance();
            return ast::pow(base, parse_atom());
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token t = cur();
        switch (t.kind) {
            case Tok::UInt: {
                advance();
                Expr e{Expr::Kind::IntLit, Int(t.text), {}, {}, {}, {}, t.line, t.col};
                return ast::make(std::move(e));
            }
            case Tok::Ident: {
                advance();
                Expr e{Expr::Kind::Var, 0, t.text, {}, {}, {}, t.line, t.col};
                return ast::make(std::move(e));
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(Tok::RParen);
                return e;
            }
            case Tok::KwC: {
                advance();
                expect(Tok::LParen);
                ExprPtr a = parse_expr();
                expect(Tok::Comma);
                ExprPtr b = parse_expr();
                expect(Tok::RParen);
                return ast::binom(a, b);
            }
            case Tok::KwFib: {
                advance();
                expect(Tok::LParen);
                ExprPtr a = parse_expr();
                expect(Tok::RParen);
                return ast::fib(a);
            }
            case Tok::KwSum: {
                advance();
                expect(Tok::LParen);
                std::string v = expect(Tok::Ident).text;
                expect(Tok::Assign);
                ExprPtr lo = parse_expr();
                expect(Tok::DotDot);
                ExprPtr hi = parse_expr();
                expect(Tok::Comma);
                ExprPtr body = parse_expr();
                expect(Tok::RParen);
                return ast::sum(v, lo, hi, body);
            }
            default:
                fail("one of: integer, identifier, '(', 'C(', 'fib(', 'sum('");
        }
    }

    // Scope checking: every free variable of lhs/rhs must be a parameter, an
    // indeterminate or an enclosing sum variable; sum variables must not
    // shadow anything; constraints may reference parameters only.
    void validate(const IdentityAst& ast) const {
        std::set<std::string> params(ast.params.begin(), ast.params.end());
        if (params.size() != ast.params.size())
            throw SyntaxError(1, 1, "duplicate parameter name");
        std::set<std::string> indets(ast.indeterminates.begin(), ast.indeterminates.end());
        for (const auto& name : indets)
            if (params.count(name))
                throw SyntaxError(1, 1, "'" + name + "' is both a parameter and an indeterminate");
        std::set<std::string> scope = params;
        scope.insert(indets.begin(), indets.end());
        check_scope(ast.lhs, scope);
        check_scope(ast.rhs, scope);
        for (const auto& c : ast.constraints) {
            check_scope(c.lhs, params);
            check_scope(c.rhs, params);
        }
    }

    static void check_scope(const ExprPtr& e, const std::set<std::string>& scope) {
        if (!e) return;
        if (e->kind == Expr::Kind::Var) {
            if (!scope.count(e->name))
                throw SyntaxError(e->line, e->col, "unbound variable '" + e->name + "'");
            return;
        }
        if (e->kind == Expr::Kind::Sum) {
            if (scope.count(e->name))
                throw SyntaxError(e->line, e->col,
                                  "sum variable '" + e->name + "' shadows an enclosing name");
            check_scope(e->a, scope);
            check_scope(e->b, scope);
            std::set<std::string> inner = scope;
            inner.insert(e->name);
            check_scope(e->c, inner);
            return;
        }
        check_scope(e->a, scope);
        check_scope(e->b, scope);
        check_scope(e->c, scope);
    }
};

}  // namespace lang_detail

inline IdentityAst parse_identity(std::string_view text) {
    return lang_detail::Parser(text).parse_identity();
}

inline ExprPtr parse_expression(std::string_view text) {
    return lang_detail::Parser(text).parse_expression_only();
}

//
// Evaluation
//

using Bindings = std::map<std::string, Int>;

class Evaluator {
  public:
    Evaluator(const Bindings& bindings, const std::set<std::string>& indeterminates)
        : bindings_(bindings), indeterminates_(indeterminates) {}

    Weight eval(const ExprPtr& e) {
        switch (e->kind) {
            case Expr::Kind::IntLit: return Weight(e->value);
            case Expr::Kind::Var: {
                if (auto it = locals_.find(e->name); it != locals_.end()) return Weight(it->second);
                if (auto it = bindings_.find(e->name); it != bindings_.end())
                    return Weight(it->second);
                if (indeterminates_.count(e->name)) return Weight::variable(e->name);
                throw EvalError("unbound variable '" + e->name + "'");
            }
            case Expr::Kind::Neg: return -eval(e->a);
            case Expr::Kind::Add: return eval(e->a) + eval(e->b);
            case Expr::Kind::Sub: return eval(e->a) - eval(e->b);
            case Expr::Kind::Mul: return eval(e->a) * eval(e->b);
            case Expr::Kind::Pow: {
                Weight base = eval(e->a);
                Int exp = eval_int(e->b, "exponent");
                if (exp < 0) throw EvalError("negative exponent " + exp.str() + " in '^'");
                return base.pow(exp);
            }
            case Expr::Kind::Binom: {
                Int n = eval_int(e->a, "binomial upper index");
                Int k = eval_int(e->b, "binomial lower index");
                if (n < 0) throw EvalError("negative binomial upper index " + n.str());
                return Weight(binom(to_ll(n, "binomial upper index"),
                                    to_ll(k, "binomial lower index")));
            }
            case Expr::Kind::Fib: {
                Int i = eval_int(e->a, "fibonacci index");
                return Weight(fib(to_ll(i, "fibonacci index")));
            }
            case Expr::Kind::Sum: {
                Int lo, hi;
                try {
                    lo = eval_int(e->a, "sum bound");
                    hi = eval_int(e->b, "sum bound");
                } catch (const EvalError& err) {
                    throw EvalError(std::string("non-constant sum bound: ") + err.what());
                }
                if (locals_.count(e->name) || bindings_.count(e->name) ||
                    indeterminates_.count(e->name))
                    throw EvalError("sum variable '" + e->name + "' shadows an enclosing name");
                Weight acc;
                for (Int k = lo; k <= hi; ++k) {
                    locals_[e->name] = k;
                    acc += eval(e->c);
                }
                locals_.erase(e->name);
                return acc;
            }
        }
        throw EvalError("unreachable expression kind");
    }

    Int eval_int(const ExprPtr& e, const std::string& what) {
        Weight w = eval(e);
        if (!w.is_integer())
            throw EvalError(what + " must evaluate to an integer, got " + w.str());
        return w.as_integer();
    }

  private:
    static long long to_ll(const Int& v, const std::string& what) {
        if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
            throw EvalError(what + " out of range: " + v.str());
        return static_cast<long long>(v);
    }

    const Bindings& bindings_;
    const std::set<std::string>& indeterminates_;
    Bindings locals_;
};

inline Weight eval_expr(const ExprPtr& e, const Bindings& bindings,
                        const std::set<std::string>& indeterminates = {}) {
    return Evaluator(bindings, indeterminates).eval(e);
}

inline Int eval_int_expr(const ExprPtr& e, const Bindings& bindings) {
    return Evaluator(bindings, {}).eval_int(e, "expression");
}

enum class InstanceOutcome { Pass, Fail, Skipped };

inline bool cond_holds(const Cond& c, const Bindings& bindings) {
    Evaluator ev(bindings, {});
    Int l = ev.eval_int(c.lhs, "constraint");
    Int r = ev.eval_int(c.rhs, "constraint");
    return c.op == "<"    ? l < r
           : c.op == "<=" ? l <= r
           : c.op == "==" ? l == r
           : c.op == ">=" ? l >= r
                          : l > r;
}

inline std::string format_cond(const Cond& c) {
    return format_expression(c.lhs) + " " + c.op + " " + format_expression(c.rhs);
}

// Skipped (constraint-violating) is distinct from Fail.
inline InstanceOutcome check_instance(const IdentityAst& ast, const Bindings& bindings) {
    for (const auto& c : ast.constraints)
        if (!cond_holds(c, bindings)) return InstanceOutcome::Skipped;
    std::set<std::string> indets(ast.indeterminates.begin(), ast.indeterminates.end());
    Weight lhs = eval_expr(ast.lhs, bindings, indets);
    Weight rhs = eval_expr(ast.rhs, bindings, indets);
    return lhs == rhs ? InstanceOutcome::Pass : InstanceOutcome::Fail;
}

}  // namespace pascal_chase
