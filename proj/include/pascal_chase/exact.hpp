#pragma once

// Exact arithmetic for weights: arbitrary-precision integers, rationals and
// sparse multivariate polynomials with rational coefficients. A plain number
// is a constant polynomial, so the rewrite rules never case-split on the
// weight kind.

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pascal_chase {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Name -> exponent, exponents always >= 1. The empty monomial is 1.
using Monomial = std::map<std::string, unsigned>;

struct WeightParseError : std::runtime_error {
    WeightParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("weight parse error at byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

namespace detail {

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

// Canonical term order: total degree descending, then lexicographic on the
// exponent vectors (variables walked in name order, higher exponent first).
// a^2 sorts before a*b before b^2; constants come last.
struct MonoBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return false;  // equal
    }
};

}  // namespace detail

class Weight {
  public:
    using TermMap = std::map<Monomial, Rat, detail::MonoBefore>;

    Weight() = default;
    Weight(int v) : Weight(Rat(v)) {}
    Weight(const Int& v) : Weight(Rat(v)) {}
    explicit Weight(Rat v) {
        if (v != 0) terms_.emplace(Monomial{}, std::move(v));
    }

    static Weight variable(const std::string& name) {
        Weight w;
        w.terms_.emplace(Monomial{{name, 1u}}, Rat(1));
        return w;
    }

    static Weight rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        return Weight(Rat(num, den));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat as_rational() const {
        if (terms_.empty()) return Rat(0);
        if (!is_rational()) throw std::domain_error("weight is not a constant: " + str());
        return terms_.begin()->second;
    }

    bool is_integer() const {
        return is_rational() && denominator(as_rational()) == 1;
    }

    Int as_integer() const {
        Rat r = as_rational();
        if (denominator(r) != 1) throw std::domain_error("weight is not an integer: " + str());
        return numerator(r);
    }

    friend Weight operator+(const Weight& x, const Weight& y) {
        Weight out = x;
        for (const auto& [mono, coef] : y.terms_) out.add_term(mono, coef);
        return out;
    }

    friend Weight operator-(const Weight& x) {
        Weight out;
        for (const auto& [mono, coef] : x.terms_) out.terms_.emplace(mono, -coef);
        return out;
    }

    friend Weight operator-(const Weight& x, const Weight& y) { return x + (-y); }

    friend Weight operator*(const Weight& x, const Weight& y) {
        Weight out;
        for (const auto& [ma, ca] : x.terms_) {
            for (const auto& [mb, cb] : y.terms_) {
                Monomial m = ma;
                for (const auto& [name, e] : mb) m[name] += e;
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    Weight& operator+=(const Weight& y) { return *this = *this + y; }
    Weight& operator-=(const Weight& y) { return *this = *this - y; }
    Weight& operator*=(const Weight& y) { return *this = *this * y; }

    // x^0 = 1 for every x, including 0.
    Weight pow(const Int& e) const {
        if (e < 0) throw std::domain_error("negative exponent in weight power");
        Weight result(1);
        Weight base = *this;
        Int k = e;
        while (k > 0) {
            if ((k & 1) != 0) result *= base;
            k >>= 1;
            if (k > 0) base *= base;
        }
        return result;
    }

    bool operator==(const Weight& o) const { return terms_ == o.terms_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    // Canonical text per the certificate grammar:
    //   weight := term (("+"|"-") term)*
    //   term   := rat ["*" mono] | mono
    //   mono   := IDENT ["^" UINT] ("*" IDENT ["^" UINT])*
    //   rat    := ["-"] UINT ["/" UINT]
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [mono, coef] : terms_) {
            bool neg = coef < 0;
            Rat mag = neg ? Rat(-coef) : coef;
            std::string mag_str = numerator(mag).str();
            if (denominator(mag) != 1) mag_str += "/" + denominator(mag).str();
            std::string piece;
            if (mono.empty()) {
                piece = mag_str;
            } else if (mag == 1 && !(first && neg)) {
                piece = mono_str(mono);
            } else {
                piece = mag_str + "*" + mono_str(mono);
            }
            if (first) {
                if (neg) out += "-";
                out += piece;
                first = false;
            } else {
                out += neg ? "-" : "+";
                out += piece;
            }
        }
        return out;
    }

    static Weight parse(std::string_view text);

  private:
    TermMap terms_;

    void add_term(const Monomial& mono, const Rat& coef) {
        if (coef == 0) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coef);
        } else {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static std::string mono_str(const Monomial& m) {
        std::string out;
        bool first = true;
        for (const auto& [name, e] : m) {
            if (!first) out += "*";
            out += name;
            if (e != 1) out += "^" + std::to_string(e);
            first = false;
        }
        return out;
    }

    friend class WeightParser;
};

class WeightParser {
  public:
    explicit WeightParser(std::string_view text) : text_(text) {}

    Weight run() {
        skip_ws();
        Weight out = parse_term();
        skip_ws();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            Weight t = parse_term();
            out = (c == '+') ? out + t : out - t;
            skip_ws();
        }
        return out;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw WeightParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    static bool ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

    Int parse_uint() {
        if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected digit");
        std::size_t start = pos_;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // term := rat ["*" mono] | mono
    Weight parse_term() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (ident_start(text_[pos_])) return parse_mono_product(Rat(1));
        bool neg = false;
        if (text_[pos_] == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        Int num = parse_uint();
        Int den = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_start = pos_;
            den = parse_uint();
            if (den == 0) throw WeightParseError(den_start, "zero denominator");
            skip_ws();
        }
        Rat coef(num, den);
        if (neg) coef = -coef;
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
            return parse_mono_product(coef);
        }
        return Weight(coef);
    }

    // mono := IDENT ["^" UINT] ("*" IDENT ["^" UINT])*
    Weight parse_mono_product(Rat coef) {
        Monomial mono;
        for (;;) {
            if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected identifier");
            std::string name = parse_ident();
            Int e = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                e = parse_uint();
                skip_ws();
            }
            if (e > 0) mono[name] += static_cast<unsigned>(e);
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        Weight w;
        w.add_term(mono, coef);
        return w;
    }
};

inline Weight Weight::parse(std::string_view text) { return WeightParser(text).run(); }

}  // namespace pascal_chase
