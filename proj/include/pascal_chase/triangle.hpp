#pragma once

// Binomial coefficients with the out-of-range convention C(n,k) = 0 for
// k < 0 or k > n, plus Fibonacci numbers extended to negative indices.
// binom is computed by the additive recurrence over a memoized triangle;
// factorials are reserved for the independent oracle in the harness.

#include <mutex>
#include <stdexcept>
#include <vector>

#include "pascal_chase/exact.hpp"

namespace pascal_chase {

namespace triangle_detail {

struct Memo {
    std::mutex mutex;
    std::vector<std::vector<Int>> rows;
    long long max_row = 512;
};

inline Memo& memo() {
    static Memo m;
    return m;
}

// Caller holds the lock.
inline void ensure_rows(Memo& m, long long n) {
    if (n > m.max_row)
        throw std::length_error("binomial row " + std::to_string(n) +
                                " exceeds the configured row cap " + std::to_string(m.max_row));
    while (static_cast<long long>(m.rows.size()) <= n) {
        long long r = static_cast<long long>(m.rows.size());
        std::vector<Int> row(static_cast<std::size_t>(r) + 1, Int(1));
        for (long long k = 1; k < r; ++k) row[k] = m.rows[r - 1][k - 1] + m.rows[r - 1][k];
        m.rows.push_back(std::move(row));
    }
}

}  // namespace triangle_detail

inline long long max_row() {
    auto& m = triangle_detail::memo();
    std::lock_guard lock(m.mutex);
    return m.max_row;
}

inline void set_max_row(long long cap) {
    if (cap < 0) throw std::domain_error("row cap must be nonnegative");
    auto& m = triangle_detail::memo();
    std::lock_guard lock(m.mutex);
    m.max_row = cap;
}

// Row [C(n,0), ..., C(n,n)] grown on demand via Pascal's rule.
inline std::vector<Int> binom_row(long long n) {
    if (n < 0) throw std::domain_error("binomial row index must be nonnegative");
    auto& m = triangle_detail::memo();
    std::lock_guard lock(m.mutex);
    triangle_detail::ensure_rows(m, n);
    return m.rows[static_cast<std::size_t>(n)];
}

inline Int binom(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial upper index must be nonnegative");
    if (k < 0 || k > n) return 0;
    auto& m = triangle_detail::memo();
    std::lock_guard lock(m.mutex);
    triangle_detail::ensure_rows(m, n);
    return m.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// F_0 = 0, F_1 = 1; negative indices via F_{-i} = (-1)^{i+1} F_i.
inline Int fib(long long i) {
    bool negate = false;
    if (i < 0) {
        negate = (i % 2) == 0;  // (-1)^{i+1} with i = |index|
        i = -i;
    }
    Int a = 0, b = 1;
    for (long long j = 0; j < i; ++j) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return negate ? Int(-a) : a;
}

}  // namespace pascal_chase
