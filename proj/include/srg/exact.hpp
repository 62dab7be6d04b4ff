#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace srg {

// Integer square root; returns true when n is a perfect square.
inline bool perfect_square(long long n, long long& root) {
    if (n < 0) return false;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

inline long long isqrt_floor(long long n) {
    long long r = 0;
    perfect_square(n, r);
    return r;
}

// Exact eigenvalue of the form (a + b*sqrt(d)) / 2.  d == 0 encodes the
// integral case, where the value is a/2 (a always even then).
struct ExactEig {
    long long a{0};
    long long b{0};
    long long d{0};

    static ExactEig integer(long long x) { return ExactEig{2 * x, 0, 0}; }
    static ExactEig surd(long long a, long long b, long long d) {
        long long rt = 0;
        if (perfect_square(d, rt)) return integer((a + b * rt) / 2);
        return ExactEig{a, b, d};
    }

    bool integral() const { return d == 0; }
    long long as_integer() const {
        if (!integral()) throw std::logic_error("ExactEig: not integral");
        return a / 2;
    }
    double value() const {
        return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d))) / 2.0;
    }
    ExactEig negated() const { return ExactEig{-a, -b, d}; }

    friend bool operator==(const ExactEig& x, const ExactEig& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

// Reduced non-negative fraction.
struct Fraction {
    long long num{0};
    long long den{1};

    Fraction() = default;
    Fraction(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        long long a = num < 0 ? -num : num, b = den;
        while (b) { long long t = a % b; a = b; b = t; }
        if (a > 0) { num /= a; den /= a; }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator<(const Fraction& x, const Fraction& y) {
        return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
    }
    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.num == y.num && x.den == y.den;
    }
};

}  // namespace srg
