#pragma once

// Arithmetic backbone. The toolkit runs in one of two global modes chosen by
// the scalar type S: exact rationals (Rat) or plain doubles. Quantities that
// may pick up square roots (lengths, graph areas) are carried as Amount<S>,
// which keeps the exactly-representable part separate from the irrational
// remainder so that jump-only computations stay exact in rational mode.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace steiner {

// et_off: plain value semantics, no expression templates, so Rat results
// always have type Rat and template deduction stays predictable.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_double(double x) { return x; }
inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Comparison semantics per arithmetic mode. Rational mode compares exactly;
// double mode uses 1e-12 absolute for point coincidence and 1e-9 relative
// for measures.
template <class S>
struct mode_traits;

template <>
struct mode_traits<double> {
    static constexpr bool exact = false;
    static constexpr double point_tol = 1e-12;
    static constexpr double measure_rel_tol = 1e-9;
    static bool is_zero(double x) { return std::fabs(x) <= point_tol; }
    static bool eq(double a, double b) { return std::fabs(a - b) <= point_tol; }
    static bool leq(double a, double b) { return a <= b + point_tol; }
    static bool lt(double a, double b) { return a < b - point_tol; }
    static const char* name() { return "double"; }
};

template <>
struct mode_traits<Rat> {
    static constexpr bool exact = true;
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static bool leq(const Rat& a, const Rat& b) { return a <= b; }
    static bool lt(const Rat& a, const Rat& b) { return a < b; }
    static const char* name() { return "rational"; }
};

inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rat(0);
    BigInt n = numerator(x), d = denominator(x);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn == n && sd * sd == d) return Rat(sn, sd);
    return std::nullopt;
}

// Additive quantity: exact part plus irrational remainder (in double).
// For S = double everything lives in `exact`.
template <class S>
struct Amount {
    S exact{};
    double irr = 0.0;

    Amount() = default;
    Amount(S e) : exact(std::move(e)) {}
    Amount(S e, double i) : exact(std::move(e)), irr(i) {}

    double value() const { return to_double(exact) + irr; }
    bool is_exact() const { return irr == 0.0; }

    Amount& operator+=(const Amount& o) {
        exact += o.exact;
        irr += o.irr;
        return *this;
    }
    Amount& operator-=(const Amount& o) {
        exact -= o.exact;
        irr -= o.irr;
        return *this;
    }
    friend Amount operator+(Amount a, const Amount& b) { return a += b; }
    friend Amount operator-(Amount a, const Amount& b) { return a -= b; }
    friend Amount operator*(const S& s, const Amount& a) {
        return Amount(s * a.exact, to_double(s) * a.irr);
    }
};

template <class S>
Amount<S> sqrt_amount(const S& x) {
    if constexpr (mode_traits<S>::exact) {
        if (auto r = exact_sqrt(x)) return Amount<S>(*r);
        return Amount<S>(S(0), std::sqrt(to_double(x)));
    } else {
        return Amount<S>(std::sqrt(x));
    }
}

// 12 significant digits in double mode, exact fractions in rational mode.
inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string format_number(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

template <class S>
std::string format_amount(const Amount<S>& a) {
    if (a.is_exact()) return format_number(a.exact);
    return format_number(a.value());
}

// Parses "p/q", an integer, or a decimal string into a scalar. Rational mode
// reads decimals exactly (digits over a power of ten).
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&]() -> Rat { throw Error("cannot parse number '" + s + "'"); };
    if (s.empty()) return bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty()) return bad();
        try {
            BigInt num(p), den(q);
            if (den == 0) return bad();
            return Rat(num, den);
        } catch (...) {
            return bad();
        }
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    BigInt digits = 0;
    long frac_digits = 0;
    bool any = false, dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (dot) return bad();
            dot = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            if (dot) ++frac_digits;
            any = true;
        } else if (c == 'e' || c == 'E') {
            long exp = std::stol(s.substr(i + 1));
            frac_digits -= exp;
            break;
        } else {
            return bad();
        }
    }
    if (!any) return bad();
    Rat r(digits);
    BigInt ten = 1;
    for (long k = 0; k < std::labs(frac_digits); ++k) ten *= 10;
    if (frac_digits > 0)
        r /= Rat(ten);
    else if (frac_digits < 0)
        r *= Rat(ten);
    return neg ? -r : r;
}

template <class S>
S scalar_from_string(const std::string& s);

template <>
inline Rat scalar_from_string<Rat>(const std::string& s) {
    return rat_from_string(s);
}

template <>
inline double scalar_from_string<double>(const std::string& s) {
    return to_double(rat_from_string(s));
}

template <class S>
S scalar_from_double(double x) {
    if (!std::isfinite(x)) throw Error("non-finite number in input");
    if constexpr (mode_traits<S>::exact)
        return Rat(x);
    else
        return x;
}

}  // namespace steiner
