#pragma once

// Exact arithmetic primitives and the error taxonomy shared by every module.
// All mathematical values in this library are exact: big integers, rationals,
// or cyclotomic numbers. No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace signlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for everything this library throws on bad input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// User-facing input problems (CLI exit code 2).
struct config_error : error {
    using error::error;
};
// Dimension / rank mismatches between objects.
struct shape_error : error {
    using error::error;
};
// A map left the element set it was supposed to preserve.
struct closure_error : error {
    using error::error;
};
// Requested object exceeds the configured enumeration cap.
struct cap_error : error {
    using error::error;
};
// An operation's stated precondition does not hold.
struct precondition_error : error {
    using error::error;
};
// An internal invariant failed: the computation itself is wrong. Never caught.
struct consistency_error : error {
    using error::error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw consistency_error(msg);
}

inline std::string to_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw config_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw config_error("cannot parse rational: " + s);
    }
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int to_int(const Rational& r) {
    if (!is_integer(r)) throw consistency_error("expected integer, got " + to_string(r));
    return boost::multiprecision::numerator(r);
}

inline std::int64_t to_i64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw consistency_error("integer out of int64 range: " + v.str());
    return static_cast<std::int64_t>(v);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / gcd_u64(a, b) * b;
}

// splitmix64: tiny deterministic stream for seeded sampling. Output sequence
// is part of the reproducibility contract, so it is pinned here rather than
// delegated to the standard library distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        check(bound > 0, "SplitMix64::below(0)");
        return next() % bound;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace signlab
