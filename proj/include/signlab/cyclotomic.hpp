#pragma once

// Exact cyclotomic numbers. A value of order m is stored on the power basis
// zeta_m^0 .. zeta_m^{phi(m)-1} after reduction modulo the m-th cyclotomic
// polynomial. That basis is a Z-basis of the ring of integers, so equality
// is coordinate equality and algebraic integers are exactly the values with
// integer coordinates.
//
// CycloAccumulator is the workhorse for big linear/bilinear sums of
// character values: integer coefficients on the full basis zeta_e^0 ..
// zeta_e^{e-1}, reduced once at the end through the (sparse) cyclotomic
// polynomial. Accumulation stays in __int128 with an overflow guard.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "signlab/numeric.hpp"

namespace signlab {

inline std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

// Coefficients of the m-th cyclotomic polynomial, low degree first.
// Computed once per squarefree radical by exact division of x^r - 1, then
// inflated: Phi_m(x) = Phi_rad(x^{m/rad}).
inline const std::vector<std::int64_t>& cyclotomic_poly(std::uint32_t m) {
    static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
    const auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;

    std::uint32_t rad = 1, mm = m;
    for (std::uint32_t p = 2; p * p <= mm; ++p)
        if (mm % p == 0) {
            rad *= p;
            while (mm % p == 0) mm /= p;
        }
    if (mm > 1) rad *= mm;

    std::vector<Int> phi_rad;
    if (rad == 1) {
        phi_rad = {Int(-1), Int(1)};  // x - 1
    } else {
        // x^rad - 1 divided by every proper-divisor cyclotomic.
        std::vector<Int> num(rad + 1, Int(0));
        num[0] = -1;
        num[rad] = 1;
        for (std::uint32_t d = 1; d < rad; ++d) {
            if (rad % d != 0) continue;
            const auto& phi_d = cyclotomic_poly(d);
            const std::size_t dd = phi_d.size() - 1;  // degree, monic
            std::vector<Int> quot(num.size() - dd, Int(0));
            for (std::size_t k = num.size(); k-- > dd;) {
                const Int c = num[k];
                if (c == 0) continue;
                quot[k - dd] = c;
                for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * Int(phi_d[i]);
            }
            for (std::size_t i = 0; i < dd; ++i)
                check(num[i] == 0, "cyclotomic division not exact");
            num = std::move(quot);
        }
        phi_rad = std::move(num);
    }

    std::vector<std::int64_t> out;
    const std::uint32_t stretch = m / rad;
    out.assign(static_cast<std::size_t>(phi_rad.size() - 1) * stretch + 1, 0);
    for (std::size_t i = 0; i < phi_rad.size(); ++i) out[i * stretch] = to_i64(phi_rad[i]);
    return cache.emplace(m, std::move(out)).first->second;
}

// (exponent, coefficient) pairs of Phi_m below the leading monic term.
inline std::vector<std::pair<std::uint32_t, std::int64_t>> cyclotomic_sparse(std::uint32_t m) {
    const auto& poly = cyclotomic_poly(m);
    std::vector<std::pair<std::uint32_t, std::int64_t>> out;
    for (std::uint32_t i = 0; i + 1 < poly.size(); ++i)
        if (poly[i] != 0) out.emplace_back(i, poly[i]);
    return out;
}

}  // namespace detail

class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    explicit Cyclotomic(std::int64_t v) : order_(1), coeffs_(1, Rational(v)) {}

    // From a dense coefficient vector on powers zeta_m^0..zeta_m^{len-1};
    // exponents beyond phi(m) are reduced away.
    static Cyclotomic from_powers(std::uint32_t order, std::vector<Rational> powers) {
        Cyclotomic z;
        z.order_ = order;
        z.coeffs_ = reduce(order, std::move(powers));
        return z;
    }

    static Cyclotomic root_of_unity(std::uint32_t order, std::uint64_t exponent) {
        std::vector<Rational> v(static_cast<std::size_t>(exponent % order) + 1, Rational(0));
        v.back() = 1;
        return from_powers(order, std::move(v));
    }

    std::uint32_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational())
            throw consistency_error("cyclotomic value is not rational: " + to_string());
        return coeffs_[0];
    }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    Cyclotomic lift_to(std::uint32_t bigger) const {
        check(bigger % order_ == 0, "lift_to: order does not divide target");
        if (bigger == order_) return *this;
        const std::uint32_t stretch = bigger / order_;
        std::vector<Rational> powers(static_cast<std::size_t>(coeffs_.size() - 1) * stretch + 1,
                                     Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[i * stretch] = coeffs_[i];
        return from_powers(bigger, std::move(powers));
    }

    // Galois twist zeta -> zeta^k, gcd(k, order) = 1.
    Cyclotomic galois(std::uint64_t k) const {
        k %= order_;
        check(gcd_u64(k, order_) == 1, "galois exponent not coprime to order");
        std::vector<Rational> powers(order_, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            powers[static_cast<std::size_t>((i * k) % order_)] += coeffs_[i];
        return from_powers(order_, std::move(powers));
    }

    Cyclotomic conj() const {
        if (order_ <= 2) return *this;
        return galois(order_ - 1);
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        const std::uint32_t m = static_cast<std::uint32_t>(
            lcm_u64(a.order_, b.order_));
        Cyclotomic x = a.lift_to(m), y = b.lift_to(m);
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        return a + (b * Rational(-1));
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic x = a;
        for (auto& c : x.coeffs_) c *= s;
        return x;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        const std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(a.order_, b.order_));
        const Cyclotomic x = a.lift_to(m), y = b.lift_to(m);
        std::vector<Rational> powers(m, Rational(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
                if (y.coeffs_[j] == 0) continue;
                powers[(i + j) % m] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return from_powers(m, std::move(powers));
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        const std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(a.order_, b.order_));
        return a.lift_to(m).coeffs_ == b.lift_to(m).coeffs_;
    }

    // Total order for deterministic sorting; not meaningful arithmetically.
    static int compare(const Cyclotomic& a, const Cyclotomic& b) {
        const std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(a.order_, b.order_));
        const auto x = a.lift_to(m), y = b.lift_to(m);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] < y.coeffs_[i]) return -1;
            if (x.coeffs_[i] > y.coeffs_[i]) return 1;
        }
        return 0;
    }

    std::string to_string() const {
        std::string s = "cyc" + std::to_string(order_) + "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += signlab::to_string(coeffs_[i]);
        }
        return s + "]";
    }

  private:
    static std::vector<Rational> reduce(std::uint32_t order, std::vector<Rational> powers) {
        const std::uint32_t phi = euler_phi(order);
        // fold exponents into [0, order)
        if (powers.size() > order) {
            for (std::size_t i = order; i < powers.size(); ++i) powers[i % order] += powers[i];
            powers.resize(order);
        }
        powers.resize(order, Rational(0));
        const auto sparse = detail::cyclotomic_sparse(order);
        for (std::size_t k = order; k-- > phi;) {
            if (powers[k] == 0) continue;
            const Rational c = powers[k];
            powers[k] = 0;
            for (const auto& [exp, coef] : sparse) powers[k - phi + exp] -= c * Rational(coef);
        }
        powers.resize(phi);
        return powers;
    }

    std::uint32_t order_;
    std::vector<Rational> coeffs_;
};

// Integer-coefficient accumulator on the full power basis of zeta_e.
class CycloAccumulator {
  public:
    explicit CycloAccumulator(std::uint32_t order)
        : order_(order), coeffs_(order, 0), sparse_(detail::cyclotomic_sparse(order)) {}

    std::uint32_t order() const { return order_; }

    void clear() { std::fill(coeffs_.begin(), coeffs_.end(), 0); }

    void add(std::uint64_t exponent, std::int64_t value) {
        coeffs_[exponent % order_] += value;
    }

    // Divide by `denominator` after reducing mod Phi_e.
    Cyclotomic finalize(const Int& denominator) const {
        check(denominator != 0, "zero denominator");
        std::vector<__int128> work(coeffs_.begin(), coeffs_.end());
        const std::uint32_t phi = euler_phi(order_);
        constexpr __int128 guard = (static_cast<__int128>(1) << 100);
        for (std::size_t k = order_; k-- > phi;) {
            const __int128 c = work[k];
            if (c == 0) continue;
            work[k] = 0;
            for (const auto& [exp, coef] : sparse_) {
                work[k - phi + exp] -= c * coef;
                check(work[k - phi + exp] < guard && -work[k - phi + exp] < guard,
                      "cyclotomic reduction overflow");
            }
        }
        std::vector<Rational> out(phi);
        const Rational d(Int(1), denominator);
        for (std::size_t i = 0; i < phi; ++i) {
            Int num = 0;
            __int128 v = work[i];
            const bool negative = v < 0;
            if (negative) v = -v;
            // __int128 -> cpp_int via two 64-bit limbs
            num = Int(static_cast<std::uint64_t>(v >> 64));
            num <<= 64;
            num += Int(static_cast<std::uint64_t>(v));
            if (negative) num = -num;
            out[i] = Rational(num) * d;
        }
        Cyclotomic z = Cyclotomic::from_powers(order_, std::move(out));
        return z;
    }

  private:
    std::uint32_t order_;
    std::vector<std::int64_t> coeffs_;
    std::vector<std::pair<std::uint32_t, std::int64_t>> sparse_;
};

}  // namespace signlab
