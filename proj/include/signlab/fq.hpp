#pragma once

// Finite field arithmetic for small q, table-driven. Elements are integers
// in [0, q) encoding polynomials over F_p in base p; extension moduli come
// from a fixed table of Conway polynomials so field arithmetic is identical
// across runs and machines.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "signlab/numeric.hpp"

namespace signlab {

using FqElem = std::uint16_t;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Conway polynomials c_0 + c_1 x + ... + x^d, listed without the leading 1.
inline const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint16_t>>&
conway_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint16_t>>
        table = {
            {{2, 1}, {1}},
            {{2, 2}, {1, 1}},
            {{2, 3}, {1, 1, 0}},
            {{2, 4}, {1, 1, 0, 0}},
            {{2, 5}, {1, 0, 1, 0, 0}},
            {{2, 6}, {1, 1, 0, 1, 1, 0}},
            {{3, 1}, {1}},
            {{3, 2}, {2, 2}},
            {{3, 3}, {1, 2, 0}},
            {{5, 1}, {3}},
            {{5, 2}, {2, 4}},
            {{7, 1}, {4}},
            {{7, 2}, {3, 6}},
            {{11, 1}, {9}},
            {{13, 1}, {11}},
            {{17, 1}, {14}},
            {{19, 1}, {17}},
            {{23, 1}, {18}},
        };
    return table;
}

}  // namespace detail

class FieldSpec {
  public:
    static constexpr std::uint32_t kMaxOrder = 256;

    static FieldSpec make(std::uint32_t p, std::uint32_t d) {
        if (!is_prime_u64(p)) throw config_error("field characteristic must be prime, got " +
                                                 std::to_string(p));
        if (d < 1) throw config_error("field extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            q *= p;
            if (q > kMaxOrder)
                throw cap_error("field order exceeds supported maximum " +
                                std::to_string(kMaxOrder));
        }
        const auto it = detail::conway_table().find({p, d});
        if (it == detail::conway_table().end())
            throw config_error("no modulus polynomial shipped for F_" + std::to_string(p) + "^" +
                               std::to_string(d));
        return FieldSpec(p, d, static_cast<std::uint32_t>(q), it->second);
    }

    // Field of order q (q = p^d derived by factoring).
    static FieldSpec of_order(std::uint32_t q) {
        for (std::uint32_t p = 2; p <= q; ++p) {
            if (!is_prime_u64(p) || q % p != 0) continue;
            std::uint32_t d = 0, m = q;
            while (m % p == 0) {
                m /= p;
                ++d;
            }
            if (m != 1) throw config_error(std::to_string(q) + " is not a prime power");
            return make(p, d);
        }
        throw config_error(std::to_string(q) + " is not a prime power");
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint16_t>& modulus() const { return modulus_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }

    FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
    FqElem sub(FqElem a, FqElem b) const { return add_[a * q_ + neg_[b]]; }
    FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
    FqElem neg(FqElem a) const { return neg_[a]; }

    FqElem inv(FqElem a) const {
        if (a == 0) throw precondition_error("inverse of zero in F_" + std::to_string(q_));
        return inv_[a];
    }

    FqElem pow(FqElem a, std::uint64_t e) const {
        FqElem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Multiplicative order; 0 has none.
    std::uint32_t elem_order(FqElem a) const {
        if (a == 0) throw precondition_error("order of zero");
        std::uint32_t n = 1;
        FqElem x = a;
        while (x != 1) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }

    std::string name() const { return "F" + std::to_string(q_); }

  private:
    FieldSpec(std::uint32_t p, std::uint32_t d, std::uint32_t q, std::vector<std::uint16_t> mod)
        : p_(p), d_(d), q_(q), modulus_(std::move(mod)) {
        build_tables();
    }

    // Digits base p <-> polynomial coefficients.
    std::vector<std::uint16_t> digits(std::uint32_t v) const {
        std::vector<std::uint16_t> c(d_, 0);
        for (std::uint32_t i = 0; i < d_; ++i) {
            c[i] = static_cast<std::uint16_t>(v % p_);
            v /= p_;
        }
        return c;
    }

    std::uint32_t undigits(const std::vector<std::uint16_t>& c) const {
        std::uint32_t v = 0;
        for (std::uint32_t i = d_; i-- > 0;) v = v * p_ + c[i];
        return v;
    }

    void build_tables() {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            const auto da = digits(a);
            std::vector<std::uint16_t> na(d_);
            for (std::uint32_t i = 0; i < d_; ++i)
                na[i] = static_cast<std::uint16_t>((p_ - da[i]) % p_);
            neg_[a] = static_cast<FqElem>(undigits(na));
            for (std::uint32_t b = 0; b < q_; ++b) {
                const auto db = digits(b);
                std::vector<std::uint16_t> s(d_);
                for (std::uint32_t i = 0; i < d_; ++i)
                    s[i] = static_cast<std::uint16_t>((da[i] + db[i]) % p_);
                add_[a * q_ + b] = static_cast<FqElem>(undigits(s));

                // Polynomial product reduced by the monic modulus.
                std::vector<std::uint32_t> prod(2 * d_ - 1, 0);
                for (std::uint32_t i = 0; i < d_; ++i)
                    for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] += da[i] * db[j];
                for (std::uint32_t k = 2 * d_ - 1; k-- > d_;) {
                    const std::uint32_t c = prod[k] % p_;
                    if (c == 0) continue;
                    for (std::uint32_t i = 0; i < d_; ++i)
                        prod[k - d_ + i] += c * (p_ - modulus_[i] % p_);
                    prod[k] = 0;
                }
                std::vector<std::uint16_t> r(d_);
                for (std::uint32_t i = 0; i < d_; ++i)
                    r[i] = static_cast<std::uint16_t>(prod[i] % p_);
                mul_[a * q_ + b] = static_cast<FqElem>(undigits(r));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<FqElem>(b);
                    break;
                }
        for (std::uint32_t a = 1; a < q_; ++a)
            check(mul_[a * q_ + inv_[a]] == 1, "field element without inverse; bad modulus?");
    }

    std::uint32_t p_, d_, q_;
    std::vector<std::uint16_t> modulus_;
    std::vector<FqElem> add_, mul_, neg_, inv_;
};

}  // namespace signlab
