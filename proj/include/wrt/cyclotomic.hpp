#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Elements of Z[xi] for xi a primitive r-th root of unity, r an odd prime.
 *
 * Elements are kept in the power basis 1, xi, ..., xi^(r-2); xi^(r-1) is
 * rewritten as -(1 + xi + ... + xi^(r-2)). The representation is unique, so
 * equality is coefficient-wise.
 */

#include "wrt/laurent_poly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrt {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class CyclotomicInteger {
public:
    CyclotomicInteger() = default;

    explicit CyclotomicInteger(int r, const mpz_class& c = 0) : r_(r), coeffs_(check_r(r) - 1) {
        coeffs_[0] = c;
    }

    /// Coefficients of xi^0..xi^(n-1) for any n; higher powers are folded in.
    static CyclotomicInteger from_coeffs(int r, const std::vector<mpz_class>& c) {
        CyclotomicInteger x(r);
        for (std::size_t i = 0; i < c.size(); ++i) x.add_power(static_cast<long>(i), c[i]);
        return x;
    }

    static CyclotomicInteger xi_power(int r, long k, const mpz_class& c = 1) {
        CyclotomicInteger x(r);
        x.add_power(k, c);
        return x;
    }

    int r() const { return r_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// True when the element lies in Z (the constant term only).
    bool is_rational_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    mpz_class coefficient_sum() const {
        mpz_class s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// Adds c * xi^k for any integer k.
    void add_power(long k, const mpz_class& c) {
        if (c == 0) return;
        long e = k % r_;
        if (e < 0) e += r_;
        if (e == r_ - 1) {
            for (auto& x : coeffs_) x -= c;
        } else {
            coeffs_[static_cast<std::size_t>(e)] += c;
        }
    }

    CyclotomicInteger operator-() const {
        CyclotomicInteger x = *this;
        for (auto& c : x.coeffs_) c = -c;
        return x;
    }

    CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
        adopt(o);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CyclotomicInteger& operator-=(const CyclotomicInteger& o) {
        adopt(o);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CyclotomicInteger& operator*=(const CyclotomicInteger& o) { return *this = *this * o; }
    CyclotomicInteger& operator*=(const mpz_class& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
    friend CyclotomicInteger operator*(CyclotomicInteger a, const mpz_class& s) { return a *= s; }

    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        if (a.r_ == 0) return b.r_ == 0 ? CyclotomicInteger{} : CyclotomicInteger(b.r_);
        if (b.r_ == 0) return CyclotomicInteger(a.r_);
        same_ring(a, b);
        const int r = a.r_;
        // Product modulo v^r - 1, then fold the xi^(r-1) coefficient.
        std::vector<mpz_class> acc(static_cast<std::size_t>(r));
        for (int i = 0; i < r - 1; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (int j = 0; j < r - 1; ++j) {
                if (b.coeffs_[j] == 0) continue;
                int k = i + j;
                if (k >= r) k -= r;
                mpz_addmul(acc[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        CyclotomicInteger x(r);
        const mpz_class& top = acc[r - 1];
        for (int i = 0; i < r - 1; ++i) x.coeffs_[i] = acc[i] - top;
        return x;
    }

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        if (a.r_ == 0 || b.r_ == 0) return a.is_zero() && b.is_zero();
        return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CyclotomicInteger& a, const CyclotomicInteger& b) { return !(a == b); }

    CyclotomicInteger pow(unsigned n) const {
        CyclotomicInteger result(r_, 1), base = *this;
        while (n) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return result;
    }

    /// Image under the Galois automorphism xi -> xi^a, gcd(a, r) = 1.
    CyclotomicInteger galois(long a) const {
        if (a % r_ == 0) throw std::invalid_argument("galois: exponent divisible by r");
        CyclotomicInteger x(r_);
        for (int i = 0; i < r_ - 1; ++i) x.add_power(a * i, coeffs_[i]);
        return x;
    }

    /// Complex conjugation xi -> xi^-1.
    CyclotomicInteger conjugate() const { return galois(r_ - 1); }

    /// Coefficient-wise reduction into {0, ..., r-1}.
    CyclotomicInteger mod_r_reduce() const {
        CyclotomicInteger x(r_);
        const mpz_class m = r_;
        for (int i = 0; i < r_ - 1; ++i) {
            mpz_fdiv_r(x.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), m.get_mpz_t());
        }
        return x;
    }

    /// Exact quotient by (xi - 1), or nullopt when (xi - 1) does not divide.
    std::optional<CyclotomicInteger> divide_by_xi_minus_one() const {
        const mpz_class sum = coefficient_sum();
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(r_))) return std::nullopt;
        // p(v) - (sum/r) * Phi_r(v) vanishes at v = 1; divide it by (v - 1).
        const mpz_class s = sum / r_;
        std::vector<mpz_class> p(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_ - 1; ++i) p[i] = coeffs_[i] - s;
        p[r_ - 1] = -s;
        // Synthetic division from the top: q_{i-1} = p_i + q_i.
        CyclotomicInteger q(r_);
        mpz_class carry = 0;
        for (int i = r_ - 1; i >= 1; --i) {
            carry += p[i];
            q.coeffs_[i - 1] = carry;
        }
        return q;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < r_ - 1; ++i) {
            const mpz_class& c = coeffs_[i];
            if (c == 0) continue;
            mpz_class mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) os << mag.get_str() << '*';
            os << "xi";
            if (i != 1) os << '^' << i;
        }
        return first ? "0" : os.str();
    }

private:
    int r_ = 0;  // 0 marks a ring-agnostic zero
    std::vector<mpz_class> coeffs_;

    static int check_r(int r) {
        if (r < 3 || r % 2 == 0 || !is_prime(r)) throw std::invalid_argument("CyclotomicInteger: r must be an odd prime");
        return r;
    }
    static void same_ring(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        if (a.r_ != b.r_) throw std::invalid_argument("CyclotomicInteger: mismatched r");
    }
    void adopt(const CyclotomicInteger& o) {
        if (o.r_ == 0) return;
        if (r_ == 0) *this = CyclotomicInteger(o.r_);
        same_ring(*this, o);
    }
};

/// Largest k with (xi - 1)^k | x together with x / (xi - 1)^k; k = nullopt for x = 0.
struct Valuation {
    std::optional<long> k;  // nullopt means infinity
    CyclotomicInteger quotient;
};

inline Valuation valuation_at_one_minus_xi(const CyclotomicInteger& x) {
    if (x.is_zero()) return {std::nullopt, x};
    long k = 0;
    CyclotomicInteger cur = x;
    while (auto q = cur.divide_by_xi_minus_one()) {
        cur = std::move(*q);
        ++k;
    }
    return {k, cur};
}

/// Image of p under v -> xi^root_power.
inline CyclotomicInteger specialize(const LaurentPoly& p, int r, long root_power = 1) {
    CyclotomicInteger x(r);
    for (const auto& [e, c] : p.terms()) x.add_power(static_cast<long>(e) * root_power, c);
    return x;
}

}  // namespace wrt
