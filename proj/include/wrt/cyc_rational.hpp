#pragma once

/**
 * @file cyc_rational.hpp
 * @brief Elements of Q(xi) written as (element of Z[xi]) / (positive integer).
 *
 * Every element of Q(xi) has this form. Inverses come from the extended
 * Euclidean algorithm against the cyclotomic polynomial over Q.
 */

#include "wrt/cyclotomic.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrt {

namespace detail {

/// Dense polynomial over Q, index = degree, no trailing zeros.
using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly sub_scaled_shift(QPoly a, const QPoly& b, const mpq_class& s, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    trim(a);
    return a;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline QPoly sub(QPoly a, const QPoly& b) { return sub_scaled_shift(std::move(a), b, 1, 0); }

/// (quotient, remainder) of a / b.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q;
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class s = a.back() / b.back();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] = s;
        a = sub_scaled_shift(std::move(a), b, s, shift);
    }
    trim(q);
    return {q, a};
}

}  // namespace detail

class CycRational {
public:
    CycRational() = default;
    explicit CycRational(int r) : num_(r), den_(1) {}
    CycRational(CyclotomicInteger num, const mpz_class& den = 1) : num_(std::move(num)), den_(den) {  // NOLINT
        if (den_ == 0) throw std::domain_error("CycRational: zero denominator");
        normalize();
    }

    int r() const { return num_.r(); }
    const CyclotomicInteger& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }

    /// The numerator, asserting the denominator is 1.
    const CyclotomicInteger& as_integer() const {
        if (den_ != 1) throw std::domain_error("CycRational: not a cyclotomic integer");
        return num_;
    }

    CycRational operator-() const { return {-num_, den_}; }

    friend CycRational operator+(const CycRational& a, const CycRational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend CycRational operator-(const CycRational& a, const CycRational& b) { return a + (-b); }
    friend CycRational operator*(const CycRational& a, const CycRational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend CycRational operator/(const CycRational& a, const CycRational& b) { return a * b.inverse(); }
    CycRational& operator+=(const CycRational& o) { return *this = *this + o; }
    CycRational& operator*=(const CycRational& o) { return *this = *this * o; }

    friend bool operator==(const CycRational& a, const CycRational& b) { return a.den_ == b.den_ && a.num_ == b.num_; }
    friend bool operator!=(const CycRational& a, const CycRational& b) { return !(a == b); }

    CycRational galois(long a) const { return {num_.galois(a), den_}; }
    CycRational conjugate() const { return {num_.conjugate(), den_}; }

    CycRational pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        CycRational result(CyclotomicInteger(r(), 1)), base = *this;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    CycRational inverse() const {
        if (is_zero()) throw std::domain_error("CycRational: inverse of zero");
        const int r = num_.r();
        detail::QPoly phi(static_cast<std::size_t>(r), mpq_class(1));
        detail::QPoly a;
        for (const auto& c : num_.coeffs()) a.emplace_back(c);
        detail::trim(a);
        // Invariant: s * num == rem (mod phi).
        detail::QPoly r0 = phi, r1 = a, s0, s1{mpq_class(1)};
        while (r1.size() > 1) {
            auto [q, rem] = detail::divmod(r0, r1);
            detail::QPoly s2 = detail::sub(s0, detail::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw std::domain_error("CycRational: not invertible");
        const mpq_class unit = r1[0];
        // 1/num = s1 / unit * den
        mpz_class common = 1;
        for (auto& c : s1) {
            c = c / unit * mpq_class(den_);
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
        }
        std::vector<mpz_class> coeffs;
        for (const auto& c : s1) coeffs.emplace_back(c.get_num() * (common / c.get_den()));
        return {CyclotomicInteger::from_coeffs(r, coeffs), common};
    }

    std::string to_string() const {
        if (den_ == 1) return num_.to_string();
        return "(" + num_.to_string() + ")/" + den_.get_str();
    }

private:
    CyclotomicInteger num_;
    mpz_class den_ = 1;

    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        mpz_class g = den_;
        for (const auto& c : num_.coeffs()) {
            if (g == 1) break;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        if (g != 1) {
            std::vector<mpz_class> c = num_.coeffs();
            for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            num_ = CyclotomicInteger::from_coeffs(num_.r(), c);
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
        if (num_.is_zero()) den_ = 1;
    }
};

}  // namespace wrt
