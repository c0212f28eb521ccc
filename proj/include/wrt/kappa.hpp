#pragma once

/**
 * @file kappa.hpp
 * @brief Elements c * kappa^e of the quadratic extension Q(xi)[kappa], kappa^2 = F_-/F_+.
 */

#include "wrt/cyc_rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace wrt {

class KappaScalar {
public:
    KappaScalar(CycRational c, long e, std::shared_ptr<const CycRational> kappa_sq)
        : c_(std::move(c)), e_(0), kappa_sq_(std::move(kappa_sq)) {
        if (!kappa_sq_) throw std::invalid_argument("KappaScalar: missing kappa^2");
        const long q = floor_div(e, 2);
        e_ = static_cast<int>(e - 2 * q);
        if (q != 0) c_ = c_ * kappa_sq_->pow(q);
    }

    const CycRational& c() const { return c_; }
    int e() const { return e_; }
    const std::shared_ptr<const CycRational>& kappa_sq() const { return kappa_sq_; }

    friend KappaScalar operator*(const KappaScalar& a, const KappaScalar& b) {
        check_same(a, b);
        return {a.c_ * b.c_, a.e_ + b.e_, a.kappa_sq_};
    }
    friend KappaScalar operator*(const KappaScalar& a, const CycRational& s) { return {a.c_ * s, a.e_, a.kappa_sq_}; }

    /// Only defined for equal kappa exponents; mixed sums have no single-term form.
    friend KappaScalar operator+(const KappaScalar& a, const KappaScalar& b) {
        check_same(a, b);
        if (a.e_ != b.e_) {
            if (a.c_.is_zero()) return b;
            if (b.c_.is_zero()) return a;
            throw std::domain_error("KappaScalar: sum of terms with different kappa exponents");
        }
        return {a.c_ + b.c_, a.e_, a.kappa_sq_};
    }

    KappaScalar inverse() const {
        // (c k^e)^-1 = c^-1 k^-e
        return {c_.inverse(), -e_, kappa_sq_};
    }

    KappaScalar pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        KappaScalar result(CycRational(CyclotomicInteger(c_.r(), 1)), 0, kappa_sq_);
        for (long i = 0; i < n; ++i) result = result * *this;
        return result;
    }

    friend bool operator==(const KappaScalar& a, const KappaScalar& b) {
        return a.e_ == b.e_ && a.c_ == b.c_ && *a.kappa_sq_ == *b.kappa_sq_;
    }
    friend bool operator!=(const KappaScalar& a, const KappaScalar& b) { return !(a == b); }

    std::string to_string() const {
        if (e_ == 0) return c_.to_string();
        return "(" + c_.to_string() + ")*kappa";
    }

private:
    CycRational c_;
    int e_;
    std::shared_ptr<const CycRational> kappa_sq_;

    static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    static void check_same(const KappaScalar& a, const KappaScalar& b) {
        if (a.kappa_sq_ != b.kappa_sq_ && *a.kappa_sq_ != *b.kappa_sq_)
            throw std::invalid_argument("KappaScalar: different kappa contexts");
    }
};

}  // namespace wrt
