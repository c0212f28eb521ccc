#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Exact Laurent polynomials in Z[v, v^-1].
 *
 * Stored sparsely as (exponent, coefficient) pairs sorted by exponent with no
 * zero coefficient, so equality is structural equality.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrt {

class LaurentPoly {
public:
    using Term = std::pair<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace_back(0, mpz_class(c));
    }
    LaurentPoly(const mpz_class& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace_back(0, c);
    }

    static LaurentPoly monomial(const mpz_class& c, int exp) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(exp, c);
        return p;
    }
    static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

    /// Builds from arbitrary (exp, coeff) pairs; duplicates are summed.
    static LaurentPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        LaurentPoly p;
        for (auto& [e, c] : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == e) {
                p.terms_.back().second += c;
                if (p.terms_.back().second == 0) p.terms_.pop_back();
            } else if (c != 0) {
                p.terms_.emplace_back(e, std::move(c));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

    mpz_class coeff(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.first < e; });
        return (it != terms_.end() && it->first == exp) ? it->second : mpz_class(0);
    }

    mpz_class eval_at_one() const {
        mpz_class s = 0;
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    /// The image under v -> v^-1.
    LaurentPoly mirror() const {
        LaurentPoly p;
        p.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
        return p;
    }

    /// Multiplication by v^shift.
    LaurentPoly shifted(int shift) const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.first += shift;
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = merge(*this, o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = merge(*this, o, true); }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial()) return b.scaled_monomial(a.terms_[0].second, a.terms_[0].first);
        if (b.is_monomial()) return a.scaled_monomial(b.terms_[0].second, b.terms_[0].first);
        const int lo = a.min_exp() + b.min_exp();
        const int hi = a.max_exp() + b.max_exp();
        std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        LaurentPoly p;
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0) p.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly result(1), base = *this;
        while (n) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n) base *= base;
        }
        return result;
    }

    /// Exact quotient by d; throws std::domain_error when d does not divide this.
    LaurentPoly divide_exact(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (is_zero()) return {};
        if (d.is_monomial()) {
            const auto& [de, dc] = d.terms_[0];
            LaurentPoly q;
            for (const auto& [e, c] : terms_) {
                if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
                    throw std::domain_error("LaurentPoly: inexact division");
                q.terms_.emplace_back(e - de, mpz_class(c / dc));
            }
            return q;
        }
        // Dense long division from the top degree.
        const int dlo = d.min_exp(), dhi = d.max_exp();
        const mpz_class& lead = d.terms_.back().second;
        int lo = min_exp(), hi = max_exp();
        std::vector<mpz_class> rem(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [e, c] : terms_) rem[e - lo] = c;
        std::vector<Term> quot;
        for (int top = hi; top - (dhi - dlo) >= lo; --top) {
            mpz_class& c = rem[top - lo];
            if (c == 0) continue;
            if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
                throw std::domain_error("LaurentPoly: inexact division");
            mpz_class qc = c / lead;
            const int qe = top - dhi;
            for (const auto& [e, dc] : d.terms_) rem[qe + e - lo] -= qc * dc;
            quot.emplace_back(qe, std::move(qc));
        }
        for (const auto& c : rem)
            if (c != 0) throw std::domain_error("LaurentPoly: inexact division");
        return from_terms(std::move(quot));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            mpz_class mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) os << mag.get_str() << '*';
            os << 'v';
            if (e != 1) os << '^' << e;
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    LaurentPoly scaled_monomial(const mpz_class& c, int shift) const {
        LaurentPoly p;
        p.terms_.reserve(terms_.size());
        for (const auto& [e, t] : terms_) p.terms_.emplace_back(e + shift, t * c);
        return p;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        LaurentPoly p;
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                p.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                p.terms_.emplace_back(ib->first, subtract ? mpz_class(-ib->second) : ib->second);
                ++ib;
            } else {
                mpz_class c = subtract ? mpz_class(ia->second - ib->second) : mpz_class(ia->second + ib->second);
                if (c != 0) p.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return p;
    }
};

/// Symmetric quantum integer [n] = (v^n - v^-n)/(v - v^-1); [-n] = -[n].
inline LaurentPoly quantum_integer(int n) {
    if (n == 0) return {};
    if (n < 0) return -quantum_integer(-n);
    std::vector<LaurentPoly::Term> t;
    for (int e = n - 1; e >= -(n - 1); e -= 2) t.emplace_back(e, mpz_class(1));
    return LaurentPoly::from_terms(std::move(t));
}

inline LaurentPoly quantum_factorial(int n) {
    LaurentPoly f(1);
    for (int i = 2; i <= n; ++i) f *= quantum_integer(i);
    return f;
}

/// v^n - v^-n.
inline LaurentPoly v_difference(int n) { return LaurentPoly::v(n) - LaurentPoly::v(-n); }

}  // namespace wrt
