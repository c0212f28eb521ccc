#pragma once

/**
 * @file series.hpp
 * @brief Expansion of Laurent polynomials at v = e^(h/2) as truncated power series in h.
 */

#include "wrt/laurent_poly.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace wrt {

/// Coefficients of h^0..h^order of p(e^(h/2)).
inline std::vector<mpq_class> h_expand(const LaurentPoly& p, int order) {
    if (order < 0) throw std::invalid_argument("h_expand: negative order");
    std::vector<mpq_class> out(static_cast<std::size_t>(order) + 1);
    mpz_class fact = 1;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) fact *= j;
        mpq_class s = 0;
        for (const auto& [e, c] : p.terms()) {
            // (e/2)^j
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), mpz_class(e).get_mpz_t(), static_cast<unsigned long>(j));
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(j));
            mpq_class t(c * num, den);
            t.canonicalize();
            s += t;
        }
        s /= mpq_class(fact);
        s.canonicalize();
        out[static_cast<std::size_t>(j)] = s;
    }
    return out;
}

/// Element of Q[h]/(h^(order+1)).
///
/// Stored as integers a_j = 2^j j! c_j, which is exact for every image of
/// Z[v, v^-1] (a_j = sum c_e e^j) and closed under products:
/// a_j(fg) = sum_i binom(j, i) a_i(f) a_(j-i)(g).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int order, const std::vector<mpq_class>& c) : a_(static_cast<std::size_t>(order) + 1) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < a_.size(); ++j) {
            if (j > 0) scale *= 2 * static_cast<unsigned long>(j);
            if (j < c.size()) {
                mpq_class x = c[j] * scale;
                if (x.get_den() != 1) throw std::invalid_argument("TruncatedSeries: coefficient outside the image of Z[v, v^-1]");
                a_[j] = x.get_num();
            }
        }
    }
    static TruncatedSeries constant(int order, const mpq_class& x) { return {order, std::vector<mpq_class>{x}}; }

    /// p(e^(h/2)) truncated at h^order.
    static TruncatedSeries from_laurent(const LaurentPoly& p, int order) {
        TruncatedSeries s;
        s.a_.assign(static_cast<std::size_t>(order) + 1, 0);
        for (const auto& [e, c] : p.terms()) {
            mpz_class pw = c;
            for (auto& x : s.a_) {
                x += pw;
                pw *= e;
            }
        }
        return s;
    }

    int order() const { return static_cast<int>(a_.size()) - 1; }
    std::vector<mpq_class> coeffs() const {
        std::vector<mpq_class> c(a_.size());
        mpz_class scale = 1;
        for (std::size_t j = 0; j < a_.size(); ++j) {
            if (j > 0) scale *= 2 * static_cast<unsigned long>(j);
            c[j] = mpq_class(a_[j], scale);
            c[j].canonicalize();
        }
        return c;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        adopt(o);
        for (std::size_t i = 0; i < o.a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a.adopt(b);
        for (std::size_t i = 0; i < b.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (auto& x : out.a_) x = -x;
        return out;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out;
        out.add_product(a, b);
        return out;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// *this += a * b without temporaries.
    void add_product(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.a_.empty() || b.a_.empty()) {
            if (a.a_.size() + b.a_.size() > 0) adopt(a.a_.empty() ? b : a);
            return;
        }
        if (a.a_.size() != b.a_.size()) throw std::invalid_argument("TruncatedSeries: order mismatch");
        adopt(a);
        const auto& binom = binomials(a_.size());
        mpz_class t;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a.a_[i] == 0) continue;
            for (std::size_t k = 0; i + k < a_.size(); ++k) {
                if (b.a_[k] == 0) continue;
                mpz_mul(t.get_mpz_t(), a.a_[i].get_mpz_t(), b.a_[k].get_mpz_t());
                mpz_addmul_ui(a_[i + k].get_mpz_t(), t.get_mpz_t(), binom[i + k][i]);
            }
        }
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.a_.empty() || b.a_.empty()) return a.is_zero() && b.is_zero();
        return a.a_ == b.a_;
    }

private:
    std::vector<mpz_class> a_;  // empty marks an order-agnostic zero

    void adopt(const TruncatedSeries& o) {
        if (o.a_.empty()) return;
        if (a_.empty()) a_.resize(o.a_.size());
        if (a_.size() != o.a_.size()) throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    static const std::vector<std::vector<unsigned long>>& binomials(std::size_t n) {
        thread_local std::vector<std::vector<unsigned long>> table;
        while (table.size() < n) {
            const std::size_t j = table.size();
            std::vector<unsigned long> row(j + 1, 1);
            for (std::size_t i = 1; i < j; ++i) row[i] = table[j - 1][i - 1] + table[j - 1][i];
            table.push_back(std::move(row));
        }
        return table;
    }
};

/// Cauchy product of two coefficient sequences truncated at `order`.
inline std::vector<mpq_class> cauchy_product(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int order) {
    std::vector<mpq_class> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace wrt
