#pragma once

/**
 * @file lie.hpp
 * @brief Cartan data of simple Lie algebras, the invariant form on the root
 * lattice, the fundamental alcove and quantum dimensions.
 *
 * Root-lattice vectors are integer coefficient tuples in the simple-root
 * basis. The form is (alpha_i | alpha_j) = d_i a_ij with short roots of
 * squared length 2.
 */

#include "wrt/cyclotomic.hpp"
#include "wrt/laurent_poly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrt {

using RootVector = std::vector<long>;

enum class RootOfUnityError { Even, NotPrime, TooSmall, DividesDeterminant };

inline const char* to_string(RootOfUnityError e) {
    switch (e) {
        case RootOfUnityError::Even: return "even";
        case RootOfUnityError::NotPrime: return "non-prime";
        case RootOfUnityError::TooSmall: return "too-small";
        case RootOfUnityError::DividesDeterminant: return "divides-determinant";
    }
    return "unknown";
}

class InvalidRootOfUnity : public std::invalid_argument {
public:
    InvalidRootOfUnity(RootOfUnityError code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    RootOfUnityError code() const { return code_; }

private:
    RootOfUnityError code_;
};

class CartanDatum {
public:
    CartanDatum(std::string name, std::vector<std::vector<long>> cartan, std::vector<long> d)
        : name_(std::move(name)), cartan_(std::move(cartan)), d_(std::move(d)) {
        const std::size_t l = cartan_.size();
        if (d_.size() != l) throw std::invalid_argument("CartanDatum: symmetrizer size mismatch");
        form_.assign(l, std::vector<long>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) form_[i][j] = d_[i] * cartan_[i][j];
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                if (form_[i][j] != form_[j][i]) throw std::invalid_argument("CartanDatum: d_i a_ij not symmetric");
        build_roots();
        build_rho_and_constants();
    }

    const std::string& name() const { return name_; }
    std::size_t rank() const { return cartan_.size(); }
    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const std::vector<long>& symmetrizers() const { return d_; }
    const std::vector<std::vector<long>>& form() const { return form_; }
    const std::vector<RootVector>& positive_roots() const { return roots_; }
    const std::vector<mpq_class>& rho() const { return rho_; }
    const RootVector& alpha0() const { return alpha0_; }
    long d() const { return dmax_; }
    long dual_coxeter() const { return dual_coxeter_; }
    long num_positive_roots() const { return static_cast<long>(roots_.size()); }
    long dim() const { return static_cast<long>(rank() + 2 * roots_.size()); }
    long det() const { return det_; }

    long pairing(const RootVector& a, const RootVector& b) const {
        if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("pairing: dimension mismatch");
        long s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += a[i] * form_[i][j] * b[j];
        return s;
    }

    /// (rho | mu), asserted integral.
    long rho_pairing(const RootVector& mu) const {
        if (mu.size() != rank()) throw std::invalid_argument("rho_pairing: dimension mismatch");
        mpq_class s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += rho_[i] * form_[i][j] * mu[j];
        if (s.get_den() != 1) throw std::logic_error("rho pairing not integral");
        return s.get_num().get_si();
    }

    void validate_r(long r) const {
        if (r % 2 == 0) throw InvalidRootOfUnity(RootOfUnityError::Even, "r = " + std::to_string(r) + " is even");
        if (!is_prime(r)) throw InvalidRootOfUnity(RootOfUnityError::NotPrime, "r = " + std::to_string(r) + " is not prime");
        if (r < dmax_ * dual_coxeter_)
            throw InvalidRootOfUnity(RootOfUnityError::TooSmall,
                                     "r = " + std::to_string(r) + " is below d*h^v = " + std::to_string(dmax_ * dual_coxeter_));
        if (det_ % r == 0)
            throw InvalidRootOfUnity(RootOfUnityError::DividesDeterminant,
                                     "r = " + std::to_string(r) + " divides det = " + std::to_string(det_));
    }

    long level(long r) const {
        validate_r(r);
        return r - 1 - rho_pairing(alpha0_);
    }

    /// Root-lattice points of the fundamental alcove in lexicographic order.
    std::vector<RootVector> alcove_colors(long r) const {
        const long k = level(r);
        const std::size_t l = rank();
        // Enumerate m_i = (mu | alpha_i) in [0, k] with sum a0_i m_i <= k, then solve form * c = m.
        std::vector<RootVector> out;
        std::vector<long> m(l, 0);
        auto solve = [&](const std::vector<long>& rhs) -> std::optional<RootVector> {
            // Fraction-free enough at rank <= 3: Gaussian elimination over Q.
            std::vector<std::vector<mpq_class>> a(l, std::vector<mpq_class>(l + 1));
            for (std::size_t i = 0; i < l; ++i) {
                for (std::size_t j = 0; j < l; ++j) a[i][j] = form_[i][j];
                a[i][l] = rhs[i];
            }
            for (std::size_t c = 0; c < l; ++c) {
                std::size_t p = c;
                while (a[p][c] == 0) ++p;
                std::swap(a[p], a[c]);
                for (std::size_t i = 0; i < l; ++i) {
                    if (i == c || a[i][c] == 0) continue;
                    mpq_class f = a[i][c] / a[c][c];
                    for (std::size_t j = c; j <= l; ++j) a[i][j] -= f * a[c][j];
                }
            }
            RootVector c(l);
            for (std::size_t i = 0; i < l; ++i) {
                mpq_class x = a[i][l] / a[i][i];
                if (x.get_den() != 1) return std::nullopt;
                c[i] = x.get_num().get_si();
            }
            return c;
        };
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
            if (i == l) {
                if (auto c = solve(m)) out.push_back(*c);
                return;
            }
            for (long v = 0; v * alpha0_[i] <= budget; ++v) {
                m[i] = v;
                rec(i + 1, budget - v * alpha0_[i]);
            }
            m[i] = 0;
        };
        rec(0, k);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_dominant(const RootVector& lambda) const {
        for (std::size_t i = 0; i < rank(); ++i) {
            RootVector e(rank(), 0);
            e[i] = 1;
            if (pairing(lambda, e) < 0) return false;
        }
        return true;
    }

    /// prod_{alpha>0} [(lambda+rho|alpha)] / [(rho|alpha)] in Z[v, v^-1].
    LaurentPoly quantum_dimension_poly(const RootVector& lambda) const {
        if (!is_dominant(lambda)) throw std::invalid_argument("quantum_dimension_poly: weight not dominant");
        LaurentPoly num(1), den(1);
        for (const auto& a : roots_) {
            const long rp = rho_pairing(a);
            num *= v_difference(static_cast<int>(pairing(lambda, a) + rp));
            den *= v_difference(static_cast<int>(rp));
        }
        return num.divide_exact(den);
    }

    /// Classical Weyl dimension prod (lambda+rho|alpha)/(rho|alpha).
    mpz_class weyl_dimension(const RootVector& lambda) const {
        mpq_class x = 1;
        for (const auto& a : roots_) {
            const long rp = rho_pairing(a);
            x *= pairing(lambda, a) + rp;
            x /= rp;
        }
        if (x.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral");
        return x.get_num();
    }

    /// Sign of the longest Weyl element: (-1)^(number of positive roots).
    int sign_w0() const { return roots_.size() % 2 == 0 ? 1 : -1; }

    /// Order of the root of unity zeta needed for almost integrality.
    long zeta_order(long r) const {
        const long l = static_cast<long>(rank());
        if (l % 2 == 0) return sign_w0() == 1 ? r : 4 * r;
        return ((sign_w0() * r) % 4 + 4) % 4 == 1 ? r : 4 * r;
    }

private:
    std::string name_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    std::vector<std::vector<long>> form_;
    std::vector<RootVector> roots_;
    std::vector<mpq_class> rho_;
    RootVector alpha0_;
    long dmax_ = 1;
    long dual_coxeter_ = 0;
    long det_ = 0;

    long norm(const RootVector& a) const { return pairing(a, a); }

    void build_roots() {
        const std::size_t l = rank();
        std::set<RootVector> seen;
        std::vector<RootVector> layer;
        for (std::size_t i = 0; i < l; ++i) {
            RootVector e(l, 0);
            e[i] = 1;
            layer.push_back(e);
            seen.insert(e);
        }
        roots_ = layer;
        // alpha-string: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0.
        while (!layer.empty()) {
            std::vector<RootVector> next;
            for (const auto& b : layer) {
                for (std::size_t i = 0; i < l; ++i) {
                    RootVector ai(l, 0);
                    ai[i] = 1;
                    long p = 0;
                    RootVector down = b;
                    while (true) {
                        down[i] -= 1;
                        if (!seen.count(down)) break;
                        ++p;
                    }
                    const long cop = 2 * pairing(b, ai) / norm(ai);
                    if (p - cop > 0) {
                        RootVector up = b;
                        up[i] += 1;
                        if (seen.insert(up).second) next.push_back(up);
                    }
                }
            }
            roots_.insert(roots_.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }

    void build_rho_and_constants() {
        const std::size_t l = rank();
        rho_.assign(l, 0);
        for (const auto& a : roots_)
            for (std::size_t i = 0; i < l; ++i) rho_[i] += a[i];
        for (auto& x : rho_) x /= 2;
        dmax_ = *std::max_element(d_.begin(), d_.end());
        for (std::size_t i = 0; i < l; ++i) {
            RootVector e(l, 0);
            e[i] = 1;
            if (rho_pairing(e) != d_[i]) throw std::logic_error("CartanDatum: (rho|alpha_i) != d_i");
        }
        long short_norm = 2 * *std::min_element(d_.begin(), d_.end());
        auto height = [](const RootVector& a) {
            long h = 0;
            for (long x : a) h += x;
            return h;
        };
        long best = -1;
        long max_rho = 0;
        for (const auto& a : roots_) {
            rho_pairing(a);
            if (norm(a) == short_norm && height(a) > best) {
                best = height(a);
                alpha0_ = a;
            }
            max_rho = std::max(max_rho, rho_pairing(a));
        }
        if (max_rho % dmax_ != 0) throw std::logic_error("CartanDatum: non-integral dual Coxeter number");
        dual_coxeter_ = 1 + max_rho / dmax_;
        // Bareiss determinant of the Cartan matrix.
        std::vector<std::vector<mpz_class>> m(l, std::vector<mpz_class>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) m[i][j] = cartan_[i][j];
        mpz_class prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < l; ++k) {
            if (m[k][k] == 0) {
                std::size_t p = k + 1;
                while (p < l && m[p][k] == 0) ++p;
                if (p == l) {
                    det_ = 0;
                    return;
                }
                std::swap(m[p], m[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < l; ++i)
                for (std::size_t j = k + 1; j < l; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        det_ = sign * m[l - 1][l - 1].get_si();
    }
};

inline CartanDatum make_sl2() { return {"sl2", {{2}}, {1}}; }

/// Built-in data: A1 (sl2), A2 (sl3), A3 (sl4), B2, G2.
inline CartanDatum cartan_datum(const std::string& name) {
    if (name == "sl2" || name == "A1") return make_sl2();
    if (name == "sl3" || name == "A2") return {"A2", {{2, -1}, {-1, 2}}, {1, 1}};
    if (name == "sl4" || name == "A3") return {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
    if (name == "B2" || name == "so5") return {"B2", {{2, -1}, {-2, 2}}, {2, 1}};
    if (name == "G2") return {"G2", {{2, -3}, {-1, 2}}, {1, 3}};
    throw std::invalid_argument("unknown algebra: " + name);
}

}  // namespace wrt
