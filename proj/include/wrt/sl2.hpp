#pragma once

/**
 * @file sl2.hpp
 * @brief Alcove-colored U_v(sl2) modules over Z[v, v^-1]: actions, braiding, duality, twist, quantum trace.
 *
 * Conventions. V_n has basis b_0..b_{2n}, b_j of weight (n-j)alpha, so
 * K^{1/2} b_j = v^{n-j} b_j. A strand colored (n, -) carries the dual module
 * V_n^* on the dual basis, with weights negated. The coproduct is
 *   Delta(E) = E (x) K^{1/2} + K^{-1/2} (x) E,
 * and the braiding is c = P Psi Thetabar with
 *   Thetabar = sum_t v^{t(t-1)/2} (v - v^-1)^t / [t]! (E K^{1/2})^t (x) (K^{-1/2} F)^t.
 * The pivotal element is K, so tr_q(f) = tr(K f).
 */

#include "wrt/laurent_poly.hpp"
#include "wrt/matrix.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace wrt {

using PolyMatrix = SparseMatrix<LaurentPoly>;

/// A strand label: color n (module V_{n alpha}) and orientation sign (+1 for V, -1 for V^*).
struct StrandColor {
    int n = 0;
    int sign = 1;
    int dim() const { return 2 * n + 1; }
    friend auto operator<=>(const StrandColor&, const StrandColor&) = default;
};

using ObjectWord = std::vector<StrandColor>;

inline std::size_t word_dimension(const ObjectWord& w) {
    std::size_t d = 1;
    for (const auto& s : w) d *= static_cast<std::size_t>(s.dim());
    return d;
}

inline std::string word_to_string(const ObjectWord& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i].n) + (w[i].sign > 0 ? "+" : "-");
    }
    return s + ")";
}

/// A morphism between tensor words, stored as a sparse exact matrix.
template <class T>
struct MorphismMatrix {
    ObjectWord domain;
    ObjectWord codomain;
    SparseMatrix<T> matrix;

    MorphismMatrix compose(const MorphismMatrix& first) const {
        if (first.codomain != domain) throw std::invalid_argument("compose: word mismatch");
        return {first.domain, codomain, matrix * first.matrix};
    }

    MorphismMatrix tensor(const MorphismMatrix& o) const {
        ObjectWord d = domain, c = codomain;
        d.insert(d.end(), o.domain.begin(), o.domain.end());
        c.insert(c.end(), o.codomain.begin(), o.codomain.end());
        return {d, c, matrix.kron(o.matrix)};
    }

    friend bool operator==(const MorphismMatrix& a, const MorphismMatrix& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.matrix == b.matrix;
    }
};

/// Action data of one module on its standard basis.
struct IrrepModule {
    StrandColor color;
    std::vector<int> weight;  // in units of alpha
    PolyMatrix E, F;

    int dim() const { return static_cast<int>(weight.size()); }

    PolyMatrix K() const { return diagonal_power(2); }
    PolyMatrix K_half() const { return diagonal_power(1); }
    PolyMatrix K_half_inv() const { return diagonal_power(-1); }

    PolyMatrix diagonal_power(int scale) const {
        PolyMatrix m(weight.size(), weight.size());
        for (std::size_t j = 0; j < weight.size(); ++j) m.add(j, j, LaurentPoly::v(scale * weight[j]));
        return m;
    }
};

inline IrrepModule irrep(int n) {
    if (n < 0) throw std::invalid_argument("irrep: negative color");
    const int d = 2 * n + 1;
    IrrepModule m{{n, 1}, std::vector<int>(d), PolyMatrix(d, d), PolyMatrix(d, d)};
    for (int j = 0; j < d; ++j) {
        m.weight[j] = n - j;
        if (j > 0) m.E.add(j - 1, j, quantum_integer(2 * n - j + 1));
        if (j + 1 < d) m.F.add(j + 1, j, quantum_integer(j + 1));
    }
    return m;
}

/// Dual module on the dual basis; X acts by -(v^{w_i - w_j} X_ij) transposed.
inline IrrepModule dual(const IrrepModule& V) {
    const std::size_t d = V.weight.size();
    IrrepModule m{{V.color.n, -V.color.sign}, std::vector<int>(d), PolyMatrix(d, d), PolyMatrix(d, d)};
    for (std::size_t j = 0; j < d; ++j) m.weight[j] = -V.weight[j];
    auto dualize = [&](const PolyMatrix& X, PolyMatrix& out) {
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [i, x] : X.column(j)) out.add(j, i, -(x * LaurentPoly::v(V.weight[i] - V.weight[j])));
    };
    dualize(V.E, m.E);
    dualize(V.F, m.F);
    return m;
}

inline const IrrepModule& module_for(StrandColor c) {
    static std::mutex mu;
    static std::map<StrandColor, std::unique_ptr<IrrepModule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[c];
    if (!slot) slot = std::make_unique<IrrepModule>(c.sign > 0 ? irrep(c.n) : dual(irrep(c.n)));
    return *slot;
}

enum class Generator { E, F, K };

/// Action of a generator on a tensor word via the iterated coproduct.
inline MorphismMatrix<LaurentPoly> tensor_action(Generator g, const ObjectWord& word) {
    if (word.empty()) throw std::invalid_argument("tensor_action: empty word");
    auto factor = [&](std::size_t pos, std::size_t i) -> PolyMatrix {
        const auto& M = module_for(word[i]);
        if (g == Generator::K) return M.K();
        if (i < pos) return M.K_half_inv();
        if (i > pos) return M.K_half();
        return g == Generator::E ? M.E : M.F;
    };
    const std::size_t n = word_dimension(word);
    PolyMatrix total(n, n);
    const std::size_t terms = g == Generator::K ? 1 : word.size();
    for (std::size_t pos = 0; pos < terms; ++pos) {
        PolyMatrix t = factor(pos, 0);
        for (std::size_t i = 1; i < word.size(); ++i) t = t.kron(factor(pos, i));
        total = total + t;
    }
    return {word, word, total};
}

namespace detail {

inline PolyMatrix matrix_power(const PolyMatrix& m, int t) {
    PolyMatrix out = PolyMatrix::identity(m.rows(), LaurentPoly(1));
    for (int i = 0; i < t; ++i) out = m * out;
    return out;
}

/// Thetabar on X (x) Y.
/// Theta-bar on X (x) Y, or its inverse: the same series in (E K^{1/2})^t (x) (K^{-1/2} F)^t
/// with coefficients (-1)^t v^{-t(t-1)/2} (v - v^-1)^t / [t]!.
inline PolyMatrix theta_bar(const IrrepModule& X, const IrrepModule& Y, bool inverse = false) {
    const PolyMatrix a = X.E * X.K_half();
    const PolyMatrix b = Y.K_half_inv() * Y.F;
    const int tmax = std::min(X.dim(), Y.dim()) - 1;
    PolyMatrix total = PolyMatrix::identity(static_cast<std::size_t>(X.dim() * Y.dim()), LaurentPoly(1));
    for (int t = 1; t <= tmax; ++t) {
        const LaurentPoly fact = quantum_factorial(t);
        PolyMatrix at = matrix_power(a, t).map([&](const LaurentPoly& x) { return x.divide_exact(fact); });
        if (at.is_zero_matrix()) break;
        LaurentPoly coeff = LaurentPoly::v((inverse ? -1 : 1) * t * (t - 1) / 2) * v_difference(1).pow(static_cast<unsigned>(t));
        if (inverse && t % 2 == 1) coeff = -coeff;
        total = total + at.kron(matrix_power(b, t)).scaled(coeff);
    }
    return total;
}

/// Row permutation (i, k) -> (k, i) from X (x) Y into Y (x) X, with Psi weights.
inline PolyMatrix flip_psi(const IrrepModule& X, const IrrepModule& Y, int psi_sign) {
    const std::size_t dx = X.weight.size(), dy = Y.weight.size();
    PolyMatrix m(dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t k = 0; k < dy; ++k)
            m.add(k * dx + i, i * dy + k, LaurentPoly::v(psi_sign * 2 * X.weight[i] * Y.weight[k]));
    return m;
}

inline PolyMatrix unipotent_inverse(const PolyMatrix& u) {
    const PolyMatrix id = PolyMatrix::identity(u.rows(), LaurentPoly(1));
    const PolyMatrix neg_n = id - u;
    PolyMatrix term = id, total = id;
    for (std::size_t s = 0; s < u.rows(); ++s) {
        term = neg_n * term;
        if (term.is_zero_matrix()) return total;
        total = total + term;
    }
    throw std::logic_error("unipotent_inverse: matrix is not unipotent");
}

}  // namespace detail

/// c_{X,Y}: X (x) Y -> Y (x) X (inverse = false) or c^{-1}_{X,Y}: Y (x) X -> X (x) Y.
/// Results are cached and shared.
inline std::shared_ptr<const PolyMatrix> braiding_shared(StrandColor x, StrandColor y, bool inverse) {
    static std::mutex mu;
    static std::map<std::tuple<StrandColor, StrandColor, bool>, std::shared_ptr<const PolyMatrix>> cache;
    const auto key = std::make_tuple(x, y, inverse);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto& X = module_for(x);
    const auto& Y = module_for(y);
    const PolyMatrix tb = detail::theta_bar(X, Y, inverse);
    PolyMatrix result = inverse ? tb * detail::flip_psi(X, Y, -1).transpose() : detail::flip_psi(X, Y, 1) * tb;
    auto ptr = std::make_shared<const PolyMatrix>(std::move(result));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(ptr)).first->second;
}

inline MorphismMatrix<LaurentPoly> braiding(StrandColor x, StrandColor y) {
    return {{x, y}, {y, x}, *braiding_shared(x, y, false)};
}

/// Inverse of braiding(x, y), as a map y (x) x -> x (x) y.
inline MorphismMatrix<LaurentPoly> braiding_inverse(StrandColor x, StrandColor y) {
    return {{y, x}, {x, y}, *braiding_shared(x, y, true)};
}

inline LaurentPoly twist_scalar(int n) { return LaurentPoly::v(2 * n * n + 2 * n); }

/// The four duality morphisms. "l" pieces carry (V, V^*), "r" pieces carry (V^*, V).
enum class DualityPiece { CupL, CupR, CapL, CapR };

inline MorphismMatrix<LaurentPoly> duality_morphism(DualityPiece p, int n) {
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    const StrandColor plus{n, 1}, minus{n, -1};
    const bool is_cup = p == DualityPiece::CupL || p == DualityPiece::CupR;
    const bool left = p == DualityPiece::CupL || p == DualityPiece::CapL;
    const ObjectWord pair = left ? ObjectWord{plus, minus} : ObjectWord{minus, plus};
    PolyMatrix m = is_cup ? PolyMatrix(d * d, 1) : PolyMatrix(1, d * d);
    for (std::size_t j = 0; j < d; ++j) {
        const int w = n - static_cast<int>(j);
        LaurentPoly x(1);
        if (p == DualityPiece::CupR) x = LaurentPoly::v(-2 * w);  // sum b_j^* (x) K^{-1} b_j
        if (p == DualityPiece::CapL) x = LaurentPoly::v(2 * w);   // x (x) f -> f(K x)
        const std::size_t idx = j * d + j;
        if (is_cup) {
            m.add(idx, 0, x);
        } else {
            m.add(0, idx, x);
        }
    }
    if (is_cup) return {{}, pair, m};
    return {pair, {}, m};
}

inline MorphismMatrix<LaurentPoly> identity_morphism(const ObjectWord& w) {
    return {w, w, PolyMatrix::identity(word_dimension(w), LaurentPoly(1))};
}

/// tr(K f) for an endomorphism of a word.
inline LaurentPoly quantum_trace(const MorphismMatrix<LaurentPoly>& f) {
    if (f.domain != f.codomain) throw std::invalid_argument("quantum_trace: not an endomorphism");
    if (f.domain.empty()) return f.matrix.at(0, 0, LaurentPoly(0));
    return (tensor_action(Generator::K, f.domain).matrix * f.matrix).trace(LaurentPoly(0));
}

}  // namespace wrt
