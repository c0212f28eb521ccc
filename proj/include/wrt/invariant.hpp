#pragma once

/**
 * @file invariant.hpp
 * @brief Color sums F_(L, Omega), the normalizers F_+-, kappa, eta, and the invariants tau and eta*tau.
 *
 * Conventions: kappa^2 = F_-/F_+, eta = kappa F_+ (so kappa eta = F_-), and
 *   tau(M) = F kappa^(b1 + w + 1) / (F_-^(s_- + b1 + 1) F_+^(s_+)),
 *   eta tau(M) = F kappa^(b1 + w) / (F_-^(s_- + b1) F_+^(s_+)).
 * Divisions by F_+- first remove the (xi - 1)-power exactly, then multiply by
 * the inverse of the remaining unit.
 */

#include "wrt/cyc_rational.hpp"
#include "wrt/cyclotomic.hpp"
#include "wrt/diagram.hpp"
#include "wrt/evaluate.hpp"
#include "wrt/kappa.hpp"
#include "wrt/lie.hpp"

#include <atomic>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wrt {

/// Raised when a color sum has fewer (xi - 1) factors than required.
class DivisibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline unsigned default_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

struct FValueOptions {
    long root_power = 1;
    unsigned workers = 1;
    std::optional<std::vector<int>> color_order;  // permutation of the alcove colors to sum over
};

/// Colors allowed at r: 0..(r-3)/2.
inline std::vector<int> sl2_alcove(int r) {
    make_sl2().validate_r(r);
    std::vector<int> out;
    for (const auto& mu : make_sl2().alcove_colors(r)) out.push_back(static_cast<int>(mu[0]));
    return out;
}

/// F_(L, Omega): sum over alcove colorings mu of the surgery components of
/// prod qdim(mu_i) * J(Omega u L(mu)), at v = xi^root_power.
inline CyclotomicInteger F_value(const FramedLinkPresentation& p, int r, const FValueOptions& opt = {}) {
    std::vector<int> alcove = sl2_alcove(r);
    if (opt.color_order) {
        std::vector<int> a = *opt.color_order, b = alcove;
        std::sort(a.begin(), a.end());
        if (a != b) throw std::invalid_argument("F_value: color order is not a permutation of the alcove");
        alcove = *opt.color_order;
    }
    const CyclotomicRing ring{r, opt.root_power};
    const std::vector<int> surgery = p.surgery_components();
    std::vector<int> base(static_cast<std::size_t>(p.components.count), 0);
    for (const auto& [c, n] : p.color) {
        if (c < 0 || c >= p.components.count) throw std::invalid_argument("F_value: color for a missing component");
        if (n < 0 || n > (r - 3) / 2)
            throw std::invalid_argument("F_value: color " + std::to_string(n) + " of " + component_name(c) +
                                        " is outside the alcove at r = " + std::to_string(r));
        base[static_cast<std::size_t>(c)] = n;
    }
    for (int c : surgery)
        if (p.components.touches_coupon[static_cast<std::size_t>(c)])
            throw std::invalid_argument("F_value: surgery component " + component_name(c) + " meets a coupon");

    const std::size_t m = surgery.size();
    const std::size_t a = alcove.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= a;

    std::vector<CyclotomicInteger> qdim;
    for (int n : alcove) qdim.push_back(ring.map(quantum_integer(2 * n + 1)));

    auto term = [&](DiagramEvaluator<CyclotomicRing>& ev, std::size_t index) {
        std::vector<int> colors = base;
        CyclotomicInteger weight(r, 1);
        for (std::size_t i = m; i-- > 0;) {
            const std::size_t digit = index % a;
            index /= a;
            colors[static_cast<std::size_t>(surgery[i])] = alcove[digit];
            weight *= qdim[digit];
        }
        return weight * ev.evaluate_closed(p, colors);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(total)));
    std::vector<CyclotomicInteger> partial(total, CyclotomicInteger(r));
    if (workers == 1) {
        DiagramEvaluator<CyclotomicRing> ev(ring);
        for (std::size_t i = 0; i < total; ++i) partial[i] = term(ev, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    DiagramEvaluator<CyclotomicRing> ev(ring);
                    for (std::size_t i = next++; i < total; i = next++) partial[i] = term(ev, i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    CyclotomicInteger sum(r);
    for (const auto& x : partial) sum += x;
    return sum;
}

/// Fixed data for one root of unity: F_+-, kappa^2, and the unit parts of F_+-.
class InvariantContext {
public:
    explicit InvariantContext(int r, long root_power = 1, unsigned workers = 1)
        : r_(r), root_power_(root_power), workers_(workers), k_((r - 3) / 2) {
        auto g = make_sl2();
        g.validate_r(r);
        if (std::gcd(root_power, static_cast<long>(r)) != 1) throw std::invalid_argument("root power must be prime to r");
        zeta_order_ = g.zeta_order(r);
        FValueOptions opt{root_power, workers, std::nullopt};
        F_plus_ = F_value(builtin("unknot(1)"), r, opt);
        F_minus_ = F_value(builtin("unknot(-1)"), r, opt);
        auto vp = valuation_at_one_minus_xi(F_plus_), vm = valuation_at_one_minus_xi(F_minus_);
        if (vp.k != k_ || vm.k != k_)
            throw std::logic_error("F_+- do not have (xi - 1)-valuation (r - 3)/2 at r = " + std::to_string(r));
        u_plus_inv_ = unit_inverse(vp.quotient);
        u_minus_inv_ = unit_inverse(vm.quotient);
        kappa_sq_ = std::make_shared<const CycRational>(CycRational(vm.quotient * u_plus_inv_));
    }

    int r() const { return r_; }
    long root_power() const { return root_power_; }
    unsigned workers() const { return workers_; }
    long k() const { return k_; }
    long zeta_order() const { return zeta_order_; }
    const CyclotomicInteger& F_plus() const { return F_plus_; }
    const CyclotomicInteger& F_minus() const { return F_minus_; }
    const std::shared_ptr<const CycRational>& kappa_sq() const { return kappa_sq_; }

    KappaScalar scalar(const CycRational& c, long e = 0) const { return {c, e, kappa_sq_}; }
    KappaScalar kappa() const { return scalar(one(), 1); }
    KappaScalar eta() const { return scalar(CycRational(F_plus_), 1); }
    KappaScalar eta_inverse() const { return scalar(CycRational(F_minus_).inverse(), 1); }

    CycRational one() const { return CycRational(CyclotomicInteger(r_, 1)); }

    /// x / (F_-^a F_+^b) where x has (xi - 1)-valuation at least k (a + b).
    CyclotomicInteger divide_by_normalizers(const CyclotomicInteger& x, long a, long b) const {
        if (a < 0 || b < 0) throw std::invalid_argument("divide_by_normalizers: negative exponent");
        auto v = valuation_at_one_minus_xi(x);
        if (!v.k) return CyclotomicInteger(r_);
        const long need = k_ * (a + b);
        if (*v.k < need)
            throw DivisibilityError("valuation " + std::to_string(*v.k) + " is below the required " + std::to_string(need));
        const auto pi = CyclotomicInteger::xi_power(r_, 1) - CyclotomicInteger(r_, 1);
        CyclotomicInteger q = v.quotient * pi.pow(static_cast<unsigned>(*v.k - need));
        q *= u_minus_inv_.pow(static_cast<unsigned>(a));
        q *= u_plus_inv_.pow(static_cast<unsigned>(b));
        return q;
    }

    FValueOptions f_options() const { return {root_power_, workers_, std::nullopt}; }

private:
    int r_;
    long root_power_;
    unsigned workers_;
    long k_;
    long zeta_order_ = 0;
    CyclotomicInteger F_plus_, F_minus_, u_plus_inv_, u_minus_inv_;
    std::shared_ptr<const CycRational> kappa_sq_;

    static CyclotomicInteger unit_inverse(const CyclotomicInteger& u) {
        CycRational inv = CycRational(u).inverse();
        if (!inv.is_integral()) throw std::logic_error("unit part of F_+- is not invertible in Z[xi]");
        return inv.num();
    }
};

struct TauResult {
    KappaScalar value;
    int m = 0, sigma_plus = 0, sigma_minus = 0, betti1 = 0;
    long w = 0;
    long required = 0;  // required (xi - 1)-valuation, m (r - 3)/2
    std::optional<long> actual;
    CyclotomicInteger F;
};

struct DivisibilityCertificate {
    long required = 0;
    std::optional<long> actual;  // nullopt: F = 0
    bool pass = false;
};

inline DivisibilityCertificate divisibility_certificate(const FramedLinkPresentation& p, const InvariantContext& ctx) {
    const auto F = F_value(p, ctx.r(), ctx.f_options());
    const long m = static_cast<long>(p.surgery_components().size());
    DivisibilityCertificate c;
    c.required = m * ctx.k();
    c.actual = valuation_at_one_minus_xi(F).k;
    c.pass = !c.actual || *c.actual >= c.required;
    return c;
}

/// eta * tau(M), with the full metadata.
inline TauResult projective_invariant(const FramedLinkPresentation& p, const InvariantContext& ctx, long w = 0) {
    const LinkingData lk = linking_matrix(p);
    TauResult out{ctx.scalar(ctx.one()), static_cast<int>(lk.components.size()), lk.sigma_plus, lk.sigma_minus,
                  lk.nullity, w, 0, std::nullopt, CyclotomicInteger(ctx.r())};
    out.F = F_value(p, ctx.r(), ctx.f_options());
    out.required = out.m * ctx.k();
    out.actual = valuation_at_one_minus_xi(out.F).k;
    const CyclotomicInteger c = ctx.divide_by_normalizers(out.F, out.sigma_minus + out.betti1, out.sigma_plus);
    out.value = ctx.scalar(CycRational(c), out.betti1 + w);
    return out;
}

/// tau(M) = (eta tau(M)) * eta^-1.
inline TauResult tau(const FramedLinkPresentation& p, const InvariantContext& ctx, long w = 0) {
    TauResult out = projective_invariant(p, ctx, w);
    out.value = out.value * ctx.eta_inverse();
    return out;
}

struct IntegralityReport {
    bool integral = false;
    int kappa_exp = 0;
    long zeta_order = 0;
    KappaScalar value;
};

/// Checks that eta * tau(M) has a cyclotomic-integer coefficient.
inline IntegralityReport almost_integrality_check(const FramedLinkPresentation& p, const InvariantContext& ctx, long w = 0) {
    const auto t = projective_invariant(p, ctx, w);
    return {t.value.c().is_integral(), t.value.e(), ctx.zeta_order(), t.value};
}

/// All s in 0..r-1 with x = xi^s conj(x) mod r.
inline std::vector<int> congruence_test(const CyclotomicInteger& x) {
    const int r = x.r();
    if (r == 0) throw std::invalid_argument("congruence_test: element without a ring");
    std::vector<int> out;
    const CyclotomicInteger bar = x.conjugate();
    for (int s = 0; s < r; ++s)
        if ((x - CyclotomicInteger::xi_power(r, s) * bar).mod_r_reduce().is_zero()) out.push_back(s);
    return out;
}

/// Dimension of the state space of a genus-g surface with marked points, by
/// truncated fusion at level r - 2. Duals of sl2 modules are isomorphic to the modules.
inline long tqft_dimension(int genus, const std::vector<StrandColor>& marks, int r) {
    if (genus < 0) throw std::invalid_argument("tqft_dimension: negative genus");
    const std::vector<int> alcove = sl2_alcove(r);
    const int top = alcove.back();
    for (const auto& mk : marks)
        if (mk.n < 0 || mk.n > top)
            throw std::invalid_argument("tqft_dimension: mark color " + std::to_string(mk.n) + " is outside the alcove");
    using State = std::vector<long>;
    auto fuse = [&](const State& s, int b) {
        State out(s.size(), 0);
        for (int a = 0; a <= top; ++a) {
            if (s[static_cast<std::size_t>(a)] == 0) continue;
            for (int c = std::abs(a - b); c <= std::min(a + b, r - 2 - a - b); ++c) out[static_cast<std::size_t>(c)] += s[static_cast<std::size_t>(a)];
        }
        return out;
    };
    State s(static_cast<std::size_t>(top) + 1, 0);
    s[0] = 1;
    for (const auto& mk : marks) s = fuse(s, mk.n);
    for (int h = 0; h < genus; ++h) {
        State acc(s.size(), 0);
        for (int lam : alcove) {
            const State t = fuse(fuse(s, lam), lam);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += t[i];
        }
        s = acc;
    }
    return s[0];
}

}  // namespace wrt
