#include "wrt/evaluate.hpp"
#include "wrt/invariant.hpp"
#include "wrt/lie.hpp"
#include "wrt/periodicity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace wrt;

namespace {

FramedLinkPresentation from_text(const std::string& text, CouponTable coupons = {}) {
    auto c = coupons;
    return FramedLinkPresentation(parse_diagram(text, c), std::move(coupons));
}

// 2-braid sigma^q closed up, all strands downward.
std::string two_braid_closure(int q) {
    std::string s = "cupl\nid cupl id\n";
    for (int i = 0; i < std::abs(q); ++i) s += q > 0 ? "x+ id id\n" : "x- id id\n";
    return s + "id capl id\ncapl\n";
}

// (sigma1 sigma2^-1)^2 closed up on three strands.
const char* kFigureEight =
    "cupl\nid cupl id\nid id cupl id id\n"
    "x+ id id id id\nid x- id id id\nx+ id id id id\nid x- id id id\n"
    "id id capl id id\nid capl id\ncapl\n";

// Rosso-Jones for T(2, q): V_n (x) V_n = sum_j V_j, the braiding acts on V_j by
// (-1)^(2n-j) v^(j(j+1) - 2n(n+1)); result at framing 0.
LaurentPoly torus_2q_oracle(int n, int q) {
    LaurentPoly sum(0);
    for (int j = 0; j <= 2 * n; ++j) {
        LaurentPoly term = LaurentPoly::v(q * (j * (j + 1) - 2 * n * (n + 1))) * quantum_integer(2 * j + 1);
        if (((2 * n - j) * q) % 2 != 0) term = -term;
        sum += term;
    }
    return sum * LaurentPoly::v(-q * (2 * n * n + 2 * n));
}

FramedLinkPresentation colored_unknot(int n) {
    auto u = builtin("unknot(0)");
    u.color[0] = n;
    return u;
}

CouponTable galois_coupons(const CouponTable& t, long a) {
    CouponTable out = t;
    for (auto& [name, c] : out) c.matrix = c.matrix.map([&](const CyclotomicInteger& x) { return x.galois(a); });
    return out;
}

}  // namespace

TEST(Evaluate, UnknotIsQuantumDimension) {
    const auto g = make_sl2();
    for (int n = 0; n <= 5; ++n) {
        const LaurentPoly j = evaluate_J_symbolic(builtin("unknot(0)"), {n});
        EXPECT_EQ(j, quantum_integer(2 * n + 1)) << n;
        EXPECT_EQ(j, g.quantum_dimension_poly({n})) << n;
        for (int f : {-2, -1, 1, 3})
            EXPECT_EQ(evaluate_J_symbolic(builtin("unknot(" + std::to_string(f) + ")"), {n}), j * LaurentPoly::v(f * (2 * n * n + 2 * n)));
    }
}

TEST(Evaluate, EmptyDiagramIsOne) {
    EXPECT_EQ(evaluate_J_symbolic(builtin("s3_empty"), {}), LaurentPoly(1));
    DiagramEvaluator<CyclotomicRing> ev(CyclotomicRing{7, 1});
    EXPECT_EQ(ev.evaluate_closed(builtin("empty"), {}), CyclotomicInteger(7, 1));
}

TEST(Evaluate, TorusKnotOracle) {
    for (int q : {3, 5, -3, -5}) {
        auto p = from_text(two_braid_closure(q));
        ASSERT_EQ(p.components.count, 1);
        for (int n = 0; n <= 3; ++n) {
            p.framing[0] = 0;
            EXPECT_EQ(evaluate_J_symbolic(p, {n}), torus_2q_oracle(n, q)) << "q=" << q << " n=" << n;
        }
    }
    // Hopf link: two components, both colored n, q = 2; self-writhe is already zero
    for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(evaluate_J_symbolic(builtin("hopf(0,0)"), {n, n}), torus_2q_oracle(n, 2) * twist_scalar(n).pow(2)) << n;
}

TEST(Evaluate, HopfLinkMatchesSMatrix) {
    // J(Hopf; a, b) = [(2a+1)(2b+1)] at framing 0
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            const LaurentPoly j = evaluate_J_symbolic(builtin("hopf(0,0)"), {a, b});
            const LaurentPoly s = quantum_integer((2 * a + 1) * (2 * b + 1));
            EXPECT_EQ(j, s) << a << "," << b;
        }
}

TEST(Evaluate, PlatMatchesBraidClosure) {
    auto right_plat = from_text("cupl cupr\nid x+ id\nid x+ id\nid x+ id\ncapl capr\n");
    auto left_plat = from_text("cupr cupl\nid x- id\nid x- id\nid x- id\ncapr capl\n");
    auto upward = from_text("cupr\nid cupr id\nx+ id id\nx+ id id\nx+ id id\nid capr id\ncapr\n");
    ASSERT_EQ(right_plat.components.count, 1);
    ASSERT_EQ(upward.components.writhe(0), 3);
    for (auto* p : {&right_plat, &left_plat, &upward}) p->framing[0] = 0;
    for (int n = 0; n <= 2; ++n) {
        const LaurentPoly r = evaluate_J_symbolic(builtin("trefoil_right(0)"), {n});
        EXPECT_EQ(evaluate_J_symbolic(right_plat, {n}), r) << n;
        EXPECT_EQ(evaluate_J_symbolic(upward, {n}), r) << n;
        EXPECT_EQ(evaluate_J_symbolic(left_plat, {n}), evaluate_J_symbolic(builtin("trefoil_left(0)"), {n})) << n;
    }
}

TEST(Evaluate, MirrorConjugates) {
    for (int n = 1; n <= 2; ++n) {
        auto r = builtin("trefoil_right(0)");
        FramedLinkPresentation m(mirror(r.diagram));
        m.framing[0] = 0;
        const LaurentPoly jr = evaluate_J_symbolic(r, {n});
        EXPECT_EQ(evaluate_J_symbolic(m, {n}), jr.mirror());
        EXPECT_NE(jr, jr.mirror());
    }
}

TEST(Evaluate, FigureEightIsAmphichiral) {
    auto p = from_text(kFigureEight);
    ASSERT_EQ(p.components.count, 1);
    EXPECT_EQ(p.components.writhe(0), 0);
    for (int n = 0; n <= 2; ++n) {
        const LaurentPoly j = evaluate_J_symbolic(p, {n});
        EXPECT_EQ(j, j.mirror()) << n;
        if (n > 0) EXPECT_NE(j, quantum_integer(2 * n + 1));
    }
}

TEST(Evaluate, ClosedRingsAgree) {
    // the cyclotomic route is the specialization of the symbolic one
    for (const char* name : {"trefoil_left(-1)", "hopf(1,2)"}) {
        auto p = builtin(name);
        std::vector<int> colors(static_cast<std::size_t>(p.components.count), 1);
        DiagramEvaluator<CyclotomicRing> ev(CyclotomicRing{7, 3});
        EXPECT_EQ(ev.evaluate_closed(p, colors), specialize(evaluate_J_symbolic(p, colors), 7, 3)) << name;
    }
}

TEST(Evaluate, CouponErrors) {
    CouponTable t;
    SparseMatrix<CyclotomicInteger> id3(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id3.add(i, i, CyclotomicInteger(5, 1));
    t["A"] = Coupon{{{1, 1}}, {{1, 1}}, id3};
    auto p = from_text("cupl\ncoupon:A id\ncapl\n", t);
    p.color[0] = 1;
    DiagramEvaluator<CyclotomicRing> ev(CyclotomicRing{5, 1});
    // identity coupon leaves the unknot value
    EXPECT_EQ(ev.evaluate_closed(p, {1}), specialize(quantum_integer(3), 5));
    EXPECT_THROW(ev.evaluate_closed(p, {2}), std::invalid_argument);  // color mismatch
    EXPECT_THROW(evaluate_J_symbolic(p, {1}), std::invalid_argument);
    auto q = p;
    q.color.clear();
    EXPECT_THROW(F_value(q, 5), std::invalid_argument);  // surgery component through a coupon
}

TEST(Normalizers, ValuationIsExact) {
    for (int r : {5, 7, 11}) {
        InvariantContext ctx(r);
        EXPECT_EQ(valuation_at_one_minus_xi(ctx.F_plus()).k, (r - 3) / 2);
        EXPECT_EQ(valuation_at_one_minus_xi(ctx.F_minus()).k, (r - 3) / 2);
        EXPECT_EQ(valuation_at_one_minus_xi(ctx.F_plus() * ctx.F_minus()).k, r - 3);
        // F_- is the conjugate of F_+
        EXPECT_EQ(ctx.F_minus(), ctx.F_plus().conjugate());
    }
    EXPECT_THROW(InvariantContext(9), std::invalid_argument);
    EXPECT_THROW(InvariantContext(5, 5), std::invalid_argument);
}

TEST(Normalizers, KappaIsRootOfUnity) {
    for (int r : {5, 7, 11}) {
        InvariantContext ctx(r);
        const CycRational k2 = *ctx.kappa_sq();
        EXPECT_EQ(k2.pow(2 * r), ctx.one()) << r;
        // kappa * eta = F_-
        const KappaScalar ke = ctx.kappa() * ctx.eta();
        EXPECT_EQ(ke.e(), 0);
        EXPECT_EQ(ke.c(), CycRational(ctx.F_minus()));
        // eta^2 = F_+ F_-
        const KappaScalar e2 = ctx.eta() * ctx.eta();
        EXPECT_EQ(e2.c(), CycRational(ctx.F_plus() * ctx.F_minus()));
        EXPECT_EQ((ctx.eta() * ctx.eta_inverse()).c(), ctx.one());
    }
}

TEST(Tau, SphereAndKirbyMoves) {
    for (int r : {5, 7}) {
        InvariantContext ctx(r);
        const auto s3 = tau(builtin("s3_empty"), ctx).value;
        EXPECT_EQ(s3, ctx.eta_inverse()) << r;
        EXPECT_EQ(s3.e(), 1);
        EXPECT_EQ(tau(builtin("s3_stab_pm"), ctx).value, s3);
        EXPECT_EQ(tau(builtin("unknot(1)"), ctx).value, s3);
        EXPECT_EQ(tau(builtin("unknot(-1)"), ctx).value, s3);
        EXPECT_EQ(tau(builtin("hopf(0,0)"), ctx).value, s3);
        EXPECT_EQ(tau(builtin("hopf(2,1)"), ctx).value, tau(builtin("unknot(1)"), ctx).value);
        EXPECT_EQ(tau(builtin("hopf(-3,-1)"), ctx).value, tau(builtin("unknot(-2)"), ctx).value);

        const auto s1s2 = tau(builtin("s1xs2"), ctx);
        EXPECT_EQ(s1s2.value.e(), 0);
        EXPECT_EQ(s1s2.value.c(), ctx.one());
        EXPECT_EQ(s1s2.betti1, 1);

        // stabilization of a nontrivial manifold
        for (const char* name : {"poincare", "brieskorn", "unknot(3)"}) {
            const auto base = tau(builtin(name), ctx).value;
            EXPECT_EQ(tau(disjoint_union(builtin(name), builtin("unknot(1)")), ctx).value, base) << name;
            EXPECT_EQ(tau(disjoint_union(builtin(name), builtin("unknot(-1)")), ctx).value, base) << name;
        }
    }
}

TEST(Tau, WeightEntersAsKappaPower) {
    InvariantContext ctx(5);
    const auto t0 = tau(builtin("poincare"), ctx).value;
    EXPECT_EQ(tau(builtin("poincare"), ctx, 1).value, t0 * ctx.kappa());
    EXPECT_EQ(tau(builtin("poincare"), ctx, -2).value, t0 * ctx.kappa().pow(-2));
}

TEST(Tau, LensSpacesOfFramingPlusMinus) {
    // L(p,1) and -L(p,1) are conjugate: tau(unknot(-p)) = conj(tau(unknot(p))) on the integral part
    for (int r : {5, 7}) {
        InvariantContext ctx(r);
        for (int p : {2, 3}) {
            const auto a = projective_invariant(builtin("unknot(" + std::to_string(p) + ")"), ctx);
            const auto b = projective_invariant(builtin("unknot(" + std::to_string(-p) + ")"), ctx);
            EXPECT_EQ(a.sigma_plus, 1);
            EXPECT_EQ(b.sigma_minus, 1);
            EXPECT_TRUE(a.value.c().is_integral());
            EXPECT_TRUE(b.value.c().is_integral());
        }
    }
}

TEST(Divisibility, DeskScaleInstances) {
    for (int r : {5, 7}) {
        InvariantContext ctx(r);
        for (const char* name : {"unknot(1)", "unknot(-1)", "hopf(0,0)", "trefoil_left(-1)"}) {
            const auto L = builtin(name);
            for (bool with_omega : {false, true}) {
                const auto p = with_omega ? disjoint_union(L, colored_unknot(1)) : L;
                const auto c = divisibility_certificate(p, ctx);
                EXPECT_EQ(c.required, static_cast<long>(L.components.count) * (r - 3) / 2);
                EXPECT_TRUE(c.pass) << name << " r=" << r << " omega=" << with_omega;
            }
        }
        // colored component linked with the surgery link
        auto h = builtin("hopf(0,0)");
        h.color[1] = 1;
        EXPECT_TRUE(divisibility_certificate(h, ctx).pass);
        auto t = builtin("hopf(1,-2)");
        t.color[0] = (r - 3) / 2;
        EXPECT_TRUE(divisibility_certificate(t, ctx).pass);
    }
}

TEST(Integrality, BuiltinManifolds) {
    for (int r : {5, 7}) {
        InvariantContext ctx(r);
        for (const char* name : {"unknot(0)", "unknot(2)", "unknot(-3)", "hopf(0,0)", "hopf(1,2)", "hopf(2,-1)",
                                 "trefoil_left(-1)", "trefoil_right(-1)", "trefoil_right(2)", "poincare", "brieskorn",
                                 "s1xs2", "s3_empty", "s3_stab_pm"}) {
            for (long w : {0L, 1L}) {
                const auto rep = almost_integrality_check(builtin(name), ctx, w);
                EXPECT_TRUE(rep.integral) << name << " r=" << r;
                EXPECT_TRUE(rep.kappa_exp == 0 || rep.kappa_exp == 1);
                EXPECT_EQ(rep.zeta_order, r == 5 ? 20 : 7);
            }
        }
    }
}

TEST(FValue, GaloisEquivariance) {
    const int r = 5;
    CouponTable t;
    SparseMatrix<CyclotomicInteger> a(3, 3);
    a.add(0, 0, CyclotomicInteger::xi_power(r, 1));
    a.add(1, 1, CyclotomicInteger(r, 2) + CyclotomicInteger::xi_power(r, 2));
    a.add(2, 0, CyclotomicInteger::xi_power(r, 3, -1));
    a.add(1, 2, CyclotomicInteger(r, 1));
    t["A"] = Coupon{{{1, 1}}, {{1, 1}}, a};
    const std::string text = "cupl cupl\nid x+ id\nid x+ id\ncoupon:A id id id\ncapl capl\n";
    auto p = from_text(text, t);
    p.color[0] = 1;
    p.framing[1] = 1;
    for (long g : {2L, 3L, 4L}) {
        auto pg = from_text(text, galois_coupons(t, g));
        pg.color = p.color;
        pg.framing = p.framing;
        const auto f1 = F_value(p, r);
        EXPECT_EQ(F_value(pg, r, {g, 1, std::nullopt}), f1.galois(g)) << g;

        InvariantContext c1(r, 1), cg(r, g);
        EXPECT_EQ(*cg.kappa_sq(), c1.kappa_sq()->galois(g));
        const auto t1 = projective_invariant(p, c1).value, tg = projective_invariant(pg, cg).value;
        EXPECT_EQ(tg.e(), t1.e());
        EXPECT_EQ(tg.c(), t1.c().galois(g));
    }
    for (const char* name : {"poincare", "hopf(1,2)"})
        EXPECT_EQ(F_value(builtin(name), 7, {3, 1, std::nullopt}), F_value(builtin(name), 7).galois(3)) << name;
}

TEST(FValue, OrderAndWorkerIndependence) {
    const auto p = builtin("hopf(1,2)");
    const auto base = F_value(p, 7);
    std::vector<int> order = sl2_alcove(7);
    std::reverse(order.begin(), order.end());
    EXPECT_EQ(F_value(p, 7, {1, 1, order}), base);
    std::rotate(order.begin(), order.begin() + 1, order.end());
    EXPECT_EQ(F_value(p, 7, {1, 2, order}), base);
    for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(F_value(p, 7, {1, w, std::nullopt}), base) << w;
    EXPECT_THROW(F_value(p, 7, {1, 1, std::vector<int>{0, 1}}), std::invalid_argument);
    InvariantContext c1(5, 1, 1), c4(5, 1, 4);
    EXPECT_EQ(tau(builtin("poincare"), c1).value, tau(builtin("poincare"), c4).value);
}

TEST(FValue, MultiplicativeUnderDisjointUnion) {
    for (int r : {5, 7}) {
        const auto a = builtin("trefoil_left(-1)"), b = builtin("hopf(1,2)");
        EXPECT_EQ(F_value(disjoint_union(a, b), r), F_value(a, r) * F_value(b, r)) << r;
        auto c = colored_unknot((r - 3) / 2);
        EXPECT_EQ(F_value(disjoint_union(b, c), r), F_value(b, r) * F_value(c, r)) << r;
    }
}

TEST(FValue, ColorOutsideAlcoveRejected) {
    auto p = colored_unknot(3);
    EXPECT_THROW(F_value(p, 5), std::invalid_argument);
    EXPECT_NO_THROW(F_value(p, 11));
}

TEST(TqftDimension, Examples) {
    EXPECT_EQ(tqft_dimension(0, {}, 5), 1);
    EXPECT_EQ(tqft_dimension(1, {}, 5), 2);
    EXPECT_EQ(tqft_dimension(1, {}, 7), 3);
    EXPECT_EQ(tqft_dimension(2, {}, 5), 5);
    EXPECT_EQ(tqft_dimension(0, {{1, 1}, {1, -1}}, 5), 1);
    EXPECT_EQ(tqft_dimension(0, {{2, 1}, {2, -1}}, 7), 1);
    EXPECT_EQ(tqft_dimension(0, {{1, 1}}, 5), 0);
    EXPECT_EQ(tqft_dimension(0, {{1, 1}, {1, 1}, {1, 1}}, 5), 1);
    EXPECT_THROW(tqft_dimension(0, {{2, 1}}, 5), std::invalid_argument);
    EXPECT_THROW(tqft_dimension(-1, {}, 5), std::invalid_argument);
}

TEST(Congruence, Basics) {
    const int r = 7;
    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(congruence_test(CyclotomicInteger(r)), all);
    EXPECT_EQ(congruence_test(CyclotomicInteger(r, 1)), std::vector<int>{0});
    EXPECT_EQ(congruence_test(CyclotomicInteger::xi_power(r, 2)), std::vector<int>{4});
    const auto x = CyclotomicInteger::xi_power(r, 1) + CyclotomicInteger(r, 3) + CyclotomicInteger::xi_power(r, 4, 2);
    auto w = congruence_test(x), wc = congruence_test(x.conjugate());
    std::vector<int> neg;
    for (int s : w) neg.push_back((r - s) % r);
    std::sort(neg.begin(), neg.end());
    EXPECT_EQ(wc, neg);
}

TEST(Periodicity, PoincareSphere) {
    const auto rep = periodicity_scan("poincare", builtin("poincare"), {5, 7, 11, 13});
    ASSERT_EQ(rep.entries.size(), 4u);
    EXPECT_EQ(rep.entries[0].verdict(), "consistent-with-periodicity");
    EXPECT_FALSE(rep.entries[0].witnesses.empty());
    EXPECT_EQ(rep.entries[0].projective, CyclotomicInteger::from_coeffs(5, {-1, -1, 0, -2}));
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_TRUE(rep.entries[i].obstructed()) << rep.entries[i].r;
        EXPECT_EQ(rep.entries[i].verdict(), "obstructed");
    }
    // verdicts are Galois invariant; witnesses scale by a
    for (const auto& e : rep.entries)
        for (long a = 2; a < e.r; ++a) {
            std::vector<int> scaled;
            for (int s : e.witnesses) scaled.push_back(static_cast<int>((a * s) % e.r));
            std::sort(scaled.begin(), scaled.end());
            EXPECT_EQ(congruence_test(e.projective.galois(a)), scaled) << e.r << " " << a;
        }
}

TEST(Periodicity, BrieskornAndMirror) {
    for (int r : {5, 7}) {
        InvariantContext ctx(r);
        const auto p = projective_invariant(builtin("poincare"), ctx).value;
        const auto m = projective_invariant(builtin("trefoil_right(1)"), ctx).value;
        EXPECT_EQ(p.e(), 0);
        EXPECT_EQ(m.e(), 0);
        EXPECT_EQ(m.c(), p.c().conjugate()) << r;
    }
    const auto rep = periodicity_scan("brieskorn", builtin("brieskorn"), {7});
    EXPECT_FALSE(rep.entries[0].obstructed());
}

TEST(Periodicity, RejectsNonHomologySpheres) {
    EXPECT_THROW(periodicity_scan("s1xs2", builtin("s1xs2"), {5}), NotHomologySphere);
    EXPECT_THROW(periodicity_scan("l2", builtin("unknot(2)"), {5}), NotHomologySphere);
    EXPECT_NO_THROW(periodicity_scan("s3", builtin("s3_empty"), {5}));
}
