#include "wrt/diagram.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wrt;

TEST(Parse, Unknot) {
    auto d = parse_diagram("cupl / capl");
    EXPECT_EQ(d.slices.size(), 2u);
    EXPECT_TRUE(d.closed());
    EXPECT_EQ(analyze_components(d).count, 1);
}

TEST(Parse, CommentsAndLines) {
    auto d = parse_diagram("# an unknot\ncupl   # create\n\ncapl\n");
    EXPECT_EQ(d.slices.size(), 2u);
}

TEST(Parse, ClaspedPlat) {
    auto d = parse_diagram("cupl cupl / id x+ id / id x+ id / capl capl");
    EXPECT_EQ(d.levels[1], (std::vector<int>{1, -1, 1, -1}));
    EXPECT_EQ(d.levels[2], (std::vector<int>{1, 1, -1, -1}));
    auto info = analyze_components(d);
    EXPECT_EQ(info.count, 2);
    ASSERT_EQ(info.crossings.size(), 2u);
    EXPECT_EQ(info.crossings[0].sign, -1);
    EXPECT_EQ(info.crossings[1].sign, -1);
}

TEST(Parse, Errors) {
    auto line_col = [](const std::string& text) -> std::pair<int, int> {
        try {
            parse_diagram(text);
        } catch (const DiagramError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    EXPECT_THROW(parse_diagram("x+"), DiagramError);
    EXPECT_EQ(line_col("x+").first, 1);
    EXPECT_THROW(parse_diagram("cupl\nfoo"), DiagramError);
    EXPECT_EQ(line_col("cupl\nid foo"), std::make_pair(2, 4));
    EXPECT_THROW(parse_diagram("cupl\ncapr"), DiagramError);  // orientation mismatch
    EXPECT_THROW(parse_diagram("cupl"), DiagramError);        // open bottom
    EXPECT_THROW(parse_diagram("cupl\nid"), DiagramError);    // strand left over
    EXPECT_THROW(parse_diagram("cupl\ncoupon:A"), DiagramError);
    EXPECT_THROW(parse_diagram("@top + x"), DiagramError);
    EXPECT_THROW(parse_diagram("cupl //  capl"), DiagramError);

    CouponTable t;
    t["A"] = Coupon{{{1, 1}}, {{1, 1}}, {}};
    EXPECT_THROW(parse_diagram("cupl\ncoupon:A:2:0", t), DiagramError);  // arity mismatch
    EXPECT_NO_THROW(parse_diagram("cupl\ncoupon:A id\ncapl", t));
    EXPECT_THROW(parse_diagram("cupl\nid coupon:A\ncapl", t), DiagramError);  // coupon wants +, strand is -
}

TEST(Parse, OpenTangle) {
    auto d = parse_diagram("@top + +\nx+\n");
    EXPECT_FALSE(d.closed());
    EXPECT_EQ(d.levels.back(), (std::vector<int>{1, 1}));
}

TEST(Parse, RoundTripBuiltins) {
    for (const char* name : {"unknot(3)", "hopf(0,0)", "trefoil_left(-1)", "trefoil_right(2)", "poincare", "brieskorn",
                             "s1xs2", "s3_empty", "s3_stab_pm"}) {
        auto p = builtin(name);
        const std::string text = print_diagram(p.diagram);
        auto again = parse_diagram(text);
        EXPECT_EQ(print_diagram(again), text) << name;
        EXPECT_EQ(again.levels, p.diagram.levels) << name;
    }
    auto open = parse_diagram("@top + -\nid id\ncapl\n");
    EXPECT_EQ(print_diagram(parse_diagram(print_diagram(open))), print_diagram(open));
}

TEST(Components, Counts) {
    EXPECT_EQ(analyze_components(parse_diagram("cupl cupl\ncapl capl")).count, 2);
    EXPECT_EQ(builtin("hopf(0,0)").components.count, 2);
    EXPECT_EQ(builtin("trefoil_left(0)").components.count, 1);
    EXPECT_EQ(builtin("s3_empty").components.count, 0);
    // discovery order: outer strand of the braid closure first
    auto h = builtin("hopf(0,0)");
    EXPECT_EQ(h.components.strand_component[1], (std::vector<int>{0, 0}));
    EXPECT_EQ(h.components.strand_component[2], (std::vector<int>{0, 1, 1, 0}));
}

TEST(Components, Writhe) {
    EXPECT_EQ(builtin("trefoil_right(0)").components.writhe(0), 3);
    EXPECT_EQ(builtin("trefoil_left(0)").components.writhe(0), -3);
    auto kink = parse_diagram("cupl\nid cupl id\nx+ id id\nid capl id\ncapl");
    // one component here: the crossing is between strand and the inner arc
    auto info = analyze_components(kink);
    EXPECT_EQ(info.count, 1);
    EXPECT_EQ(info.writhe(0), 1);
}

TEST(Linking, Examples) {
    auto h = linking_matrix(builtin("hopf(0,0)"));
    EXPECT_EQ(h.matrix, (std::vector<std::vector<long>>{{0, 1}, {1, 0}}));
    EXPECT_EQ(h.sigma_plus, 1);
    EXPECT_EQ(h.sigma_minus, 1);
    EXPECT_EQ(h.nullity, 0);
    EXPECT_EQ(h.det, -1);

    auto u = linking_matrix(builtin("unknot(-1)"));
    EXPECT_EQ(u.matrix, (std::vector<std::vector<long>>{{-1}}));
    EXPECT_EQ(std::make_tuple(u.sigma_plus, u.sigma_minus, u.nullity), std::make_tuple(0, 1, 0));
    auto z = linking_matrix(builtin("unknot(0)"));
    EXPECT_EQ(std::make_tuple(z.sigma_plus, z.sigma_minus, z.nullity), std::make_tuple(0, 0, 1));

    auto plat = FramedLinkPresentation(parse_diagram("cupl cupl / id x+ id / id x+ id / capl capl"));
    EXPECT_EQ(linking_matrix(plat).matrix[0][1], -1);
}

TEST(Linking, OddCrossingsRejected) {
    FramedLinkPresentation p(parse_diagram("cupl\nid cupl id\nx+ id id\nid capl id\ncapl"));
    // a single crossing joining a closed loop to itself is fine
    EXPECT_NO_THROW(linking_matrix(p));
    // colored components are excluded from the linking matrix
    auto h = builtin("hopf(0,0)");
    h.color[1] = 1;
    EXPECT_EQ(linking_matrix(h).matrix.size(), 1u);
}

TEST(Linking, Betti) {
    EXPECT_EQ(betti1(builtin("unknot(0)")), 1);
    EXPECT_EQ(betti1(builtin("trefoil_left(-1)")), 0);
    EXPECT_EQ(betti1(builtin("s3_empty")), 0);
    for (const char* name : {"unknot(3)", "hopf(0,0)", "hopf(2,-3)", "hopf(1,1)", "poincare", "brieskorn", "s1xs2",
                             "s3_empty", "s3_stab_pm"}) {
        auto l = linking_matrix(builtin(name));
        EXPECT_EQ(l.sigma_plus + l.sigma_minus + l.nullity, static_cast<int>(l.matrix.size())) << name;
    }
}

TEST(Inertia, CongruenceInvariance) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) b[i][j] = b[j][i] = (trial % 3 == 0 && i != j) ? 0 : e(rng);
        // random unimodular S: product of elementary operations
        std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i) s[i][i] = 1;
        for (int k = 0; k < 6 && n > 1; ++k) {
            std::size_t i = rng() % n, j = rng() % n;
            if (i == j) continue;
            const int f = e(rng);
            for (std::size_t r = 0; r < n; ++r) s[r][j] += f * s[r][i];
        }
        std::vector<std::vector<mpq_class>> t(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) t[i][j] += s[k][i] * b[k][l] * s[l][j];
        auto a = symmetric_inertia(b), c = symmetric_inertia(t);
        EXPECT_EQ(a.plus, c.plus);
        EXPECT_EQ(a.minus, c.minus);
        EXPECT_EQ(a.nullity, c.nullity);
        EXPECT_EQ(a.det, c.det);
    }
}

TEST(Inertia, KnownCases) {
    auto in = symmetric_inertia({{0, 0}, {0, 0}});
    EXPECT_EQ(in.nullity, 2);
    in = symmetric_inertia({{0, 2, 0}, {2, 0, 0}, {0, 0, -5}});
    EXPECT_EQ(in.plus, 1);
    EXPECT_EQ(in.minus, 2);
    EXPECT_EQ(in.det, 20);
    // E8 form is positive definite with determinant 1
    std::vector<std::vector<mpq_class>> e8(8, std::vector<mpq_class>(8));
    for (int i = 0; i < 8; ++i) e8[i][i] = 2;
    const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
    for (const auto& ed : edges) e8[ed[0]][ed[1]] = e8[ed[1]][ed[0]] = -1;
    in = symmetric_inertia(e8);
    EXPECT_EQ(in.plus, 8);
    EXPECT_EQ(in.det, 1);
}

TEST(Builtin, Library) {
    auto p = builtin("poincare");
    EXPECT_EQ(print_diagram(p.diagram), print_diagram(builtin("trefoil_left(-1)").diagram));
    EXPECT_EQ(p.framing_of(0), -1);
    EXPECT_EQ(builtin("brieskorn").components.writhe(0), 3);
    EXPECT_EQ(builtin("builtin:s1xs2").framing_of(0), 0);
    EXPECT_EQ(builtin("s3_empty").diagram.slices.size(), 0u);
    auto s = builtin("s3_stab_pm");
    EXPECT_EQ(s.framing_of(0), 1);
    EXPECT_EQ(s.framing_of(1), -1);
    EXPECT_THROW(builtin("lens(5)"), std::invalid_argument);
    EXPECT_THROW(builtin("unknot"), std::invalid_argument);
    EXPECT_THROW(builtin("hopf(1)"), std::invalid_argument);
}

TEST(Builtin, DisjointUnion) {
    auto u = disjoint_union(builtin("hopf(1,2)"), builtin("unknot(-1)"));
    EXPECT_EQ(u.components.count, 3);
    auto l = linking_matrix(u);
    EXPECT_EQ(l.matrix, (std::vector<std::vector<long>>{{1, 1, 0}, {1, 2, 0}, {0, 0, -1}}));
}

TEST(ComponentNames, Parse) {
    EXPECT_EQ(parse_component_name("C1", 2), 0);
    EXPECT_EQ(parse_component_name("C2", 2), 1);
    EXPECT_THROW(parse_component_name("C3", 2), std::invalid_argument);
    EXPECT_THROW(parse_component_name("X1", 2), std::invalid_argument);
    EXPECT_THROW(parse_component_name("C1x", 2), std::invalid_argument);
    EXPECT_EQ(component_name(4), "C5");
}
