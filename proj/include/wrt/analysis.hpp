#pragma once

/**
 * @file analysis.hpp
 * @brief The sl2 weight system on chord diagrams and degree checks of h-expansion coefficients.
 */

#include "wrt/diagram.hpp"
#include "wrt/evaluate.hpp"
#include "wrt/matrix.hpp"
#include "wrt/series.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace wrt {

using QMatrix = SparseMatrix<mpq_class>;

/// A chord end: component index (strands first, then circles) and position along it.
struct ChordEnd {
    int component = 0;
    int position = 0;
    friend auto operator<=>(const ChordEnd&, const ChordEnd&) = default;
};

struct ChordDiagram {
    int strands = 0;
    int circles = 0;
    std::vector<int> orientation;  // per component, +1 or -1; empty means all +1
    std::vector<std::pair<ChordEnd, ChordEnd>> chords;

    int components() const { return strands + circles; }
    int orientation_of(int c) const { return orientation.empty() ? 1 : orientation.at(static_cast<std::size_t>(c)); }

    void validate() const {
        if (strands < 0 || circles < 0) throw std::invalid_argument("ChordDiagram: negative component count");
        if (!orientation.empty() && static_cast<int>(orientation.size()) != components())
            throw std::invalid_argument("ChordDiagram: orientation list has the wrong length");
        std::vector<ChordEnd> ends;
        for (const auto& [a, b] : chords) {
            for (const auto& e : {a, b})
                if (e.component < 0 || e.component >= components())
                    throw std::invalid_argument("ChordDiagram: chord end on a missing component");
            ends.push_back(a);
            ends.push_back(b);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
            throw std::invalid_argument("ChordDiagram: two chord ends at the same point");
    }

    /// `above` followed by `below` on the same strands (no circles).
    static ChordDiagram stack(const ChordDiagram& above, const ChordDiagram& below) {
        if (above.circles || below.circles || above.strands != below.strands)
            throw std::invalid_argument("ChordDiagram::stack: need equal strand counts and no circles");
        ChordDiagram out = above;
        if (out.orientation.empty()) out.orientation = below.orientation;
        std::vector<int> shift(static_cast<std::size_t>(above.strands), 0);
        for (const auto& [a, b] : above.chords)
            for (const auto& e : {a, b})
                shift[static_cast<std::size_t>(e.component)] = std::max(shift[static_cast<std::size_t>(e.component)], e.position + 1);
        for (auto [a, b] : below.chords) {
            a.position += shift[static_cast<std::size_t>(a.component)];
            b.position += shift[static_cast<std::size_t>(b.component)];
            out.chords.emplace_back(a, b);
        }
        return out;
    }
};

/// Classical sl2 action on V_n: generators E, F, H.
struct ClassicalSl2 {
    QMatrix E, F, H;
};

inline ClassicalSl2 classical_sl2(int n) {
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    ClassicalSl2 g{QMatrix(d, d), QMatrix(d, d), QMatrix(d, d)};
    for (std::size_t j = 0; j < d; ++j) {
        const long jj = static_cast<long>(j);
        if (j > 0) g.E.add(j - 1, j, mpq_class(2 * n - jj + 1));
        if (j + 1 < d) g.F.add(j + 1, j, mpq_class(jj + 1));
        g.H.add(j, j, mpq_class(2 * (n - jj)));
    }
    return g;
}

/// Killing-form dual pairs (x_i, x^i): E with F/4, F with E/4, H with H/8.
inline std::vector<std::pair<QMatrix, QMatrix>> killing_dual_pairs(int n) {
    const auto g = classical_sl2(n);
    return {{g.E, g.F.scaled(mpq_class(1, 4))}, {g.F, g.E.scaled(mpq_class(1, 4))}, {g.H, g.H.scaled(mpq_class(1, 8))}};
}

/// Casimir eigenvalue on V_n for the Killing-normalized Casimir.
inline mpq_class casimir_eigenvalue(int n) {
    mpq_class c(n * (n + 1), 2);
    c.canonicalize();
    return c;
}

/// The state sum of the sl2 weight system: a matrix on the tensor product of
/// the strand modules, with closed circles traced.
inline QMatrix weight_sl2(const ChordDiagram& c, const std::vector<int>& colors) {
    c.validate();
    if (static_cast<int>(colors.size()) != c.components()) throw std::invalid_argument("weight_sl2: one color per component");
    std::vector<std::vector<std::pair<QMatrix, QMatrix>>> pairs;
    for (int comp = 0; comp < c.components(); ++comp) {
        auto p = killing_dual_pairs(colors[static_cast<std::size_t>(comp)]);
        if (c.orientation_of(comp) < 0)
            for (auto& [x, y] : p) {
                x = x.transpose().scaled(mpq_class(-1));
                y = y.transpose().scaled(mpq_class(-1));
            }
        pairs.push_back(std::move(p));
    }
    // points on each component in position order: (position, chord, which end)
    std::vector<std::vector<std::tuple<int, std::size_t, int>>> points(static_cast<std::size_t>(c.components()));
    for (std::size_t k = 0; k < c.chords.size(); ++k) {
        points[static_cast<std::size_t>(c.chords[k].first.component)].emplace_back(c.chords[k].first.position, k, 0);
        points[static_cast<std::size_t>(c.chords[k].second.component)].emplace_back(c.chords[k].second.position, k, 1);
    }
    for (auto& p : points) std::sort(p.begin(), p.end());

    std::size_t dim = 1;
    for (int s = 0; s < c.strands; ++s) dim *= static_cast<std::size_t>(2 * colors[static_cast<std::size_t>(s)] + 1);
    QMatrix total(dim, dim);
    const std::size_t nchords = c.chords.size();
    std::vector<int> state(nchords, 0);
    while (true) {
        auto component_op = [&](int comp) {
            const std::size_t d = static_cast<std::size_t>(2 * colors[static_cast<std::size_t>(comp)] + 1);
            QMatrix op = QMatrix::identity(d, mpq_class(1));
            for (const auto& [pos, k, end] : points[static_cast<std::size_t>(comp)]) {
                const auto& pr = pairs[static_cast<std::size_t>(comp)][static_cast<std::size_t>(state[k])];
                op = (end == 0 ? pr.first : pr.second) * op;
            }
            return op;
        };
        mpq_class scalar = 1;
        for (int circ = c.strands; circ < c.components() && scalar != 0; ++circ) scalar *= component_op(circ).trace();
        if (scalar != 0) {
            QMatrix term = QMatrix::identity(1, mpq_class(1));
            for (int s = 0; s < c.strands; ++s) term = term.kron(component_op(s));
            total = total + term.scaled(scalar);
        }
        std::size_t k = 0;
        while (k < nchords && ++state[k] == 3) state[k++] = 0;
        if (k == nchords) break;
    }
    return total;
}

inline QMatrix weight_sl2(const ChordDiagram& c, int color) {
    return weight_sl2(c, std::vector<int>(static_cast<std::size_t>(c.components()), color));
}

// ---- degree checks

/// Minimal d such that the (d+1)-st finite difference of f vanishes on all
/// samples, i.e. f agrees with a polynomial of degree d. nullopt for the zero
/// sequence; throws when the samples cannot certify any degree.
inline std::optional<int> finite_difference_degree(std::vector<mpq_class> f) {
    if (std::all_of(f.begin(), f.end(), [](const mpq_class& x) { return x == 0; })) return std::nullopt;
    // Delta^(d+1) f == 0 needs at least one value of Delta^(d+1), i.e. d + 2 <= samples
    const int samples = static_cast<int>(f.size());
    for (int d = 0; d + 2 <= samples; ++d) {
        for (std::size_t i = 0; i + 1 < f.size(); ++i) f[i] = f[i + 1] - f[i];
        f.pop_back();
        if (std::all_of(f.begin(), f.end(), [](const mpq_class& x) { return x == 0; })) return d;
    }
    throw std::domain_error("finite_difference_degree: too few samples to certify a degree");
}

/// Minimal total degree of a function sampled on the grid {0..N}^m (row-major, last variable fastest).
inline std::optional<int> total_degree_on_grid(const std::vector<mpq_class>& values, int m, int side) {
    if (m == 1) return finite_difference_degree(values);
    if (std::all_of(values.begin(), values.end(), [](const mpq_class& x) { return x == 0; })) return std::nullopt;
    // total degree <= d iff every mixed difference of order d + 1 vanishes
    auto mixed_zero = [&](const std::vector<int>& alpha) {
        std::vector<mpq_class> g = values;
        std::vector<int> len(static_cast<std::size_t>(m), side);
        auto idx = [&](const std::vector<int>& p, const std::vector<int>& l) {
            std::size_t k = 0;
            for (int i = 0; i < m; ++i) k = k * static_cast<std::size_t>(l[static_cast<std::size_t>(i)]) + static_cast<std::size_t>(p[static_cast<std::size_t>(i)]);
            return k;
        };
        for (int var = 0; var < m; ++var)
            for (int t = 0; t < alpha[static_cast<std::size_t>(var)]; ++t) {
                std::vector<int> nl = len;
                nl[static_cast<std::size_t>(var)] -= 1;
                std::size_t count = 1;
                for (int x : nl) count *= static_cast<std::size_t>(x);
                std::vector<mpq_class> h(count);
                std::vector<int> p(static_cast<std::size_t>(m), 0);
                for (std::size_t k = 0; k < count; ++k) {
                    std::size_t rem = k;
                    for (int i = m - 1; i >= 0; --i) {
                        p[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(nl[static_cast<std::size_t>(i)]));
                        rem /= static_cast<std::size_t>(nl[static_cast<std::size_t>(i)]);
                    }
                    std::vector<int> q = p;
                    q[static_cast<std::size_t>(var)] += 1;
                    h[k] = g[idx(q, len)] - g[idx(p, len)];
                }
                g = std::move(h);
                len = nl;
            }
        return std::all_of(g.begin(), g.end(), [](const mpq_class& x) { return x == 0; });
    };
    for (int d = 0; d + 2 <= side; ++d) {
        bool ok = true;
        std::vector<int> alpha(static_cast<std::size_t>(m), 0);
        // enumerate compositions of d + 1 into m parts
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (!ok) return;
            if (var == m - 1) {
                alpha[static_cast<std::size_t>(var)] = left;
                if (!mixed_zero(alpha)) ok = false;
                return;
            }
            for (int a = 0; a <= left; ++a) {
                alpha[static_cast<std::size_t>(var)] = a;
                rec(var + 1, left - a);
            }
        };
        rec(0, d + 1);
        if (ok) return d;
    }
    throw std::domain_error("total_degree_on_grid: too few samples to certify a degree");
}

struct DegreeReport {
    int max_color = 0, order = 0, components = 0;
    std::vector<std::optional<int>> measured;  // per h-order; nullopt = identically zero
    std::vector<bool> certified;               // false when the grid is too small to pin the degree
    std::vector<int> bound;                    // 2i + m
    bool pass() const {
        for (std::size_t i = 0; i < measured.size(); ++i)
            if (!certified[i] || (measured[i] && *measured[i] > bound[i])) return false;
        return true;
    }
};

/// h-expansion coefficients of J on the color grid {0..N}^m, one series per grid point.
inline std::vector<TruncatedSeries> series_on_grid(const FramedLinkPresentation& p, int max_color, int order, unsigned workers = 1) {
    const std::vector<int> comps = p.surgery_components();
    if (p.components.count != static_cast<int>(comps.size()) || comps.empty())
        throw std::invalid_argument("degree check: every component must be an uncolored family component");
    const int m = static_cast<int>(comps.size());
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<std::size_t>(max_color + 1);
    std::vector<TruncatedSeries> out(total);
    auto run = [&](std::atomic<std::size_t>& next) {
        DiagramEvaluator<SeriesRing> ev(SeriesRing{order});
        for (std::size_t k = next++; k < total; k = next++) {
            std::vector<int> colors(static_cast<std::size_t>(m));
            std::size_t rem = k;
            for (int i = m - 1; i >= 0; --i) {
                colors[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(max_color + 1));
                rem /= static_cast<std::size_t>(max_color + 1);
            }
            out[k] = ev.evaluate_closed(p, colors);
        }
    };
    std::atomic<std::size_t> next{0};
    const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    for (unsigned i = 1; i < w; ++i)
        pool.emplace_back([&, i] {
            try {
                run(next);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    try {
        run(next);
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// For each i <= order, the total degree in the colors of the h^i coefficient of J, against 2i + m.
inline DegreeReport degree_bound_check(const FramedLinkPresentation& p, int max_color, int order, unsigned workers = 1) {
    const auto grid = series_on_grid(p, max_color, order, workers);
    const int m = p.components.count;
    DegreeReport rep{max_color, order, m, {}, {}, {}};
    for (int i = 0; i <= order; ++i) {
        std::vector<mpq_class> f;
        for (const auto& s : grid) f.push_back(s.coeffs().empty() ? mpq_class(0) : s.coeffs()[static_cast<std::size_t>(i)]);
        rep.bound.push_back(2 * i + m);
        try {
            rep.measured.push_back(total_degree_on_grid(f, m, max_color + 1));
            rep.certified.push_back(true);
        } catch (const std::domain_error&) {
            rep.measured.push_back(std::nullopt);
            rep.certified.push_back(false);
        }
    }
    return rep;
}

}  // namespace wrt
