#pragma once

/**
 * @file diagram.hpp
 * @brief Morse-sliced ribbon graph diagrams: parsing, components, framings, linking matrices.
 *
 * A diagram is read top to bottom, one slice per line (or per '/'-separated
 * group). Each level between slices is a row of oriented strands; + means the
 * strand points down and carries V, - means it points up and carries V^*.
 *
 *   id          one strand passes
 *   x+ / x-     crossing of two strands (braiding or its inverse)
 *   cupl cupr   create a pair (+,-) / (-,+)
 *   capl capr   close a pair (+,-) / (-,+)
 *   coupon:N    box N from its domain word (above) to its codomain word (below);
 *               coupon:N:i:o also states the arities
 *
 * A line "@top + - ..." opens the top boundary; otherwise the diagram must be
 * closed at both ends.
 */

#include "wrt/cyclotomic.hpp"
#include "wrt/matrix.hpp"
#include "wrt/sl2.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrt {

class DiagramError : public std::runtime_error {
public:
    DiagramError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

enum class PieceKind { Id, CrossPos, CrossNeg, CupL, CupR, CapL, CapR, Coupon };

struct ElementaryPiece {
    PieceKind kind = PieceKind::Id;
    std::string coupon;  // name, for coupons
    int in = 1, out = 1;
    int line = 0, column = 0;
    bool explicit_arity = false;
};

/// A coupon's matrix, from its domain word to its codomain word.
struct Coupon {
    ObjectWord domain, codomain;
    SparseMatrix<CyclotomicInteger> matrix;
};

using CouponTable = std::map<std::string, Coupon>;

struct Slice {
    std::vector<ElementaryPiece> pieces;
    int line = 0;
};

struct SlicedDiagram {
    std::vector<Slice> slices;
    std::vector<std::vector<int>> levels;  // orientation signs, levels.size() == slices.size() + 1

    bool closed() const { return levels.front().empty() && levels.back().empty(); }
};

namespace detail {

inline int piece_in(PieceKind k) {
    switch (k) {
        case PieceKind::Id: return 1;
        case PieceKind::CrossPos:
        case PieceKind::CrossNeg:
        case PieceKind::CapL:
        case PieceKind::CapR: return 2;
        default: return 0;
    }
}

inline int piece_out(PieceKind k) {
    switch (k) {
        case PieceKind::Id: return 1;
        case PieceKind::CrossPos:
        case PieceKind::CrossNeg:
        case PieceKind::CupL:
        case PieceKind::CupR: return 2;
        default: return 0;
    }
}

inline ElementaryPiece parse_token(const std::string& tok, int line, int col, const CouponTable& coupons) {
    ElementaryPiece p;
    p.line = line;
    p.column = col;
    static const std::map<std::string, PieceKind> simple = {
        {"id", PieceKind::Id},     {"x+", PieceKind::CrossPos}, {"x-", PieceKind::CrossNeg}, {"cupl", PieceKind::CupL},
        {"cupr", PieceKind::CupR}, {"capl", PieceKind::CapL},   {"capr", PieceKind::CapR}};
    if (auto it = simple.find(tok); it != simple.end()) {
        p.kind = it->second;
        p.in = piece_in(p.kind);
        p.out = piece_out(p.kind);
        return p;
    }
    if (tok.rfind("coupon:", 0) != 0) throw DiagramError("unknown token '" + tok + "'", line, col);
    p.kind = PieceKind::Coupon;
    std::vector<std::string> parts;
    std::stringstream ss(tok.substr(7));
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.empty() || parts[0].empty() || (parts.size() != 1 && parts.size() != 3))
        throw DiagramError("malformed coupon token '" + tok + "'", line, col);
    p.coupon = parts[0];
    auto sig = coupons.find(p.coupon);
    if (parts.size() == 3) {
        try {
            p.in = std::stoi(parts[1]);
            p.out = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw DiagramError("malformed coupon arity in '" + tok + "'", line, col);
        }
        if (p.in < 0 || p.out < 0) throw DiagramError("negative coupon arity in '" + tok + "'", line, col);
        p.explicit_arity = true;
        if (sig != coupons.end() &&
            (static_cast<int>(sig->second.domain.size()) != p.in || static_cast<int>(sig->second.codomain.size()) != p.out))
            throw DiagramError("coupon arity mismatch for '" + p.coupon + "'", line, col);
    } else {
        if (sig == coupons.end()) throw DiagramError("unknown coupon '" + p.coupon + "'", line, col);
        p.in = static_cast<int>(sig->second.domain.size());
        p.out = static_cast<int>(sig->second.codomain.size());
    }
    return p;
}

inline std::vector<int> parse_signs(const std::string& rest, int line, int col) {
    std::vector<int> signs;
    std::stringstream ss(rest);
    for (std::string t; ss >> t;) {
        if (t == "+") {
            signs.push_back(1);
        } else if (t == "-") {
            signs.push_back(-1);
        } else {
            throw DiagramError("expected + or - in @top, got '" + t + "'", line, col);
        }
    }
    return signs;
}

}  // namespace detail

/// Parses and validates a diagram. Coupon signatures (for arities and orientations) come from `coupons`.
inline SlicedDiagram parse_diagram(const std::string& text, const CouponTable& coupons = {}) {
    struct RawSlice {
        std::vector<std::pair<std::string, int>> tokens;
        int line;
    };
    std::vector<RawSlice> raw;
    std::vector<int> top;
    bool have_top = false;
    int top_line = 0;

    std::stringstream in(text);
    std::string line_text;
    int line_no = 0;
    while (std::getline(in, line_text)) {
        ++line_no;
        if (auto hash = line_text.find('#'); hash != std::string::npos) line_text.erase(hash);
        const auto first = line_text.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line_text[first] == '@') {
            const auto word_end = line_text.find_first_of(" \t", first);
            const std::string word = line_text.substr(first, word_end - first);
            if (word != "@top") throw DiagramError("unknown directive '" + word + "'", line_no, static_cast<int>(first) + 1);
            if (have_top || !raw.empty()) throw DiagramError("@top must come first", line_no, static_cast<int>(first) + 1);
            have_top = true;
            top_line = line_no;
            top = detail::parse_signs(word_end == std::string::npos ? "" : line_text.substr(word_end), line_no,
                                      static_cast<int>(first) + 1);
            continue;
        }
        RawSlice cur{{}, line_no};
        std::size_t i = 0;
        while (i < line_text.size()) {
            const char ch = line_text[i];
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                ++i;
            } else if (ch == '/') {
                if (cur.tokens.empty()) throw DiagramError("empty slice", line_no, static_cast<int>(i) + 1);
                raw.push_back(std::move(cur));
                cur = RawSlice{{}, line_no};
                ++i;
            } else {
                std::size_t j = i;
                while (j < line_text.size() && line_text[j] != ' ' && line_text[j] != '\t' && line_text[j] != '/' &&
                       line_text[j] != '\r')
                    ++j;
                cur.tokens.emplace_back(line_text.substr(i, j - i), static_cast<int>(i) + 1);
                i = j;
            }
        }
        if (cur.tokens.empty()) throw DiagramError("empty slice", line_no, static_cast<int>(line_text.size()) + 1);
        raw.push_back(std::move(cur));
    }

    SlicedDiagram d;
    d.levels.push_back(top);
    for (const auto& rs : raw) {
        Slice s;
        s.line = rs.line;
        const auto& above = d.levels.back();
        std::vector<int> below;
        std::size_t pos = 0;
        for (const auto& [tok, col] : rs.tokens) {
            ElementaryPiece p = detail::parse_token(tok, rs.line, col, coupons);
            if (pos + static_cast<std::size_t>(p.in) > above.size())
                throw DiagramError("boundary mismatch: '" + tok + "' needs " + std::to_string(p.in) + " strand(s) but only " +
                                       std::to_string(above.size() - pos) + " remain above",
                                   rs.line, col);
            const auto a = [&](std::size_t k) { return above[pos + k]; };
            switch (p.kind) {
                case PieceKind::Id: below.push_back(a(0)); break;
                case PieceKind::CrossPos:
                case PieceKind::CrossNeg:
                    below.push_back(a(1));
                    below.push_back(a(0));
                    break;
                case PieceKind::CupL:
                    below.push_back(1);
                    below.push_back(-1);
                    break;
                case PieceKind::CupR:
                    below.push_back(-1);
                    below.push_back(1);
                    break;
                case PieceKind::CapL:
                    if (a(0) != 1 || a(1) != -1) throw DiagramError("orientation mismatch: capl closes (+,-)", rs.line, col);
                    break;
                case PieceKind::CapR:
                    if (a(0) != -1 || a(1) != 1) throw DiagramError("orientation mismatch: capr closes (-,+)", rs.line, col);
                    break;
                case PieceKind::Coupon: {
                    auto sig = coupons.find(p.coupon);
                    if (sig != coupons.end()) {
                        for (int k = 0; k < p.in; ++k)
                            if (sig->second.domain[k].sign != a(k))
                                throw DiagramError("orientation mismatch at coupon '" + p.coupon + "'", rs.line, col);
                        for (const auto& c : sig->second.codomain) below.push_back(c.sign);
                    } else {
                        for (int k = 0; k < p.out; ++k) below.push_back(1);
                    }
                    break;
                }
            }
            pos += static_cast<std::size_t>(p.in);
            s.pieces.push_back(std::move(p));
        }
        if (pos != above.size())
            throw DiagramError("boundary mismatch: slice consumes " + std::to_string(pos) + " of " +
                                   std::to_string(above.size()) + " strands",
                               rs.line, rs.tokens.back().second);
        d.slices.push_back(std::move(s));
        d.levels.push_back(std::move(below));
    }
    if (!have_top && !d.levels.back().empty()) {
        const int l = raw.empty() ? 1 : raw.back().line;
        throw DiagramError("boundary mismatch: open bottom with " + std::to_string(d.levels.back().size()) +
                               " strand(s) (closed diagrams end with no strands)",
                           l, 1);
    }
    (void)top_line;
    return d;
}

inline std::string piece_token(const ElementaryPiece& p) {
    switch (p.kind) {
        case PieceKind::Id: return "id";
        case PieceKind::CrossPos: return "x+";
        case PieceKind::CrossNeg: return "x-";
        case PieceKind::CupL: return "cupl";
        case PieceKind::CupR: return "cupr";
        case PieceKind::CapL: return "capl";
        case PieceKind::CapR: return "capr";
        case PieceKind::Coupon:
            return "coupon:" + p.coupon + (p.explicit_arity ? ":" + std::to_string(p.in) + ":" + std::to_string(p.out) : "");
    }
    return "?";
}

inline std::string print_diagram(const SlicedDiagram& d) {
    std::string out;
    if (!d.levels.front().empty()) {
        out += "@top";
        for (int s : d.levels.front()) out += s > 0 ? " +" : " -";
        out += "\n";
    }
    for (const auto& s : d.slices) {
        for (std::size_t i = 0; i < s.pieces.size(); ++i) out += (i ? " " : "") + piece_token(s.pieces[i]);
        out += "\n";
    }
    return out;
}

/// The mirror image: every crossing switched.
inline SlicedDiagram mirror(SlicedDiagram d) {
    for (auto& s : d.slices)
        for (auto& p : s.pieces) {
            if (p.kind == PieceKind::CrossPos) {
                p.kind = PieceKind::CrossNeg;
            } else if (p.kind == PieceKind::CrossNeg) {
                p.kind = PieceKind::CrossPos;
            }
        }
    return d;
}

/// Side-by-side union; both must be closed.
inline SlicedDiagram disjoint_union(const SlicedDiagram& a, const SlicedDiagram& b) {
    if (!a.closed() || !b.closed()) throw std::invalid_argument("disjoint_union: diagrams must be closed");
    SlicedDiagram d = a;
    for (std::size_t i = 0; i < b.slices.size(); ++i) {
        d.slices.push_back(b.slices[i]);
        d.levels.push_back(b.levels[i + 1]);
    }
    return d;
}

// ---- components

struct CrossingInfo {
    std::size_t slice = 0;
    int a = 0, b = 0;  // components of the left and right incoming strands
    int sign = 0;
};

struct ComponentInfo {
    int count = 0;
    std::vector<std::vector<int>> strand_component;  // per level, per position
    std::vector<CrossingInfo> crossings;
    std::vector<bool> touches_coupon;

    long writhe(int c) const {
        long w = 0;
        for (const auto& x : crossings)
            if (x.a == c && x.b == c) w += x.sign;
        return w;
    }
};

inline std::string component_name(int c) { return "C" + std::to_string(c + 1); }

inline ComponentInfo analyze_components(const SlicedDiagram& d) {
    std::vector<std::size_t> offset{0};
    for (const auto& l : d.levels) offset.push_back(offset.back() + l.size());
    std::vector<std::size_t> parent(offset.back());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

    std::vector<std::pair<std::size_t, std::size_t>> crossing_nodes;
    std::vector<std::size_t> coupon_nodes;
    for (std::size_t l = 0; l < d.slices.size(); ++l) {
        std::size_t up = 0, down = 0;
        auto U = [&](std::size_t k) { return offset[l] + up + k; };
        auto D = [&](std::size_t k) { return offset[l + 1] + down + k; };
        for (const auto& p : d.slices[l].pieces) {
            switch (p.kind) {
                case PieceKind::Id: unite(U(0), D(0)); break;
                case PieceKind::CrossPos:
                case PieceKind::CrossNeg:
                    unite(U(0), D(1));
                    unite(U(1), D(0));
                    crossing_nodes.emplace_back(U(0), U(1));
                    break;
                case PieceKind::CupL:
                case PieceKind::CupR: unite(D(0), D(1)); break;
                case PieceKind::CapL:
                case PieceKind::CapR: unite(U(0), U(1)); break;
                case PieceKind::Coupon:
                    for (int k = 0; k < p.in; ++k) coupon_nodes.push_back(U(k));
                    for (int k = 0; k < p.out; ++k) coupon_nodes.push_back(D(k));
                    break;
            }
            up += static_cast<std::size_t>(p.in);
            down += static_cast<std::size_t>(p.out);
        }
    }

    ComponentInfo info;
    std::map<std::size_t, int> ids;
    for (std::size_t l = 0; l < d.levels.size(); ++l) {
        std::vector<int> row;
        for (std::size_t p = 0; p < d.levels[l].size(); ++p) {
            const std::size_t root = find(offset[l] + p);
            auto [it, fresh] = ids.emplace(root, info.count);
            if (fresh) ++info.count;
            row.push_back(it->second);
        }
        info.strand_component.push_back(std::move(row));
    }
    auto comp_of = [&](std::size_t node) { return ids.at(find(node)); };
    info.touches_coupon.assign(static_cast<std::size_t>(info.count), false);
    for (auto n : coupon_nodes) info.touches_coupon[static_cast<std::size_t>(comp_of(n))] = true;

    std::size_t ci = 0;
    for (std::size_t l = 0; l < d.slices.size(); ++l) {
        std::size_t up = 0;
        for (const auto& p : d.slices[l].pieces) {
            if (p.kind == PieceKind::CrossPos || p.kind == PieceKind::CrossNeg) {
                const auto [n0, n1] = crossing_nodes[ci++];
                const int s = (p.kind == PieceKind::CrossPos ? 1 : -1) * d.levels[l][up] * d.levels[l][up + 1];
                info.crossings.push_back({l, comp_of(n0), comp_of(n1), s});
            }
            up += static_cast<std::size_t>(p.in);
        }
    }
    return info;
}

// ---- framed links

/// A diagram together with per-component framings and colors. Components with
/// no color are surgery components; components with no declared framing use
/// the blackboard framing (the writhe).
struct FramedLinkPresentation {
    SlicedDiagram diagram;
    ComponentInfo components;
    std::map<int, long> framing;
    std::map<int, int> color;
    CouponTable coupons;

    FramedLinkPresentation() : FramedLinkPresentation(parse_diagram("")) {}
    explicit FramedLinkPresentation(SlicedDiagram d, CouponTable c = {})
        : diagram(std::move(d)), components(analyze_components(diagram)), coupons(std::move(c)) {}

    long framing_of(int c) const {
        auto it = framing.find(c);
        return it != framing.end() ? it->second : components.writhe(c);
    }
    bool is_surgery(int c) const { return !color.count(c); }
    std::vector<int> surgery_components() const {
        std::vector<int> out;
        for (int c = 0; c < components.count; ++c)
            if (is_surgery(c)) out.push_back(c);
        return out;
    }
};

inline int parse_component_name(const std::string& s, int count) {
    if (s.size() < 2 || s[0] != 'C') throw std::invalid_argument("bad component name '" + s + "'");
    int c = 0;
    try {
        std::size_t used = 0;
        c = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad component name '" + s + "'");
    }
    if (c < 1 || c > count) throw std::invalid_argument("no component " + s + " (diagram has " + std::to_string(count) + ")");
    return c - 1;
}

/// Side-by-side union of two presentations; components of b are renumbered after a's.
inline FramedLinkPresentation disjoint_union(const FramedLinkPresentation& a, const FramedLinkPresentation& b) {
    CouponTable coupons = a.coupons;
    for (const auto& [k, v] : b.coupons)
        if (!coupons.emplace(k, v).second) throw std::invalid_argument("disjoint_union: coupon name clash '" + k + "'");
    FramedLinkPresentation out(disjoint_union(a.diagram, b.diagram), std::move(coupons));
    // components of a are discovered first because its slices come first
    for (int c = 0; c < a.components.count; ++c) {
        out.framing[c] = a.framing_of(c);
        if (!a.is_surgery(c)) out.color[c] = a.color.at(c);
    }
    for (int c = 0; c < b.components.count; ++c) {
        out.framing[a.components.count + c] = b.framing_of(c);
        if (!b.is_surgery(c)) out.color[a.components.count + c] = b.color.at(c);
    }
    return out;
}

// ---- linking matrix and inertia

struct Inertia {
    int plus = 0, minus = 0, nullity = 0;
    mpq_class det = 1;
};

/// Sylvester inertia of a symmetric rational matrix by congruence elimination.
inline Inertia symmetric_inertia(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    Inertia out;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::optional<std::size_t> diag, off;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!diag && a[j][j] != 0) diag = j;
                if (!off && a[i][j] != 0) off = j;
            }
            if (diag) {
                std::swap(a[i], a[*diag]);
                for (auto& row : a) std::swap(row[i], row[*diag]);
            } else if (off) {
                const std::size_t j = *off;
                for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
                for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
            }
        }
        const mpq_class p = a[i][i];
        if (p == 0) {
            ++out.nullity;  // row i vanishes on the remaining block
            out.det = 0;
            continue;
        }
        (p > 0 ? out.plus : out.minus)++;
        out.det *= p;
        for (std::size_t k = i + 1; k < n; ++k) {
            if (a[k][i] == 0) continue;
            const mpq_class f = a[k][i] / p;
            for (std::size_t m = i; m < n; ++m) a[k][m] -= f * a[i][m];
            for (std::size_t m = i; m < n; ++m) a[m][k] = a[k][m];
        }
    }
    return out;
}

struct LinkingData {
    std::vector<int> components;  // surgery components, in order
    std::vector<std::vector<long>> matrix;
    int sigma_plus = 0, sigma_minus = 0, nullity = 0;
    mpz_class det = 1;
};

inline LinkingData linking_matrix(const FramedLinkPresentation& p) {
    LinkingData out;
    out.components = p.surgery_components();
    const std::size_t m = out.components.size();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[out.components[i]] = i;
    std::vector<std::vector<long>> twice(m, std::vector<long>(m, 0));
    for (const auto& x : p.components.crossings) {
        if (x.a == x.b) continue;
        auto ia = index.find(x.a), ib = index.find(x.b);
        if (ia == index.end() || ib == index.end()) continue;
        twice[ia->second][ib->second] += x.sign;
        twice[ib->second][ia->second] += x.sign;
    }
    out.matrix.assign(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                out.matrix[i][i] = p.framing_of(out.components[i]);
            } else {
                if (twice[i][j] % 2 != 0)
                    throw std::invalid_argument("odd signed crossing count between " + component_name(out.components[i]) +
                                                " and " + component_name(out.components[j]));
                out.matrix[i][j] = twice[i][j] / 2;
            }
        }
    std::vector<std::vector<mpq_class>> q(m, std::vector<mpq_class>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q[i][j] = out.matrix[i][j];
    const Inertia in = symmetric_inertia(q);
    out.sigma_plus = in.plus;
    out.sigma_minus = in.minus;
    out.nullity = in.nullity;
    out.det = in.det.get_num();
    return out;
}

inline int betti1(const FramedLinkPresentation& p) { return linking_matrix(p).nullity; }

// ---- built-in presentations

namespace detail {

inline std::string braid_closure_2(int crossings, bool positive) {
    std::string s = "cupl\nid cupl id\n";
    for (int i = 0; i < crossings; ++i) s += positive ? "x+ id id\n" : "x- id id\n";
    return s + "id capl id\ncapl\n";
}

inline std::vector<long> parse_int_args(const std::string& args) {
    std::vector<long> out;
    std::stringstream ss(args);
    for (std::string t; std::getline(ss, t, ',');) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer argument '" + t + "'");
        }
        if (used != t.size()) throw std::invalid_argument("bad integer argument '" + t + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() {
    return {"unknot(f)", "hopf(f1,f2)", "trefoil_left(f)", "trefoil_right(f)", "poincare",
            "brieskorn", "s1xs2",       "s3_empty",        "s3_stab_pm"};
}

/// Canonical presentations. All components are surgery components.
inline FramedLinkPresentation builtin(const std::string& spec) {
    std::string name = spec;
    if (name.rfind("builtin:", 0) == 0) name = name.substr(8);
    std::string base = name, args;
    if (auto open = name.find('('); open != std::string::npos) {
        if (name.back() != ')') throw std::invalid_argument("unknown builtin '" + spec + "'");
        base = name.substr(0, open);
        args = name.substr(open + 1, name.size() - open - 2);
    }
    const std::vector<long> a = args.empty() ? std::vector<long>{} : detail::parse_int_args(args);
    auto need = [&](std::size_t k) {
        if (a.size() != k) throw std::invalid_argument("builtin '" + base + "' takes " + std::to_string(k) + " argument(s)");
    };
    auto make = [](const std::string& text, std::vector<long> framings) {
        FramedLinkPresentation p(parse_diagram(text));
        for (std::size_t i = 0; i < framings.size(); ++i) p.framing[static_cast<int>(i)] = framings[i];
        return p;
    };
    if (base == "unknot") {
        need(1);
        return make("cupl\ncapl\n", {a[0]});
    }
    if (base == "hopf") {
        need(2);
        return make(detail::braid_closure_2(2, true), {a[0], a[1]});
    }
    if (base == "trefoil_right" || base == "trefoil_left") {
        need(1);
        return make(detail::braid_closure_2(3, base == "trefoil_right"), {a[0]});
    }
    need(0);
    if (base == "poincare") return builtin("trefoil_left(-1)");
    if (base == "brieskorn") return builtin("trefoil_right(-1)");
    if (base == "s1xs2") return builtin("unknot(0)");
    if (base == "s3_empty" || base == "empty") return make("", {});
    if (base == "s3_stab_pm") return make("cupl cupl\ncapl capl\n", {1, -1});
    throw std::invalid_argument("unknown builtin '" + spec + "'");
}

}  // namespace wrt
