#pragma once

/**
 * @file evaluate.hpp
 * @brief Functorial evaluation of colored sliced diagrams in a chosen coefficient ring.
 *
 * The state after each level is a sparse vector (one per top basis vector)
 * indexed by a mixed-radix key over the strands of that level, first strand
 * most significant. Pieces are applied one at a time; identities are free.
 */

#include "wrt/cyclotomic.hpp"
#include "wrt/diagram.hpp"
#include "wrt/laurent_poly.hpp"
#include "wrt/series.hpp"
#include "wrt/sl2.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wrt {

/// Values in Z[v, v^-1]. Coupons are not allowed.
struct SymbolicRing {
    using value_type = LaurentPoly;
    value_type map(const LaurentPoly& p) const { return p; }
    value_type zero() const { return LaurentPoly(0); }
    value_type coupon_entry(const CyclotomicInteger&) const {
        throw std::invalid_argument("coupons need a specialized root of unity");
    }
};

/// Values in Z[xi] under v -> xi^root_power.
struct CyclotomicRing {
    int r;
    long root_power = 1;
    using value_type = CyclotomicInteger;
    value_type map(const LaurentPoly& p) const { return specialize(p, r, root_power); }
    value_type zero() const { return CyclotomicInteger(r); }
    value_type coupon_entry(const CyclotomicInteger& x) const {
        if (x.r() != 0 && x.r() != r) throw std::invalid_argument("coupon entry lives in a different cyclotomic ring");
        return x.r() == 0 ? zero() : x;
    }
};

/// Values in Q[h]/(h^(order+1)) under v = e^(h/2).
struct SeriesRing {
    int order;
    using value_type = TruncatedSeries;
    value_type map(const LaurentPoly& p) const { return TruncatedSeries::from_laurent(p, order); }
    value_type zero() const { return {order, {}}; }
    value_type coupon_entry(const CyclotomicInteger&) const {
        throw std::invalid_argument("coupons need a specialized root of unity");
    }
};

template <class Ring>
class DiagramEvaluator {
public:
    using T = typename Ring::value_type;
    using Vec = std::unordered_map<std::uint64_t, T>;

    explicit DiagramEvaluator(Ring ring) : ring_(std::move(ring)) {}
    const Ring& ring() const { return ring_; }

    /// Matrix of the colored diagram from the top word to the bottom word.
    /// `colors` gives a color per component; framing corrections are applied
    /// when `framed` is set.
    SparseMatrix<T> evaluate(const FramedLinkPresentation& p, const std::vector<int>& colors, bool framed = true) {
        const auto& d = p.diagram;
        const auto& info = p.components;
        if (static_cast<int>(colors.size()) != info.count)
            throw std::invalid_argument("evaluate: expected " + std::to_string(info.count) + " component colors");
        for (int c : colors)
            if (c < 0) throw std::invalid_argument("evaluate: negative color");

        auto word_at = [&](std::size_t level) {
            ObjectWord w;
            for (std::size_t i = 0; i < d.levels[level].size(); ++i)
                w.push_back({colors[static_cast<std::size_t>(info.strand_component[level][i])], d.levels[level][i]});
            return w;
        };

        const ObjectWord top = word_at(0);
        const std::size_t top_dim = word_dimension(top);
        std::vector<Vec> state(top_dim);
        for (std::size_t j = 0; j < top_dim; ++j) state[j].emplace(j, map(LaurentPoly(1)));

        ObjectWord word = top;
        for (std::size_t l = 0; l < d.slices.size(); ++l) {
            const ObjectWord below = word_at(l + 1);
            std::size_t out_pos = 0;
            for (const auto& piece : d.slices[l].pieces) {
                const auto in_count = static_cast<std::size_t>(piece.in);
                const auto out_count = static_cast<std::size_t>(piece.out);
                // `word` is below[0, out_pos) followed by the unprocessed part of the level above
                if (piece.kind != PieceKind::Id) {
                    ObjectWord in(word.begin() + static_cast<long>(out_pos), word.begin() + static_cast<long>(out_pos + in_count));
                    ObjectWord out(below.begin() + static_cast<long>(out_pos), below.begin() + static_cast<long>(out_pos + out_count));
                    const SparseMatrix<T>& op = local_op(piece, in, out, p.coupons);
                    apply(state, word, out_pos, in_count, out, op);
                    word.erase(word.begin() + static_cast<long>(out_pos), word.begin() + static_cast<long>(out_pos + in_count));
                    word.insert(word.begin() + static_cast<long>(out_pos), out.begin(), out.end());
                }
                out_pos += out_count;
            }
        }

        const std::size_t bottom_dim = word_dimension(word);
        SparseMatrix<T> result(bottom_dim, top_dim);
        for (std::size_t j = 0; j < top_dim; ++j) {
            std::vector<typename SparseMatrix<T>::Entry> col;
            for (auto& [k, x] : state[j]) col.emplace_back(static_cast<std::size_t>(k), std::move(x));
            result.set_column(j, std::move(col));
        }
        if (framed) {
            int exponent = 0;
            for (int c = 0; c < info.count; ++c) {
                const long shift = p.framing_of(c) - info.writhe(c);
                const long n = colors[static_cast<std::size_t>(c)];
                exponent += static_cast<int>(shift * (2 * n * n + 2 * n));
            }
            if (exponent != 0) result = result.scaled(map(LaurentPoly::v(exponent)));
        }
        return result;
    }

    /// Scalar value of a closed diagram.
    T evaluate_closed(const FramedLinkPresentation& p, const std::vector<int>& colors, bool framed = true) {
        if (!p.diagram.closed()) throw std::invalid_argument("evaluate: diagram is not closed");
        return evaluate(p, colors, framed).at(0, 0, ring_.zero());
    }

private:
    Ring ring_;
    std::map<std::tuple<int, std::string, ObjectWord, ObjectWord>, SparseMatrix<T>> cache_;

    T map(const LaurentPoly& x) const { return ring_.map(x); }

    const SparseMatrix<T>& local_op(const ElementaryPiece& piece, const ObjectWord& in, const ObjectWord& out,
                                    const CouponTable& coupons) {
        const auto key = std::make_tuple(static_cast<int>(piece.kind), piece.coupon, in, out);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        auto to_ring = [&](const PolyMatrix& m) { return m.map([&](const LaurentPoly& x) { return map(x); }); };
        SparseMatrix<T> op;
        switch (piece.kind) {
            case PieceKind::CrossPos: op = to_ring(*braiding_shared(in[0], in[1], false)); break;
            case PieceKind::CrossNeg: op = to_ring(*braiding_shared(in[1], in[0], true)); break;
            case PieceKind::CupL: op = to_ring(duality_morphism(DualityPiece::CupL, out[0].n).matrix); break;
            case PieceKind::CupR: op = to_ring(duality_morphism(DualityPiece::CupR, out[0].n).matrix); break;
            case PieceKind::CapL:
            case PieceKind::CapR:
                if (in[0].n != in[1].n) throw std::invalid_argument("evaluate: cap joins different colors");
                op = to_ring(duality_morphism(piece.kind == PieceKind::CapL ? DualityPiece::CapL : DualityPiece::CapR, in[0].n).matrix);
                break;
            case PieceKind::Coupon: {
                auto it = coupons.find(piece.coupon);
                if (it == coupons.end()) throw std::invalid_argument("evaluate: no matrix for coupon '" + piece.coupon + "'");
                const Coupon& c = it->second;
                if (c.domain != in || c.codomain != out)
                    throw std::invalid_argument("evaluate: color/coupon mismatch at '" + piece.coupon + "': strands " +
                                                word_to_string(in) + " -> " + word_to_string(out) + ", coupon " +
                                                word_to_string(c.domain) + " -> " + word_to_string(c.codomain));
                if (c.matrix.rows() != word_dimension(out) || c.matrix.cols() != word_dimension(in))
                    throw std::invalid_argument("evaluate: coupon '" + piece.coupon + "' has the wrong shape");
                op = c.matrix.map([&](const CyclotomicInteger& x) { return ring_.coupon_entry(x); });
                break;
            }
            case PieceKind::Id: break;
        }
        return cache_.emplace(key, std::move(op)).first->second;
    }

    void apply(std::vector<Vec>& state, const ObjectWord& word, std::size_t pos, std::size_t in_count,
               const ObjectWord& out, const SparseMatrix<T>& op) {
        std::uint64_t suffix = 1, local_in = 1, local_out = 1;
        for (std::size_t i = pos + in_count; i < word.size(); ++i) suffix *= static_cast<std::uint64_t>(word[i].dim());
        for (std::size_t i = pos; i < pos + in_count; ++i) local_in *= static_cast<std::uint64_t>(word[i].dim());
        for (const auto& s : out) local_out *= static_cast<std::uint64_t>(s.dim());
        long double space = 1;
        for (std::size_t i = 0; i < pos; ++i) space *= word[i].dim();
        space *= static_cast<long double>(local_out) * static_cast<long double>(suffix);
        if (space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
            throw std::overflow_error("evaluate: level too wide for the state index");

        for (auto& vec : state) {
            Vec next;
            next.reserve(vec.size());
            for (const auto& [key, x] : vec) {
                const std::uint64_t s = key % suffix;
                const std::uint64_t rest = key / suffix;
                const std::uint64_t loc = rest % local_in;
                const std::uint64_t prefix = rest / local_in;
                for (const auto& [row, y] : op.column(static_cast<std::size_t>(loc))) {
                    const std::uint64_t nk = (prefix * local_out + row) * suffix + s;
                    auto [it, fresh] = next.try_emplace(nk, ring_.zero());
                    if constexpr (requires(T& t) { t.add_product(y, x); })
                        it->second.add_product(y, x);
                    else
                        it->second += y * x;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            vec = std::move(next);
        }
    }
};

/// Convenience: J of a fully colored closed diagram as a Laurent polynomial.
inline LaurentPoly evaluate_J_symbolic(const FramedLinkPresentation& p, const std::vector<int>& colors) {
    DiagramEvaluator<SymbolicRing> ev(SymbolicRing{});
    return ev.evaluate_closed(p, colors);
}

}  // namespace wrt
