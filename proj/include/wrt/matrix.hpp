#pragma once

/**
 * @file matrix.hpp
 * @brief Column-sparse exact matrices over a commutative ring.
 *
 * Tensor-product indices are row-major in the factors: the first factor is
 * the most significant digit.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wrt {

template <class T>
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, T>;  // (row, value), sorted by row

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n, const T& one) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, one);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const std::vector<Entry>& column(std::size_t j) const { return cols_.at(j); }

    /// Replaces a column; entries need not be sorted and may repeat.
    void set_column(std::size_t j, std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::vector<Entry> merged;
        for (auto& e : entries) {
            if (e.first >= rows_) throw std::out_of_range("SparseMatrix: row out of range");
            if (!merged.empty() && merged.back().first == e.first) {
                merged.back().second += e.second;
            } else {
                merged.push_back(std::move(e));
            }
        }
        std::erase_if(merged, [](const Entry& e) { return is_zero(e.second); });
        cols_.at(j) = std::move(merged);
    }

    void add(std::size_t i, std::size_t j, const T& x) {
        if (is_zero(x)) return;
        auto& col = cols_.at(j);
        auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
        if (it != col.end() && it->first == i) {
            it->second += x;
            if (is_zero(it->second)) col.erase(it);
        } else {
            col.insert(it, Entry(i, x));
        }
    }

    /// Entry (i, j), or `zero` when absent.
    T at(std::size_t i, std::size_t j, const T& zero = T{}) const {
        const auto& col = cols_.at(j);
        auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.first < r; });
        return (it != col.end() && it->first == i) ? it->second : zero;
    }

    bool is_zero_matrix() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    /// this * o (apply o first).
    SparseMatrix operator*(const SparseMatrix& o) const {
        if (cols() != o.rows()) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
        SparseMatrix out(rows_, o.cols());
        for (std::size_t j = 0; j < o.cols(); ++j) {
            std::vector<Entry> acc;
            for (const auto& [k, x] : o.cols_[j])
                for (const auto& [i, y] : cols_[k]) acc.emplace_back(i, y * x);
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    SparseMatrix operator+(const SparseMatrix& o) const {
        check_same_shape(o);
        SparseMatrix out(rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j) {
            std::vector<Entry> acc = cols_[j];
            acc.insert(acc.end(), o.cols_[j].begin(), o.cols_[j].end());
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    SparseMatrix operator-(const SparseMatrix& o) const {
        return *this + o.map([](const T& x) { return T(-x); });
    }

    SparseMatrix scaled(const T& s) const {
        SparseMatrix out(rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j) {
            std::vector<Entry> acc;
            for (const auto& [i, x] : cols_[j]) acc.emplace_back(i, x * s);
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    SparseMatrix transpose() const {
        SparseMatrix out(cols(), rows_);
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [i, x] : cols_[j]) out.cols_[i].emplace_back(j, x);
        return out;
    }

    /// Kronecker product: (A (x) B)[(i1,i2),(j1,j2)] = A[i1,j1] B[i2,j2].
    SparseMatrix kron(const SparseMatrix& b) const {
        SparseMatrix out(rows_ * b.rows_, cols() * b.cols());
        for (std::size_t j1 = 0; j1 < cols(); ++j1)
            for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                std::vector<Entry> acc;
                for (const auto& [i1, x] : cols_[j1])
                    for (const auto& [i2, y] : b.cols_[j2]) acc.emplace_back(i1 * b.rows_ + i2, x * y);
                out.cols_[j1 * b.cols() + j2] = std::move(acc);
            }
        return out;
    }

    template <class F>
    auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        SparseMatrix<U> out(rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j) {
            std::vector<typename SparseMatrix<U>::Entry> acc;
            for (const auto& [i, x] : cols_[j]) acc.emplace_back(i, f(x));
            out.set_column(j, std::move(acc));
        }
        return out;
    }

    T trace(const T& zero = T{}) const {
        if (rows_ != cols()) throw std::invalid_argument("SparseMatrix: trace of non-square matrix");
        T t = zero;
        for (std::size_t j = 0; j < cols(); ++j) t += at(j, j, zero);
        return t;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> cols_;

    template <class U>
    friend class SparseMatrix;

    static bool is_zero(const T& x) {
        if constexpr (requires { x.is_zero(); }) {
            return x.is_zero();
        } else {
            return x == 0;
        }
    }

    void check_same_shape(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols() != o.cols()) throw std::invalid_argument("SparseMatrix: shape mismatch");
    }
};

}  // namespace wrt
