#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jetcalc/matrix.hpp"

namespace jetcalc {

/// Streaming Gauss-Jordan eliminator. Rows are fed one at a time and reduced
/// against the pivots seen so far, so the memory footprint stays at
/// rank x width even when the equation stream is much taller. finalize()
/// back-substitutes into the unique reduced row echelon form: pivot columns
/// strictly increasing, pivots 1, pivot columns elsewhere 0.
template <FieldType F>
class RowReducer {
public:
    using Elem = typename F::Elem;

    RowReducer(F field, std::size_t width)
        : field_(std::move(field)), width_(width), pivot_of_col_(width, npos) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against current pivot rows; keeps it if independent.
    /// Returns true when the rank grew.
    bool add_row(Vec<F> v) {
        if (v.size() != width_) throw DimensionMismatch("row width mismatch");
        std::size_t c = 0;
        while (c < width_) {
            if (field_.is_zero(v[c])) {
                ++c;
                continue;
            }
            std::size_t r = pivot_of_col_[c];
            if (r == npos) {
                // new pivot: normalize and store
                Elem s = field_.inv(v[c]);
                for (std::size_t k = c; k < width_; ++k) v[k] = field_.mul(v[k], s);
                v[c] = field_.one();
                pivot_of_col_[c] = rows_.size();
                pivots_.push_back(c);
                rows_.push_back(std::move(v));
                return true;
            }
            axpy_neg(v, rows_[r], v[c], c);
            ++c;
        }
        return false;
    }

    /// Back-substitutes and returns the canonical RREF. The reducer may keep
    /// being used afterwards (finalize is idempotent).
    void finalize() {
        // order rows by pivot column
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<Vec<F>> sorted;
        std::vector<std::size_t> spiv;
        sorted.reserve(rows_.size());
        for (std::size_t i : order) {
            sorted.push_back(std::move(rows_[i]));
            spiv.push_back(pivots_[i]);
        }
        rows_ = std::move(sorted);
        pivots_ = std::move(spiv);
        for (std::size_t i = 0; i < rows_.size(); ++i) pivot_of_col_[pivots_[i]] = i;
        // clear above each pivot
        for (std::size_t i = rows_.size(); i-- > 0;) {
            std::size_t pc = pivots_[i];
            for (std::size_t e = 0; e < i; ++e) {
                const Elem& coef = rows_[e][pc];
                if (!field_.is_zero(coef)) axpy_neg(rows_[e], rows_[i], coef, pc);
            }
        }
    }

    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Mat<F> matrix() const {
        Mat<F> m(field_, rows_.size(), width_);
        for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r]);
        return m;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    // v -= coef * w, valid from column c on (both are zero before c)
    void axpy_neg(Vec<F>& v, const Vec<F>& w, Elem coef, std::size_t c) {
        coef = field_.neg(coef);
        for (std::size_t k = c; k < width_; ++k) {
            if (!field_.is_zero(w[k])) v[k] = field_.add(v[k], field_.mul(coef, w[k]));
        }
    }

    F field_;
    std::size_t width_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;       // pivot column of rows_[i]
    std::vector<std::size_t> pivot_of_col_; // inverse map, npos = free
};

/// Canonical reduced row echelon form of m (rows are reduced; the row space
/// is preserved).
template <FieldType F>
Mat<F> rref(const Mat<F>& m) {
    RowReducer<F> red(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    red.finalize();
    return red.matrix();
}

template <FieldType F>
std::size_t rank(const Mat<F>& m) {
    RowReducer<F> red(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    return red.rank();
}

namespace detail {

/// Kernel basis rows extracted from an RREF matrix with the given pivots.
/// The rows returned are independent but not yet in RREF themselves.
template <FieldType F>
std::vector<Vec<F>> kernel_rows_from_rref(const Mat<F>& r, const std::vector<std::size_t>& pivots) {
    const F& f = r.field();
    std::size_t n = r.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec<F>> out;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<F> v(n, f.zero());
        v[c] = f.one();
        for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.neg(r(t, c));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Null space {v : m v = 0}, returned as canonical RREF basis rows.
template <FieldType F>
Mat<F> kernel(const Mat<F>& m) {
    RowReducer<F> red(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    red.finalize();
    auto rows = detail::kernel_rows_from_rref(red.matrix(), red.pivots());
    RowReducer<F> canon(m.field(), m.cols());
    for (auto& v : rows) canon.add_row(std::move(v));
    canon.finalize();
    return canon.matrix();
}

/// Full solution set of m x = b.
template <FieldType F>
struct AffineSolution {
    bool feasible = false;
    Vec<F> particular;      // canonical: free variables set to zero
    Mat<F> homogeneous;     // RREF basis rows of the kernel of m
};

template <FieldType F>
AffineSolution<F> solve_affine(const Mat<F>& m, const Vec<F>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("rhs length != row count");
    const F& f = m.field();
    std::size_t n = m.cols();
    RowReducer<F> red(f, n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec<F> row = m.row(r);
        row.push_back(b[r]);
        red.add_row(std::move(row));
    }
    red.finalize();
    AffineSolution<F> sol;
    for (std::size_t p : red.pivots())
        if (p == n) return sol;  // 0 = nonzero row: infeasible
    sol.feasible = true;
    Mat<F> r = red.matrix();
    sol.particular = Vec<F>(n, f.zero());
    for (std::size_t t = 0; t < red.pivots().size(); ++t)
        sol.particular[red.pivots()[t]] = r(t, n);
    // kernel of m from the same elimination (drop the rhs column)
    Mat<F> mr(f, r.rows(), n);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) mr(i, j) = r(i, j);
    auto rows = detail::kernel_rows_from_rref(mr, red.pivots());
    RowReducer<F> canon(f, n);
    for (auto& v : rows) canon.add_row(std::move(v));
    canon.finalize();
    sol.homogeneous = canon.matrix();
    return sol;
}

/// For an infeasible system m x = b, a row combination y with y^T m = 0 and
/// y^T b = 1: the "0 = nonzero" certificate. Throws InternalCheck when the
/// system is in fact feasible.
template <FieldType F>
Vec<F> infeasibility_certificate(const Mat<F>& m, const Vec<F>& b) {
    const F& f = m.field();
    // solve [m^T; b^T] y = (0,...,0,1)
    Mat<F> s(f, m.cols() + 1, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s(j, i) = m(i, j);
    for (std::size_t i = 0; i < m.rows(); ++i) s(m.cols(), i) = b[i];
    Vec<F> rhs(m.cols() + 1, f.zero());
    rhs[m.cols()] = f.one();
    auto sol = solve_affine(s, rhs);
    if (!sol.feasible)
        throw InternalCheck("no infeasibility certificate: system is solvable");
    return sol.particular;
}

}  // namespace jetcalc
