#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "jetcalc/subspace.hpp"

namespace jetcalc {

/// Finite-dimensional associative unital algebra over F, presented by
/// structure constants: e_i e_j = sum_k c[i][j][k] e_k. Associativity and the
/// unit laws are validated at construction; instances are immutable.
template <FieldType F>
class Algebra {
public:
    using Elem = typename F::Elem;

    /// Validating constructor. structure is the flat tensor c[(i*n + j)*n + k];
    /// unit holds the coordinates of 1.
    static Algebra make(F field, std::size_t n, std::vector<Elem> structure, Vec<F> unit) {
        return Algebra(std::move(field), n, std::move(structure), std::move(unit), true);
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const Vec<F>& unit() const { return unit_; }
    const Elem& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

    /// Product of coordinate vectors through the structure tensor.
    Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const {
        if (a.size() != n_ || b.size() != n_)
            throw DimensionMismatch("element length != algebra dim");
        Vec<F> r(n_, field_.zero());
        for (std::size_t i = 0; i < n_; ++i) {
            if (field_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (field_.is_zero(b[j])) continue;
                Elem ab = field_.mul(a[i], b[j]);
                for (std::size_t k = 0; k < n_; ++k)
                    r[k] = field_.add(r[k], field_.mul(ab, structure(i, j, k)));
            }
        }
        return r;
    }

    /// Matrix of x -> e_i x in the chosen basis.
    const Mat<F>& basis_left_mult(std::size_t i) const { return left_[i]; }
    /// Matrix of x -> x e_i.
    const Mat<F>& basis_right_mult(std::size_t i) const { return right_[i]; }

    Mat<F> left_mult(const Vec<F>& a) const { return combine(left_, a); }
    Mat<F> right_mult(const Vec<F>& a) const { return combine(right_, a); }

    /// First basis pair (i, j) with e_i e_j != e_j e_i, if any.
    std::optional<std::pair<std::size_t, std::size_t>> noncommutative_witness() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!field_.eq(structure(i, j, k), structure(j, i, k)))
                        return std::make_pair(i, j);
        return std::nullopt;
    }
    bool is_commutative() const { return !noncommutative_witness().has_value(); }

    /// {z : z e_i = e_i z for all i}. Always contains the unit.
    Subspace<F> center() const {
        Mat<F> cond(field_, n_ * n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            Mat<F> d = left_[i] - right_[i];  // z -> e_i z - z e_i
            for (std::size_t r = 0; r < n_; ++r)
                for (std::size_t c = 0; c < n_; ++c) cond(i * n_ + r, c) = d(r, c);
        }
        return Subspace<F>(n_, kernel(cond));
    }

private:
    Algebra(F field, std::size_t n, std::vector<Elem> structure, Vec<F> unit, bool validate)
        : field_(std::move(field)), n_(n), c_(std::move(structure)), unit_(std::move(unit)) {
        if (n_ == 0) throw MalformedInput("algebra dimension must be positive");
        if (c_.size() != n_ * n_ * n_) throw MalformedInput("structure tensor has wrong size");
        if (unit_.size() != n_) throw MalformedInput("unit vector has wrong length");
        left_.reserve(n_);
        right_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            Mat<F> l(field_, n_, n_), r(field_, n_, n_);
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    l(k, j) = structure(i, j, k);  // e_i e_j
                    r(k, j) = structure(j, i, k);  // e_j e_i
                }
            left_.push_back(std::move(l));
            right_.push_back(std::move(r));
        }
        if (validate) {
            Mat<F> lu = left_mult(unit_), ru = right_mult(unit_);
            for (std::size_t i = 0; i < n_; ++i) {
                if (!vec_eq(field_, lu.col(i), basis_vec(field_, n_, i)))
                    throw UnitViolation(i);
                if (!vec_eq(field_, ru.col(i), basis_vec(field_, n_, i)))
                    throw UnitViolation(i);
            }
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    // (e_i e_j) e_k vs e_i (e_j e_k), each expanded through the tensor
                    Mat<F> lhs = right_applied(i, j);
                    for (std::size_t k = 0; k < n_; ++k)
                        if (!vec_eq(field_, lhs.col(k),
                                    left_[i].apply(left_[j].col(k))))
                            throw AssociativityViolation(i, j, k);
                }
        }
    }

    // matrix whose column k is (e_i e_j) e_k
    Mat<F> right_applied(std::size_t i, std::size_t j) const {
        Mat<F> m(field_, n_, n_);
        for (std::size_t l = 0; l < n_; ++l) {
            const Elem& coef = structure(i, j, l);
            if (field_.is_zero(coef)) continue;
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t t = 0; t < n_; ++t)
                    m(t, k) = field_.add(m(t, k), field_.mul(coef, structure(l, k, t)));
        }
        return m;
    }

    Mat<F> combine(const std::vector<Mat<F>>& mats, const Vec<F>& a) const {
        if (a.size() != n_) throw DimensionMismatch("element length != algebra dim");
        Mat<F> m(field_, n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (field_.is_zero(a[i])) continue;
            m = m + mats[i].scaled(a[i]);
        }
        return m;
    }

    F field_;
    std::size_t n_;
    std::vector<Elem> c_;
    Vec<F> unit_;
    std::vector<Mat<F>> left_, right_;
};

template <FieldType F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <FieldType F>
AlgebraPtr<F> share(Algebra<F> a) {
    return std::make_shared<const Algebra<F>>(std::move(a));
}

// ---- builders -------------------------------------------------------------

/// Full matrix algebra M_k, basis E_{rc} at flat index r*k + c, with
/// E_{rc} E_{r'c'} = [c == r'] E_{rc'}.
template <FieldType F>
Algebra<F> matrix_algebra(const F& f, std::size_t k) {
    if (k == 0) throw MalformedInput("matrix algebra needs k >= 1");
    std::size_t n = k * k;
    std::vector<typename F::Elem> c(n * n * n, f.zero());
    auto idx = [k](std::size_t r, std::size_t col) { return r * k + col; };
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t u = 0; u < k; ++u)
                    if (s == t)
                        c[(idx(r, s) * n + idx(t, u)) * n + idx(r, u)] = f.one();
    Vec<F> unit(n, f.zero());
    for (std::size_t r = 0; r < k; ++r) unit[idx(r, r)] = f.one();
    return Algebra<F>::make(f, n, std::move(c), std::move(unit));
}

/// K[x]/(f) for a monic polynomial f, coefficients low to high including the
/// leading 1. Basis is the power basis 1, x, ..., x^(deg-1).
template <FieldType F>
Algebra<F> poly_quotient(const F& f, const std::vector<typename F::Elem>& coeffs) {
    if (coeffs.size() < 2) throw MalformedInput("polynomial must have degree >= 1");
    if (!f.eq(coeffs.back(), f.one())) throw MalformedInput("polynomial must be monic");
    std::size_t d = coeffs.size() - 1;
    // powers of x reduced mod f, up to x^(2d-2)
    std::vector<Vec<F>> pw;
    pw.push_back(basis_vec(f, d, 0));
    for (std::size_t e = 1; e <= 2 * d - 2; ++e) {
        const Vec<F>& prev = pw.back();
        Vec<F> nx(d, f.zero());
        for (std::size_t i = 0; i + 1 < d; ++i) nx[i + 1] = prev[i];
        const auto top = prev[d - 1];
        if (!f.is_zero(top))
            for (std::size_t i = 0; i < d; ++i)
                nx[i] = f.sub(nx[i], f.mul(top, coeffs[i]));
        pw.push_back(std::move(nx));
    }
    std::vector<typename F::Elem> c(d * d * d, f.zero());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = pw[i + j][k];
    return Algebra<F>::make(f, d, std::move(c), basis_vec(f, d, 0));
}

/// Dual numbers K[x]/(x^2).
template <FieldType F>
Algebra<F> dual_numbers(const F& f) {
    return poly_quotient(f, {f.zero(), f.zero(), f.one()});
}

/// Product algebra A x B with componentwise operations; the basis is the
/// concatenation of both bases.
template <FieldType F>
Algebra<F> direct_sum(const Algebra<F>& a, const Algebra<F>& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("direct sum over different fields");
    const F& f = a.field();
    std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<typename F::Elem> c(n * n * n, f.zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.structure(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                c[((na + i) * n + (na + j)) * n + (na + k)] = b.structure(i, j, k);
    Vec<F> unit(n, f.zero());
    for (std::size_t i = 0; i < na; ++i) unit[i] = a.unit()[i];
    for (std::size_t i = 0; i < nb; ++i) unit[na + i] = b.unit()[i];
    return Algebra<F>::make(f, n, std::move(c), std::move(unit));
}

/// The base field itself as a 1-dimensional algebra.
template <FieldType F>
Algebra<F> field_algebra(const F& f) {
    return Algebra<F>::make(f, 1, {f.one()}, {f.one()});
}

}  // namespace jetcalc
