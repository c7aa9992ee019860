#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jetcalc/linalg.hpp"

namespace jetcalc {

/// A linear subspace of K^n held in canonical reduced row echelon form, so
/// equal subspaces have identical representations.
template <FieldType F>
class Subspace {
public:
    Subspace(F field, std::size_t ambient)
        : ambient_(ambient), basis_(std::move(field), 0, ambient) {}
    Subspace(std::size_t ambient, Mat<F> rref_basis)
        : ambient_(ambient), basis_(std::move(rref_basis)) {
        if (basis_.cols() != ambient_) throw DimensionMismatch("basis width != ambient dim");
    }

    static Subspace from_span(const F& f, std::size_t ambient, const std::vector<Vec<F>>& gens) {
        RowReducer<F> red(f, ambient);
        for (const auto& g : gens) red.add_row(g);
        red.finalize();
        return Subspace(ambient, red.matrix());
    }
    static Subspace from_span_rows(const Mat<F>& rows) {
        return Subspace(rows.cols(), rref(rows));
    }
    static Subspace full(const F& f, std::size_t ambient) {
        return Subspace(ambient, Mat<F>::identity(f, ambient));
    }

    const F& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<F>& basis() const { return basis_; }
    Vec<F> basis_vector(std::size_t t) const { return basis_.row(t); }

    /// Pivot columns of the basis, strictly increasing.
    std::vector<std::size_t> pivot_cols() const {
        std::vector<std::size_t> p;
        const F& f = field();
        for (std::size_t r = 0; r < basis_.rows(); ++r)
            for (std::size_t c = 0; c < ambient_; ++c)
                if (!f.is_zero(basis_(r, c))) {
                    p.push_back(c);
                    break;
                }
        return p;
    }
    std::vector<std::size_t> free_cols() const {
        std::vector<bool> piv(ambient_, false);
        for (std::size_t p : pivot_cols()) piv[p] = true;
        std::vector<std::size_t> fr;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!piv[c]) fr.push_back(c);
        return fr;
    }

    /// Remainder of v after reduction by the basis; zero iff v lies in the
    /// subspace.
    Vec<F> reduce(Vec<F> v) const {
        const F& f = field();
        if (v.size() != ambient_) throw DimensionMismatch("vector length != ambient dim");
        auto piv = pivot_cols();
        for (std::size_t t = 0; t < piv.size(); ++t) {
            const auto coef = v[piv[t]];
            if (f.is_zero(coef)) continue;
            for (std::size_t c = piv[t]; c < ambient_; ++c)
                v[c] = f.sub(v[c], f.mul(coef, basis_(t, c)));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return vec_is_zero(field(), reduce(v)); }

    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.basis_.rows(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    /// Coordinates of v in the basis (v = coords^T basis), if v is a member.
    std::optional<Vec<F>> coords_of(const Vec<F>& v) const {
        if (!contains(v)) return std::nullopt;
        auto piv = pivot_cols();
        Vec<F> coords(dim(), field().zero());
        for (std::size_t t = 0; t < piv.size(); ++t) coords[t] = v[piv[t]];
        return coords;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_;
    Mat<F> basis_;
};

/// Intersection and sum of two subspaces of the same ambient space. The
/// modular identity dim(a) + dim(b) = dim(meet) + dim(join) is checked.
template <FieldType F>
std::pair<Subspace<F>, Subspace<F>> meet_join(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspaces live in different ambient spaces");
    const F& f = a.field();
    std::size_t n = a.ambient_dim();
    // join: span of both bases
    RowReducer<F> jr(f, n);
    for (std::size_t r = 0; r < a.dim(); ++r) jr.add_row(a.basis_vector(r));
    for (std::size_t r = 0; r < b.dim(); ++r) jr.add_row(b.basis_vector(r));
    jr.finalize();
    Subspace<F> join(n, jr.matrix());
    // meet: v = x^T A = y^T B; kernel of [A^T | -B^T] gives the pairs (x, y)
    Mat<F> stacked(f, n, a.dim() + b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < a.dim(); ++x) stacked(i, x) = a.basis()(x, i);
        for (std::size_t y = 0; y < b.dim(); ++y)
            stacked(i, a.dim() + y) = f.neg(b.basis()(y, i));
    }
    Mat<F> pairs = kernel(stacked);
    std::vector<Vec<F>> gens;
    for (std::size_t r = 0; r < pairs.rows(); ++r) {
        Vec<F> v(n, f.zero());
        for (std::size_t x = 0; x < a.dim(); ++x) {
            if (f.is_zero(pairs(r, x))) continue;
            for (std::size_t c = 0; c < n; ++c)
                v[c] = f.add(v[c], f.mul(pairs(r, x), a.basis()(x, c)));
        }
        gens.push_back(std::move(v));
    }
    Subspace<F> meet = Subspace<F>::from_span(f, n, gens);
    if (meet.dim() + join.dim() != a.dim() + b.dim())
        throw InternalCheck("modular law violated in meet_join");
    return {std::move(meet), std::move(join)};
}

/// Presentation of K^n / R for a relation subspace R: a canonical complement
/// (the standard basis vectors at non-pivot columns), the projection onto the
/// quotient coordinates, and the section embedding them back.
template <FieldType F>
class Quotient {
public:
    explicit Quotient(Subspace<F> relations)
        : relations_(std::move(relations)),
          section_(relations_.field(), 0, 0),
          projection_(relations_.field(), 0, 0) {
        const F& f = relations_.field();
        std::size_t n = relations_.ambient_dim();
        auto piv = relations_.pivot_cols();
        auto free = relations_.free_cols();
        std::size_t q = free.size();
        section_ = Mat<F>(f, q, n);
        for (std::size_t r = 0; r < q; ++r) section_(r, free[r]) = f.one();
        projection_ = Mat<F>(f, q, n);
        for (std::size_t r = 0; r < q; ++r) projection_(r, free[r]) = f.one();
        for (std::size_t t = 0; t < piv.size(); ++t)
            for (std::size_t r = 0; r < q; ++r)
                projection_(r, piv[t]) = f.neg(relations_.basis()(t, free[r]));
        // projection kills each relation and splits the section
        for (std::size_t t = 0; t < relations_.dim(); ++t)
            if (!vec_is_zero(f, projection_.apply(relations_.basis_vector(t))))
                throw InternalCheck("quotient projection does not annihilate relations");
        if (!(projection_ * section_.transpose() == Mat<F>::identity(f, q)))
            throw InternalCheck("quotient projection is not a retraction of the section");
    }

    const F& field() const { return relations_.field(); }
    std::size_t ambient_dim() const { return relations_.ambient_dim(); }
    std::size_t dim() const { return section_.rows(); }
    const Subspace<F>& relations() const { return relations_; }
    /// rows = chosen complement basis vectors in the ambient space
    const Mat<F>& section() const { return section_; }
    /// quotient coordinates of an ambient vector
    const Mat<F>& projection() const { return projection_; }

    Vec<F> project(const Vec<F>& ambient) const { return projection_.apply(ambient); }
    Vec<F> embed(const Vec<F>& quotient_coords) const {
        return section_.transpose().apply(quotient_coords);
    }

private:
    Subspace<F> relations_;
    Mat<F> section_;
    Mat<F> projection_;
};

template <FieldType F>
Quotient<F> quotient_by(Subspace<F> relations) {
    return Quotient<F>(std::move(relations));
}

}  // namespace jetcalc
