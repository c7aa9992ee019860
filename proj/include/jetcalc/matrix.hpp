#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jetcalc/field.hpp"

namespace jetcalc {

template <FieldType F>
using Vec = std::vector<typename F::Elem>;

/// Dense matrix over a field F, row-major storage. Values are immutable in
/// spirit: every library operation builds a fresh matrix.
template <FieldType F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat() : field_(F{}), rows_(0), cols_(0) {}
    Mat(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}
    Mat(F field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw DimensionMismatch("matrix entry count does not match shape");
    }
    // PrimeField has no default constructor; this overload keeps Mat() usable
    // only for Rationals.
    Mat(std::size_t rows, std::size_t cols)
        requires std::default_initializable<F>
        : Mat(F{}, rows, cols) {}

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Elem& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    const std::vector<Elem>& data() const { return a_; }

    Vec<F> row(std::size_t r) const {
        return Vec<F>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }
    Vec<F> col(std::size_t c) const {
        Vec<F> v(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void set_row(std::size_t r, const Vec<F>& v) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
    }
    void set_col(std::size_t c, const Vec<F>& v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    static Mat identity(F field, std::size_t n) {
        Mat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }
    Mat operator-() const {
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.neg(a_[i]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        check_same_field(o);
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& x = (*this)(i, k);
                if (field_.is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(x, o(k, j)));
            }
        return r;
    }
    Mat scaled(const Elem& s) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], s);
        return r;
    }

    bool operator==(const Mat& o) const {
        if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        Vec<F> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            Elem s = field_.zero();
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!field_.is_zero(v[j])) s = field_.add(s, field_.mul((*this)(i, j), v[j]));
            }
            r[i] = s;
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r == 0 ? "[" : " ";
            for (std::size_t c = 0; c < cols_; ++c) {
                s += field_.to_string((*this)(r, c));
                if (c + 1 < cols_) s += " ";
            }
            s += r + 1 < rows_ ? ";\n" : "]";
        }
        return s;
    }

private:
    void check_same_field(const Mat& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch("matrices over different fields");
    }
    void check_same_shape(const Mat& o) const {
        check_same_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

// ---- vector helpers ----

template <FieldType F>
Vec<F> zero_vec(const F& f, std::size_t n) {
    return Vec<F>(n, f.zero());
}

template <FieldType F>
Vec<F> basis_vec(const F& f, std::size_t n, std::size_t i) {
    Vec<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <FieldType F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec<F> r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

template <FieldType F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec<F> r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

template <FieldType F>
Vec<F> vec_scale(const F& f, const typename F::Elem& s, const Vec<F>& a) {
    Vec<F> r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
    return r;
}

template <FieldType F>
bool vec_is_zero(const F& f, const Vec<F>& a) {
    for (const auto& x : a)
        if (!f.is_zero(x)) return false;
    return true;
}

template <FieldType F>
bool vec_eq(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

/// Row-major flattening of a matrix into a vector; the canonical coordinate
/// convention for spaces of linear maps.
template <FieldType F>
Vec<F> flatten(const Mat<F>& m) {
    return m.data();
}

template <FieldType F>
Mat<F> unflatten(const F& f, std::size_t rows, std::size_t cols, const Vec<F>& v) {
    return Mat<F>(f, rows, cols, v);
}

/// Kronecker product; (A (x) B)(ir*rb + jr, ic*cb + jc) = A(ir,ic) B(jr,jc).
template <FieldType F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
    const F& f = a.field();
    Mat<F> r(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ir = 0; ir < a.rows(); ++ir)
        for (std::size_t ic = 0; ic < a.cols(); ++ic) {
            if (f.is_zero(a(ir, ic))) continue;
            for (std::size_t jr = 0; jr < b.rows(); ++jr)
                for (std::size_t jc = 0; jc < b.cols(); ++jc)
                    r(ir * b.rows() + jr, ic * b.cols() + jc) = f.mul(a(ir, ic), b(jr, jc));
        }
    return r;
}

}  // namespace jetcalc
