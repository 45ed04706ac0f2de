#pragma once
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tcm3 {

using cx = std::complex<double>;

// Dense square complex matrix, row-major. Everything in this project is 8x8
// or smaller, so no attempt is made at being clever.
class cmat {
public:
    cmat() = default;
    explicit cmat(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static cmat identity(std::size_t dim) {
        cmat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    cx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    cmat adjoint() const {
        cmat r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cmat conj() const {
        cmat r(dim_);
        for (std::size_t i = 0; i < dim_ * dim_; ++i) r.a_[i] = std::conj(a_[i]);
        return r;
    }

    cx trace() const {
        cx t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cx& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double hermiticity_defect() const {
        double d = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    friend cmat operator*(const cmat& x, const cmat& y) {
        if (x.dim_ != y.dim_) throw std::invalid_argument("cmat: dimension mismatch");
        cmat r(x.dim_);
        for (std::size_t i = 0; i < x.dim_; ++i)
            for (std::size_t k = 0; k < x.dim_; ++k) {
                const cx xik = x(i, k);
                if (xik == cx{}) continue;
                for (std::size_t j = 0; j < x.dim_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend cmat operator+(const cmat& x, const cmat& y) {
        if (x.dim_ != y.dim_) throw std::invalid_argument("cmat: dimension mismatch");
        cmat r(x.dim_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend cmat operator-(const cmat& x, const cmat& y) {
        if (x.dim_ != y.dim_) throw std::invalid_argument("cmat: dimension mismatch");
        cmat r(x.dim_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend cmat operator*(cx s, const cmat& x) {
        cmat r(x.dim_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }

private:
    std::size_t dim_ = 0;
    std::vector<cx> a_;
};

inline std::vector<cx> operator*(const cmat& m, const std::vector<cx>& v) {
    if (m.dim() != v.size()) throw std::invalid_argument("cmat: vector dimension mismatch");
    std::vector<cx> r(v.size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        cx s = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

}  // namespace tcm3
