#include "pathco/matrix.hpp"

namespace pathco {

DenseMatrix DenseMatrix::identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged row in matrix literal");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    DenseMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += aik * b;
            }
        }
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

DenseMatrix rref(const DenseMatrix& m) {
    DenseMatrix a = m;
    size_t lead = 0;
    std::vector<size_t> pivot_rows;
    for (size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
        Scalar inv = a.at(lead, col).inverse();
        for (size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
        }
        ++lead;
    }
    // drop zero rows
    DenseMatrix out(lead, a.cols());
    for (size_t r = 0; r < lead; ++r)
        for (size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    return out;
}

size_t rank(const DenseMatrix& m) { return rref(m).rows(); }

DenseMatrix inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw MathError("inverse of a non-square matrix");
    size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one();
    }
    DenseMatrix red = rref(aug);
    if (red.rows() < n) throw MathError("matrix is singular");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? Scalar::one() : Scalar::zero()))
                throw MathError("matrix is singular");
    DenseMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Subspace Subspace::row_space(const DenseMatrix& m) {
    Subspace s(m.cols());
    s.basis_ = rref(m);
    return s;
}

Subspace Subspace::full(size_t ambient) { return row_space(DenseMatrix::identity(ambient)); }

namespace {

std::vector<size_t> pivot_columns(const DenseMatrix& r) {
    std::vector<size_t> piv;
    for (size_t i = 0; i < r.rows(); ++i) {
        size_t c = 0;
        while (c < r.cols() && r.at(i, c).is_zero()) ++c;
        piv.push_back(c);
    }
    return piv;
}

// reduce v against the RREF rows; returns the residual
std::vector<Scalar> residual(const DenseMatrix& basis, const std::vector<Scalar>& v) {
    std::vector<Scalar> w = v;
    auto piv = pivot_columns(basis);
    for (size_t i = 0; i < basis.rows(); ++i) {
        const Scalar& c = w[piv[i]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (size_t j = piv[i]; j < basis.cols(); ++j) w[j] -= f * basis.at(i, j);
    }
    return w;
}

}  // namespace

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& x : residual(basis_, v))
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (size_t r = 0; r < other.basis_.rows(); ++r) {
        std::vector<Scalar> v(ambient_);
        for (size_t c = 0; c < ambient_; ++c) v[c] = other.basis_.at(r, c);
        if (!contains(v)) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    auto piv = pivot_columns(basis_);
    std::vector<Scalar> coords(basis_.rows(), Scalar::zero());
    std::vector<Scalar> w = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        coords[i] = w[piv[i]];
        if (coords[i].is_zero()) continue;
        for (size_t j = piv[i]; j < ambient_; ++j) w[j] -= coords[i] * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) throw MathError("vector outside subspace");
    return coords;
}

Subspace kernel(const DenseMatrix& m) {
    DenseMatrix r = rref(m);
    auto piv = pivot_columns(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : piv) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> rows;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero());
        v[free_col] = Scalar::one();
        for (size_t i = 0; i < r.rows(); ++i) v[piv[i]] = -r.at(i, free_col);
        rows.push_back(std::move(v));
    }
    return Subspace::row_space(DenseMatrix::from_rows(rows, m.cols()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    DenseMatrix stacked(a.dim() + b.dim(), a.ambient());
    for (size_t r = 0; r < a.dim(); ++r)
        for (size_t c = 0; c < a.ambient(); ++c) stacked.at(r, c) = a.basis().at(r, c);
    for (size_t r = 0; r < b.dim(); ++r)
        for (size_t c = 0; c < a.ambient(); ++c) stacked.at(a.dim() + r, c) = b.basis().at(r, c);
    return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    // (u, v) with u^T A = v^T B sweep out the intersection as u^T A
    size_t k = a.dim(), l = b.dim();
    if (k == 0 || l == 0) return Subspace::zero(a.ambient());
    DenseMatrix sys(a.ambient(), k + l);
    for (size_t c = 0; c < a.ambient(); ++c) {
        for (size_t r = 0; r < k; ++r) sys.at(c, r) = a.basis().at(r, c);
        for (size_t r = 0; r < l; ++r) sys.at(c, k + r) = -b.basis().at(r, c);
    }
    Subspace ker = kernel(sys);
    std::vector<std::vector<Scalar>> rows;
    for (size_t i = 0; i < ker.dim(); ++i) {
        std::vector<Scalar> v(a.ambient(), Scalar::zero());
        for (size_t r = 0; r < k; ++r) {
            const Scalar& u = ker.basis().at(i, r);
            if (u.is_zero()) continue;
            for (size_t c = 0; c < a.ambient(); ++c) v[c] += u * a.basis().at(r, c);
        }
        rows.push_back(std::move(v));
    }
    return Subspace::row_space(DenseMatrix::from_rows(rows, a.ambient()));
}

}  // namespace pathco
