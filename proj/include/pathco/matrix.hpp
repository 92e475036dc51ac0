#pragma once

#include <cstddef>
#include <vector>

#include "pathco/scalar.hpp"

namespace pathco {

/// Dense rectangular matrix of exact scalars. Desk-scale sizes, no sparsity.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero()) {}

    static DenseMatrix identity(size_t n);
    static DenseMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M * v

    bool operator==(const DenseMatrix& o) const;
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

DenseMatrix rref(const DenseMatrix& m);
size_t rank(const DenseMatrix& m);
DenseMatrix inverse(const DenseMatrix& m);  // throws MathError when singular

/// Linear subspace of k^ambient, canonicalized: basis rows in reduced row
/// echelon form, so equality of subspaces is equality of basis matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Row space of m (rows live in k^cols).
    static Subspace row_space(const DenseMatrix& m);
    static Subspace zero(size_t ambient) { return Subspace(ambient); }
    static Subspace full(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const DenseMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Unique coordinates of v in the RREF basis; throws MathError when
    /// v is outside the subspace.
    std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

private:
    size_t ambient_ = 0;
    DenseMatrix basis_;  // RREF, no zero rows
};

/// Basis of the right null space { v : M v = 0 }, canonicalized.
Subspace kernel(const DenseMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace pathco
