#pragma once

#include "pathco/transdatum.hpp"

namespace pathco {

/// Element of the truncated complete path algebra \widehat{kQ^a}/rad^{N+1},
/// written sum a_p p-bar over the paths of length <= N.
struct TruncatedAlgebraElement {
    PathSpacePtr space;
    std::map<size_t, Scalar> coeff;

    TruncatedAlgebraElement() = default;
    explicit TruncatedAlgebraElement(PathSpacePtr s) : space(std::move(s)) {}

    static TruncatedAlgebraElement one(const PathSpacePtr& s);
    static TruncatedAlgebraElement bar(const PathSpacePtr& s, size_t path_idx);

    void add(size_t path_idx, const Scalar& c);
    Scalar coefficient(size_t path_idx) const;
    bool is_zero() const { return coeff.empty(); }
    TruncatedAlgebraElement operator+(const TruncatedAlgebraElement& o) const;
    TruncatedAlgebraElement operator-(const TruncatedAlgebraElement& o) const;
    TruncatedAlgebraElement scaled(const Scalar& c) const;
    bool operator==(const TruncatedAlgebraElement& o) const { return coeff == o.coeff; }

    std::vector<Scalar> to_vector() const;
    std::string to_string() const;
};

/// Concatenation product, truncated at length N; dual to Delta under the
/// pairing (p-bar, q) = delta_{p,q}.
TruncatedAlgebraElement multiply(const TruncatedAlgebraElement& a, const TruncatedAlgebraElement& b);

/// Geometric series inverse: requires every vertex coefficient nonzero.
TruncatedAlgebraElement invert_unit(const TruncatedAlgebraElement& a);

/// Matrix of x -> a x a^{-1} on the bar basis.
DenseMatrix chi_inner(const TruncatedAlgebraElement& a);

/// Transpose with respect to the pairing: sigma*(x-bar) = sum (x-bar, sigma(p)) p-bar.
DenseMatrix dualize(const LinearCoalgMap& sigma);

/// Finite-dimensional dual algebra D* of a large subcoalgebra, presented by
/// structure constants over the dual of D's standard basis.
struct DualAlgebra {
    LargeSubcoalgebra domain;
    std::vector<CoalgElement> basis;               // the chosen basis of D
    std::vector<std::vector<std::vector<Scalar>>> c;  // c[i][j][k]: (b_i^* b_j^*) = sum_k c[i][j][k] b_k^*
    std::vector<Scalar> unit;                      // coordinates of epsilon

    size_t dim() const { return basis.size(); }
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
};

DualAlgebra dual_algebra_of(const LargeSubcoalgebra& d);

/// a commutes with every vertex idempotent e_i-bar.
bool centralizer_test(const TruncatedAlgebraElement& a);

/// sigma* fixes every e_i-bar; agrees with membership of the coalgebra-side
/// datum in Omega_bullet^*.
bool aut_bullet_test_dual(const PathSpacePtr& space, const DenseMatrix& sigma_star);

}  // namespace pathco
