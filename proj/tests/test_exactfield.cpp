#include <doctest.h>

#include "helpers.hpp"
#include "pathco/sampling.hpp"

using namespace pathco;
using namespace pathco::testing;

TEST_CASE("bigint arithmetic survives large values") {
    RationalField f;
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109");
    CHECK((a * b).to_string() == "-121932631137021795226076817523485749121223746380010");
    CHECK(((a * b) / b) == a);
    CHECK((a % b + b * (a / b)) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_string() == "12");
    CHECK(BigInt::from_string("0").is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("scalar strings") {
    RationalField f;
    CHECK(Scalar::parse("3/2").to_string() == "3/2");
    CHECK(Scalar::parse("-7").to_string() == "-7");
    CHECK((Scalar::parse("1/3") + Scalar::parse("1/6")).to_string() == "1/2");
    CHECK((Scalar(2).inverse()).to_string() == "1/2");
    CHECK_THROWS_AS(Scalar(0).inverse(), MathError);

    PrimeField fp(101);
    CHECK(Scalar::parse("5 mod 101").to_string() == "5 mod 101");
    CHECK((Scalar(51) * Scalar(2)).to_string() == "1 mod 101");
    CHECK((Scalar(3) / Scalar(2)) * Scalar(2) == Scalar(3));
}

TEST_CASE("rref examples") {
    RationalField f;
    // proportional rows collapse to rank 1
    DenseMatrix m = mat({{2, 4}, {1, 2}});
    DenseMatrix r = rref(m);
    CHECK(r.rows() == 1);
    CHECK(r == mat({{1, 2}}));
    CHECK(rref(DenseMatrix::identity(3)) == DenseMatrix::identity(3));
    CHECK(rref(mat({{0, 1}, {1, 0}})) == DenseMatrix::identity(2));
}

TEST_CASE("kernel examples") {
    RationalField f;
    Subspace k1 = kernel(mat({{1, 1}}));
    CHECK(k1.dim() == 1);
    CHECK(k1.contains(vec({1, -1})));

    CHECK(kernel(DenseMatrix::identity(3)).dim() == 0);

    // oracle: every basis vector of the kernel is annihilated and the stated
    // vector lies in it, with rank-nullity exact
    DenseMatrix m = mat({{1, 2}, {2, 4}});
    Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(rank(m) + k.dim() == m.cols());
    for (size_t r = 0; r < k.dim(); ++r) {
        std::vector<Scalar> v(k.ambient());
        for (size_t c = 0; c < k.ambient(); ++c) v[c] = k.basis().at(r, c);
        for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
    }
    CHECK(k.contains(vec({2, -1})));
}

TEST_CASE("subspace operations") {
    RationalField f;
    Subspace e1 = Subspace::row_space(mat({{1, 0, 0}}));
    Subspace e2 = Subspace::row_space(mat({{0, 1, 0}}));
    Subspace e12 = Subspace::row_space(mat({{1, 0, 0}, {0, 1, 0}}));
    Subspace e23 = Subspace::row_space(mat({{0, 1, 0}, {0, 0, 1}}));
    CHECK(sum(e1, e2) == e12);
    CHECK(intersect(e12, e23) == e2);
    CHECK(Subspace::row_space(mat({{1, 1}})).contains(vec({1, 1})));
    CHECK_THROWS_AS(sum(e1, Subspace::row_space(mat({{1, 0}}))), std::invalid_argument);
}

TEST_CASE("matrix inverse") {
    RationalField f;
    DenseMatrix two = mat({{2}});
    CHECK(inverse(two).at(0, 0) == Scalar::parse("1/2"));
    CHECK(inverse(DenseMatrix::identity(4)) == DenseMatrix::identity(4));
    CHECK(inverse(mat({{1, 1}, {0, 1}})) == mat({{1, -1}, {0, 1}}));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), MathError);
    DenseMatrix m = mat({{3, 1, 0}, {2, 5, 1}, {0, 1, 7}});
    CHECK(m * inverse(m) == DenseMatrix::identity(3));
}

TEST_CASE("modular lattice identity on random triples") {
    RationalField f;
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 4 + rng.next() % 5;
        DenseMatrix cm(1 + rng.next() % 3, n), bm(1 + rng.next() % 3, n);
        for (size_t i = 0; i < cm.rows(); ++i)
            for (size_t j = 0; j < n; ++j) cm.at(i, j) = random_scalar(rng);
        for (size_t i = 0; i < bm.rows(); ++i)
            for (size_t j = 0; j < n; ++j) bm.at(i, j) = random_scalar(rng);
        Subspace c = Subspace::row_space(cm), b = Subspace::row_space(bm);
        DenseMatrix mix(1, c.dim() == 0 ? 1 : c.dim());
        for (size_t j = 0; j < mix.cols(); ++j) mix.at(0, j) = random_scalar(rng);
        Subspace a = c.dim() == 0 ? Subspace::zero(n) : Subspace::row_space(mix * c.basis());
        CHECK(sum(a, intersect(b, c)) == intersect(sum(a, b), c));
    }
}
