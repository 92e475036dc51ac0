#pragma once

#include <stdexcept>
#include <string>

#include "pathco/bigint.hpp"

namespace pathco {

/// Thrown when a mathematical contract is violated (singular matrix where an
/// inverse is required, a linear map that fails to be a coalgebra morphism,
/// a membership precondition that does not hold, ...). The CLI maps it to
/// exit code 2, as opposed to plain input errors (exit code 1).
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what, std::string witness = "")
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

enum class FieldKind { Rational, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    long long p = 0;  // modulus in prime mode
};

/// The session-wide scalar field. Fixed before any computation starts;
/// every Scalar records the field it was built in and mixed-field
/// arithmetic is rejected.
void set_field(const FieldSpec& f);
const FieldSpec& field();

/// Reduced fraction of BigInts, denominator positive.
struct Rational {
    BigInt num;
    BigInt den{1};

    void normalize();
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

/// Exact field element: a rational number or a residue in F_p, depending on
/// the session field. No floating point anywhere.
class Scalar {
public:
    Scalar() : Scalar(0) {}
    explicit Scalar(long long v);

    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar from_rational(BigInt num, BigInt den);
    static Scalar parse(const std::string& s);

    bool is_zero() const;
    bool is_one() const { return *this == one(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws MathError on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3/2", "-7" over the rationals; "5 mod 101" in prime mode.
    std::string to_string() const;

    FieldKind kind() const { return kind_; }

private:
    void check_same(const Scalar& o) const;

    FieldKind kind_;
    Rational rat_;       // rational mode
    long long res_ = 0;  // prime mode, in [0, p)
    long long p_ = 0;
};

}  // namespace pathco
