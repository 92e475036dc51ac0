#include "pathco/scalar.hpp"

namespace pathco {

namespace {

FieldSpec g_field;  // session field, rational by default

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long mod_reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// extended Euclid inverse in F_p
long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw MathError("F_p: element has no inverse");
    return mod_reduce(t, p);
}

}  // namespace

void set_field(const FieldSpec& f) {
    if (f.kind == FieldKind::Prime) {
        if (f.p < 2 || f.p >= (1ll << 31)) throw std::invalid_argument("prime field modulus out of range");
        if (!is_prime(f.p)) throw std::invalid_argument("field modulus " + std::to_string(f.p) + " is not prime");
    }
    g_field = f;
}

const FieldSpec& field() { return g_field; }

void Rational::normalize() {
    if (num.is_zero()) {
        den = BigInt(1);
        return;
    }
    if (den.is_zero()) throw MathError("rational with zero denominator");
    BigInt g = BigInt::gcd(num, den);
    num = num / g;
    den = den / g;
    if (den.is_negative()) {
        num = -num;
        den = -den;
    }
}

Scalar::Scalar(long long v) : kind_(g_field.kind) {
    if (kind_ == FieldKind::Rational) {
        rat_.num = BigInt(v);
    } else {
        p_ = g_field.p;
        res_ = mod_reduce(v, p_);
    }
}

Scalar Scalar::from_rational(BigInt num, BigInt den) {
    Scalar s;
    if (s.kind_ == FieldKind::Rational) {
        s.rat_.num = std::move(num);
        s.rat_.den = std::move(den);
        s.rat_.normalize();
    } else {
        // reduce the fraction into F_p
        BigInt p(s.p_);
        long long n = (num % p).to_int64();
        long long d = (den % p).to_int64();
        if (mod_reduce(d, s.p_) == 0) throw MathError("denominator vanishes in F_p");
        s.res_ = mod_reduce(n, s.p_) * mod_inverse(mod_reduce(d, s.p_), s.p_) % s.p_;
    }
    return s;
}

Scalar Scalar::parse(const std::string& s) {
    auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        if (g_field.kind != FieldKind::Prime)
            throw std::invalid_argument("scalar '" + s + "' is modular but the session field is rational");
        long long r = std::stoll(s.substr(0, mod_pos));
        long long p = std::stoll(s.substr(mod_pos + 5));
        if (p != g_field.p)
            throw std::invalid_argument("scalar '" + s + "' does not match session modulus " + std::to_string(g_field.p));
        Scalar out;
        out.res_ = mod_reduce(r, out.p_);
        return out;
    }
    auto slash = s.find('/');
    BigInt num = BigInt::from_string(slash == std::string::npos ? s : s.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : BigInt::from_string(s.substr(slash + 1));
    return from_rational(std::move(num), std::move(den));
}

bool Scalar::is_zero() const {
    return kind_ == FieldKind::Rational ? rat_.is_zero() : res_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
    if (kind_ != o.kind_ || (kind_ == FieldKind::Prime && p_ != o.p_))
        throw std::logic_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (kind_ == FieldKind::Rational) {
        r.rat_.num = rat_.num * o.rat_.den + o.rat_.num * rat_.den;
        r.rat_.den = rat_.den * o.rat_.den;
        r.rat_.normalize();
    } else {
        r.res_ = (res_ + o.res_) % p_;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (kind_ == FieldKind::Rational) {
        r.rat_.num = rat_.num * o.rat_.num;
        r.rat_.den = rat_.den * o.rat_.den;
        r.rat_.normalize();
    } else {
        r.res_ = res_ * o.res_ % p_;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (kind_ == FieldKind::Rational) {
        r.rat_.num = -r.rat_.num;
    } else {
        r.res_ = r.res_ == 0 ? 0 : p_ - r.res_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    Scalar r = *this;
    if (kind_ == FieldKind::Rational) {
        std::swap(r.rat_.num, r.rat_.den);
        r.rat_.normalize();
    } else {
        r.res_ = mod_inverse(res_, p_);
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return kind_ == FieldKind::Rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
    if (kind_ == FieldKind::Prime) return std::to_string(res_) + " mod " + std::to_string(p_);
    if (rat_.den == BigInt(1)) return rat_.num.to_string();
    return rat_.num.to_string() + "/" + rat_.den.to_string();
}

}  // namespace pathco
