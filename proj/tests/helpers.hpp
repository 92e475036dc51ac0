#pragma once

#include "pathco/io.hpp"

namespace pathco::testing {

inline PathSpacePtr space_of(const std::string& builtin, int n, int max_len) {
    return make_space(builtin_quiver(builtin, n), max_len);
}

/// "2*a1.a2 + -1*@1" style literals for expected values
inline CoalgElement elem(const PathSpacePtr& sp, const std::string& text) {
    CoalgElement x(sp);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t plus = text.find(" + ", pos);
        std::string term = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        size_t star = term.find('*');
        Scalar c = star == std::string::npos ? Scalar::one() : Scalar::parse(term.substr(0, star));
        std::string spec = star == std::string::npos ? term : term.substr(star + 1);
        x.add(sp->parse_path_spec(spec), c);
        if (plus == std::string::npos) break;
        pos = plus + 3;
    }
    return x;
}

inline std::vector<Scalar> vec(std::initializer_list<long long> vals) {
    std::vector<Scalar> v;
    for (long long x : vals) v.push_back(Scalar(x));
    return v;
}

inline DenseMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> r;
    size_t cols = 0;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long long x : row) r.back().push_back(Scalar(x));
        cols = r.back().size();
    }
    return DenseMatrix::from_rows(r, cols);
}

struct RationalField {
    RationalField() { set_field({FieldKind::Rational, 0}); }
};

struct PrimeField {
    explicit PrimeField(long long p) { set_field({FieldKind::Prime, p}); }
    ~PrimeField() { set_field({FieldKind::Rational, 0}); }
};

}  // namespace pathco::testing
