#include "pathco/dualalg.hpp"

namespace pathco {

TruncatedAlgebraElement TruncatedAlgebraElement::one(const PathSpacePtr& s) {
    TruncatedAlgebraElement e(s);
    for (size_t v = 0; v < s->quiver().vertices.size(); ++v)
        e.add(s->trivial_index(static_cast<int>(v)), Scalar::one());
    return e;
}

TruncatedAlgebraElement TruncatedAlgebraElement::bar(const PathSpacePtr& s, size_t path_idx) {
    TruncatedAlgebraElement e(s);
    e.add(path_idx, Scalar::one());
    return e;
}

void TruncatedAlgebraElement::add(size_t path_idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeff.try_emplace(path_idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeff.erase(it);
    }
}

Scalar TruncatedAlgebraElement::coefficient(size_t path_idx) const {
    auto it = coeff.find(path_idx);
    return it == coeff.end() ? Scalar::zero() : it->second;
}

TruncatedAlgebraElement TruncatedAlgebraElement::operator+(const TruncatedAlgebraElement& o) const {
    TruncatedAlgebraElement r = *this;
    if (!r.space) r.space = o.space;
    for (const auto& [i, c] : o.coeff) r.add(i, c);
    return r;
}

TruncatedAlgebraElement TruncatedAlgebraElement::operator-(const TruncatedAlgebraElement& o) const {
    TruncatedAlgebraElement r = *this;
    if (!r.space) r.space = o.space;
    for (const auto& [i, c] : o.coeff) r.add(i, -c);
    return r;
}

TruncatedAlgebraElement TruncatedAlgebraElement::scaled(const Scalar& c) const {
    TruncatedAlgebraElement r(space);
    if (c.is_zero()) return r;
    for (const auto& [i, x] : coeff) r.add(i, x * c);
    return r;
}

std::vector<Scalar> TruncatedAlgebraElement::to_vector() const {
    std::vector<Scalar> v(space->path_count(), Scalar::zero());
    for (const auto& [i, c] : coeff) v[i] = c;
    return v;
}

std::string TruncatedAlgebraElement::to_string() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : coeff) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*[" + space->path_spec(i) + "]";
    }
    return s;
}

TruncatedAlgebraElement multiply(const TruncatedAlgebraElement& a, const TruncatedAlgebraElement& b) {
    if (!a.space->same_space(*b.space)) throw std::invalid_argument("algebra product across different spaces");
    const PathSpace& sp = *a.space;
    TruncatedAlgebraElement r(a.space);
    for (const auto& [i, ca] : a.coeff)
        for (const auto& [j, cb] : b.coeff) {
            if (sp.target_of(i) != sp.source_of(j)) continue;
            size_t len = sp.length_of(i) + sp.length_of(j);
            if (len > static_cast<size_t>(sp.max_len())) continue;  // rad^{N+1} is killed
            Path p = sp.path(i);
            const Path& q = sp.path(j);
            p.arrows.insert(p.arrows.end(), q.arrows.begin(), q.arrows.end());
            r.add(sp.index_of(p), ca * cb);
        }
    return r;
}

TruncatedAlgebraElement invert_unit(const TruncatedAlgebraElement& a) {
    const PathSpacePtr& sp = a.space;
    // a = a0 - n with a0 the vertex part; invertible iff every k_i != 0
    TruncatedAlgebraElement a0_inv(sp);
    for (size_t v = 0; v < sp->quiver().vertices.size(); ++v) {
        Scalar k = a.coefficient(sp->trivial_index(static_cast<int>(v)));
        if (k.is_zero())
            throw MathError("algebra element is not a unit", "vertex " + sp->quiver().vertices[v] + " has coefficient 0");
        a0_inv.add(sp->trivial_index(static_cast<int>(v)), k.inverse());
    }
    // a * a0^{-1} = 1 - m with m nilpotent; (1-m)^{-1} = 1 + m + ... + m^N
    TruncatedAlgebraElement one = TruncatedAlgebraElement::one(sp);
    TruncatedAlgebraElement m = one - multiply(a, a0_inv);
    TruncatedAlgebraElement series = one, power = one;
    for (int k = 1; k <= sp->max_len(); ++k) {
        power = multiply(power, m);
        if (power.is_zero()) break;
        series = series + power;
    }
    return multiply(a0_inv, series);  // a^{-1} = a0^{-1} (1-m)^{-1}
}

DenseMatrix chi_inner(const TruncatedAlgebraElement& a) {
    const PathSpacePtr& sp = a.space;
    TruncatedAlgebraElement inv = invert_unit(a);
    DenseMatrix m(sp->path_count(), sp->path_count());
    for (size_t i = 0; i < sp->path_count(); ++i) {
        TruncatedAlgebraElement img = multiply(multiply(a, TruncatedAlgebraElement::bar(sp, i)), inv);
        for (const auto& [j, c] : img.coeff) m.at(j, i) = c;
    }
    return m;
}

DenseMatrix dualize(const LinearCoalgMap& sigma) { return sigma.m.transpose(); }

DualAlgebra dual_algebra_of(const LargeSubcoalgebra& d) {
    validate_large(d);
    const PathSpacePtr& sp = d.space;
    DualAlgebra b;
    b.domain = d;
    for (size_t i = 0; i < sp->first_high(); ++i) b.basis.push_back(CoalgElement::basis(sp, i));
    std::vector<size_t> piv;
    for (size_t i = 0; i < sp->first_high(); ++i) piv.push_back(i);
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        size_t pc = 0;
        bool seen = false;
        for (size_t c = 0; c < d.high.ambient(); ++c) {
            hv[c] = d.high.basis().at(r, c);
            if (!seen && !hv[c].is_zero()) {
                pc = c;
                seen = true;
            }
        }
        piv.push_back(sp->first_high() + pc);
        b.basis.push_back(CoalgElement::from_vector(sp, d.embed_high(hv)));
    }

    size_t n = b.basis.size();
    b.c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero())));
    for (size_t k = 0; k < n; ++k) {
        auto t = comultiply(b.basis[k]).flatten();
        // coordinates of Delta(b_k) in basis (x) basis via the RREF pivots
        std::map<std::pair<size_t, size_t>, Scalar> reconstructed;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto it = t.find({piv[i], piv[j]});
                if (it == t.end()) continue;
                b.c[i][j][k] = it->second;
                for (const auto& [lp, lc] : b.basis[i].coeff())
                    for (const auto& [rp, rc] : b.basis[j].coeff()) {
                        auto key = std::make_pair(lp, rp);
                        Scalar v = lc * rc * it->second;
                        auto [jt, inserted] = reconstructed.try_emplace(key, v);
                        if (!inserted) {
                            jt->second += v;
                            if (jt->second.is_zero()) reconstructed.erase(jt);
                        }
                    }
            }
        if (reconstructed != t)
            throw MathError("comultiplication of a basis element leaves D (x) D", b.basis[k].to_string());
    }
    b.unit.assign(n, Scalar::zero());
    for (size_t k = 0; k < n; ++k) b.unit[k] = counit(b.basis[k]);
    return b;
}

std::vector<Scalar> DualAlgebra::product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> r(dim(), Scalar::zero());
    for (size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (size_t k = 0; k < dim(); ++k)
                if (!c[i][j][k].is_zero()) r[k] += w * c[i][j][k];
        }
    }
    return r;
}

bool centralizer_test(const TruncatedAlgebraElement& a) {
    const PathSpacePtr& sp = a.space;
    for (size_t v = 0; v < sp->quiver().vertices.size(); ++v) {
        TruncatedAlgebraElement e = TruncatedAlgebraElement::bar(sp, sp->trivial_index(static_cast<int>(v)));
        if (!(multiply(a, e) == multiply(e, a))) return false;
    }
    return true;
}

bool aut_bullet_test_dual(const PathSpacePtr& space, const DenseMatrix& sigma_star) {
    for (size_t v = 0; v < space->quiver().vertices.size(); ++v) {
        size_t col = space->trivial_index(static_cast<int>(v));
        for (size_t r = 0; r < space->path_count(); ++r) {
            Scalar expected = r == col ? Scalar::one() : Scalar::zero();
            if (sigma_star.at(r, col) != expected) return false;
        }
    }
    return true;
}

}  // namespace pathco
