#include "pathco/transdatum.hpp"

#include <algorithm>

namespace pathco {

bool Primitive::is_zero() const {
    if (!c.is_zero()) return false;
    for (const auto& [a, x] : arrows)
        if (!x.is_zero()) return false;
    return true;
}

void Primitive::accumulate(const Primitive& o, const Scalar& weight) {
    if (weight.is_zero()) return;
    c += o.c * weight;
    for (const auto& [a, x] : o.arrows) {
        auto [it, inserted] = arrows.try_emplace(a, x * weight);
        if (!inserted) {
            it->second += x * weight;
            if (it->second.is_zero()) arrows.erase(it);
        }
    }
}

const Primitive& TransDatum::primitive(size_t path_idx) const {
    return prim.at(path_idx - source->trivial_count());
}

Primitive& TransDatum::primitive(size_t path_idx) {
    return prim.at(path_idx - source->trivial_count());
}

std::pair<int, int> TransDatum::primitive_endpoints(size_t path_idx) const {
    return {vertex_map[source->source_of(path_idx)], vertex_map[source->target_of(path_idx)]};
}

bool TransDatum::operator==(const TransDatum& o) const {
    return vertex_map == o.vertex_map && prim == o.prim;
}

CoalgElement TransDatum::primitive_element(size_t path_idx) const {
    auto [s, t] = primitive_endpoints(path_idx);
    const Primitive& p = primitive(path_idx);
    CoalgElement e(target);
    if (s != t && !p.c.is_zero()) {
        e.add(target->trivial_index(s), p.c);
        e.add(target->trivial_index(t), -p.c);
    }
    for (const auto& [a, x] : p.arrows) e.add(target->arrow_path_index(a), x);
    return e;
}

ArrowBlockElement TransDatum::primitive_letters(size_t path_idx) const {
    auto [s, t] = primitive_endpoints(path_idx);
    const Primitive& p = primitive(path_idx);
    ArrowBlockElement block;
    block.s = s;
    block.t = t;
    if (s != t && !p.c.is_zero()) block.terms.emplace_back(AugWord::dash(s, t), p.c);
    for (const auto& [a, x] : p.arrows)
        if (!x.is_zero()) block.terms.emplace_back(AugWord::real(target->quiver(), a), x);
    return block;
}

TransDatum identity_datum(const PathSpacePtr& space) {
    TransDatum d;
    d.source = d.target = space;
    d.vertex_map.resize(space->quiver().vertices.size());
    for (size_t v = 0; v < d.vertex_map.size(); ++v) d.vertex_map[v] = static_cast<int>(v);
    d.prim.assign(space->path_count() - space->trivial_count(), Primitive{});
    for (size_t a = 0; a < space->quiver().arrows.size(); ++a) {
        size_t idx = space->arrow_path_index(static_cast<int>(a));
        d.primitive(idx).arrows[static_cast<int>(a)] = Scalar::one();
    }
    return d;
}

TransDatum zero_padded_datum(const PathSpacePtr& source, const PathSpacePtr& target) {
    TransDatum d;
    d.source = source;
    d.target = target;
    d.vertex_map.assign(source->quiver().vertices.size(), 0);
    d.prim.assign(source->path_count() - source->trivial_count(), Primitive{});
    return d;
}

CoalgElement LinearCoalgMap::column(size_t source_path) const {
    CoalgElement e(target);
    for (size_t r = 0; r < m.rows(); ++r) e.add(r, m.at(r, source_path));
    return e;
}

CoalgElement LinearCoalgMap::apply_elem(const CoalgElement& x) const {
    CoalgElement out(target);
    for (const auto& [i, c] : x.coeff()) out = out + column(i).scaled(c);
    return out;
}

namespace {

// sum over all ordered factorizations of p into r >= min_parts nontrivial
// subpaths of F(mu_{p_1} box ... box mu_{p_r})
CoalgElement eq1_sum(const TransDatum& mu, size_t path_idx, size_t min_parts) {
    const PathSpace& sp = *mu.source;
    size_t n = sp.length_of(path_idx);
    CoalgElement acc(mu.target);
    for (size_t r = std::max<size_t>(min_parts, 1); r <= n; ++r) {
        for (const auto& cuts : ordered_splits(n, r, false)) {
            std::vector<ArrowBlockElement> factors;
            bool dead = false;
            for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                size_t sub = sp.subpath_index(path_idx, cuts[k], cuts[k + 1]);
                ArrowBlockElement block = mu.primitive_letters(sub);
                if (block.terms.empty()) {
                    dead = true;
                    break;
                }
                factors.push_back(std::move(block));
            }
            if (dead) continue;
            for (const auto& [word, coeff] : cotensor_expand(factors))
                acc = acc + f_map(mu.target, word).scaled(coeff);
        }
    }
    return acc;
}

}  // namespace

LinearCoalgMap apply(const TransDatum& mu, bool verify) {
    const PathSpace& sp = *mu.source;
    LinearCoalgMap f;
    f.source = mu.source;
    f.target = mu.target;
    f.m = DenseMatrix(mu.target->path_count(), sp.path_count());
    for (size_t i = 0; i < sp.path_count(); ++i) {
        if (sp.length_of(i) == 0) {
            f.m.at(mu.target->trivial_index(mu.vertex_map[sp.source_of(i)]), i) = Scalar::one();
            continue;
        }
        CoalgElement img = eq1_sum(mu, i, 1);
        for (const auto& [p, c] : img.coeff()) f.m.at(p, i) = c;
    }
    if (verify) {
        if (auto bad = verify_coalgebra_morphism(f))
            throw MathError("apply produced a non-morphism (internal error)", sp.path_spec(*bad));
    }
    return f;
}

CoalgElement apply_to_element(const TransDatum& mu, const CoalgElement& x) {
    const PathSpace& sp = *mu.source;
    CoalgElement out(mu.target);
    for (const auto& [i, coeff] : x.coeff()) {
        size_t n = sp.length_of(i);
        if (n == 0) {
            out.add(mu.target->trivial_index(mu.vertex_map[sp.source_of(i)]), coeff);
            continue;
        }
        // mu_0(p) = 0 on nontrivial paths; Sweedler splits allowing trivial
        // parts, which mu_+ kills
        CoalgElement val(mu.target);
        for (size_t r = 1; r <= n; ++r) {
            for (const auto& cuts : ordered_splits(n, r, true)) {
                std::vector<ArrowBlockElement> factors;
                bool dead = false;
                for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                    if (cuts[k] == cuts[k + 1]) {  // trivial leg
                        dead = true;
                        break;
                    }
                    size_t sub = sp.subpath_index(i, cuts[k], cuts[k + 1]);
                    ArrowBlockElement block = mu.primitive_letters(sub);
                    if (block.terms.empty()) {
                        dead = true;
                        break;
                    }
                    factors.push_back(std::move(block));
                }
                if (dead) continue;
                for (const auto& [word, wc] : cotensor_expand(factors))
                    val = val + f_map(mu.target, word).scaled(wc);
            }
        }
        out = out + val.scaled(coeff);
    }
    return out;
}

std::optional<size_t> verify_coalgebra_morphism(const LinearCoalgMap& f) {
    const PathSpace& sp = *f.source;
    for (size_t i = 0; i < sp.path_count(); ++i) {
        CoalgElement fp = f.column(i);
        // counit
        Scalar eps_expected = sp.length_of(i) == 0 ? Scalar::one() : Scalar::zero();
        if (counit(fp) != eps_expected) return i;
        // comultiplicativity
        auto lhs = comultiply(fp).flatten();
        std::map<std::pair<size_t, size_t>, Scalar> rhs;
        size_t n = sp.length_of(i);
        for (size_t cut = 0; cut <= n; ++cut) {
            CoalgElement left = f.column(sp.subpath_index(i, 0, cut));
            CoalgElement right = f.column(sp.subpath_index(i, cut, n));
            for (const auto& [lp, lc] : left.coeff())
                for (const auto& [rp, rc] : right.coeff()) {
                    auto key = std::make_pair(lp, rp);
                    auto [it, inserted] = rhs.try_emplace(key, lc * rc);
                    if (!inserted) {
                        it->second += lc * rc;
                        if (it->second.is_zero()) rhs.erase(it);
                    }
                }
        }
        if (lhs != rhs) return i;
    }
    return std::nullopt;
}

namespace {

// writes x (supported on kQ'_{<=1}) as a primitive between s' and t';
// throws when x is not of that shape
Primitive as_primitive(const PathSpacePtr& target, const CoalgElement& x, int s, int t,
                       const std::string& witness) {
    Primitive p;
    for (const auto& [i, coeff] : x.coeff()) {
        size_t len = target->length_of(i);
        if (len == 0) {
            if (s == t) throw MathError("residual is not a primitive element", witness);
            if (i == target->trivial_index(s)) {
                if (!p.c.is_zero() && p.c != coeff)
                    throw MathError("residual is not a primitive element", witness);
                p.c = coeff;
            } else if (i == target->trivial_index(t)) {
                // must be the matching -c; checked below
            } else {
                throw MathError("residual is not a primitive element", witness);
            }
        } else if (len == 1) {
            int a = target->path(i).arrows[0];
            if (target->quiver().arrows[a].source != s || target->quiver().arrows[a].target != t)
                throw MathError("residual is not a primitive element", witness);
            p.arrows[a] = coeff;
        } else {
            throw MathError("residual is not a primitive element", witness);
        }
    }
    if (s != t) {
        Scalar cs = x.coefficient(target->trivial_index(s));
        Scalar ct = x.coefficient(target->trivial_index(t));
        if (ct != -cs) throw MathError("residual is not a primitive element", witness);
        p.c = cs;
    }
    return p;
}

}  // namespace

TransDatum to_datum(const LinearCoalgMap& f) {
    if (auto bad = verify_coalgebra_morphism(f))
        throw MathError("not a coalgebra morphism", f.source->path_spec(*bad));
    const PathSpace& sp = *f.source;

    TransDatum mu;
    mu.source = f.source;
    mu.target = f.target;
    mu.vertex_map.resize(sp.quiver().vertices.size());
    for (size_t v = 0; v < mu.vertex_map.size(); ++v) {
        CoalgElement img = f.column(sp.trivial_index(static_cast<int>(v)));
        // group-likes of a path coalgebra are exactly the trivial paths
        if (img.coeff().size() != 1) throw MathError("vertex image is not group-like", sp.quiver().vertices[v]);
        auto [idx, c] = *img.coeff().begin();
        if (!c.is_one() || f.target->length_of(idx) != 0)
            throw MathError("vertex image is not group-like", sp.quiver().vertices[v]);
        mu.vertex_map[v] = f.target->source_of(idx);
    }
    mu.prim.assign(sp.path_count() - sp.trivial_count(), Primitive{});

    // paths are ordered by length, so one pass is an induction on length
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        CoalgElement residual = f.column(i) - eq1_sum(mu, i, 2);
        auto [s, t] = mu.primitive_endpoints(i);
        mu.primitive(i) = as_primitive(f.target, residual, s, t, sp.path_spec(i));
    }
    return mu;
}

namespace {

// The lift of nu to augmented paths, computed as the extraction of the
// morphism f_nu o F. On words whose dashed letters survive nu_0 (no
// endpoint pair collapses) this reduces to a short case table: pure-real
// q -> nu_q, single dashed -> nu_0(e_s - e_t), one dashed then a real
// block q -> -c^nu_q nu_0(e_s - e_{t(q)}), all else -> 0. When nu_0
// collapses a dashed letter those shortcuts lose the arrow parts, so the
// general extraction is used throughout; it is what makes the monoid law
// exact for every trans-datum.
class TildeLift {
public:
    explicit TildeLift(const TransDatum& nu) : nu_(nu) {}

    Primitive value(const AugWord& w) {
        bool pure_real = true;
        for (const auto& l : w.letters) pure_real = pure_real && !l.dashed;
        if (pure_real && !w.letters.empty()) {
            Path q;
            q.source = w.source;
            for (const auto& l : w.letters) q.arrows.push_back(l.arrow);
            return nu_.primitive(nu_.source->index_of(q));
        }
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;

        // base case f_nu(F(w)), then subtract all composite terms
        CoalgElement residual(nu_.target);
        CoalgElement fw = f_map(nu_.source, w);
        for (const auto& [p, c] : fw.coeff()) {
            if (nu_.source->length_of(p) == 0)
                residual.add(nu_.target->trivial_index(nu_.vertex_map[nu_.source->source_of(p)]), c);
            else
                residual = residual + image_of_path(p).scaled(c);
        }
        size_t n = w.letters.size();
        for (size_t r = 2; r <= n; ++r) {
            for (const auto& cuts : ordered_splits(n, r, false)) {
                std::vector<ArrowBlockElement> factors;
                bool dead = false;
                for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                    AugWord part{cuts[k] == 0 ? w.source : w.letters[cuts[k] - 1].t,
                                 {w.letters.begin() + cuts[k], w.letters.begin() + cuts[k + 1]}};
                    ArrowBlockElement block = letters_of(value(part), nu_.vertex_map[part.source],
                                                         nu_.vertex_map[part.target()]);
                    if (block.terms.empty()) {
                        dead = true;
                        break;
                    }
                    factors.push_back(std::move(block));
                }
                if (dead) continue;
                for (const auto& [word, coeff] : cotensor_expand(factors))
                    residual = residual - f_map(nu_.target, word).scaled(coeff);
            }
        }
        Primitive p = as_primitive(nu_.target, residual, nu_.vertex_map[w.source],
                                   nu_.vertex_map[w.target()], "tilde lift");
        memo_[w] = p;
        return p;
    }

    ArrowBlockElement letters_of(const Primitive& p, int s, int t) const {
        ArrowBlockElement block;
        block.s = s;
        block.t = t;
        if (s != t && !p.c.is_zero()) block.terms.emplace_back(AugWord::dash(s, t), p.c);
        for (const auto& [a, x] : p.arrows)
            if (!x.is_zero()) block.terms.emplace_back(AugWord::real(nu_.target->quiver(), a), x);
        return block;
    }

private:
    CoalgElement image_of_path(size_t idx) { return eq1_sum(nu_, idx, 1); }

    const TransDatum& nu_;
    std::map<AugWord, Primitive> memo_;
};

}  // namespace

CoalgElement tilde_eval(const TransDatum& nu, const AugWord& w) {
    w.validate();
    if (w.letters.empty()) {
        CoalgElement out(nu.target);
        out.add(nu.target->trivial_index(nu.vertex_map[w.source]), Scalar::one());
        return out;
    }
    TildeLift lift(nu);
    Primitive p = lift.value(w);
    int s = nu.vertex_map[w.source], t = nu.vertex_map[w.target()];
    CoalgElement out(nu.target);
    if (s != t && !p.c.is_zero()) {
        out.add(nu.target->trivial_index(s), p.c);
        out.add(nu.target->trivial_index(t), -p.c);
    }
    for (const auto& [a, x] : p.arrows) out.add(nu.target->arrow_path_index(a), x);
    return out;
}

TransDatum compose(const TransDatum& nu, const TransDatum& mu) {
    if (!mu.target->same_space(*nu.source))
        throw std::invalid_argument("compose: target of inner datum differs from source of outer datum");
    const PathSpace& sp = *mu.source;

    TransDatum out;
    out.source = mu.source;
    out.target = nu.target;
    out.vertex_map.resize(sp.quiver().vertices.size());
    for (size_t v = 0; v < out.vertex_map.size(); ++v)
        out.vertex_map[v] = nu.vertex_map[mu.vertex_map[v]];
    out.prim.assign(sp.path_count() - sp.trivial_count(), Primitive{});

    TildeLift lift(nu);
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        size_t n = sp.length_of(i);
        auto [s2, t2] = out.primitive_endpoints(i);
        Primitive acc;
        for (size_t r = 1; r <= n; ++r) {
            for (const auto& cuts : ordered_splits(n, r, false)) {
                std::vector<ArrowBlockElement> factors;
                bool dead = false;
                for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                    size_t sub = sp.subpath_index(i, cuts[k], cuts[k + 1]);
                    ArrowBlockElement block = mu.primitive_letters(sub);
                    if (block.terms.empty()) {
                        dead = true;
                        break;
                    }
                    factors.push_back(std::move(block));
                }
                if (dead) continue;
                for (const auto& [word, coeff] : cotensor_expand(factors))
                    acc.accumulate(lift.value(word), coeff);
            }
        }
        if (s2 == t2) acc.c = Scalar::zero();
        for (auto it = acc.arrows.begin(); it != acc.arrows.end();)
            it = it->second.is_zero() ? acc.arrows.erase(it) : std::next(it);
        out.primitive(i) = std::move(acc);
    }
    return out;
}

bool is_injective_datum(const TransDatum& mu) {
    const Quiver& q = mu.source->quiver();
    const Quiver& q2 = mu.target->quiver();
    std::vector<bool> hit(q2.vertices.size(), false);
    for (int img : mu.vertex_map) {
        if (hit[img]) return false;
        hit[img] = true;
    }
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t) {
            auto cols = q.arrows_between(static_cast<int>(s), static_cast<int>(t));
            if (cols.empty()) continue;
            auto rows = q2.arrows_between(mu.vertex_map[s], mu.vertex_map[t]);
            DenseMatrix block(rows.size(), cols.size());
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                const Primitive& p = mu.primitive(mu.source->arrow_path_index(cols[ci]));
                for (size_t ri = 0; ri < rows.size(); ++ri) {
                    auto it = p.arrows.find(rows[ri]);
                    if (it != p.arrows.end()) block.at(ri, ci) = it->second;
                }
            }
            if (rank(block) < cols.size()) return false;
        }
    return true;
}

TransDatum invert(const TransDatum& mu) {
    if (mu.source->path_count() != mu.target->path_count() ||
        mu.source->quiver().vertices.size() != mu.target->quiver().vertices.size())
        throw MathError("datum is not invertible: source and target have different sizes");
    if (!is_injective_datum(mu)) throw MathError("datum is not invertible: mu_0 or an arrow block is not injective");
    LinearCoalgMap f = apply(mu);
    DenseMatrix inv;
    try {
        inv = inverse(f.m);
    } catch (const MathError&) {
        throw MathError("datum is not invertible: evaluation matrix is singular");
    }
    LinearCoalgMap g;
    g.source = mu.target;
    g.target = mu.source;
    g.m = std::move(inv);
    return to_datum(g);
}

TransDatum extend_from_monomial(const PathSpacePtr& source, const PathSpacePtr& target,
                                const std::map<size_t, CoalgElement>& images) {
    const PathSpace& sp = *source;
    // the set must be subpath-closed
    for (const auto& [i, img] : images) {
        size_t n = sp.length_of(i);
        for (size_t a = 0; a <= n; ++a)
            for (size_t b = a; b <= n; ++b)
                if (!images.count(sp.subpath_index(i, a, b)))
                    throw std::invalid_argument("monomial set is not closed under subpaths (missing " +
                                                sp.path_spec(sp.subpath_index(i, a, b)) + ")");
    }

    TransDatum mu = zero_padded_datum(source, target);
    for (size_t v = 0; v < sp.quiver().vertices.size(); ++v) {
        auto it = images.find(sp.trivial_index(static_cast<int>(v)));
        if (it == images.end()) continue;  // unconstrained vertex keeps the 0 image
        const CoalgElement& img = it->second;
        if (img.coeff().size() != 1 || !img.coeff().begin()->second.is_one() ||
            target->length_of(img.coeff().begin()->first) != 0)
            throw MathError("vertex image is not group-like", sp.quiver().vertices[v]);
        mu.vertex_map[v] = target->source_of(img.coeff().begin()->first);
    }
    // increasing path index = increasing length
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        auto it = images.find(i);
        if (it == images.end()) continue;
        CoalgElement residual = it->second - eq1_sum(mu, i, 2);
        auto [s, t] = mu.primitive_endpoints(i);
        mu.primitive(i) = as_primitive(target, residual, s, t, sp.path_spec(i));
    }
    // the extension must restrict back to f on the monomial set
    LinearCoalgMap f = apply(mu);
    for (const auto& [i, img] : images)
        if (f.column(i) != img) throw MathError("monomial data do not define a coalgebra morphism", sp.path_spec(i));
    return mu;
}

CoalgElement SubcoalgMorphism::apply_elem(const CoalgElement& x) const {
    const PathSpacePtr& sp = domain.space;
    std::vector<Scalar> coords = domain.full_subspace().coordinates(x.to_vector());
    // coordinate order: trivial paths, arrows, high rows (the RREF pivots)
    CoalgElement out(target);
    size_t n0 = sp->trivial_count(), n1 = sp->arrow_path_count();
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        if (k < n0) {
            int v = sp->source_of(k);
            out.add(target->trivial_index(vertex_images[v]), coords[k]);
        } else if (k < n0 + n1) {
            int a = sp->path(k).arrows[0];
            out = out + arrow_images[a].scaled(coords[k]);
        } else {
            out = out + high_images[k - n0 - n1].scaled(coords[k]);
        }
    }
    return out;
}

SubcoalgMorphism SubcoalgMorphism::restriction(const LargeSubcoalgebra& d, const LinearCoalgMap& f) {
    SubcoalgMorphism g;
    g.domain = d;
    g.target = f.target;
    const PathSpacePtr& sp = d.space;
    for (size_t v = 0; v < sp->quiver().vertices.size(); ++v) {
        CoalgElement img = f.column(sp->trivial_index(static_cast<int>(v)));
        if (img.coeff().size() != 1 || f.target->length_of(img.coeff().begin()->first) != 0)
            throw MathError("vertex image is not group-like", sp->quiver().vertices[v]);
        g.vertex_images.push_back(f.target->source_of(img.coeff().begin()->first));
    }
    for (size_t a = 0; a < sp->quiver().arrows.size(); ++a)
        g.arrow_images.push_back(f.column(sp->arrow_path_index(static_cast<int>(a))));
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        for (size_t c = 0; c < d.high.ambient(); ++c) hv[c] = d.high.basis().at(r, c);
        g.high_images.push_back(f.apply_elem(CoalgElement::from_vector(sp, d.embed_high(hv))));
    }
    return g;
}

namespace {

std::vector<CoalgElement> domain_basis_elements(const LargeSubcoalgebra& d) {
    std::vector<CoalgElement> basis;
    const PathSpacePtr& sp = d.space;
    for (size_t i = 0; i < sp->first_high(); ++i) basis.push_back(CoalgElement::basis(sp, i));
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        for (size_t c = 0; c < d.high.ambient(); ++c) hv[c] = d.high.basis().at(r, c);
        basis.push_back(CoalgElement::from_vector(sp, d.embed_high(hv)));
    }
    return basis;
}

std::vector<CoalgElement> morphism_images(const SubcoalgMorphism& f) {
    std::vector<CoalgElement> images;
    const PathSpacePtr& sp = f.domain.space;
    for (size_t i = 0; i < sp->first_high(); ++i) {
        if (sp->length_of(i) == 0)
            images.push_back(CoalgElement::vertex(f.target, f.vertex_images[sp->source_of(i)]));
        else
            images.push_back(f.arrow_images[sp->path(i).arrows[0]]);
    }
    for (const auto& h : f.high_images) images.push_back(h);
    return images;
}

}  // namespace

std::optional<std::string> verify_subcoalgebra_morphism(const SubcoalgMorphism& f) {
    const LargeSubcoalgebra& d = f.domain;
    const PathSpacePtr& sp = d.space;
    std::vector<CoalgElement> basis = domain_basis_elements(d);
    std::vector<CoalgElement> images = morphism_images(f);

    // pivot columns of the domain basis: the unit coordinates of kQ_{<=1}
    // followed by the pivots of the high part, so Delta(x) in D (x) D has the
    // coordinate matrix C[i][j] = T[piv_i][piv_j]
    std::vector<size_t> piv;
    for (size_t i = 0; i < sp->first_high(); ++i) piv.push_back(i);
    for (size_t r = 0; r < d.high.dim(); ++r) {
        size_t c = 0;
        while (c < d.high.ambient() && d.high.basis().at(r, c).is_zero()) ++c;
        piv.push_back(sp->first_high() + c);
    }

    auto add_term = [](std::map<std::pair<size_t, size_t>, Scalar>& acc, const CoalgElement& l,
                       const CoalgElement& r, const Scalar& w) {
        for (const auto& [lp, lc] : l.coeff())
            for (const auto& [rp, rc] : r.coeff()) {
                auto key = std::make_pair(lp, rp);
                Scalar v = lc * rc * w;
                auto [it, inserted] = acc.try_emplace(key, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
    };

    for (size_t k = 0; k < basis.size(); ++k) {
        const CoalgElement& x = basis[k];
        if (counit(images[k]) != counit(x)) return "counit fails on " + x.to_string();
        auto t = comultiply(x).flatten();
        std::map<std::pair<size_t, size_t>, Scalar> coords, reconstructed, rhs;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                auto it = t.find({piv[i], piv[j]});
                if (it == t.end() || it->second.is_zero()) continue;
                coords[{i, j}] = it->second;
            }
        for (const auto& [ij, c] : coords) {
            add_term(reconstructed, basis[ij.first], basis[ij.second], c);
            add_term(rhs, images[ij.first], images[ij.second], c);
        }
        if (reconstructed != t)
            return "Delta(" + x.to_string() + ") leaves D (x) D: the domain is not a subcoalgebra";
        if (comultiply(images[k]).flatten() != rhs)
            return "comultiplication fails on " + x.to_string();
    }
    return std::nullopt;
}

TransDatum extend_from_subcoalgebra(const SubcoalgMorphism& f) {
    if (auto why = verify_subcoalgebra_morphism(f))
        throw MathError("not a coalgebra morphism on the subcoalgebra", *why);
    const LargeSubcoalgebra& d = f.domain;
    const PathSpacePtr& sp = d.space;
    const PathSpacePtr& tgt = f.target;

    TransDatum mu = zero_padded_datum(sp, tgt);
    mu.vertex_map = f.vertex_images;
    for (size_t a = 0; a < sp->quiver().arrows.size(); ++a) {
        size_t idx = sp->arrow_path_index(static_cast<int>(a));
        auto [s, t] = mu.primitive_endpoints(idx);
        mu.primitive(idx) = as_primitive(tgt, f.arrow_images[a], s, t, sp->path_spec(idx));
    }

    // high rows grouped by level (the top path length in their support);
    // at level n the unknowns are the primitives of the length-n paths
    std::vector<CoalgElement> rows;
    std::vector<CoalgElement> row_images;
    std::vector<size_t> level;
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        for (size_t c = 0; c < d.high.ambient(); ++c) hv[c] = d.high.basis().at(r, c);
        rows.push_back(CoalgElement::from_vector(sp, d.embed_high(hv)));
        row_images.push_back(f.high_images[r]);
        size_t top = 0;
        for (const auto& [pi, c] : rows.back().coeff()) top = std::max(top, sp->length_of(pi));
        level.push_back(top);
    }

    for (size_t n = 2; n + 0u <= static_cast<size_t>(sp->max_len()); ++n) {
        // unknown layout for the length-n paths: c (when s' != t') then arrows
        struct Slot {
            size_t path;
            bool is_c;
            int arrow;
        };
        std::vector<Slot> slots;
        std::map<size_t, size_t> first_slot;
        for (size_t i = sp->first_high(); i < sp->path_count(); ++i) {
            if (sp->length_of(i) != n) continue;
            auto [s, t] = mu.primitive_endpoints(i);
            first_slot[i] = slots.size();
            if (s != t) slots.push_back({i, true, -1});
            for (int a : tgt->quiver().arrows_between(s, t)) slots.push_back({i, false, a});
        }
        std::vector<std::vector<Scalar>> sys_rows;
        std::vector<Scalar> rhs_col;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (level[r] != n) continue;
            // residual = f(x) - sum over known parts of the evaluation
            CoalgElement residual = row_images[r];
            for (const auto& [pi, a_p] : rows[r].coeff()) {
                if (sp->length_of(pi) < n)
                    residual = residual - apply_to_element(mu, CoalgElement::basis(sp, pi)).scaled(a_p);
                else
                    residual = residual - eq1_sum(mu, pi, 2).scaled(a_p);
            }
            // the unknown side sum_{l(p)=n} a_p mu_p lives in kQ'_{<=1}
            for (const auto& [i, c] : residual.coeff())
                if (tgt->length_of(i) >= 2)
                    throw MathError("extension system is inconsistent",
                                    "residual of " + rows[r].to_string() + " leaves kQ'_{<=1}");
            // one scalar equation per target vertex and per target arrow
            for (size_t col = 0; col < tgt->first_high(); ++col) {
                std::vector<Scalar> eq(slots.size(), Scalar::zero());
                for (const auto& [pi, a_p] : rows[r].coeff()) {
                    if (sp->length_of(pi) != n) continue;
                    auto [s, t] = mu.primitive_endpoints(pi);
                    size_t base = first_slot[pi];
                    for (size_t k = base; k < slots.size() && slots[k].path == pi; ++k) {
                        const Slot& slot = slots[k];
                        if (slot.is_c) {
                            if (col == tgt->trivial_index(s)) eq[k] += a_p;
                            if (col == tgt->trivial_index(t)) eq[k] -= a_p;
                        } else if (col == tgt->arrow_path_index(slot.arrow)) {
                            eq[k] += a_p;
                        }
                    }
                }
                sys_rows.push_back(std::move(eq));
                rhs_col.push_back(residual.coefficient(col));
            }
        }
        if (!slots.empty() && !sys_rows.empty()) {
            // solve A u = b by RREF of [A | b]; free coordinates stay 0
            DenseMatrix aug(sys_rows.size(), slots.size() + 1);
            for (size_t r = 0; r < sys_rows.size(); ++r) {
                for (size_t c = 0; c < slots.size(); ++c) aug.at(r, c) = sys_rows[r][c];
                aug.at(r, slots.size()) = rhs_col[r];
            }
            DenseMatrix red = rref(aug);
            std::vector<Scalar> u(slots.size(), Scalar::zero());
            for (size_t r = 0; r < red.rows(); ++r) {
                size_t c = 0;
                while (c < red.cols() && red.at(r, c).is_zero()) ++c;
                if (c == slots.size())
                    throw MathError("extension system is inconsistent", "level " + std::to_string(n));
                u[c] = red.at(r, slots.size());
            }
            for (size_t k = 0; k < slots.size(); ++k) {
                if (u[k].is_zero()) continue;
                Primitive& p = mu.primitive(slots[k].path);
                if (slots[k].is_c) p.c = u[k];
                else p.arrows[slots[k].arrow] = u[k];
            }
        }
    }

    // the extension must restrict back to f on the whole domain
    LinearCoalgMap full = apply(mu);
    std::vector<CoalgElement> basis = domain_basis_elements(d);
    std::vector<CoalgElement> images = morphism_images(f);
    for (size_t k = 0; k < basis.size(); ++k)
        if (full.apply_elem(basis[k]) != images[k])
            throw MathError("extension does not restrict to the given morphism", basis[k].to_string());
    return mu;
}

}  // namespace pathco
