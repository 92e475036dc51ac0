#include "pathco/galois.hpp"

#include <algorithm>

namespace pathco {

GaloisParamSpace galois_constraints(const LargeSubcoalgebra& d) {
    validate_large(d);
    const PathSpacePtr& sp = d.space;
    const Quiver& q = sp->quiver();

    GaloisParamSpace ps;
    ps.space = sp;
    for (size_t i = sp->first_high(); i < sp->path_count(); ++i) {
        int s = sp->source_of(i), t = sp->target_of(i);
        if (s != t) ps.coords.push_back({i, true, -1});
        for (int a : q.arrows_between(s, t)) ps.coords.push_back({i, false, a});
    }

    // one scalar equation per high-basis row of D and per coordinate of
    // kQ_0 + kQ_1: sum_p a_p mu_p = 0
    std::vector<std::vector<Scalar>> rows;
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::map<size_t, Scalar> a_p;  // path -> coefficient in the row
        for (size_t c = 0; c < d.high.ambient(); ++c) {
            const Scalar& v = d.high.basis().at(r, c);
            if (!v.is_zero()) a_p[sp->first_high() + c] = v;
        }
        for (size_t target_coord = 0; target_coord < sp->first_high(); ++target_coord) {
            std::vector<Scalar> eq(ps.coords.size(), Scalar::zero());
            bool nonzero = false;
            for (size_t k = 0; k < ps.coords.size(); ++k) {
                const auto& coord = ps.coords[k];
                auto it = a_p.find(coord.path);
                if (it == a_p.end()) continue;
                int s = sp->source_of(coord.path), t = sp->target_of(coord.path);
                Scalar contrib = Scalar::zero();
                if (coord.is_c) {
                    if (target_coord == sp->trivial_index(s)) contrib = it->second;
                    if (target_coord == sp->trivial_index(t)) contrib = contrib - it->second;
                } else if (target_coord == sp->arrow_path_index(coord.arrow)) {
                    contrib = it->second;
                }
                if (!contrib.is_zero()) {
                    eq[k] = contrib;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(eq));
        }
    }
    DenseMatrix sys = DenseMatrix::from_rows(rows, ps.coords.size());
    ps.param_kernel = kernel(sys);
    return ps;
}

long long galois_dimension(const LargeSubcoalgebra& d) {
    return static_cast<long long>(galois_constraints(d).dimension());
}

bool is_monomial(const LargeSubcoalgebra& d) {
    for (size_t r = 0; r < d.high.dim(); ++r) {
        size_t nonzero = 0;
        for (size_t c = 0; c < d.high.ambient(); ++c)
            if (!d.high.basis().at(r, c).is_zero()) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

long long galois_dimension_monomial(const LargeSubcoalgebra& d) {
    if (!is_monomial(d)) throw std::invalid_argument("closed form needs a monomial subcoalgebra");
    const PathSpacePtr& sp = d.space;
    std::vector<bool> in_d(sp->path_count(), false);
    for (size_t r = 0; r < d.high.dim(); ++r)
        for (size_t c = 0; c < d.high.ambient(); ++c)
            if (!d.high.basis().at(r, c).is_zero()) in_d[sp->first_high() + c] = true;
    long long dim = 0;
    for (size_t i = sp->first_high(); i < sp->path_count(); ++i) {
        if (in_d[i]) continue;
        int s = sp->source_of(i), t = sp->target_of(i);
        dim += sp->quiver().arrow_count(s, t) + (s != t ? 1 : 0);
    }
    return dim;
}

TransDatum datum_from_parameters(const GaloisParamSpace& ps, const std::vector<Scalar>& point,
                                 const LargeSubcoalgebra& d) {
    if (point.size() != ps.coords.size()) throw std::invalid_argument("parameter point has wrong length");
    if (!ps.param_kernel.contains(point)) throw MathError("parameter point violates the Galois constraints");
    TransDatum mu = identity_datum(ps.space);
    for (size_t k = 0; k < ps.coords.size(); ++k) {
        if (point[k].is_zero()) continue;
        Primitive& p = mu.primitive(ps.coords[k].path);
        if (ps.coords[k].is_c) p.c = point[k];
        else p.arrows[ps.coords[k].arrow] = point[k];
    }
    // the sampled datum must fix D elementwise
    LinearCoalgMap f = apply(mu);
    Subspace full = d.full_subspace();
    for (size_t r = 0; r < full.dim(); ++r) {
        std::vector<Scalar> v(full.ambient());
        for (size_t c = 0; c < full.ambient(); ++c) v[c] = full.basis().at(r, c);
        CoalgElement x = CoalgElement::from_vector(ps.space, v);
        if (!(f.apply_elem(x) == x)) throw MathError("sampled Galois datum moves D (internal error)", x.to_string());
    }
    return mu;
}

std::vector<Scalar> parameters_of_datum(const GaloisParamSpace& ps, const TransDatum& mu) {
    std::vector<Scalar> point(ps.coords.size(), Scalar::zero());
    for (size_t k = 0; k < ps.coords.size(); ++k) {
        const Primitive& p = mu.primitive(ps.coords[k].path);
        if (ps.coords[k].is_c) {
            point[k] = p.c;
        } else {
            auto it = p.arrows.find(ps.coords[k].arrow);
            if (it != p.arrows.end()) point[k] = it->second;
        }
    }
    return point;
}

TransDatum sample_galois(const GaloisParamSpace& ps, const LargeSubcoalgebra& d, Rng& rng) {
    std::vector<Scalar> point(ps.coords.size(), Scalar::zero());
    for (size_t r = 0; r < ps.param_kernel.dim(); ++r) {
        Scalar w = random_scalar(rng);
        if (w.is_zero()) continue;
        for (size_t c = 0; c < ps.coords.size(); ++c)
            point[c] += w * ps.param_kernel.basis().at(r, c);
    }
    return datum_from_parameters(ps, point, d);
}

Subspace fixed_space(const std::vector<TransDatum>& generators) {
    if (generators.empty()) throw std::invalid_argument("fixed_space needs at least one generator");
    const PathSpacePtr& sp = generators.front().source;
    Subspace fixed = Subspace::full(sp->path_count());
    for (const auto& g : generators) {
        if (!is_injective_datum(g)) throw MathError("fixed_space generator is not invertible");
        LinearCoalgMap f = apply(g);
        DenseMatrix shifted = f.m;
        for (size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= Scalar::one();
        fixed = intersect(fixed, kernel(shifted));
    }
    return fixed;
}

namespace {

// kernel-basis data plus the lemma's movers for paths outside D
std::vector<TransDatum> roundtrip_samples(const LargeSubcoalgebra& d, const GaloisParamSpace& ps) {
    std::vector<TransDatum> samples;
    for (size_t r = 0; r < ps.param_kernel.dim(); ++r) {
        std::vector<Scalar> point(ps.coords.size());
        for (size_t c = 0; c < ps.coords.size(); ++c) point[c] = ps.param_kernel.basis().at(r, c);
        samples.push_back(datum_from_parameters(ps, point, d));
    }
    // movers: mu_p = e_{s(p)} - e_{t(p)} for a single path p; they lie in
    // Gal(C/D) exactly when the c_p coordinate direction is in the kernel
    for (size_t k = 0; k < ps.coords.size(); ++k) {
        if (!ps.coords[k].is_c) continue;
        std::vector<Scalar> point(ps.coords.size(), Scalar::zero());
        point[k] = Scalar::one();
        if (!ps.param_kernel.contains(point)) continue;
        samples.push_back(datum_from_parameters(ps, point, d));
    }
    return samples;
}

}  // namespace

RoundtripReport inv_gal_roundtrip(const LargeSubcoalgebra& d) {
    RoundtripReport report;
    report.quiver_acyclic = is_acyclic(d.space->quiver());
    GaloisParamSpace ps = galois_constraints(d);
    std::vector<TransDatum> samples = roundtrip_samples(d, ps);
    if (samples.empty()) samples.push_back(identity_datum(d.space));
    report.samples_used = samples.size();
    report.fixed = fixed_space(samples);
    report.recovered = report.fixed == d.full_subspace();
    return report;
}

GaloisExtensionReport is_galois_extension(const LargeSubcoalgebra& d, const LargeSubcoalgebra& e,
                                          Rng& rng, int trials) {
    GaloisExtensionReport report;
    Subspace e_full = e.full_subspace();
    if (!e_full.contains(d.full_subspace())) {
        report.violation = "D is not contained in E";
        return report;
    }
    report.inclusion_ok = true;

    GaloisParamSpace ps = galois_constraints(d);
    std::vector<TransDatum> samples = roundtrip_samples(d, ps);
    size_t basis_count = samples.size();
    for (int k = 0; k < trials; ++k) samples.push_back(sample_galois(ps, d, rng));
    // pairwise products of the basis samples probe beyond the linear slice
    for (size_t i = 0; i < basis_count; ++i)
        for (size_t j = 0; j < basis_count; ++j) samples.push_back(compose(samples[i], samples[j]));

    report.samples = samples.size();
    for (const auto& sigma : samples) {
        LinearCoalgMap f = apply(sigma);
        for (size_t r = 0; r < e_full.dim(); ++r) {
            std::vector<Scalar> v(e_full.ambient());
            for (size_t c = 0; c < e_full.ambient(); ++c) v[c] = e_full.basis().at(r, c);
            CoalgElement img = f.apply_elem(CoalgElement::from_vector(d.space, v));
            if (!e_full.contains(img.to_vector())) {
                report.violation = "a Galois sample moves " + img.to_string() + " outside E";
                return report;
            }
        }
    }
    report.galois = true;
    return report;
}

long long dim_aut_subcoalgebra(const LargeSubcoalgebra& d, Rng& rng, int trials) {
    validate_large(d);
    const PathSpacePtr& sp = d.space;
    Subspace full = d.full_subspace();
    for (int k = 0; k < trials; ++k) {
        TransDatum sigma = random_invertible_datum(rng, sp);
        LinearCoalgMap f = apply(sigma);
        for (size_t r = 0; r < full.dim(); ++r) {
            std::vector<Scalar> v(full.ambient());
            for (size_t c = 0; c < full.ambient(); ++c) v[c] = full.basis().at(r, c);
            CoalgElement img = f.apply_elem(CoalgElement::from_vector(sp, v));
            if (!full.contains(img.to_vector()))
                throw MathError("formula refused: a sampled automorphism moves D",
                                "aut(C;D) != aut(C) on sample " + std::to_string(k));
        }
    }
    const Quiver& q = sp->quiver();
    long long dim = 0;
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t) {
            long long tau = q.arrow_count(static_cast<int>(s), static_cast<int>(t)) + (s != t ? 1 : 0);
            if (tau == 0) continue;
            // dim (D_+)_{s,t} = |(Q_1)_{s,t}| + dim of the (s,t)-block of D_{>=2}
            Subspace block = coordinate_subspace(sp, [&](size_t i) {
                return sp->length_of(i) >= 2 && sp->source_of(i) == static_cast<int>(s) &&
                       sp->target_of(i) == static_cast<int>(t);
            });
            long long dplus = q.arrow_count(static_cast<int>(s), static_cast<int>(t)) +
                              static_cast<long long>(intersect(full, block).dim());
            dim += tau * dplus;
        }
    return dim;
}

std::vector<LargeSubcoalgebra> monomial_lattice(const LargeSubcoalgebra& lo, const LargeSubcoalgebra& hi) {
    if (!is_monomial(lo) || !is_monomial(hi))
        throw std::invalid_argument("lattice enumeration is provided for monomial subcoalgebras only");
    const PathSpacePtr& sp = lo.space;

    auto path_set = [&](const LargeSubcoalgebra& d) {
        std::vector<bool> in(sp->path_count(), false);
        for (size_t i = 0; i < sp->first_high(); ++i) in[i] = true;
        for (size_t r = 0; r < d.high.dim(); ++r)
            for (size_t c = 0; c < d.high.ambient(); ++c)
                if (!d.high.basis().at(r, c).is_zero()) in[sp->first_high() + c] = true;
        return in;
    };
    std::vector<bool> in_lo = path_set(lo), in_hi = path_set(hi);

    std::vector<size_t> free_paths;
    for (size_t i = sp->first_high(); i < sp->path_count(); ++i) {
        if (in_lo[i] && !in_hi[i]) throw std::invalid_argument("lo is not contained in hi");
        if (!in_lo[i] && in_hi[i]) free_paths.push_back(i);
    }
    if (free_paths.size() > 20) throw std::invalid_argument("lattice enumeration guarded to 20 free paths");

    auto closed = [&](const std::vector<bool>& in) {
        for (size_t i = sp->first_high(); i < sp->path_count(); ++i) {
            if (!in[i]) continue;
            size_t n = sp->length_of(i);
            for (size_t a = 0; a <= n; ++a)
                for (size_t b = a + 2; b <= n; ++b)
                    if (!in[sp->subpath_index(i, a, b)]) return false;
        }
        return true;
    };

    std::vector<LargeSubcoalgebra> members;
    for (uint64_t mask = 0; mask < (1ull << free_paths.size()); ++mask) {
        std::vector<bool> in = in_lo;
        for (size_t k = 0; k < free_paths.size(); ++k)
            if (mask & (1ull << k)) in[free_paths[k]] = true;
        if (!closed(in)) continue;
        std::vector<CoalgElement> gens;
        for (size_t i = sp->first_high(); i < sp->path_count(); ++i)
            if (in[i]) gens.push_back(CoalgElement::basis(sp, i));
        members.push_back(LargeSubcoalgebra::from_generators(sp, gens));
    }
    std::sort(members.begin(), members.end(),
              [](const LargeSubcoalgebra& a, const LargeSubcoalgebra& b) { return a.dim() < b.dim(); });
    return members;
}

}  // namespace pathco
