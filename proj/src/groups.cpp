#include "pathco/groups.hpp"

#include <algorithm>

namespace pathco {

std::string subgroup_name(SubgroupTag tag) {
    switch (tag) {
        case SubgroupTag::OmegaStar: return "omega*";
        case SubgroupTag::Omega0: return "omega0*";
        case SubgroupTag::OmegaHalf: return "omega1/2*";
        case SubgroupTag::OmegaN: return "omega_n*";
        case SubgroupTag::IOmega: return "iomega*";
        case SubgroupTag::IOmegaCirc: return "iomega_o*";
        case SubgroupTag::IOmega0: return "iomega_0*";
        case SubgroupTag::OmegaBullet: return "omega_bullet*";
    }
    return "?";
}

std::pair<SubgroupTag, int> parse_subgroup(const std::string& s) {
    if (s == "omega*") return {SubgroupTag::OmegaStar, 0};
    if (s == "omega0*") return {SubgroupTag::Omega0, 0};
    if (s == "omega1/2*") return {SubgroupTag::OmegaHalf, 0};
    if (s.rfind("omega_n*:", 0) == 0) return {SubgroupTag::OmegaN, std::stoi(s.substr(9))};
    if (s == "iomega*") return {SubgroupTag::IOmega, 0};
    if (s == "iomega_o*") return {SubgroupTag::IOmegaCirc, 0};
    if (s == "iomega_0*") return {SubgroupTag::IOmega0, 0};
    if (s == "omega_bullet*") return {SubgroupTag::OmegaBullet, 0};
    throw std::invalid_argument("unknown subgroup tag '" + s + "'");
}

namespace {

bool mu0_is_identity(const TransDatum& mu) {
    for (size_t v = 0; v < mu.vertex_map.size(); ++v)
        if (mu.vertex_map[v] != static_cast<int>(v)) return false;
    return true;
}

bool arrow_blocks_invertible(const TransDatum& mu) {
    const Quiver& q = mu.source->quiver();
    const Quiver& q2 = mu.target->quiver();
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t) {
            auto cols = q.arrows_between(static_cast<int>(s), static_cast<int>(t));
            auto rows = q2.arrows_between(mu.vertex_map[s], mu.vertex_map[t]);
            if (cols.empty() && rows.empty()) continue;
            if (cols.size() != rows.size()) return false;
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

bool mu0_bijective(const TransDatum& mu) {
    if (mu.source->quiver().vertices.size() != mu.target->quiver().vertices.size()) return false;
    std::vector<bool> hit(mu.vertex_map.size(), false);
    for (int v : mu.vertex_map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

// arrow part exactly alpha -> alpha
bool arrow_part_identity(const TransDatum& mu) {
    for (size_t a = 0; a < mu.source->quiver().arrows.size(); ++a) {
        const Primitive& p = mu.primitive(mu.source->arrow_path_index(static_cast<int>(a)));
        if (p.arrows.size() != 1) return false;
        auto it = p.arrows.begin();
        if (it->first != static_cast<int>(a) || !it->second.is_one()) return false;
    }
    return true;
}

bool higher_arrow_parts_vanish(const TransDatum& mu) {
    const PathSpace& sp = *mu.source;
    for (size_t i = sp.first_high(); i < sp.path_count(); ++i)
        if (!mu.primitive(i).arrows.empty()) return false;
    return true;
}

bool higher_primitives_vanish(const TransDatum& mu, int up_to) {
    const PathSpace& sp = *mu.source;
    for (size_t i = sp.first_high(); i < sp.path_count(); ++i) {
        if (up_to >= 0 && sp.length_of(i) > static_cast<size_t>(up_to)) continue;
        if (!mu.primitive(i).is_zero()) return false;
    }
    return true;
}

bool all_c_vanish(const TransDatum& mu) {
    const PathSpace& sp = *mu.source;
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i)
        if (!mu.primitive(i).c.is_zero()) return false;
    return true;
}

}  // namespace

std::optional<std::vector<Scalar>> vertex_scalars_of(const TransDatum& mu) {
    const Quiver& q = mu.source->quiver();
    size_t n = q.vertices.size();
    std::vector<Scalar> k(n, Scalar::zero());
    std::vector<bool> known(n, false);

    // each arrow must have arrow part lambda * alpha with lambda != 0
    std::vector<Scalar> lam(q.arrows.size(), Scalar::zero());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Primitive& p = mu.primitive(mu.source->arrow_path_index(static_cast<int>(a)));
        if (p.arrows.size() != 1) return std::nullopt;
        auto it = p.arrows.begin();
        if (it->first != static_cast<int>(a) || it->second.is_zero()) return std::nullopt;
        lam[a] = it->second;
    }
    // propagate k along the underlying undirected graph, roots at 1
    for (size_t root = 0; root < n; ++root) {
        if (known[root]) continue;
        known[root] = true;
        k[root] = Scalar::one();
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                size_t s = q.arrows[a].source, t = q.arrows[a].target;
                if (s == static_cast<size_t>(v) && !known[t]) {
                    k[t] = k[s] / lam[a];
                    known[t] = true;
                    stack.push_back(t);
                } else if (t == static_cast<size_t>(v) && !known[s]) {
                    k[s] = k[t] * lam[a];
                    known[s] = true;
                    stack.push_back(s);
                }
            }
        }
    }
    for (size_t a = 0; a < q.arrows.size(); ++a)
        if (lam[a] != k[q.arrows[a].source] / k[q.arrows[a].target]) return std::nullopt;
    return k;
}

bool membership(const TransDatum& mu, SubgroupTag tag, int n) {
    if (!mu.is_endo()) throw std::invalid_argument("membership requires an endo-datum");
    switch (tag) {
        case SubgroupTag::OmegaStar:
            return mu0_bijective(mu) && arrow_blocks_invertible(mu);
        case SubgroupTag::Omega0:
            return mu0_is_identity(mu) && arrow_blocks_invertible(mu);
        case SubgroupTag::OmegaHalf:
            return mu0_is_identity(mu) && arrow_part_identity(mu);
        case SubgroupTag::OmegaN: {
            if (!mu0_is_identity(mu)) return false;
            for (size_t a = 0; a < mu.source->quiver().arrows.size(); ++a) {
                const Primitive& p = mu.primitive(mu.source->arrow_path_index(static_cast<int>(a)));
                if (!p.c.is_zero()) return false;
            }
            return arrow_part_identity(mu) && higher_primitives_vanish(mu, n);
        }
        case SubgroupTag::IOmega:
            return mu0_is_identity(mu) && higher_arrow_parts_vanish(mu) && vertex_scalars_of(mu).has_value();
        case SubgroupTag::IOmegaCirc:
            return mu0_is_identity(mu) && arrow_part_identity(mu) && higher_arrow_parts_vanish(mu);
        case SubgroupTag::IOmega0: {
            if (!mu0_is_identity(mu) || !higher_primitives_vanish(mu, -1)) return false;
            for (size_t a = 0; a < mu.source->quiver().arrows.size(); ++a)
                if (!mu.primitive(mu.source->arrow_path_index(static_cast<int>(a))).c.is_zero()) return false;
            return vertex_scalars_of(mu).has_value();
        }
        case SubgroupTag::OmegaBullet:
            return mu0_is_identity(mu) && all_c_vanish(mu) && arrow_blocks_invertible(mu);
    }
    return false;
}

long long factor_dim(const PathSpacePtr& space, int n) {
    if (n < 1 || n > space->max_len()) throw std::invalid_argument("factor_dim level out of range");
    const Quiver& q = space->quiver();
    long long d = 0;
    if (n == 1) {
        for (const auto& a : q.arrows)
            if (a.source != a.target) ++d;
        return d;
    }
    for (size_t i = space->first_high(); i < space->path_count(); ++i) {
        if (space->length_of(i) != static_cast<size_t>(n)) continue;
        int s = space->source_of(i), t = space->target_of(i);
        d += q.arrow_count(s, t) + (s != t ? 1 : 0);
    }
    return d;
}

long long dim_aut_truncated(const Quiver& q, int n) {
    if (n < 1) throw std::invalid_argument("truncation level must be >= 1");
    PathSpace sp(q, n);
    long long d = 0;
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        int s = sp.source_of(i), t = sp.target_of(i);
        d += q.arrow_count(s, t) + (s != t ? 1 : 0);
    }
    return d;
}

long long dim_aut_full_acyclic(const Quiver& q) {
    if (!is_acyclic(q)) throw std::invalid_argument("full automorphism dimension needs an acyclic quiver");
    PathSpace sp(q, longest_path_bound(q));
    long long d = 0;
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        int s = sp.source_of(i), t = sp.target_of(i);
        d += q.arrow_count(s, t) + 1;
    }
    return d;
}

long long dim_out_acyclic(const Quiver& q) {
    if (!is_acyclic(q)) throw std::invalid_argument("dim Out formula requires an acyclic quiver");
    PathSpace sp(q, longest_path_bound(q));
    long long d = 0;
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i)
        d += q.arrow_count(sp.source_of(i), sp.target_of(i));
    return d - static_cast<long long>(q.vertices.size()) + connected_components(q);
}

SolvabilityReport solvability_report(const Quiver& q) {
    SolvabilityReport r;
    r.schurian = is_schurian(q);
    FiniteGroup g = quiver_automorphisms(q);
    r.aut_q_order = g.order();
    r.aut_q_solvable = is_solvable(g);
    r.aut0_solvable = r.schurian;
    r.aut_solvable = r.schurian && r.aut_q_solvable;
    return r;
}

TransDatum inner_datum_from_unit(const TruncatedAlgebraElement& u) {
    const PathSpacePtr& sp = u.space;
    const Quiver& q = sp->quiver();

    std::vector<Scalar> k(q.vertices.size());
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        k[v] = u.coefficient(sp->trivial_index(static_cast<int>(v)));
        if (k[v].is_zero())
            throw MathError("element is not a unit", "vertex " + q.vertices[v] + " has coefficient 0");
    }
    TransDatum mu = identity_datum(sp);
    for (size_t i = sp->trivial_count(); i < sp->path_count(); ++i) {
        int s = sp->source_of(i), t = sp->target_of(i);
        Scalar lambda = -u.coefficient(i);  // u = sum k_i e_i-bar - sum lambda_p p-bar
        if (s == t) {
            if (!lambda.is_zero())
                throw MathError("unit has a cyclic component the inner correspondence cannot carry",
                                sp->path_spec(i));
            if (sp->length_of(i) >= 2) mu.primitive(i) = Primitive{};
            continue;
        }
        Primitive p;
        if (sp->length_of(i) == 1) p.arrows[sp->path(i).arrows[0]] = k[s] / k[t];
        p.c = lambda / k[t];
        mu.primitive(i) = std::move(p);
    }
    // contract: the datum dualizes to chi_u
    if (dualize(apply(mu)) != chi_inner(u))
        throw MathError("inner datum does not dualize to chi_u (internal error)", u.to_string());
    return mu;
}

std::string inner_fast_reading() {
    return "f(x) = mu0(x) + pi_+(x) + sum_{r>=2} c(x_(3))...c(x_(r)) * [ c(x_(2)) x_(1) - c(x_(1)) x_(2) ]";
}

CoalgElement inner_apply_fast(const TransDatum& mu, const CoalgElement& x) {
    if (!x.space()->same_space(*mu.source)) throw std::invalid_argument("element lives in a different space");
    if (membership(mu, SubgroupTag::IOmega0)) {
        auto k = vertex_scalars_of(mu);
        CoalgElement out(mu.source);
        for (const auto& [i, c] : x.coeff()) {
            int s = mu.source->source_of(i), t = mu.source->target_of(i);
            out.add(i, c * (*k)[s] / (*k)[t]);
        }
        return out;
    }
    if (!membership(mu, SubgroupTag::IOmegaCirc))
        throw MathError("inner_apply_fast requires an iOmega_circ^* or iOmega_0^* datum");

    const PathSpace& sp = *mu.source;
    auto c_of = [&](size_t path_idx) {
        return sp.length_of(path_idx) == 0 ? Scalar::zero() : mu.primitive(path_idx).c;
    };
    CoalgElement out(mu.source);
    for (const auto& [pi, w] : x.coeff()) {
        size_t n = sp.length_of(pi);
        CoalgElement val(mu.source);
        val.add(pi, Scalar::one());  // mu0(x) + pi_+(x) together reproduce x on basis paths
        for (size_t r = 2; r <= n + 1; ++r) {
            for (const auto& cuts : ordered_splits(n, r, true)) {
                // product c(x_(3)) ... c(x_(r))
                Scalar prod = Scalar::one();
                bool dead = false;
                for (size_t k2 = 2; k2 < r; ++k2) {
                    Scalar ck = c_of(sp.subpath_index(pi, cuts[k2], cuts[k2 + 1]));
                    if (ck.is_zero()) {
                        dead = true;
                        break;
                    }
                    prod *= ck;
                }
                if (dead) continue;
                size_t x1 = sp.subpath_index(pi, cuts[0], cuts[1]);
                size_t x2 = sp.subpath_index(pi, cuts[1], cuts[2]);
                Scalar c2 = c_of(x2), c1 = c_of(x1);
                if (!c2.is_zero()) val.add(x1, prod * c2);
                if (!c1.is_zero()) val.add(x2, -(prod * c1));
            }
        }
        out = out + val.scaled(w);
    }
    return out;
}

std::pair<TransDatum, TransDatum> decompose_bullet_inner(const TransDatum& mu) {
    if (!membership(mu, SubgroupTag::Omega0))
        throw MathError("decomposition requires a datum in Omega_0^*");
    const PathSpace& sp = *mu.source;

    TransDatum nu = identity_datum(mu.source);
    // length 1: cancel the arrow c-parts first; the level >= 2 induction
    // cannot remove them
    for (size_t a = 0; a < sp.quiver().arrows.size(); ++a) {
        size_t i = sp.arrow_path_index(static_cast<int>(a));
        nu.primitive(i).c = -mu.primitive(i).c;
    }
    for (int n = 2; n <= sp.max_len(); ++n) {
        TransDatum gamma = compose(mu, nu);
        for (size_t i = sp.first_high(); i < sp.path_count(); ++i) {
            if (sp.length_of(i) != static_cast<size_t>(n)) continue;
            nu.primitive(i).c = -gamma.primitive(i).c;
        }
    }
    TransDatum beta = compose(mu, nu);
    if (!membership(beta, SubgroupTag::OmegaBullet))
        throw MathError("bullet-inner decomposition failed (internal error)");
    TransDatum nu_inv = invert(nu);
    if (!(compose(beta, nu_inv) == mu))
        throw MathError("bullet-inner decomposition does not recompose (internal error)");
    return {beta, nu_inv};
}

std::pair<TransDatum, TransDatum> semidirect_factor(const TransDatum& mu) {
    if (!membership(mu, SubgroupTag::IOmega))
        throw MathError("semidirect factorization requires a datum in iOmega^*");
    auto k = vertex_scalars_of(mu);
    const PathSpace& sp = *mu.source;

    TransDatum tau = identity_datum(mu.source);
    for (size_t a = 0; a < sp.quiver().arrows.size(); ++a) {
        size_t i = sp.arrow_path_index(static_cast<int>(a));
        int s = sp.source_of(i), t = sp.target_of(i);
        tau.primitive(i).arrows[static_cast<int>(a)] = (*k)[s] / (*k)[t];
    }
    TransDatum sigma = compose(mu, invert(tau));
    if (!membership(sigma, SubgroupTag::IOmegaCirc) || !(compose(sigma, tau) == mu))
        throw MathError("semidirect factorization failed (internal error)");
    return {sigma, tau};
}

}  // namespace pathco
