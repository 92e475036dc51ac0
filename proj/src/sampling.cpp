#include "pathco/sampling.hpp"

namespace pathco {

uint64_t Rng::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long long Rng::range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Scalar random_scalar(Rng& rng, bool nonzero) {
    if (field().kind == FieldKind::Prime) {
        long long p = field().p;
        return Scalar(rng.range(nonzero ? 1 : 0, p - 1));
    }
    for (;;) {
        long long v = rng.range(-3, 3);
        if (v != 0 || !nonzero) return Scalar(v);
    }
}

namespace {

Primitive random_primitive(Rng& rng, const PathSpacePtr& target, int s, int t) {
    Primitive p;
    if (s != t) p.c = random_scalar(rng);
    for (int a : target->quiver().arrows_between(s, t)) {
        Scalar c = random_scalar(rng);
        if (!c.is_zero()) p.arrows[a] = c;
    }
    return p;
}

void randomize_higher(Rng& rng, TransDatum& mu) {
    const PathSpace& sp = *mu.source;
    for (size_t i = sp.first_high(); i < sp.path_count(); ++i) {
        auto [s, t] = mu.primitive_endpoints(i);
        mu.primitive(i) = random_primitive(rng, mu.target, s, t);
    }
}

// random invertible block matrices written into the arrow primitives,
// assuming mu.vertex_map is a quiver automorphism
void randomize_arrow_blocks(Rng& rng, TransDatum& mu) {
    const Quiver& q = mu.source->quiver();
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t) {
            auto cols = q.arrows_between(static_cast<int>(s), static_cast<int>(t));
            if (cols.empty()) continue;
            auto rows = mu.target->quiver().arrows_between(mu.vertex_map[s], mu.vertex_map[t]);
            size_t m = cols.size();
            DenseMatrix block(m, m);
            for (;;) {
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j) block.at(i, j) = random_scalar(rng);
                if (rank(block) == m) break;
            }
            for (size_t ci = 0; ci < m; ++ci) {
                size_t idx = mu.source->arrow_path_index(cols[ci]);
                Primitive p;
                auto [ps, pt] = mu.primitive_endpoints(idx);
                if (ps != pt) p.c = random_scalar(rng);
                for (size_t ri = 0; ri < m; ++ri)
                    if (!block.at(ri, ci).is_zero()) p.arrows[rows[ri]] = block.at(ri, ci);
                mu.primitive(idx) = std::move(p);
            }
        }
}

}  // namespace

TransDatum random_datum(Rng& rng, const PathSpacePtr& source, const PathSpacePtr& target) {
    TransDatum mu = zero_padded_datum(source, target);
    size_t nt = target->quiver().vertices.size();
    for (auto& v : mu.vertex_map) v = static_cast<int>(rng.next() % nt);
    const PathSpace& sp = *source;
    for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
        auto [s, t] = mu.primitive_endpoints(i);
        mu.primitive(i) = random_primitive(rng, target, s, t);
    }
    return mu;
}

TransDatum random_invertible_datum(Rng& rng, const PathSpacePtr& space) {
    FiniteGroup aut = quiver_automorphisms(space->quiver());
    TransDatum mu = identity_datum(space);
    mu.vertex_map = aut.elements[rng.next() % aut.order()];
    randomize_arrow_blocks(rng, mu);
    randomize_higher(rng, mu);
    return mu;
}

TransDatum random_in_subgroup(Rng& rng, const PathSpacePtr& space, SubgroupTag tag, int n) {
    TransDatum mu = identity_datum(space);
    const PathSpace& sp = *space;
    const Quiver& q = sp.quiver();

    auto random_vertex_scalars = [&] {
        std::vector<Scalar> k(q.vertices.size());
        for (auto& x : k) x = random_scalar(rng, true);
        return k;
    };

    switch (tag) {
        case SubgroupTag::OmegaStar: {
            mu = random_invertible_datum(rng, space);
            break;
        }
        case SubgroupTag::Omega0: {
            randomize_arrow_blocks(rng, mu);
            randomize_higher(rng, mu);
            break;
        }
        case SubgroupTag::OmegaHalf: {
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                size_t i = sp.arrow_path_index(static_cast<int>(a));
                auto [s, t] = mu.primitive_endpoints(i);
                if (s != t) mu.primitive(i).c = random_scalar(rng);
            }
            randomize_higher(rng, mu);
            break;
        }
        case SubgroupTag::OmegaN: {
            for (size_t i = sp.first_high(); i < sp.path_count(); ++i) {
                if (sp.length_of(i) <= static_cast<size_t>(n)) continue;
                auto [s, t] = mu.primitive_endpoints(i);
                mu.primitive(i) = random_primitive(rng, space, s, t);
            }
            break;
        }
        case SubgroupTag::IOmega: {
            auto k = random_vertex_scalars();
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                size_t i = sp.arrow_path_index(static_cast<int>(a));
                auto [s, t] = mu.primitive_endpoints(i);
                Primitive p;
                p.arrows[static_cast<int>(a)] = k[s] / k[t];
                if (s != t) p.c = random_scalar(rng);
                mu.primitive(i) = std::move(p);
            }
            for (size_t i = sp.first_high(); i < sp.path_count(); ++i) {
                auto [s, t] = mu.primitive_endpoints(i);
                Primitive p;
                if (s != t) p.c = random_scalar(rng);
                mu.primitive(i) = std::move(p);
            }
            break;
        }
        case SubgroupTag::IOmegaCirc: {
            for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) {
                auto [s, t] = mu.primitive_endpoints(i);
                if (s != t) mu.primitive(i).c = random_scalar(rng);
            }
            break;
        }
        case SubgroupTag::IOmega0: {
            auto k = random_vertex_scalars();
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                size_t i = sp.arrow_path_index(static_cast<int>(a));
                auto [s, t] = mu.primitive_endpoints(i);
                Primitive p;
                p.arrows[static_cast<int>(a)] = k[s] / k[t];
                mu.primitive(i) = std::move(p);
            }
            break;
        }
        case SubgroupTag::OmegaBullet: {
            randomize_arrow_blocks(rng, mu);
            randomize_higher(rng, mu);
            for (size_t i = sp.trivial_count(); i < sp.path_count(); ++i) mu.primitive(i).c = Scalar::zero();
            break;
        }
    }
    return mu;
}

TruncatedAlgebraElement random_unit(Rng& rng, const PathSpacePtr& space) {
    TruncatedAlgebraElement u(space);
    for (size_t i = 0; i < space->path_count(); ++i) {
        if (space->length_of(i) == 0) {
            u.add(i, random_scalar(rng, true));
        } else if (space->source_of(i) != space->target_of(i)) {
            u.add(i, random_scalar(rng));
        }
    }
    return u;
}

}  // namespace pathco
