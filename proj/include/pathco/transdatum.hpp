#pragma once

#include <optional>

#include "pathco/element.hpp"

namespace pathco {

/// Primitive element of the target coalgebra between the mu_0-images
/// (s', t') of a path's endpoints: c * (e_{s'} - e_{t'}) plus a combination
/// of arrows from s' to t'. When s' = t' the e-part vanishes and c stays 0.
struct Primitive {
    Scalar c;
    std::map<int, Scalar> arrows;  // target arrow index -> coefficient

    bool is_zero() const;
    void accumulate(const Primitive& o, const Scalar& weight);
    bool operator==(const Primitive& o) const { return c == o.c && arrows == o.arrows; }
};

/// The pair (mu_0, mu_+): a total vertex map plus one primitive for every
/// nontrivial path of length <= N. Equivalent data for a homomorphism of
/// truncated path coalgebras.
struct TransDatum {
    PathSpacePtr source, target;
    std::vector<int> vertex_map;    // source vertex -> target vertex
    std::vector<Primitive> prim;    // indexed by (path index - trivial_count)

    const Primitive& primitive(size_t path_idx) const;
    Primitive& primitive(size_t path_idx);
    /// endpoints (s', t') of the primitive attached to source path i
    std::pair<int, int> primitive_endpoints(size_t path_idx) const;

    bool is_endo() const { return source->same_space(*target); }
    bool operator==(const TransDatum& o) const;

    /// the primitive as an element of kQ'_{<=1}
    CoalgElement primitive_element(size_t path_idx) const;
    /// the primitive as a weighted letter set in the augmented arrow space
    ArrowBlockElement primitive_letters(size_t path_idx) const;
};

TransDatum identity_datum(const PathSpacePtr& space);
TransDatum zero_padded_datum(const PathSpacePtr& source, const PathSpacePtr& target);  // all primitives 0, mu_0 = 0-vertex

/// Matrix of a linear map kQ^c_{<=N} -> kQ'^c_{<=N} over the path bases.
struct LinearCoalgMap {
    PathSpacePtr source, target;
    DenseMatrix m;  // target paths x source paths

    CoalgElement column(size_t source_path) const;
    CoalgElement apply_elem(const CoalgElement& x) const;
    bool operator==(const LinearCoalgMap& o) const { return m == o.m; }
    bool operator!=(const LinearCoalgMap& o) const { return !(m == o.m); }
};

/// The evaluation map f_mu: f(p) is the sum over all ordered
/// factorizations of p into nontrivial subpaths of F(mu_{p_1} box ... box
/// mu_{p_r}). The result is checked to be a coalgebra morphism.
LinearCoalgMap apply(const TransDatum& mu, bool verify = true);

/// Sweedler-form evaluation (splits with trivial parts allowed, killed by
/// mu_+); agrees with apply() on every input.
CoalgElement apply_to_element(const TransDatum& mu, const CoalgElement& x);

/// Delta' o f = (f (x) f) o Delta and eps' o f = eps on every basis path;
/// returns the first failing source path, or nullopt.
std::optional<size_t> verify_coalgebra_morphism(const LinearCoalgMap& f);

/// Inverse of apply: extracts the unique trans-datum of a verified coalgebra
/// morphism, length by length; throws MathError naming the offending path
/// when a residual fails to be primitive.
TransDatum to_datum(const LinearCoalgMap& f);

/// The lift of nu to augmented paths, used by the composition formula:
/// pure-real q -> nu_q, single dashed e_{s,t} -> nu_0(e_s - e_t), one dashed
/// then a real block q -> -c^nu_q nu_0(e_s - e_{t(q)}), all else -> 0.
CoalgElement tilde_eval(const TransDatum& nu, const AugWord& w);

/// Composition (nu o mu)_p = sum over splits of nu~(mu_{p_1} box ... box mu_{p_n}).
TransDatum compose(const TransDatum& nu, const TransDatum& mu);

/// mu_0 injective and every arrow block of mu^1 of full column rank.
bool is_injective_datum(const TransDatum& mu);

/// Group inverse in Omega^*(Q): inverts the filtration-triangular matrix of
/// apply(mu) and extracts the datum.
TransDatum invert(const TransDatum& mu);

/// f restricted to a monomial (subpath-closed) path set, presented by the
/// image of every path in the set. Primitives of paths outside the set are 0.
TransDatum extend_from_monomial(const PathSpacePtr& source, const PathSpacePtr& target,
                                const std::map<size_t, CoalgElement>& images);

/// Coalgebra morphism defined on a large subcoalgebra, by images of its
/// standard basis (vertices, arrows, high-part rows).
struct SubcoalgMorphism {
    LargeSubcoalgebra domain;
    PathSpacePtr target;
    std::vector<int> vertex_images;
    std::vector<CoalgElement> arrow_images;
    std::vector<CoalgElement> high_images;

    CoalgElement apply_elem(const CoalgElement& x) const;  // x must lie in the domain
    static SubcoalgMorphism restriction(const LargeSubcoalgebra& d, const LinearCoalgMap& f);
};

/// Checks Delta' f = (f x f) Delta over the domain basis; nullopt when f is a
/// coalgebra morphism on D, otherwise a witness description.
std::optional<std::string> verify_subcoalgebra_morphism(const SubcoalgMorphism& f);

/// Extends f to a trans-datum on the whole path coalgebra by solving, length
/// by length, the linear system apply(mu)|_D = f with free coordinates 0.
TransDatum extend_from_subcoalgebra(const SubcoalgMorphism& f);

}  // namespace pathco
