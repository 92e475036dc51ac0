#pragma once

#include "pathco/sampling.hpp"

namespace pathco {

/// Affine description of Gal(C/D) per the trans-datum characterization:
/// mu_0 = id and mu_alpha = alpha are pinned; the free coordinates are the
/// primitive components of the paths of length 2..N, cut down by the linear
/// system mu_+(x) = 0 over the high basis of D.
struct GaloisParamSpace {
    struct Coord {
        size_t path;
        bool is_c;  // otherwise an arrow coefficient
        int arrow;
    };

    PathSpacePtr space;
    std::vector<Coord> coords;
    Subspace param_kernel;  // subspace of k^{coords.size()}

    size_t dimension() const { return param_kernel.dim(); }
};

GaloisParamSpace galois_constraints(const LargeSubcoalgebra& d);
long long galois_dimension(const LargeSubcoalgebra& d);

/// Closed form for monomial D: sum over paths outside D of
/// |(Q_1)_{s,t}| + [s != t].
long long galois_dimension_monomial(const LargeSubcoalgebra& d);
bool is_monomial(const LargeSubcoalgebra& d);

/// Instantiates the Galois datum of a parameter point (must lie in the
/// kernel); verified to fix D elementwise.
TransDatum datum_from_parameters(const GaloisParamSpace& ps, const std::vector<Scalar>& point,
                                 const LargeSubcoalgebra& d);
std::vector<Scalar> parameters_of_datum(const GaloisParamSpace& ps, const TransDatum& mu);
TransDatum sample_galois(const GaloisParamSpace& ps, const LargeSubcoalgebra& d, Rng& rng);

/// Joint fixed points of the generators = fixed space of the group they
/// generate; each generator must be invertible.
Subspace fixed_space(const std::vector<TransDatum>& generators);

struct RoundtripReport {
    bool quiver_acyclic = false;
    bool recovered = false;      // Inv(Gal(C/D)) == D
    Subspace fixed;              // the computed invariant subspace
    size_t samples_used = 0;
};

/// Inv(Gal(C/D)) via the kernel-basis samples, augmented by the movers of
/// the acyclic lemma (mu_p = e_{s(p)} - e_{t(p)} for maximal paths outside
/// D). On non-acyclic quivers this reports the failure instead of erroring.
RoundtripReport inv_gal_roundtrip(const LargeSubcoalgebra& d);

struct GaloisExtensionReport {
    bool inclusion_ok = false;
    bool galois = false;  // sampling-based acceptance; refutation is sound
    size_t samples = 0;
    std::string violation;
};

GaloisExtensionReport is_galois_extension(const LargeSubcoalgebra& d, const LargeSubcoalgebra& e,
                                          Rng& rng, int trials);

/// dim aut(D) = sum |(Q_1^tau)_{s,t}| dim (D_+)_{s,t}, valid under
/// aut(C;D) = aut(C) which is checked on sampled generators of aut(C);
/// refuses the formula when a sample moves D.
long long dim_aut_subcoalgebra(const LargeSubcoalgebra& d, Rng& rng, int trials);

/// All monomial large subcoalgebras between lo and hi, enumerated as
/// subpath-closed path sets; guarded to at most 20 free paths.
std::vector<LargeSubcoalgebra> monomial_lattice(const LargeSubcoalgebra& lo, const LargeSubcoalgebra& hi);

}  // namespace pathco
