#pragma once

#include "pathco/dualalg.hpp"

namespace pathco {

/// The subgroup tower of Omega^*(Q) and the inner/bullet subgroups. The
/// groups are infinite over Q, so they are represented intensionally by
/// membership predicates and samplers.
enum class SubgroupTag {
    OmegaStar,    // invertible trans-data
    Omega0,       // mu_0 = id, arrow blocks invertible
    OmegaHalf,    // additionally mu^1_alpha = alpha
    OmegaN,       // mu_alpha = alpha and mu_p = 0 for 2 <= l(p) <= n
    IOmega,       // vertex scalars k: mu^1_alpha = (k_s/k_t) alpha, mu^1_p = 0 beyond arrows
    IOmegaCirc,   // mu^1_alpha = alpha, mu^1_p = 0 beyond arrows (c free)
    IOmega0,      // mu_alpha = (k_s/k_t) alpha exactly, mu_p = 0 beyond arrows
    OmegaBullet,  // all c-components vanish
};

std::string subgroup_name(SubgroupTag tag);
/// Parses "omega*", "omega0*", "omega1/2*", "omega_n*:3", "iomega*",
/// "iomega_o*", "iomega_0*", "omega_bullet*".
std::pair<SubgroupTag, int> parse_subgroup(const std::string& s);

bool membership(const TransDatum& mu, SubgroupTag tag, int n = 1);

/// Vertex scalars k_i (one free scale per weakly connected component, fixed
/// to 1 at the component root) with mu^1_alpha = (k_s/k_t) alpha; nullopt
/// when no such scalars exist.
std::optional<std::vector<Scalar>> vertex_scalars_of(const TransDatum& mu);

/// d_1 = sum_{s != t} |(Q_1)_{s,t}|; d_n = sum |(Q_n)_{s,t}| |(Q_1^tau)_{s,t}|.
long long factor_dim(const PathSpacePtr& space, int n);

/// dim aut(kQ^c_{<= n}) = sum |(Q_1^tau)_{s,t}| |(P_{<= n})_{s,t}|.
long long dim_aut_truncated(const Quiver& q, int n);
/// Acyclic closed form sum (|(Q_1)_{s,t}|+1) |P_{s,t}| (full path coalgebra).
long long dim_aut_full_acyclic(const Quiver& q);

/// dim Out(kQ^a) = sum |(Q_1)_{s,t}| |(Q_{>=1})_{s,t}| - |Q_0| + r, acyclic only.
long long dim_out_acyclic(const Quiver& q);

struct SolvabilityReport {
    bool schurian = false;
    size_t aut_q_order = 0;
    bool aut_q_solvable = false;
    bool aut0_solvable = false;  // iff Schurian
    bool aut_solvable = false;   // iff Schurian and aut(Q) solvable
};
SolvabilityReport solvability_report(const Quiver& q);

/// Trans-datum of the inner automorphism chi_u for a unit
/// u = sum k_i e_i-bar - sum lambda_p p-bar: mu_alpha = (k_s/k_t) alpha +
/// (lambda_alpha/k_t) (e_s - e_t), c_p = lambda_p/k_t for longer paths.
/// Units carrying a cyclic path (s(p) = t(p)) with nonzero coefficient are
/// rejected: the correspondence requires those components to vanish.
TransDatum inner_datum_from_unit(const TruncatedAlgebraElement& u);

/// Closed-form evaluation for inner trans-data. For iOmega_0 data this is
/// x -> (k_s/k_t) x blockwise; iOmega_circ data evaluate by the
/// leg-contraction form recorded by inner_fast_reading. Must agree with
/// apply_to_element everywhere.
CoalgElement inner_apply_fast(const TransDatum& mu, const CoalgElement& x);

/// The closed form used for iOmega_circ data, recorded in reports.
std::string inner_fast_reading();

/// mu in Omega_0^* factors as compose(beta, nu) with beta in Omega_bullet^*
/// and nu in iOmega_circ^*; nu is built length by length, starting at the
/// arrows, so every c-component of the product cancels.
std::pair<TransDatum, TransDatum> decompose_bullet_inner(const TransDatum& mu);

/// mu in iOmega^* factors uniquely as compose(sigma, tau) with sigma in
/// iOmega_circ^* and tau in iOmega_0^*, mirroring u = (sum k_i e_i-bar)(1 - ...).
std::pair<TransDatum, TransDatum> semidirect_factor(const TransDatum& mu);

}  // namespace pathco
