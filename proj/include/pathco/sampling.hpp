#pragma once

#include "pathco/groups.hpp"

namespace pathco {

/// splitmix64: self-contained so reports are byte-identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    long long range(long long lo, long long hi);  // inclusive

private:
    uint64_t state_;
};

/// small integer box over Q; uniform residue over F_p
Scalar random_scalar(Rng& rng, bool nonzero = false);

/// arbitrary trans-datum: random total vertex map, random primitives
TransDatum random_datum(Rng& rng, const PathSpacePtr& source, const PathSpacePtr& target);

/// invertible endo-datum: mu_0 drawn from aut(Q), invertible arrow blocks,
/// random higher primitives
TransDatum random_invertible_datum(Rng& rng, const PathSpacePtr& space);

/// random element of the given subgroup
TransDatum random_in_subgroup(Rng& rng, const PathSpacePtr& space, SubgroupTag tag, int n = 1);

/// unit of the truncated algebra: nonzero vertex coefficients and arbitrary
/// coefficients on the acyclic nontrivial paths (cyclic ones stay 0 so the
/// inner correspondence applies)
TruncatedAlgebraElement random_unit(Rng& rng, const PathSpacePtr& space);

}  // namespace pathco
