#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pathco/matrix.hpp"
#include "pathco/quiver.hpp"

namespace pathco {

/// Exact linear combination of basis paths of length <= N. Zero coefficients
/// are never stored, so equality is map equality.
class CoalgElement {
public:
    CoalgElement() = default;
    explicit CoalgElement(PathSpacePtr space) : space_(std::move(space)) {}

    static CoalgElement basis(PathSpacePtr space, size_t path_idx);
    static CoalgElement vertex(PathSpacePtr space, int v);

    const PathSpacePtr& space() const { return space_; }
    const std::map<size_t, Scalar>& coeff() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    Scalar coefficient(size_t path_idx) const;

    void add(size_t path_idx, const Scalar& c);
    CoalgElement operator+(const CoalgElement& o) const;
    CoalgElement operator-(const CoalgElement& o) const;
    CoalgElement scaled(const Scalar& c) const;
    bool operator==(const CoalgElement& o) const;
    bool operator!=(const CoalgElement& o) const { return !(*this == o); }

    std::vector<Scalar> to_vector() const;
    static CoalgElement from_vector(PathSpacePtr space, const std::vector<Scalar>& v);

    std::string to_string() const;

private:
    PathSpacePtr space_;
    std::map<size_t, Scalar> coeff_;
};

/// Element of kQ^c x kQ^c, canonicalized so the right tensor factors are
/// distinct basis paths carrying all coefficients on the left.
struct TensorSum {
    PathSpacePtr space;
    std::map<size_t, CoalgElement> legs;  // right basis path -> left element

    bool operator==(const TensorSum& o) const { return legs == o.legs; }
    /// flattened (left path, right path) -> coefficient view
    std::map<std::pair<size_t, size_t>, Scalar> flatten() const;
};

/// Delta, splitting every path at all positions; extended linearly.
TensorSum comultiply(const CoalgElement& x);
Scalar counit(const CoalgElement& x);

/// Iterated coproduct Delta^{r-1}(p) of a basis path, as the list of index
/// sequences (i_0=0 <= i_1 <= ... <= i_r = n) marking the split points.
std::vector<std::vector<size_t>> ordered_splits(size_t length, size_t parts, bool allow_trivial);

// ---------------------------------------------------------------------------
// Augmented words and the F-map

struct AugLetter {
    bool dashed = false;
    int arrow = -1;  // real letters: arrow index in Q
    int s = 0, t = 0;

    bool operator==(const AugLetter& o) const {
        return dashed == o.dashed && arrow == o.arrow && s == o.s && t == o.t;
    }
    bool operator<(const AugLetter& o) const {
        return std::tie(dashed, arrow, s, t) < std::tie(o.dashed, o.arrow, o.s, o.t);
    }
};

/// Path in the augmented quiver Q^tau; empty letter list = trivial path.
struct AugWord {
    int source = 0;
    std::vector<AugLetter> letters;

    static AugLetter real(const Quiver& q, int arrow);
    static AugLetter dash(int s, int t);

    size_t length() const { return letters.size(); }
    int target() const { return letters.empty() ? source : letters.back().t; }
    void validate() const;  // composability, dashed s != t

    bool operator==(const AugWord& o) const { return source == o.source && letters == o.letters; }
    bool operator<(const AugWord& o) const {
        return std::tie(source, letters) < std::tie(o.source, o.letters);
    }
};

/// The collapsing coalgebra morphism k(Q^tau)^c -> kQ^c: real paths map to
/// themselves, a dashed run e_{i1,i2}...e_{in,i_{n+1}} to e_{i1} - e_{i2},
/// a real block with dashed tail to the block, a single leading dashed letter
/// before a real block (with optional dashed tail) to minus the block, and
/// every other mixed pattern to zero.
CoalgElement f_map(const PathSpacePtr& space, const AugWord& w);

/// One tensor factor of the cotensor expansion: a weighted set of augmented
/// letters, all supported in a single (s, t) arrow component of Q^tau.
struct ArrowBlockElement {
    int s = 0, t = 0;
    std::vector<std::pair<AugLetter, Scalar>> terms;

    void validate() const;
};

/// Full multilinear expansion of x_1 box ... box x_r into weighted words.
std::vector<std::pair<AugWord, Scalar>> cotensor_expand(const std::vector<ArrowBlockElement>& factors);

/// Coproduct on the augmented path coalgebra (same splitting rule), with the
/// two legs mapped through F and flattened over the Q-path basis; used to
/// check that F is a morphism of coalgebras.
std::map<std::pair<size_t, size_t>, Scalar> fmap_tensor_of_split(const PathSpacePtr& space, const AugWord& w);

/// All augmented words over Q of length <= max_len (exhaustive).
std::vector<AugWord> enumerate_aug_words(const Quiver& q, int max_len);

// ---------------------------------------------------------------------------
// Subcoalgebras

/// All single-leg contractions of Delta(x): for every basis path q appearing
/// in a right (resp. left) tensor leg, the matching left (resp. right) part.
std::vector<CoalgElement> leg_contractions(const CoalgElement& x);

bool is_subcoalgebra(const PathSpacePtr& space, const Subspace& v);

/// Smallest comultiplication-closed subspace containing the generators.
Subspace subcoalgebra_closure(const PathSpacePtr& space, const std::vector<CoalgElement>& generators);

/// Span of all paths of length <= n.
Subspace coradical_truncation(const PathSpacePtr& space, int n);

/// Subspace spanned by the unit vectors of paths selected by the predicate.
Subspace coordinate_subspace(const PathSpacePtr& space, const std::function<bool(size_t)>& pred);

/// Subcoalgebra containing kQ_{<=1}; only the part of degree >= 2 is stored,
/// as a subspace in the coordinates of the length >= 2 paths.
struct LargeSubcoalgebra {
    PathSpacePtr space;
    Subspace high;  // ambient = #paths of length >= 2

    static LargeSubcoalgebra coradical(const PathSpacePtr& space, int n);
    static LargeSubcoalgebra whole(const PathSpacePtr& space);
    static LargeSubcoalgebra from_full_subspace(const PathSpacePtr& space, const Subspace& full);
    static LargeSubcoalgebra from_generators(const PathSpacePtr& space, const std::vector<CoalgElement>& gens);

    Subspace full_subspace() const;  // ambient = all paths
    size_t dim() const;
    bool contains(const CoalgElement& x) const;
    bool operator==(const LargeSubcoalgebra& o) const { return high == o.high; }

    /// embed a vector over the high coordinates into full coordinates
    std::vector<Scalar> embed_high(const std::vector<Scalar>& hv) const;
};

/// Confirms closure under comultiplication (kQ_{<=1} is contained by
/// construction); throws MathError with a witness element otherwise.
void validate_large(const LargeSubcoalgebra& d);

}  // namespace pathco
