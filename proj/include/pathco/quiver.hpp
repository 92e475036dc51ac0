#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pathco/scalar.hpp"

namespace pathco {

/// Finite directed multigraph. Vertices and arrows are referenced by index;
/// the string ids come from the input file and drive the canonical order.
struct Quiver {
    struct Arrow {
        std::string id;
        int source = 0;
        int target = 0;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;
    void validate() const;

    /// |(Q_1)_{s,t}|
    int arrow_count(int s, int t) const;
    std::vector<int> arrows_between(int s, int t) const;

    bool operator==(const Quiver& o) const;
};

/// Composable arrow sequence; empty sequence = trivial path e_source.
struct Path {
    int source = 0;
    std::vector<int> arrows;

    size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }
    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const Path& o) const {
        return source != o.source ? source < o.source : arrows < o.arrows;
    }
};

/// The path basis of the truncated path coalgebra kQ^c_{<=N}: every path of
/// length <= N in a fixed canonical order (by length, then lexicographically
/// on arrow id strings; trivial paths by vertex id). All coalgebra-level
/// values reference one of these spaces.
class PathSpace {
public:
    PathSpace(Quiver q, int max_len);

    const Quiver& quiver() const { return q_; }
    int max_len() const { return max_len_; }

    size_t path_count() const { return paths_.size(); }
    const Path& path(size_t i) const { return paths_[i]; }
    size_t index_of(const Path& p) const;  // throws when absent
    bool has_path(const Path& p) const { return index_.count(p) > 0; }

    int source_of(size_t i) const { return paths_[i].source; }
    int target_of(size_t i) const { return targets_[i]; }
    int target_of_path(const Path& p) const;
    size_t length_of(size_t i) const { return paths_[i].length(); }

    size_t trivial_count() const { return n_trivial_; }
    size_t arrow_path_count() const { return n_arrows_; }
    /// index range [first_high, path_count()) holds the paths of length >= 2
    size_t first_high() const { return n_trivial_ + n_arrows_; }

    size_t trivial_index(int vertex) const { return trivial_idx_[vertex]; }
    size_t arrow_path_index(int arrow) const { return arrow_idx_[arrow]; }

    /// Index of the subpath of paths_[i] spanning arrow positions [from, to).
    size_t subpath_index(size_t i, size_t from, size_t to) const;

    std::string path_spec(size_t i) const;        // "a.b" / "@v"
    size_t parse_path_spec(const std::string&) const;

    bool same_space(const PathSpace& o) const { return q_ == o.q_ && max_len_ == o.max_len_; }

private:
    Quiver q_;
    int max_len_;
    std::vector<Path> paths_;
    std::vector<int> targets_;
    std::map<Path, size_t> index_;
    std::vector<size_t> trivial_idx_, arrow_idx_;
    size_t n_trivial_ = 0, n_arrows_ = 0;
};

using PathSpacePtr = std::shared_ptr<const PathSpace>;
PathSpacePtr make_space(Quiver q, int max_len);

/// Q^tau: same vertices, original arrows plus one dashed arrow e_{s,t} for
/// every ordered pair of distinct vertices.
Quiver augmented(const Quiver& q);
bool is_dashed_arrow_id(const std::string& id);

bool is_acyclic(const Quiver& q);
int connected_components(const Quiver& q);  // of the underlying undirected graph
bool is_tree(const Quiver& q);
bool is_schurian(const Quiver& q);
int longest_path_bound(const Quiver& q);  // |Q_0| - 1, valid for acyclic quivers

/// Finite permutation group on the vertex set, closed under product and
/// inverse, with its multiplication table.
struct FiniteGroup {
    std::vector<std::vector<int>> elements;      // permutations of vertices
    std::vector<std::vector<int>> table;         // table[i][j] = index of elements[i] o elements[j]
    std::vector<int> inverse;
    int identity = 0;

    size_t order() const { return elements.size(); }
    static FiniteGroup from_permutations(std::vector<std::vector<int>> perms);
};

/// All vertex permutations preserving arrow multiplicities, by backtracking.
/// Guarded to at most 10 vertices.
FiniteGroup quiver_automorphisms(const Quiver& q);

/// Derived series reaches the trivial group.
bool is_solvable(const FiniteGroup& g);

}  // namespace pathco
