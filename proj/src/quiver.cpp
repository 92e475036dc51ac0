#include "pathco/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pathco {

int Quiver::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex id '" + id + "'");
}

int Quiver::arrow_index(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow id '" + id + "'");
}

void Quiver::validate() const {
    std::set<std::string> vids, aids;
    for (const auto& v : vertices) {
        if (v.empty()) throw std::invalid_argument("empty vertex id");
        if (!vids.insert(v).second) throw std::invalid_argument("duplicate vertex id '" + v + "'");
    }
    for (const auto& a : arrows) {
        if (a.id.empty()) throw std::invalid_argument("empty arrow id");
        if (!aids.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
        if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) ||
            a.target < 0 || a.target >= static_cast<int>(vertices.size()))
            throw std::invalid_argument("arrow '" + a.id + "' references a missing vertex");
    }
}

int Quiver::arrow_count(int s, int t) const {
    int n = 0;
    for (const auto& a : arrows)
        if (a.source == s && a.target == t) ++n;
    return n;
}

std::vector<int> Quiver::arrows_between(int s, int t) const {
    std::vector<int> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].source == s && arrows[i].target == t) out.push_back(static_cast<int>(i));
    return out;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id != o.arrows[i].id || arrows[i].source != o.arrows[i].source ||
            arrows[i].target != o.arrows[i].target)
            return false;
    return true;
}

PathSpace::PathSpace(Quiver q, int max_len) : q_(std::move(q)), max_len_(max_len) {
    if (max_len < 0) throw std::invalid_argument("truncation length must be >= 0");
    q_.validate();

    // depth-first enumeration, then canonical sort
    std::vector<std::vector<int>> by_target(q_.vertices.size());
    for (size_t i = 0; i < q_.arrows.size(); ++i) by_target[q_.arrows[i].source].push_back(static_cast<int>(i));

    for (size_t v = 0; v < q_.vertices.size(); ++v) paths_.push_back(Path{static_cast<int>(v), {}});
    std::vector<Path> frontier = paths_;
    for (int len = 1; len <= max_len_; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            int tail = p.arrows.empty() ? p.source : q_.arrows[p.arrows.back()].target;
            for (int a : by_target[tail]) {
                Path ext = p;
                ext.arrows.push_back(a);
                next.push_back(ext);
            }
        }
        paths_.insert(paths_.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    auto id_seq = [&](const Path& p) {
        std::vector<std::string> ids;
        for (int a : p.arrows) ids.push_back(q_.arrows[a].id);
        return ids;
    };
    std::sort(paths_.begin(), paths_.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.trivial()) return q_.vertices[a.source] < q_.vertices[b.source];
        return id_seq(a) < id_seq(b);
    });

    trivial_idx_.assign(q_.vertices.size(), 0);
    arrow_idx_.assign(q_.arrows.size(), 0);
    for (size_t i = 0; i < paths_.size(); ++i) {
        const Path& p = paths_[i];
        index_[p] = i;
        targets_.push_back(target_of_path(p));
        if (p.trivial()) {
            trivial_idx_[p.source] = i;
            ++n_trivial_;
        } else if (p.length() == 1) {
            arrow_idx_[p.arrows[0]] = i;
            ++n_arrows_;
        }
    }
}

size_t PathSpace::index_of(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("path not in the truncated basis");
    return it->second;
}

int PathSpace::target_of_path(const Path& p) const {
    return p.trivial() ? p.source : q_.arrows[p.arrows.back()].target;
}

size_t PathSpace::subpath_index(size_t i, size_t from, size_t to) const {
    const Path& p = paths_[i];
    Path sub;
    sub.source = from == 0 ? p.source : q_.arrows[p.arrows[from - 1]].target;
    sub.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + to);
    return index_of(sub);
}

std::string PathSpace::path_spec(size_t i) const {
    const Path& p = paths_[i];
    if (p.trivial()) return "@" + q_.vertices[p.source];
    std::string s;
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += '.';
        s += q_.arrows[p.arrows[k]].id;
    }
    return s;
}

size_t PathSpace::parse_path_spec(const std::string& spec) const {
    if (spec.empty()) throw std::invalid_argument("empty path spec");
    Path p;
    if (spec[0] == '@') {
        p.source = q_.vertex_index(spec.substr(1));
        return index_of(p);
    }
    std::vector<int> arrows;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t dot = spec.find('.', pos);
        std::string tok = spec.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        arrows.push_back(q_.arrow_index(tok));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    p.source = q_.arrows[arrows[0]].source;
    p.arrows = std::move(arrows);
    for (size_t k = 1; k < p.arrows.size(); ++k)
        if (q_.arrows[p.arrows[k]].source != q_.arrows[p.arrows[k - 1]].target)
            throw std::invalid_argument("non-composable arrows in path spec '" + spec + "'");
    return index_of(p);
}

PathSpacePtr make_space(Quiver q, int max_len) {
    return std::make_shared<const PathSpace>(std::move(q), max_len);
}

static const std::string kDashPrefix = "e(";

Quiver augmented(const Quiver& q) {
    Quiver aug = q;
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t) {
            if (s == t) continue;
            std::string id = kDashPrefix + q.vertices[s] + "," + q.vertices[t] + ")";
            for (const auto& a : q.arrows)
                if (a.id == id) throw std::invalid_argument("arrow id '" + id + "' collides with a dashed arrow");
            aug.arrows.push_back({id, static_cast<int>(s), static_cast<int>(t)});
        }
    return aug;
}

bool is_dashed_arrow_id(const std::string& id) {
    return id.rfind(kDashPrefix, 0) == 0 && !id.empty() && id.back() == ')';
}

bool is_acyclic(const Quiver& q) {
    size_t n = q.vertices.size();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (const auto& a : q.arrows) {
            if (a.source != v) continue;
            if (state[a.target] == 1) return false;
            if (state[a.target] == 0 && !dfs(a.target)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (size_t v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(static_cast<int>(v))) return false;
    return true;
}

int connected_components(const Quiver& q) {
    size_t n = q.vertices.size();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (size_t v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<size_t> stack{v};
        comp[v] = count;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (const auto& a : q.arrows) {
                int w = -1;
                if (a.source == static_cast<int>(u)) w = a.target;
                else if (a.target == static_cast<int>(u)) w = a.source;
                if (w >= 0 && comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(static_cast<size_t>(w));
                }
            }
        }
        ++count;
    }
    return count;
}

bool is_tree(const Quiver& q) {
    // connected and no undirected cycles: |edges| = |vertices| - 1 with one component
    return connected_components(q) == 1 && q.arrows.size() + 1 == q.vertices.size();
}

bool is_schurian(const Quiver& q) {
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t)
            if (q.arrow_count(static_cast<int>(s), static_cast<int>(t)) > 1) return false;
    return true;
}

int longest_path_bound(const Quiver& q) {
    return q.vertices.empty() ? 0 : static_cast<int>(q.vertices.size()) - 1;
}

FiniteGroup FiniteGroup::from_permutations(std::vector<std::vector<int>> perms) {
    FiniteGroup g;
    g.elements = std::move(perms);
    size_t n = g.elements.size();
    auto find = [&](const std::vector<int>& p) {
        for (size_t i = 0; i < n; ++i)
            if (g.elements[i] == p) return static_cast<int>(i);
        throw MathError("permutation set not closed under composition");
    };
    size_t deg = g.elements.empty() ? 0 : g.elements[0].size();
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    g.identity = find(id);
    g.table.assign(n, std::vector<int>(n, 0));
    g.inverse.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<int> prod(deg);
            for (size_t v = 0; v < deg; ++v) prod[v] = g.elements[i][g.elements[j][v]];
            g.table[i][j] = find(prod);
            if (g.table[i][j] == g.identity) g.inverse[i] = static_cast<int>(j);
        }
    return g;
}

FiniteGroup quiver_automorphisms(const Quiver& q) {
    size_t n = q.vertices.size();
    if (n > 10) throw std::invalid_argument("automorphism search guarded to <= 10 vertices");

    std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
    for (const auto& a : q.arrows) counts[a.source][a.target]++;

    // degree signature pruning: candidate images must have the same
    // multiset of in/out arrow multiplicities
    auto signature = [&](size_t v) {
        std::vector<int> out_deg, in_deg;
        for (size_t w = 0; w < n; ++w) {
            out_deg.push_back(counts[v][w]);
            in_deg.push_back(counts[w][v]);
        }
        std::sort(out_deg.begin(), out_deg.end());
        std::sort(in_deg.begin(), in_deg.end());
        out_deg.insert(out_deg.end(), in_deg.begin(), in_deg.end());
        out_deg.push_back(counts[v][v]);
        return out_deg;
    };
    std::vector<std::vector<int>> sig;
    for (size_t v = 0; v < n; ++v) sig.push_back(signature(v));

    std::vector<std::vector<int>> found;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(size_t)> extend = [&](size_t v) {
        if (v == n) {
            found.push_back(perm);
            return;
        }
        for (size_t img = 0; img < n; ++img) {
            if (used[img] || sig[v] != sig[img]) continue;
            bool ok = true;
            for (size_t w = 0; w < v && ok; ++w) {
                if (counts[v][w] != counts[img][perm[w]] || counts[w][v] != counts[perm[w]][img]) ok = false;
            }
            if (counts[v][v] != counts[img][img]) ok = false;
            if (!ok) continue;
            perm[v] = static_cast<int>(img);
            used[img] = true;
            extend(v + 1);
            used[img] = false;
            perm[v] = -1;
        }
    };
    extend(0);
    return FiniteGroup::from_permutations(std::move(found));
}

namespace {

// subgroup closure of a generating set, as sorted element indices
std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> members(gens.begin(), gens.end());
    members.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(members.begin(), members.end());
        for (int a : cur)
            for (int b : cur)
                if (members.insert(g.table[a][b]).second) grew = true;
    }
    return {members.begin(), members.end()};
}

}  // namespace

bool is_solvable(const FiniteGroup& g) {
    std::vector<int> current(g.order());
    std::iota(current.begin(), current.end(), 0);
    while (current.size() > 1) {
        std::vector<int> comms;
        for (int a : current)
            for (int b : current) {
                int c = g.table[g.table[g.inverse[a]][g.inverse[b]]][g.table[a][b]];
                comms.push_back(c);
            }
        std::vector<int> derived = closure(g, comms);
        if (derived == current) return false;  // perfect subgroup, series stalls
        current = std::move(derived);
    }
    return true;
}

}  // namespace pathco
