#include "pathco/element.hpp"

#include <algorithm>

namespace pathco {

CoalgElement CoalgElement::basis(PathSpacePtr space, size_t path_idx) {
    CoalgElement e(std::move(space));
    e.add(path_idx, Scalar::one());
    return e;
}

CoalgElement CoalgElement::vertex(PathSpacePtr space, int v) {
    size_t idx = space->trivial_index(v);
    return basis(std::move(space), idx);
}

Scalar CoalgElement::coefficient(size_t path_idx) const {
    auto it = coeff_.find(path_idx);
    return it == coeff_.end() ? Scalar::zero() : it->second;
}

void CoalgElement::add(size_t path_idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeff_.try_emplace(path_idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }
}

CoalgElement CoalgElement::operator+(const CoalgElement& o) const {
    CoalgElement r = *this;
    if (!r.space_) r.space_ = o.space_;
    for (const auto& [i, c] : o.coeff_) r.add(i, c);
    return r;
}

CoalgElement CoalgElement::operator-(const CoalgElement& o) const {
    CoalgElement r = *this;
    if (!r.space_) r.space_ = o.space_;
    for (const auto& [i, c] : o.coeff_) r.add(i, -c);
    return r;
}

CoalgElement CoalgElement::scaled(const Scalar& c) const {
    CoalgElement r(space_);
    if (c.is_zero()) return r;
    for (const auto& [i, x] : coeff_) r.add(i, x * c);
    return r;
}

bool CoalgElement::operator==(const CoalgElement& o) const { return coeff_ == o.coeff_; }

std::vector<Scalar> CoalgElement::to_vector() const {
    std::vector<Scalar> v(space_->path_count(), Scalar::zero());
    for (const auto& [i, c] : coeff_) v[i] = c;
    return v;
}

CoalgElement CoalgElement::from_vector(PathSpacePtr space, const std::vector<Scalar>& v) {
    CoalgElement e(space);
    for (size_t i = 0; i < v.size(); ++i) e.add(i, v[i]);
    return e;
}

std::string CoalgElement::to_string() const {
    if (coeff_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : coeff_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*" + space_->path_spec(i);
    }
    return s;
}

std::map<std::pair<size_t, size_t>, Scalar> TensorSum::flatten() const {
    std::map<std::pair<size_t, size_t>, Scalar> out;
    for (const auto& [right, left] : legs)
        for (const auto& [lp, c] : left.coeff()) {
            auto key = std::make_pair(lp, right);
            auto [it, inserted] = out.try_emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

TensorSum comultiply(const CoalgElement& x) {
    TensorSum t;
    t.space = x.space();
    const PathSpace& sp = *x.space();
    for (const auto& [pi, c] : x.coeff()) {
        size_t n = sp.length_of(pi);
        for (size_t cut = 0; cut <= n; ++cut) {
            size_t left = sp.subpath_index(pi, 0, cut);
            size_t right = sp.subpath_index(pi, cut, n);
            auto [it, inserted] = t.legs.try_emplace(right, CoalgElement(x.space()));
            it->second.add(left, c);
        }
    }
    for (auto it = t.legs.begin(); it != t.legs.end();) {
        if (it->second.is_zero()) it = t.legs.erase(it);
        else ++it;
    }
    return t;
}

Scalar counit(const CoalgElement& x) {
    Scalar s = Scalar::zero();
    for (const auto& [pi, c] : x.coeff())
        if (x.space()->length_of(pi) == 0) s += c;
    return s;
}

std::vector<std::vector<size_t>> ordered_splits(size_t length, size_t parts, bool allow_trivial) {
    std::vector<std::vector<size_t>> out;
    if (parts == 0) return out;
    std::vector<size_t> cuts(parts + 1, 0);
    cuts[parts] = length;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == parts) {
            if (allow_trivial ? cuts[k - 1] <= length : cuts[k - 1] < length) out.push_back(cuts);
            return;
        }
        size_t lo = allow_trivial ? cuts[k - 1] : cuts[k - 1] + 1;
        for (size_t c = lo; c <= length; ++c) {
            cuts[k] = c;
            rec(k + 1);
        }
    };
    rec(1);
    return out;
}

AugLetter AugWord::real(const Quiver& q, int arrow) {
    AugLetter l;
    l.arrow = arrow;
    l.s = q.arrows[arrow].source;
    l.t = q.arrows[arrow].target;
    return l;
}

AugLetter AugWord::dash(int s, int t) {
    AugLetter l;
    l.dashed = true;
    l.s = s;
    l.t = t;
    return l;
}

void AugWord::validate() const {
    int at = source;
    for (const auto& l : letters) {
        if (l.s != at) throw std::invalid_argument("augmented word is not composable");
        if (l.dashed && l.s == l.t) throw std::invalid_argument("dashed letter with equal endpoints");
        at = l.t;
    }
}

CoalgElement f_map(const PathSpacePtr& space, const AugWord& w) {
    w.validate();
    CoalgElement out(space);
    if (w.letters.empty()) {
        out.add(space->trivial_index(w.source), Scalar::one());
        return out;
    }
    // runs of real/dashed letters
    struct Run {
        bool dashed;
        size_t begin, end;
    };
    std::vector<Run> runs;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (runs.empty() || runs.back().dashed != w.letters[i].dashed)
            runs.push_back({w.letters[i].dashed, i, i + 1});
        else
            runs.back().end = i + 1;
    }

    auto real_block = [&](const Run& r) {
        Path p;
        p.source = w.letters[r.begin].s;
        for (size_t i = r.begin; i < r.end; ++i) p.arrows.push_back(w.letters[i].arrow);
        return space->index_of(p);
    };

    if (runs.size() == 1 && !runs[0].dashed) {
        out.add(real_block(runs[0]), Scalar::one());
    } else if (runs.size() == 1 && runs[0].dashed) {
        // e_{i1,i2} e_{i2,i3} ... -> e_{i1} - e_{i2}
        out.add(space->trivial_index(w.letters[0].s), Scalar::one());
        out.add(space->trivial_index(w.letters[0].t), Scalar(-1));
    } else if (runs.size() == 2 && !runs[0].dashed) {
        out.add(real_block(runs[0]), Scalar::one());
    } else if (runs.size() == 2 && runs[0].dashed && runs[0].end - runs[0].begin == 1) {
        out.add(real_block(runs[1]), Scalar(-1));
    } else if (runs.size() == 3 && runs[0].dashed && runs[0].end - runs[0].begin == 1) {
        out.add(real_block(runs[1]), Scalar(-1));
    }
    // every other mixed pattern maps to zero
    return out;
}

void ArrowBlockElement::validate() const {
    for (const auto& [l, c] : terms) {
        if (l.s != s || l.t != t)
            throw std::invalid_argument("cotensor factor not supported in a single (s,t) component");
        if (l.dashed && s == t) throw std::invalid_argument("dashed letter with equal endpoints");
    }
}

std::vector<std::pair<AugWord, Scalar>> cotensor_expand(const std::vector<ArrowBlockElement>& factors) {
    for (size_t i = 0; i < factors.size(); ++i) {
        factors[i].validate();
        if (i + 1 < factors.size() && factors[i].t != factors[i + 1].s)
            throw std::invalid_argument("cotensor factors are not composable");
    }
    std::vector<std::pair<AugWord, Scalar>> acc;
    if (factors.empty()) return acc;
    AugWord w;
    w.source = factors[0].s;
    Scalar coeff = Scalar::one();
    std::function<void(size_t, Scalar)> rec = [&](size_t k, Scalar c) {
        if (k == factors.size()) {
            acc.emplace_back(w, c);
            return;
        }
        for (const auto& [l, lc] : factors[k].terms) {
            if (lc.is_zero()) continue;
            w.letters.push_back(l);
            rec(k + 1, c * lc);
            w.letters.pop_back();
        }
    };
    rec(0, coeff);
    return acc;
}

std::map<std::pair<size_t, size_t>, Scalar> fmap_tensor_of_split(const PathSpacePtr& space, const AugWord& w) {
    std::map<std::pair<size_t, size_t>, Scalar> out;
    auto accumulate = [&](const CoalgElement& l, const CoalgElement& r) {
        for (const auto& [lp, lc] : l.coeff())
            for (const auto& [rp, rc] : r.coeff()) {
                auto key = std::make_pair(lp, rp);
                auto [it, inserted] = out.try_emplace(key, lc * rc);
                if (!inserted) {
                    it->second += lc * rc;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
    };
    for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
        AugWord left{w.source, {w.letters.begin(), w.letters.begin() + cut}};
        int mid = cut == 0 ? w.source : w.letters[cut - 1].t;
        AugWord right{mid, {w.letters.begin() + cut, w.letters.end()}};
        accumulate(f_map(space, left), f_map(space, right));
    }
    return out;
}

std::vector<AugWord> enumerate_aug_words(const Quiver& q, int max_len) {
    std::vector<AugLetter> alphabet;
    for (size_t a = 0; a < q.arrows.size(); ++a) alphabet.push_back(AugWord::real(q, static_cast<int>(a)));
    for (size_t s = 0; s < q.vertices.size(); ++s)
        for (size_t t = 0; t < q.vertices.size(); ++t)
            if (s != t) alphabet.push_back(AugWord::dash(static_cast<int>(s), static_cast<int>(t)));

    std::vector<AugWord> out;
    for (size_t v = 0; v < q.vertices.size(); ++v) out.push_back(AugWord{static_cast<int>(v), {}});
    size_t begin = 0, end = out.size();
    for (int len = 1; len <= max_len; ++len) {
        for (size_t i = begin; i < end; ++i) {
            AugWord w = out[i];
            for (const auto& l : alphabet) {
                if (l.s != w.target()) continue;
                AugWord ext = w;
                ext.letters.push_back(l);
                out.push_back(ext);
            }
        }
        begin = end;
        end = out.size();
    }
    return out;
}

std::vector<CoalgElement> leg_contractions(const CoalgElement& x) {
    std::vector<CoalgElement> out;
    TensorSum right_grouped = comultiply(x);
    for (const auto& [right, left] : right_grouped.legs) out.push_back(left);
    // group by the left factor instead
    std::map<size_t, CoalgElement> left_grouped;
    const PathSpace& sp = *x.space();
    for (const auto& [pi, c] : x.coeff()) {
        size_t n = sp.length_of(pi);
        for (size_t cut = 0; cut <= n; ++cut) {
            size_t left = sp.subpath_index(pi, 0, cut);
            size_t right = sp.subpath_index(pi, cut, n);
            auto [it, inserted] = left_grouped.try_emplace(left, CoalgElement(x.space()));
            it->second.add(right, c);
        }
    }
    for (const auto& [left, rest] : left_grouped)
        if (!rest.is_zero()) out.push_back(rest);
    return out;
}

bool is_subcoalgebra(const PathSpacePtr& space, const Subspace& v) {
    if (v.ambient() != space->path_count()) throw std::invalid_argument("subspace ambient mismatch");
    for (size_t r = 0; r < v.dim(); ++r) {
        std::vector<Scalar> row(v.ambient());
        for (size_t c = 0; c < v.ambient(); ++c) row[c] = v.basis().at(r, c);
        CoalgElement x = CoalgElement::from_vector(space, row);
        for (const auto& leg : leg_contractions(x))
            if (!v.contains(leg.to_vector())) return false;
    }
    return true;
}

Subspace subcoalgebra_closure(const PathSpacePtr& space, const std::vector<CoalgElement>& generators) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : generators) rows.push_back(g.to_vector());
    Subspace span = Subspace::row_space(DenseMatrix::from_rows(rows, space->path_count()));
    for (;;) {
        std::vector<std::vector<Scalar>> next = rows;
        for (size_t r = 0; r < span.dim(); ++r) {
            std::vector<Scalar> row(span.ambient());
            for (size_t c = 0; c < span.ambient(); ++c) row[c] = span.basis().at(r, c);
            CoalgElement x = CoalgElement::from_vector(space, row);
            for (const auto& leg : leg_contractions(x)) next.push_back(leg.to_vector());
        }
        Subspace grown = Subspace::row_space(DenseMatrix::from_rows(next, space->path_count()));
        if (grown.dim() == span.dim()) return span;
        span = grown;
        rows = next;
    }
}

Subspace coradical_truncation(const PathSpacePtr& space, int n) {
    if (n < 0 || n > space->max_len()) throw std::invalid_argument("truncation level out of range");
    return coordinate_subspace(space, [&](size_t i) { return space->length_of(i) <= static_cast<size_t>(n); });
}

Subspace coordinate_subspace(const PathSpacePtr& space, const std::function<bool(size_t)>& pred) {
    std::vector<std::vector<Scalar>> rows;
    for (size_t i = 0; i < space->path_count(); ++i) {
        if (!pred(i)) continue;
        std::vector<Scalar> row(space->path_count(), Scalar::zero());
        row[i] = Scalar::one();
        rows.push_back(std::move(row));
    }
    return Subspace::row_space(DenseMatrix::from_rows(rows, space->path_count()));
}

LargeSubcoalgebra LargeSubcoalgebra::coradical(const PathSpacePtr& space, int n) {
    if (n < 1) n = 1;
    LargeSubcoalgebra d;
    d.space = space;
    size_t high_dim = space->path_count() - space->first_high();
    std::vector<std::vector<Scalar>> rows;
    for (size_t i = space->first_high(); i < space->path_count(); ++i) {
        if (space->length_of(i) > static_cast<size_t>(n)) continue;
        std::vector<Scalar> row(high_dim, Scalar::zero());
        row[i - space->first_high()] = Scalar::one();
        rows.push_back(std::move(row));
    }
    d.high = Subspace::row_space(DenseMatrix::from_rows(rows, high_dim));
    return d;
}

LargeSubcoalgebra LargeSubcoalgebra::whole(const PathSpacePtr& space) {
    return coradical(space, space->max_len());
}

LargeSubcoalgebra LargeSubcoalgebra::from_full_subspace(const PathSpacePtr& space, const Subspace& full) {
    Subspace low = coradical_truncation(space, 1);
    for (size_t i = 0; i < space->first_high(); ++i) {
        std::vector<Scalar> unit(space->path_count(), Scalar::zero());
        unit[i] = Scalar::one();
        if (!full.contains(unit))
            throw MathError("subcoalgebra is not large", space->path_spec(i));
    }
    Subspace high_amb = coordinate_subspace(space, [&](size_t i) { return i >= space->first_high(); });
    Subspace inter = intersect(full, high_amb);
    LargeSubcoalgebra d;
    d.space = space;
    std::vector<std::vector<Scalar>> rows;
    size_t high_dim = space->path_count() - space->first_high();
    for (size_t r = 0; r < inter.dim(); ++r) {
        std::vector<Scalar> row(high_dim);
        for (size_t c = 0; c < high_dim; ++c) row[c] = inter.basis().at(r, space->first_high() + c);
        rows.push_back(std::move(row));
    }
    d.high = Subspace::row_space(DenseMatrix::from_rows(rows, high_dim));
    return d;
}

LargeSubcoalgebra LargeSubcoalgebra::from_generators(const PathSpacePtr& space,
                                                     const std::vector<CoalgElement>& gens) {
    std::vector<CoalgElement> all = gens;
    for (size_t i = 0; i < space->first_high(); ++i) all.push_back(CoalgElement::basis(space, i));
    return from_full_subspace(space, subcoalgebra_closure(space, all));
}

Subspace LargeSubcoalgebra::full_subspace() const {
    std::vector<std::vector<Scalar>> rows;
    size_t total = space->path_count();
    for (size_t i = 0; i < space->first_high(); ++i) {
        std::vector<Scalar> row(total, Scalar::zero());
        row[i] = Scalar::one();
        rows.push_back(std::move(row));
    }
    for (size_t r = 0; r < high.dim(); ++r) {
        std::vector<Scalar> row(total, Scalar::zero());
        for (size_t c = 0; c < high.ambient(); ++c) row[space->first_high() + c] = high.basis().at(r, c);
        rows.push_back(std::move(row));
    }
    return Subspace::row_space(DenseMatrix::from_rows(rows, total));
}

size_t LargeSubcoalgebra::dim() const { return space->first_high() + high.dim(); }

bool LargeSubcoalgebra::contains(const CoalgElement& x) const {
    return full_subspace().contains(x.to_vector());
}

std::vector<Scalar> LargeSubcoalgebra::embed_high(const std::vector<Scalar>& hv) const {
    std::vector<Scalar> full(space->path_count(), Scalar::zero());
    for (size_t c = 0; c < hv.size(); ++c) full[space->first_high() + c] = hv[c];
    return full;
}

void validate_large(const LargeSubcoalgebra& d) {
    if (d.high.ambient() != d.space->path_count() - d.space->first_high())
        throw std::invalid_argument("high part has wrong ambient dimension");
    Subspace full = d.full_subspace();
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        for (size_t c = 0; c < d.high.ambient(); ++c) hv[c] = d.high.basis().at(r, c);
        CoalgElement x = CoalgElement::from_vector(d.space, d.embed_high(hv));
        for (const auto& leg : leg_contractions(x))
            if (!full.contains(leg.to_vector()))
                throw MathError("comultiplication escapes the subcoalgebra",
                                "Delta(" + x.to_string() + ") has leg " + leg.to_string());
    }
}

}  // namespace pathco
