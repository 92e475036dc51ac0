#include "pathco/io.hpp"

namespace pathco {

using nlohmann::json;

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}});
    return j;
}

Quiver quiver_from_json(const json& j) {
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows")) {
        Quiver::Arrow arrow;
        arrow.id = a.at("id").get<std::string>();
        arrow.source = q.vertex_index(a.at("source").get<std::string>());
        arrow.target = q.vertex_index(a.at("target").get<std::string>());
        q.arrows.push_back(std::move(arrow));
    }
    q.validate();
    return q;
}

json element_to_json(const CoalgElement& x) {
    json j = json::object();
    for (const auto& [i, c] : x.coeff()) j[x.space()->path_spec(i)] = c.to_string();
    return j;
}

CoalgElement element_from_json(const PathSpacePtr& space, const json& j) {
    CoalgElement x(space);
    for (auto it = j.begin(); it != j.end(); ++it)
        x.add(space->parse_path_spec(it.key()), Scalar::parse(it.value().get<std::string>()));
    return x;
}

json algebra_element_to_json(const TruncatedAlgebraElement& x) {
    json coeffs = json::object();
    for (const auto& [i, c] : x.coeff) coeffs[x.space->path_spec(i)] = c.to_string();
    return json{{"bar", true}, {"coefficients", coeffs}};
}

TruncatedAlgebraElement algebra_element_from_json(const PathSpacePtr& space, const json& j) {
    TruncatedAlgebraElement x(space);
    const json& coeffs = j.contains("coefficients") ? j.at("coefficients") : j;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        if (it.key() == "bar") continue;
        x.add(space->parse_path_spec(it.key()), Scalar::parse(it.value().get<std::string>()));
    }
    return x;
}

json datum_to_json(const TransDatum& mu) {
    json vm = json::object();
    const auto& src = mu.source->quiver();
    const auto& tgt = mu.target->quiver();
    for (size_t v = 0; v < src.vertices.size(); ++v) vm[src.vertices[v]] = tgt.vertices[mu.vertex_map[v]];
    json prims = json::object();
    for (size_t i = mu.source->trivial_count(); i < mu.source->path_count(); ++i) {
        const Primitive& p = mu.primitive(i);
        if (p.is_zero()) continue;
        json pj = json::object();
        if (!p.c.is_zero()) pj["c"] = p.c.to_string();
        if (!p.arrows.empty()) {
            json arr = json::object();
            for (const auto& [a, c] : p.arrows) arr[tgt.arrows[a].id] = c.to_string();
            pj["arrows"] = arr;
        }
        prims[mu.source->path_spec(i)] = pj;
    }
    return json{{"vertex_map", vm}, {"primitives", prims}};
}

TransDatum datum_from_json(const PathSpacePtr& source, const PathSpacePtr& target, const json& j,
                           bool require_arrows) {
    TransDatum mu = zero_padded_datum(source, target);
    const json& vm = j.at("vertex_map");
    for (size_t v = 0; v < source->quiver().vertices.size(); ++v) {
        const std::string& id = source->quiver().vertices[v];
        if (!vm.contains(id)) throw std::invalid_argument("vertex_map misses vertex '" + id + "'");
        mu.vertex_map[v] = target->quiver().vertex_index(vm.at(id).get<std::string>());
    }
    const json& prims = j.value("primitives", json::object());
    for (auto it = prims.begin(); it != prims.end(); ++it) {
        size_t i = source->parse_path_spec(it.key());
        if (source->length_of(i) == 0) throw std::invalid_argument("primitive given for a trivial path");
        auto [s, t] = mu.primitive_endpoints(i);
        Primitive p;
        if (it.value().contains("c")) {
            p.c = Scalar::parse(it.value().at("c").get<std::string>());
            if (s == t && !p.c.is_zero())
                throw std::invalid_argument("c-part must vanish when the endpoint images coincide (" + it.key() + ")");
        }
        if (it.value().contains("arrows")) {
            for (auto a = it.value().at("arrows").begin(); a != it.value().at("arrows").end(); ++a) {
                int ai = target->quiver().arrow_index(a.key());
                if (target->quiver().arrows[ai].source != s || target->quiver().arrows[ai].target != t)
                    throw std::invalid_argument("arrow '" + a.key() + "' is not a primitive direction for " + it.key());
                Scalar c = Scalar::parse(a.value().get<std::string>());
                if (!c.is_zero()) p.arrows[ai] = c;
            }
        }
        mu.primitive(i) = std::move(p);
    }
    if (require_arrows) {
        for (size_t a = 0; a < source->quiver().arrows.size(); ++a) {
            const std::string& id = source->quiver().arrows[a].id;
            if (!prims.contains(id))
                throw std::invalid_argument("automorphism-intended datum omits arrow '" + id + "'");
        }
    }
    return mu;
}

json map_to_json(const LinearCoalgMap& f) {
    json images = json::object();
    for (size_t i = 0; i < f.source->path_count(); ++i)
        images[f.source->path_spec(i)] = element_to_json(f.column(i));
    return json{{"images", images}};
}

LinearCoalgMap map_from_json(const PathSpacePtr& source, const PathSpacePtr& target, const json& j) {
    LinearCoalgMap f;
    f.source = source;
    f.target = target;
    f.m = DenseMatrix(target->path_count(), source->path_count());
    const json& images = j.at("images");
    for (size_t i = 0; i < source->path_count(); ++i) {
        const std::string spec = source->path_spec(i);
        if (!images.contains(spec)) throw std::invalid_argument("map misses the image of " + spec);
        CoalgElement img = element_from_json(target, images.at(spec));
        for (const auto& [p, c] : img.coeff()) f.m.at(p, i) = c;
    }
    return f;
}

LargeSubcoalgebra subcoalgebra_from_json(const PathSpacePtr& space, const json& j) {
    std::vector<CoalgElement> gens;
    for (const auto& g : j.at("generators")) gens.push_back(element_from_json(space, g));
    return LargeSubcoalgebra::from_generators(space, gens);
}

json subcoalgebra_to_json(const LargeSubcoalgebra& d) {
    json gens = json::array();
    for (size_t r = 0; r < d.high.dim(); ++r) {
        std::vector<Scalar> hv(d.high.ambient());
        for (size_t c = 0; c < d.high.ambient(); ++c) hv[c] = d.high.basis().at(r, c);
        gens.push_back(element_to_json(CoalgElement::from_vector(d.space, d.embed_high(hv))));
    }
    return json{{"generators", gens}};
}

json dual_algebra_to_json(const DualAlgebra& b) {
    json c = json::array();
    for (size_t i = 0; i < b.dim(); ++i) {
        json row = json::array();
        for (size_t jx = 0; jx < b.dim(); ++jx) {
            json cell = json::array();
            for (size_t k = 0; k < b.dim(); ++k) cell.push_back(b.c[i][jx][k].to_string());
            row.push_back(cell);
        }
        c.push_back(row);
    }
    json unit = json::array();
    for (const auto& u : b.unit) unit.push_back(u.to_string());
    json basis = json::array();
    for (const auto& x : b.basis) basis.push_back(element_to_json(x));
    return json{{"basis", basis}, {"structure_constants", c}, {"unit", unit}};
}

Quiver builtin_quiver(const std::string& name, int n) {
    Quiver q;
    if (name == "an") {
        if (n < 1) throw std::invalid_argument("an needs n >= 1");
        for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
        for (int i = 1; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
    } else if (name == "kronecker") {
        if (n < 1) throw std::invalid_argument("kronecker needs n >= 1");
        q.vertices = {"1", "2"};
        for (int i = 1; i <= n; ++i) q.arrows.push_back({"a" + std::to_string(i), 0, 1});
    } else if (name == "subspace") {
        if (n < 1) throw std::invalid_argument("subspace needs n >= 1");
        q.vertices.push_back("0");
        for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
        for (int i = 1; i <= n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, 0});
    } else if (name == "loop") {
        q.vertices = {"1"};
        q.arrows.push_back({"x", 0, 0});
    } else if (name == "two-cycle") {
        q.vertices = {"1", "2"};
        q.arrows.push_back({"a", 0, 1});
        q.arrows.push_back({"b", 1, 0});
    } else {
        throw std::invalid_argument("unknown builtin quiver '" + name + "'");
    }
    return q;
}

}  // namespace pathco
