// pathco: exact computer algebra for truncated path coalgebras of quivers --
// trans-data, automorphism towers, Galois correspondence, and the dual
// truncated path algebra.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pathco/checks.hpp"
#include "pathco/io.hpp"

using namespace pathco;
using nlohmann::json;

namespace {

struct Session {
    Quiver quiver;
    int max_len = 3;
    uint64_t seed = 0;
    int trials = 50;
    bool json_out = false;
    PathSpacePtr space;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const Session& s, const std::string& command, const json& machine, const std::string& human) {
    if (s.json_out)
        std::cout << json{{"schema", "pathco/1"}, {"command", command}, {"result", machine}}.dump(2) << "\n";
    else
        std::cout << human;
}

LargeSubcoalgebra load_sub(const Session& s, const std::string& file) {
    if (file.empty()) return LargeSubcoalgebra::coradical(s.space, 1);
    return subcoalgebra_from_json(s.space, load_json(file));
}

int cmd_paths(const Session& s) {
    const PathSpace& sp = *s.space;
    json machine = json::array();
    std::string human;
    for (size_t i = 0; i < sp.path_count(); ++i) {
        const Quiver& q = sp.quiver();
        machine.push_back({{"path", sp.path_spec(i)},
                           {"length", sp.length_of(i)},
                           {"source", q.vertices[sp.source_of(i)]},
                           {"target", q.vertices[sp.target_of(i)]}});
        human += sp.path_spec(i) + "  (len " + std::to_string(sp.length_of(i)) + ", " +
                 q.vertices[sp.source_of(i)] + " -> " + q.vertices[sp.target_of(i)] + ")\n";
    }
    human += "total: " + std::to_string(sp.path_count()) + " paths up to length " +
             std::to_string(sp.max_len()) + "\n";
    emit(s, "paths", machine, human);
    return 0;
}

int cmd_aug(const Session& s) {
    Quiver aug = augmented(s.quiver);
    json machine = quiver_to_json(aug);
    std::string human = "augmented quiver: " + std::to_string(aug.vertices.size()) + " vertices, " +
                        std::to_string(aug.arrows.size()) + " arrows (" +
                        std::to_string(s.quiver.arrows.size()) + " real + " +
                        std::to_string(aug.arrows.size() - s.quiver.arrows.size()) + " dashed)\n";
    for (const auto& a : aug.arrows)
        human += "  " + a.id + ": " + aug.vertices[a.source] + " -> " + aug.vertices[a.target] +
                 (is_dashed_arrow_id(a.id) ? "  (dashed)" : "") + "\n";
    emit(s, "aug", machine, human);
    return 0;
}

int cmd_schurian(const Session& s) {
    bool schurian = is_schurian(s.quiver);
    emit(s, "schurian", json{{"schurian", schurian}},
         std::string("schurian: ") + (schurian ? "yes" : "no") + "\n");
    return 0;
}

int cmd_aut_q(const Session& s) {
    FiniteGroup g = quiver_automorphisms(s.quiver);
    json machine;
    machine["order"] = g.order();
    machine["solvable"] = is_solvable(g);
    machine["elements"] = json::array();
    std::string human = "aut(Q): order " + std::to_string(g.order()) +
                        (is_solvable(g) ? ", solvable" : ", not solvable") + "\n";
    for (const auto& perm : g.elements) {
        json p = json::object();
        std::string line = "  (";
        for (size_t v = 0; v < perm.size(); ++v) {
            p[s.quiver.vertices[v]] = s.quiver.vertices[perm[v]];
            line += s.quiver.vertices[v] + "->" + s.quiver.vertices[perm[v]];
            if (v + 1 < perm.size()) line += " ";
        }
        machine["elements"].push_back(p);
        human += line + ")\n";
    }
    emit(s, "aut-q", machine, human);
    return 0;
}

int cmd_solvable(const Session& s) {
    SolvabilityReport r = solvability_report(s.quiver);
    json machine{{"schurian", r.schurian},
                 {"aut_q_order", r.aut_q_order},
                 {"aut_q_solvable", r.aut_q_solvable},
                 {"aut0_solvable", r.aut0_solvable},
                 {"aut_solvable", r.aut_solvable}};
    std::string human = "schurian: " + std::string(r.schurian ? "yes" : "no") + "\n" +
                        "aut(Q): order " + std::to_string(r.aut_q_order) + ", " +
                        (r.aut_q_solvable ? "solvable" : "not solvable") + "\n" +
                        "aut_0(kQ^c_<=n) solvable (n>=2): " + (r.aut0_solvable ? "yes" : "no") + "\n" +
                        "aut(kQ^c_<=n) solvable (n>=2): " + (r.aut_solvable ? "yes" : "no") + "\n";
    emit(s, "solvable", machine, human);
    return 0;
}

int cmd_dims(const Session& s, bool only_out, bool only_aut) {
    json machine;
    std::string human;
    if (only_out) {
        long long out = dim_out_acyclic(s.quiver);
        emit(s, "dims", json{{"dim_out", out}}, std::to_string(out) + "\n");
        return 0;
    }
    if (only_aut) {
        long long aut = dim_aut_truncated(s.quiver, s.max_len);
        emit(s, "dims", json{{"dim_aut_truncated", aut}}, std::to_string(aut) + "\n");
        return 0;
    }
    json factors = json::array();
    human += "factor dims d_n (Omega_{n-1}^*/Omega_n^*):\n";
    for (int n = 1; n <= s.max_len; ++n) {
        long long d = factor_dim(s.space, n);
        factors.push_back(d);
        human += "  d_" + std::to_string(n) + " = " + std::to_string(d) + "\n";
    }
    machine["factor_dims"] = factors;
    long long aut = dim_aut_truncated(s.quiver, s.max_len);
    machine["dim_aut_truncated"] = aut;
    human += "dim aut(kQ^c_<=" + std::to_string(s.max_len) + ") = " + std::to_string(aut) + "\n";
    if (is_acyclic(s.quiver)) {
        machine["dim_aut_full"] = dim_aut_full_acyclic(s.quiver);
        machine["dim_out"] = dim_out_acyclic(s.quiver);
        human += "dim aut(kQ^c) = " + std::to_string(dim_aut_full_acyclic(s.quiver)) + "\n";
        human += "dim Out(kQ^a) = " + std::to_string(dim_out_acyclic(s.quiver)) + "\n";
    }
    emit(s, "dims", machine, human);
    return 0;
}

int cmd_apply(const Session& s, const std::string& datum_file, const std::string& element_file) {
    TransDatum mu = datum_from_json(s.space, s.space, load_json(datum_file), false);
    LinearCoalgMap f = apply(mu);
    if (!element_file.empty()) {
        CoalgElement x = element_from_json(s.space, load_json(element_file));
        CoalgElement y = f.apply_elem(x);
        CoalgElement y2 = apply_to_element(mu, x);
        if (!(y == y2)) throw MathError("apply and apply_to_element disagree (internal error)");
        emit(s, "apply", element_to_json(y), y.to_string() + "\n");
        return 0;
    }
    emit(s, "apply", map_to_json(f), [&] {
        std::string human;
        for (size_t i = 0; i < s.space->path_count(); ++i)
            human += s.space->path_spec(i) + " -> " + f.column(i).to_string() + "\n";
        return human;
    }());
    return 0;
}

int cmd_to_datum(const Session& s, const std::string& map_file) {
    LinearCoalgMap f = map_from_json(s.space, s.space, load_json(map_file));
    TransDatum mu = to_datum(f);
    emit(s, "to-datum", datum_to_json(mu), datum_to_json(mu).dump(2) + "\n");
    return 0;
}

int cmd_compose(const Session& s, const std::string& outer, const std::string& inner) {
    TransDatum nu = datum_from_json(s.space, s.space, load_json(outer), false);
    TransDatum mu = datum_from_json(s.space, s.space, load_json(inner), false);
    TransDatum prod = compose(nu, mu);
    emit(s, "compose", datum_to_json(prod), datum_to_json(prod).dump(2) + "\n");
    return 0;
}

int cmd_invert(const Session& s, const std::string& datum_file) {
    TransDatum mu = datum_from_json(s.space, s.space, load_json(datum_file), true);
    TransDatum inv = invert(mu);
    emit(s, "invert", datum_to_json(inv), datum_to_json(inv).dump(2) + "\n");
    return 0;
}

int cmd_verify(const Session& s, const std::string& map_file) {
    LinearCoalgMap f = map_from_json(s.space, s.space, load_json(map_file));
    auto bad = verify_coalgebra_morphism(f);
    if (bad) throw MathError("not a coalgebra morphism", s.space->path_spec(*bad));
    emit(s, "verify", json{{"morphism", true}}, "coalgebra morphism: yes\n");
    return 0;
}

int cmd_closure(const Session& s, const std::string& file) {
    json j = load_json(file);
    std::vector<CoalgElement> gens;
    for (const auto& g : j.at("generators")) gens.push_back(element_from_json(s.space, g));
    Subspace closed = subcoalgebra_closure(s.space, gens);
    json machine = json::array();
    std::string human = "closure dimension " + std::to_string(closed.dim()) + ":\n";
    for (size_t r = 0; r < closed.dim(); ++r) {
        std::vector<Scalar> row(closed.ambient());
        for (size_t c = 0; c < closed.ambient(); ++c) row[c] = closed.basis().at(r, c);
        CoalgElement x = CoalgElement::from_vector(s.space, row);
        machine.push_back(element_to_json(x));
        human += "  " + x.to_string() + "\n";
    }
    emit(s, "closure", machine, human);
    return 0;
}

int cmd_subgroup_test(const Session& s, const std::string& datum_file, const std::string& tag_str) {
    TransDatum mu = datum_from_json(s.space, s.space, load_json(datum_file), false);
    auto [tag, n] = parse_subgroup(tag_str);
    bool in = membership(mu, tag, n);
    emit(s, "subgroup-test", json{{"tag", tag_str}, {"member", in}},
         tag_str + ": " + (in ? "member" : "not a member") + "\n");
    return 0;
}

int cmd_inner(const Session& s, const std::string& unit_file) {
    TruncatedAlgebraElement u = algebra_element_from_json(s.space, load_json(unit_file));
    TransDatum mu = inner_datum_from_unit(u);
    json machine{{"datum", datum_to_json(mu)}, {"chi_verified", true}};
    emit(s, "inner", machine,
         "inner datum of " + u.to_string() + " (dualization to chi_u verified):\n" +
             datum_to_json(mu).dump(2) + "\n");
    return 0;
}

int cmd_decompose(const Session& s, const std::string& datum_file, bool semidirect) {
    TransDatum mu = datum_from_json(s.space, s.space, load_json(datum_file), true);
    if (semidirect) {
        auto [sigma, tau] = semidirect_factor(mu);
        json machine{{"iomega_circ", datum_to_json(sigma)}, {"iomega_0", datum_to_json(tau)}};
        emit(s, "decompose", machine,
             "mu = compose(sigma, tau)\nsigma (iOmega_circ^*):\n" + datum_to_json(sigma).dump(2) +
                 "\ntau (iOmega_0^*):\n" + datum_to_json(tau).dump(2) + "\n");
    } else {
        auto [beta, nu] = decompose_bullet_inner(mu);
        json machine{{"omega_bullet", datum_to_json(beta)}, {"iomega_circ", datum_to_json(nu)}};
        emit(s, "decompose", machine,
             "mu = compose(beta, nu)\nbeta (Omega_bullet^*):\n" + datum_to_json(beta).dump(2) +
                 "\nnu (iOmega_circ^*):\n" + datum_to_json(nu).dump(2) + "\n");
    }
    return 0;
}

int cmd_galois(const Session& s, const std::string& sub, const std::string& which,
               const std::string& sub2, const std::string& point_str) {
    LargeSubcoalgebra d = load_sub(s, sub);
    if (which == "dim") {
        GaloisParamSpace ps = galois_constraints(d);
        json machine{{"dimension", ps.dimension()}, {"coordinates", ps.coords.size()}};
        if (is_monomial(d)) machine["monomial_closed_form"] = galois_dimension_monomial(d);
        emit(s, "galois dim", machine,
             "dim Gal(C/D) = " + std::to_string(ps.dimension()) + "  (" +
                 std::to_string(ps.coords.size()) + " raw coordinates)\n");
        return 0;
    }
    if (which == "sample") {
        GaloisParamSpace ps = galois_constraints(d);
        TransDatum mu = [&] {
            if (point_str.empty()) {
                Rng rng(s.seed);
                return sample_galois(ps, d, rng);
            }
            std::vector<Scalar> point;
            size_t pos = 0;
            while (pos <= point_str.size()) {
                size_t comma = point_str.find(',', pos);
                point.push_back(Scalar::parse(point_str.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return datum_from_parameters(ps, point, d);
        }();
        emit(s, "galois sample", datum_to_json(mu), datum_to_json(mu).dump(2) + "\n");
        return 0;
    }
    if (which == "fixed") {
        GaloisParamSpace ps = galois_constraints(d);
        std::vector<TransDatum> gens;
        for (size_t r = 0; r < ps.param_kernel.dim(); ++r) {
            std::vector<Scalar> pt(ps.coords.size());
            for (size_t c = 0; c < ps.coords.size(); ++c) pt[c] = ps.param_kernel.basis().at(r, c);
            gens.push_back(datum_from_parameters(ps, pt, d));
        }
        if (gens.empty()) gens.push_back(identity_datum(s.space));
        Subspace fixed = fixed_space(gens);
        json machine{{"dimension", fixed.dim()}, {"is_subcoalgebra", is_subcoalgebra(s.space, fixed)}};
        emit(s, "galois fixed", machine,
             "fixed space dimension " + std::to_string(fixed.dim()) +
                 (is_subcoalgebra(s.space, fixed) ? " (a subcoalgebra)\n" : " (not a subcoalgebra)\n"));
        return 0;
    }
    if (which == "roundtrip") {
        RoundtripReport r = inv_gal_roundtrip(d);
        json machine{{"acyclic", r.quiver_acyclic},
                     {"recovered", r.recovered},
                     {"fixed_dimension", r.fixed.dim()},
                     {"subcoalgebra_dimension", d.dim()},
                     {"samples", r.samples_used}};
        std::string human = std::string("Inv(Gal(C/D)) == D: ") + (r.recovered ? "yes" : "NO") +
                            "  (fixed dim " + std::to_string(r.fixed.dim()) + ", D dim " +
                            std::to_string(d.dim()) + ", " + std::to_string(r.samples_used) +
                            " samples)\n";
        if (!r.recovered && !r.quiver_acyclic)
            human += "quiver is not acyclic: the correspondence is expected to fail; Inv contains D strictly\n";
        emit(s, "galois roundtrip", machine, human);
        return 0;
    }
    if (which == "extension") {
        LargeSubcoalgebra e = sub2.empty() ? LargeSubcoalgebra::whole(s.space) : load_sub(s, sub2);
        Rng rng(s.seed);
        GaloisExtensionReport r = is_galois_extension(d, e, rng, s.trials);
        json machine{{"inclusion_ok", r.inclusion_ok},
                     {"galois", r.galois},
                     {"samples", r.samples},
                     {"violation", r.violation},
                     {"acceptance", "sampling-based"}};
        std::string human = r.galois
                                ? "Galois extension: yes (sampling-based acceptance, " +
                                      std::to_string(r.samples) + " samples)\n"
                                : "Galois extension: NO -- " + r.violation + "\n";
        emit(s, "galois extension", machine, human);
        return 0;
    }
    throw std::invalid_argument("unknown galois subcommand '" + which + "'");
}

int cmd_dual(const Session& s, const std::string& which, const std::string& sub,
             const std::string& datum_file, const std::string& unit_file) {
    if (which == "table") {
        DualAlgebra b = dual_algebra_of(load_sub(s, sub));
        emit(s, "dual table", dual_algebra_to_json(b),
             "dual algebra of dimension " + std::to_string(b.dim()) + "\n" +
                 dual_algebra_to_json(b).dump(2) + "\n");
        return 0;
    }
    if (which == "dualize") {
        TransDatum mu = datum_from_json(s.space, s.space, load_json(datum_file), false);
        DenseMatrix m = dualize(apply(mu));
        json machine = json::array();
        std::string human;
        for (size_t i = 0; i < s.space->path_count(); ++i) {
            TruncatedAlgebraElement img(s.space);
            for (size_t r = 0; r < m.rows(); ++r) img.add(r, m.at(r, i));
            machine.push_back(algebra_element_to_json(img));
            human += "[" + s.space->path_spec(i) + "] -> " + img.to_string() + "\n";
        }
        emit(s, "dual dualize", machine, human);
        return 0;
    }
    if (which == "chi") {
        TruncatedAlgebraElement u = algebra_element_from_json(s.space, load_json(unit_file));
        DenseMatrix m = chi_inner(u);
        json machine = json::array();
        std::string human;
        for (size_t i = 0; i < s.space->path_count(); ++i) {
            TruncatedAlgebraElement img(s.space);
            for (size_t r = 0; r < m.rows(); ++r) img.add(r, m.at(r, i));
            machine.push_back(algebra_element_to_json(img));
            human += "chi_u[" + s.space->path_spec(i) + "] -> " + img.to_string() + "\n";
        }
        emit(s, "dual chi", machine, human);
        return 0;
    }
    if (which == "radical") {
        json machine = json::array();
        std::string human;
        for (int n = 1; n <= s.max_len; ++n) {
            size_t count = 0;
            for (size_t i = 0; i < s.space->path_count(); ++i)
                if (s.space->length_of(i) >= static_cast<size_t>(n)) ++count;
            machine.push_back(count);
            human += "dim rad^" + std::to_string(n) + " = " + std::to_string(count) + "\n";
        }
        emit(s, "dual radical", machine, human);
        return 0;
    }
    throw std::invalid_argument("unknown dual subcommand '" + which + "'");
}

int cmd_check(const Session& s, const std::string& id) {
    CheckContext ctx{s.space, s.seed, s.trials};
    std::vector<CheckResult> results =
        id == "all" ? run_all_checks(ctx) : std::vector<CheckResult>{run_check(id, ctx)};
    json machine = json::array();
    std::string human;
    bool all_pass = true;
    for (const auto& r : results) {
        machine.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        human += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.id + ": " + r.detail + "\n";
        all_pass = all_pass && r.pass;
    }
    emit(s, "check", machine, human);
    return all_pass ? 0 : 2;
}

// reproductions of the worked examples; any mismatch exits 2 with the
// failing identity
int cmd_examples(Session s, const std::string& which, int n) {
    json machine;
    std::string human;
    auto require = [&](bool cond, const std::string& identity) {
        if (!cond) throw MathError("example identity failed", identity);
    };
    if (which == "an") {
        s.quiver = builtin_quiver("an", n);
        s.max_len = n - 1;
        s.space = make_space(s.quiver, s.max_len);
        long long aut = dim_aut_truncated(s.quiver, s.max_len);
        long long aut_full = dim_aut_full_acyclic(s.quiver);
        long long expected = static_cast<long long>(n) * (n + 1) / 2 - 1;
        require(aut == expected && aut_full == expected,
                "dim aut = n(n+1)/2 - 1 = " + std::to_string(expected));
        require(dim_out_acyclic(s.quiver) == 0, "dim Out(A_n) = 0");
        auto lattice =
            monomial_lattice(LargeSubcoalgebra::coradical(s.space, 1), LargeSubcoalgebra::whole(s.space));
        machine["dim_aut"] = aut;
        machine["lattice"] = json::array();
        human += "directed A_" + std::to_string(n) + ": dim aut(kQ^c) = " + std::to_string(aut) + "\n";
        human += "large subcoalgebras C_(1) <= D <= C: " + std::to_string(lattice.size()) + " members\n";
        for (const auto& d : lattice) {
            // r-vector: r_i = largest j with the path i -> j in D
            Subspace full = d.full_subspace();
            std::vector<int> r(n, 0);
            for (int i = 0; i < n; ++i) {
                r[i] = i + 1;
                for (size_t pi = 0; pi < s.space->path_count(); ++pi) {
                    if (s.space->source_of(pi) != i) continue;
                    std::vector<Scalar> unit(s.space->path_count(), Scalar::zero());
                    unit[pi] = Scalar::one();
                    if (full.contains(unit)) r[i] = std::max(r[i], s.space->target_of(pi) + 1);
                }
            }
            long long dim = galois_dimension(d);
            require(dim == galois_dimension_monomial(d), "monomial closed form for dim Gal(C/D)");
            RoundtripReport rt = inv_gal_roundtrip(d);
            require(rt.recovered, "Inv(Gal(C/D)) = D");
            json entry;
            entry["r_vector"] = r;
            entry["galois_dim"] = dim;
            machine["lattice"].push_back(entry);
            std::string rv;
            for (int i = 0; i < n; ++i) rv += (i ? "," : "") + std::to_string(r[i]);
            human += "  D(r = " + rv + "): dim Gal(C/D) = " + std::to_string(dim) +
                     ", Inv(Gal(C/D)) = D\n";
        }
        emit(s, "examples an", machine, human);
        return 0;
    }
    if (which == "kronecker") {
        s.quiver = builtin_quiver("kronecker", n);
        s.max_len = std::max(1, s.max_len);
        long long aut = dim_aut_full_acyclic(s.quiver);
        long long out = dim_out_acyclic(s.quiver);
        require(aut == static_cast<long long>(n) * n + n, "dim aut = n^2 + n (GL(V) x| V)");
        require(out == static_cast<long long>(n) * n - 1, "dim Out = n^2 - 1 (PGL(V))");
        machine = {{"dim_aut", aut}, {"dim_out", out}};
        human = "Kronecker K_" + std::to_string(n) + ": dim aut(kQ^c) = " + std::to_string(aut) +
                " = n^2+n, dim Out(kQ^a) = " + std::to_string(out) + " = n^2-1\n";
        emit(s, "examples kronecker", machine, human);
        return 0;
    }
    if (which == "subspace") {
        s.quiver = builtin_quiver("subspace", n);
        FiniteGroup g = quiver_automorphisms(s.quiver);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        require(static_cast<long long>(g.order()) == fact, "|aut(Q)| = n!");
        long long out = dim_out_acyclic(s.quiver);
        require(out == 0, "dim Out = 0 (Out is the finite group S_n)");
        SolvabilityReport sr = solvability_report(s.quiver);
        machine = {{"aut_q_order", g.order()},
                   {"dim_out", out},
                   {"aut0_solvable", sr.aut0_solvable},
                   {"aut_solvable", sr.aut_solvable}};
        human = std::to_string(n) + "-subspace quiver: |aut(Q)| = " + std::to_string(g.order()) +
                " = n!, dim Out = 0, aut_0 solvable: " + (sr.aut0_solvable ? "yes" : "no") +
                ", aut solvable: " + (sr.aut_solvable ? "yes" : "no") + "\n";
        emit(s, "examples subspace", machine, human);
        return 0;
    }
    if (which == "loop") {
        s.quiver = builtin_quiver("loop", 1);
        s.space = make_space(s.quiver, s.max_len);
        // power-series coordinates (lambda_1, ..., lambda_N), lambda_1 invertible
        std::vector<Scalar> lambda(s.max_len, Scalar::zero());
        lambda[0] = Scalar::one();
        if (s.max_len >= 2) lambda[1] = Scalar::one();
        TransDatum mu = identity_datum(s.space);
        for (size_t i = s.space->trivial_count(); i < s.space->path_count(); ++i) {
            Primitive p;
            Scalar l = lambda[s.space->length_of(i) - 1];
            if (!l.is_zero()) p.arrows[0] = l;
            mu.primitive(i) = std::move(p);
        }
        DenseMatrix tau = dualize(apply(mu));
        TruncatedAlgebraElement tau_x(s.space);
        size_t xi = s.space->arrow_path_index(0);
        for (size_t r = 0; r < tau.rows(); ++r) tau_x.add(r, tau.at(r, xi));
        // lambda = (1, 1, 0, ...) dualizes to x-bar + x-bar^2
        TruncatedAlgebraElement expected(s.space);
        Path p{0, {0}};
        expected.add(s.space->index_of(p), Scalar::one());
        if (s.max_len >= 2) {
            p.arrows.push_back(0);
            expected.add(s.space->index_of(p), Scalar::one());
        }
        require(tau_x == expected, "tau(x-bar) = x-bar + x-bar^2 for lambda = (1,1,0,...)");
        bool preserves_poly = true;
        for (int k = 2; k <= s.max_len; ++k)
            if (!lambda[k - 1].is_zero()) preserves_poly = false;
        require(!preserves_poly || s.max_len < 2,
                "lambda = (1,1,0,...) must not preserve k[x] (lambda_2 != 0)");
        machine["tau_x"] = algebra_element_to_json(tau_x);
        machine["preserves_polynomial_subalgebra"] = preserves_poly;
        human = "loop quiver at N = " + std::to_string(s.max_len) +
                ", datum coordinates lambda = (1,1,0,...): tau(x-bar) = " + tau_x.to_string() +
                "\npreserves k[x] (lambda_n = 0 for n >= 2): " + (preserves_poly ? "yes" : "no") + "\n";
        emit(s, "examples loop", machine, human);
        return 0;
    }
    throw std::invalid_argument("unknown example '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for truncated path coalgebras: trans-data, automorphisms, Galois correspondence, dual path algebras"};
    app.require_subcommand(1);

    Session s;
    std::string quiver_file, builtin, field_str = "rational";
    app.add_option("--quiver", quiver_file, "quiver JSON file");
    app.add_option("--builtin", builtin, "built-in quiver: an:N, kronecker:N, subspace:N, loop, two-cycle");
    app.add_option("--max-len", s.max_len, "truncation length N")->check(CLI::NonNegativeNumber);
    app.add_option("--field", field_str, "rational | fp:P");
    app.add_option("--seed", s.seed, "random seed for samplers");
    app.add_option("--trials", s.trials, "number of randomized trials");
    app.add_flag("--json", s.json_out, "machine-readable output");

    std::string datum_file, datum_file2, element_file, map_file, sub_file, sub_file2, unit_file,
        tag_str, point_str, check_id = "all", example_name, galois_which, dual_which;
    int example_n = 4;
    bool dims_out = false, dims_aut = false, semidirect = false;

    auto* c_paths = app.add_subcommand("paths", "list the canonical path basis");
    auto* c_aug = app.add_subcommand("aug", "print the augmented quiver");
    auto* c_schur = app.add_subcommand("schurian", "Schurian test");
    auto* c_autq = app.add_subcommand("aut-q", "quiver automorphism group");
    auto* c_solv = app.add_subcommand("solvable", "solvability of aut_0 and aut");
    auto* c_dims = app.add_subcommand("dims", "factor dims d_n, dim aut, dim Out");
    c_dims->add_flag("--out", dims_out, "print only dim Out (acyclic)");
    c_dims->add_flag("--aut", dims_aut, "print only dim aut at the truncation");
    auto* c_apply = app.add_subcommand("apply", "evaluate a trans-datum");
    c_apply->add_option("--datum", datum_file, "trans-datum JSON")->required();
    c_apply->add_option("--element", element_file, "optional element to map");
    auto* c_todat = app.add_subcommand("to-datum", "extract the trans-datum of a morphism");
    c_todat->add_option("--map", map_file, "linear map JSON")->required();
    auto* c_comp = app.add_subcommand("compose", "compose two trans-data (outer o inner)");
    c_comp->add_option("--outer", datum_file, "outer datum")->required();
    c_comp->add_option("--inner", datum_file2, "inner datum")->required();
    auto* c_inv = app.add_subcommand("invert", "invert a trans-datum");
    c_inv->add_option("--datum", datum_file, "trans-datum JSON")->required();
    auto* c_ver = app.add_subcommand("verify", "verify a linear map is a coalgebra morphism");
    c_ver->add_option("--file", map_file, "linear map JSON")->required();
    auto* c_clo = app.add_subcommand("closure", "subcoalgebra closure of generators");
    c_clo->add_option("--file", sub_file, "generators JSON")->required();
    auto* c_sub = app.add_subcommand("subgroup-test", "membership in a subgroup of Omega^*");
    c_sub->add_option("--datum", datum_file, "trans-datum JSON")->required();
    c_sub->add_option("--tag", tag_str, "omega*, omega0*, omega1/2*, omega_n*:K, iomega*, iomega_o*, iomega_0*, omega_bullet*")->required();
    auto* c_innr = app.add_subcommand("inner", "trans-datum of an inner automorphism chi_u");
    c_innr->add_option("--unit", unit_file, "algebra unit JSON")->required();
    auto* c_dec = app.add_subcommand("decompose", "bullet-inner or semidirect factorization");
    c_dec->add_option("--datum", datum_file, "trans-datum JSON")->required();
    c_dec->add_flag("--semidirect", semidirect, "factor iOmega^* = iOmega_circ^* x| iOmega_0^*");
    auto* c_gal = app.add_subcommand("galois", "Galois groups of large subcoalgebras");
    c_gal->add_option("what", galois_which, "dim | sample | fixed | roundtrip | extension")->required();
    c_gal->add_option("--sub", sub_file, "subcoalgebra JSON (default C_(1))");
    c_gal->add_option("--sub2", sub_file2, "second subcoalgebra E for extension (default C)");
    c_gal->add_option("--point", point_str, "comma-separated parameter point for sample");
    auto* c_dual = app.add_subcommand("dual", "the dual truncated path algebra");
    c_dual->add_option("what", dual_which, "table | dualize | chi | radical")->required();
    c_dual->add_option("--sub", sub_file, "subcoalgebra JSON (default C_(1))");
    c_dual->add_option("--datum", datum_file, "trans-datum for dualize");
    c_dual->add_option("--unit", unit_file, "algebra unit for chi");
    auto* c_chk = app.add_subcommand("check", "run a named invariant suite");
    c_chk->add_option("id", check_id, "check id or 'all'");
    auto* c_ex = app.add_subcommand("examples", "reproduce the worked examples");
    c_ex->add_option("which", example_name, "an | kronecker | subspace | loop")->required();
    c_ex->add_option("--n", example_n, "size parameter");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        if (field_str == "rational") {
            set_field({FieldKind::Rational, 0});
        } else if (field_str.rfind("fp:", 0) == 0) {
            set_field({FieldKind::Prime, std::stoll(field_str.substr(3))});
        } else {
            throw std::invalid_argument("unknown field '" + field_str + "' (rational or fp:P)");
        }

        if (!quiver_file.empty()) {
            s.quiver = quiver_from_json(load_json(quiver_file));
        } else if (!builtin.empty()) {
            auto colon = builtin.find(':');
            std::string name = builtin.substr(0, colon);
            int bn = colon == std::string::npos ? 2 : std::stoi(builtin.substr(colon + 1));
            s.quiver = builtin_quiver(name, bn);
        } else if (!c_ex->parsed()) {
            throw std::invalid_argument("no quiver given (use --quiver or --builtin)");
        }
        if (!c_ex->parsed()) s.space = make_space(s.quiver, s.max_len);

        if (c_paths->parsed()) return cmd_paths(s);
        if (c_aug->parsed()) return cmd_aug(s);
        if (c_schur->parsed()) return cmd_schurian(s);
        if (c_autq->parsed()) return cmd_aut_q(s);
        if (c_solv->parsed()) return cmd_solvable(s);
        if (c_dims->parsed()) return cmd_dims(s, dims_out, dims_aut);
        if (c_apply->parsed()) return cmd_apply(s, datum_file, element_file);
        if (c_todat->parsed()) return cmd_to_datum(s, map_file);
        if (c_comp->parsed()) return cmd_compose(s, datum_file, datum_file2);
        if (c_inv->parsed()) return cmd_invert(s, datum_file);
        if (c_ver->parsed()) return cmd_verify(s, map_file);
        if (c_clo->parsed()) return cmd_closure(s, sub_file);
        if (c_sub->parsed()) return cmd_subgroup_test(s, datum_file, tag_str);
        if (c_innr->parsed()) return cmd_inner(s, unit_file);
        if (c_dec->parsed()) return cmd_decompose(s, datum_file, semidirect);
        if (c_gal->parsed()) return cmd_galois(s, sub_file, galois_which, sub_file2, point_str);
        if (c_dual->parsed()) return cmd_dual(s, dual_which, sub_file, datum_file, unit_file);
        if (c_chk->parsed()) return cmd_check(s, check_id);
        if (c_ex->parsed()) return cmd_examples(s, example_name, example_n);
    } catch (const MathError& e) {
        nlohmann::json witness{{"error", e.what()}, {"witness", e.witness()}};
        std::cerr << "mathematical contract violation: " << e.what() << "\n";
        std::cout << witness.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
