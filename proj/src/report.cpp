#include "toriclag/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace toriclag::report {

Json exact(const Rational& q) { return Json{{"exact", to_string(q)}}; }
Json exact(const Integer& z) { return Json{{"exact", z.get_str()}}; }
Json exact(long v) { return Json{{"exact", std::to_string(v)}}; }
Json floating(double x, double tol) { return Json{{"float", x}, {"tol", tol}}; }

Json exact_vector(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

Json exact_vector(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

Json exact_matrix(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(exact_vector(m.row(r)));
    return a;
}

Rational read_exact(const Json& node) {
    if (!node.is_object() || !node.contains("exact") || !node["exact"].is_string())
        throw Error("expected an exact number node, got " + node.dump());
    return parse_rational(node["exact"].get<std::string>());
}

namespace {

Json index_list(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (auto i : v) a.push_back(exact(static_cast<long>(i)));
    return a;
}

Json optional_exact(const std::optional<Rational>& q) { return q ? exact(*q) : Json(nullptr); }

std::string branch_name(Branch b) { return b == Branch::A ? "A" : "B"; }

Json disc_json(const DiscClass& d) {
    return Json{{"branch", branch_name(d.branch)},
                {"lambda", Json::array({exact(d.lambda1), exact(d.lambda2)})},
                {"index", exact(d.index)},
                {"boundary_class", Json::array({exact(d.boundary.first), exact(d.boundary.second)})},
                {"generic_point", d.generic_point}};
}

Json basis_json(const LatticeBasis& b) {
    Json a = Json::array();
    for (const auto& v : b.vectors) a.push_back(exact_vector(v));
    return a;
}

}  // namespace

Json presentation_section(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    const PresentationReport rep = presentation_report(p, opts);
    Json j;
    j["dim"] = exact(static_cast<long>(p.dim()));
    j["facets"] = exact(static_cast<long>(p.facet_count()));
    j["normals"] = exact_matrix(p.a.transpose());
    j["offsets"] = exact_vector(p.b);
    j["bounded"] = rep.bounded;
    j["simple"] = rep.simple;
    j["generic"] = rep.generic;
    j["redundant_facets"] = index_list(rep.redundant_facets);
    j["vertex_count"] = exact(static_cast<long>(rep.vertex_count));
    if (rep.bounded && rep.simple) {
        const DelzantVerdict d = is_delzant(p, opts);
        Json dz{{"verdict", d.delzant}};
        if (d.witness)
            dz["witness"] = Json{{"vertex", exact_vector(d.witness->point)},
                                 {"facets", index_list(d.witness_facets)},
                                 {"sublattice_index", exact(d.witness_index)}};
        j["delzant"] = dz;
    } else {
        j["delzant"] = Json{{"verdict", nullptr}, {"reason", "not a simple bounded presentation"}};
    }
    j["fano_constant"] = optional_exact(fano_constant(p));
    return j;
}

Json vertices_section(const HalfspacePresentation& p, const EnumerationOptions& opts) {
    Json a = Json::array();
    for (const auto& v : enumerate_vertices(p, opts))
        a.push_back(Json{{"point", exact_vector(v.point)}, {"active_set", index_list(v.active_set)}});
    return a;
}

Json quadrics_section(const LagrangianModel& m) {
    Json j;
    j["gamma"] = exact_matrix(m.quadrics.gamma);
    j["delta"] = exact_vector(m.quadrics.delta);
    j["nondegenerate"] = nondegenerate(m.quadrics);
    Json dims = Json::array();
    for (auto d : m.topology.sphere_dims) dims.push_back(exact(static_cast<long>(d)));
    j["topology"] = Json{{"description", m.topology.description}, {"sphere_dims", dims}, {"note", m.topology.note}};
    return j;
}

Json lagrangian_section(const LagrangianModel& m) {
    Json j;
    j["maslov_vector"] = exact_vector(m.t);
    j["lattice_basis"] = basis_json(m.torus.lattice);
    j["dual_basis"] = basis_json(m.torus.dual);
    j["deck_group_order"] = exact(m.torus.deck_order());
    j["embedded"] = m.embedded;
    Json gens = Json::array();
    for (const auto& g : generator_pairing(m))
        gens.push_back(Json{{"maslov", exact(g.maslov)}, {"area_over_pi", exact(g.area_over_pi)}});
    j["generators"] = gens;
    try {
        j["minimal_maslov"] = exact(minimal_maslov(m));
    } catch (const Error&) {
        j["minimal_maslov"] = nullptr;
    }
    j["monotone"] = m.monotone;
    j["fano_constant"] = optional_exact(m.fano_c);
    if (auto mono = monotonicity(m)) {
        j["monotonicity"] = Json{{"relation_holds", mono->relation_holds},
                                 {"simply_connected_certified", mono->simply_connected_certified}};
    } else {
        j["monotonicity"] = nullptr;
    }
    return j;
}

Json family_section(const FamilyModel& f) {
    Json j;
    j["family"] = to_string(f.kind);
    j["n"] = exact(f.n);
    j["p"] = exact(f.p);
    j["k"] = exact(f.k);
    j["all_even"] = f.all_even;
    j["theorem_range"] = f.theorem_range;
    j["diffeo_type"] = f.diffeo_type ? Json(*f.diffeo_type) : Json(nullptr);
    j["index_threshold"] = exact(f.index_threshold);
    try {
        j["smooth_isotopy_classes"] = exact(smooth_isotopy_class_count(f));
    } catch (const Error&) {
        j["smooth_isotopy_classes"] = nullptr;
    }
    return j;
}

Json invariants_section(const FamilyModel& f, std::optional<long> bound) {
    const InvariantReport r = invariant_m(f, bound);
    Json j;
    j["m"] = exact(r.m);
    j["witness"] = disc_json(r.witness);
    j["doubled_primitive"] = r.doubled_primitive;
    j["threshold"] = exact(r.threshold);
    j["bound"] = exact(r.bound);
    j["closed_form"] = r.closed_form ? exact(*r.closed_form) : Json(nullptr);
    j["closed_form_agrees"] = r.closed_form ? Json(*r.closed_form == r.m) : Json(nullptr);
    Json spec = Json::array();
    for (const auto& d : disc_spectrum(f, r.m.get_si())) spec.push_back(disc_json(d));
    j["disc_spectrum_up_to_m"] = spec;
    return j;
}

Json distinguish_section(const DistinguishReport& r) {
    Json j;
    j["family"] = to_string(r.kind);
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json ks = Json::array();
        for (long k : c.ks) ks.push_back(exact(k));
        classes.push_back(Json{{"diffeo_type", c.diffeo_type ? Json(*c.diffeo_type) : Json(nullptr)},
                               {"minimal_maslov", exact(c.minimal_maslov)},
                               {"m", exact(c.m)},
                               {"k", ks}});
    }
    j["class_count"] = exact(static_cast<long>(r.classes.size()));
    j["classes"] = classes;
    j["hypotheses_hold"] = r.hypotheses_hold;
    Json pairs = Json::array();
    for (const auto& pr : r.non_isotopic)
        pairs.push_back(Json{{"k", Json::array({exact(pr.k1), exact(pr.k2)})},
                             {"diffeo_type", pr.diffeo_type},
                             {"verdict", "same diffeomorphism type, not Hamiltonian isotopic"}});
    j["non_isotopic_pairs"] = pairs;
    j["guaranteed_classes"] = r.guaranteed_classes ? exact(*r.guaranteed_classes) : Json(nullptr);
    return j;
}

Json verification_section(const LagrangianModel& m, const FamilyModel* family, const VerifySettings& s, bool& passed) {
    Json j;
    const SampleSet set = sample_lagrangian(m, s.samples, s.seed);
    j["samples"] = exact(static_cast<long>(set.points.size()));
    j["seed"] = exact(Integer(std::to_string(s.seed)));
    j["max_quadric_residual"] = floating(set.max_residual, set.residual_tol);
    if (!set.points.empty()) {
        const double res = lagrangian_residual(m, set);
        const bool ok = res < s.lagrangian_tol;
        passed = passed && ok;
        j["lagrangian_residual"] = floating(res, s.lagrangian_tol);
        j["lagrangian_ok"] = ok;
        if (m.quadrics.relation_count() > 0) {
            const double ctrl = lagrangian_residual(m, set, FramePerturbation{0, 1.1});
            j["negative_control_residual"] = floating(ctrl, 1e-3);
            j["negative_control_ok"] = ctrl > 1e-3;
            passed = passed && ctrl > 1e-3;
        }
    }
    Json areas = Json::array();
    for (std::size_t i = 0; i < m.torus.dual.size(); ++i) {
        const double num = cycle_area_numeric(m, i, s.area_steps);
        const double ex = cycle_area_exact(m, i);
        const double rel = ex == 0 ? std::abs(num) : std::abs(num - ex) / std::abs(ex);
        const bool ok = rel < s.area_tol;
        passed = passed && ok;
        areas.push_back(Json{{"generator", exact(static_cast<long>(i))},
                             {"numeric", floating(num, s.area_tol)},
                             {"exact_over_pi", exact(dot(m.torus.dual.vectors[i], m.quadrics.delta))},
                             {"relative_error", floating(rel, s.area_tol)},
                             {"ok", ok}});
    }
    j["cycle_areas"] = areas;
    if (family) {
        Json discs = Json::array();
        auto check = [&](const std::string& name, const DiscSpec& d, const Integer& expected) {
            const Integer got = disc_index_winding(m, d, s.boundary_samples);
            passed = passed && got == expected;
            discs.push_back(Json{{"disc", name}, {"winding_index", exact(got)}, {"formula_index", exact(expected)},
                                 {"ok", got == expected}});
        };
        const DiscClass a11 = disc_class(*family, Branch::A, 1, 1);
        check("branch A, lambda (1,1)", explicit_disc(*family, a11), a11.index);
        if (family->kind != FamilyKind::simplex_product) {
            const DiscClass h = disc_class(*family, Branch::A, 0, 1);
            check("h_k", stretched_h_disc(*family), h.index);
        }
        j["disc_indices"] = discs;
    }
    j["passed"] = passed;
    return j;
}

Json document(const std::string& command) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    return j;
}

namespace {

bool is_tagged(const Json& v) { return v.is_object() && (v.contains("exact") || v.contains("float")); }

bool inline_value(const Json& v) {
    if (v.is_primitive() || is_tagged(v)) return true;
    if (v.is_array()) {
        for (const auto& e : v)
            if (!inline_value(e)) return false;
        return true;
    }
    return false;
}

std::string scalar(const Json& v) {
    if (is_tagged(v)) {
        if (v.contains("exact")) return v["exact"].get<std::string>();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v["float"].get<double>());
        return buf;
    }
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
        return s + ")";
    }
    if (v.is_null()) return "none";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const Json& v, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (inline_value(val)) os << pad << key << ": " << scalar(val) << "\n";
            else {
                os << pad << key << ":\n";
                render(val, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (inline_value(e)) os << pad << "- " << scalar(e) << "\n";
            else {
                os << pad << "-\n";
                render(e, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar(v) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    render(doc, 0, os);
    return os.str();
}

}  // namespace toriclag::report
