#include "toriclag/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "toriclag/polytope_file.hpp"
#include "toriclag/report.hpp"

namespace toriclag::cli {

namespace {

using report::Json;

struct Options {
    std::string json_path;
    double tol = 1e-8;
    std::optional<long> bound;
    std::string file;
    std::string family;
    long n = 0, p = 0, k = 0;
    std::string k_list;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
};

std::vector<long> parse_k_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error("--k expects a comma-separated list of integers, got '" + s + "'");
        }
    }
    if (out.empty()) throw Error("--k list is empty");
    return out;
}

/// Raised for failures that are mathematical verdicts rather than bad input.
struct GateFailure {
    std::string reason;
};

FamilyModel make_family(const std::string& name, long n, long p, long k) {
    if (name == "simplex-product") return simplex_product_family(n, p, k);
    if (name == "stretched") return stretched_family(p, k);
    throw Error("unknown family '" + name + "' (expected simplex-product or stretched)");
}

/// Model of a polytope file; the gate blocks presentations that carry no Lagrangian.
LagrangianModel gated_model(const HalfspacePresentation& p, bool& gate_ok, std::string& reason) {
    const PresentationReport rep = presentation_report(p);
    if (!rep.bounded || !rep.simple || !rep.irredundant()) {
        gate_ok = false;
        reason = !rep.bounded ? "presentation is unbounded"
                 : !rep.simple ? "presentation is not simple"
                               : "presentation is redundant";
        throw GateFailure{reason};
    }
    LagrangianModel m = build_model(p);
    if (!m.embedded) {
        gate_ok = false;
        reason = "not Delzant: psi is only an immersion";
    }
    return m;
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
    if (o.json_path == "-") {
        out << doc.dump(2) << "\n";
        return;
    }
    out << report::render_text(doc);
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) throw Error("cannot write '" + o.json_path + "'");
        f << doc.dump(2) << "\n";
    }
}

std::string join_args(int argc, const char* const* argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of toric Lagrangians built from Delzant polytopes", "toriclag"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--json", o.json_path, "Also write the JSON report to this path ('-' prints JSON instead of text)");
    app.add_option("--tol", o.tol, "Lagrangian residual tolerance for verify")->check(CLI::PositiveNumber);
    app.add_option("--bound", o.bound, "Index bound for the invariant m enumeration");

    auto* analyze = app.add_subcommand("analyze", "Presentation, quadrics, Maslov data and monotonicity of a polytope file");
    analyze->add_option("file", o.file, "Polytope file")->required();
    auto* vertices = app.add_subcommand("vertices", "List the vertices of a polytope file");
    vertices->add_option("file", o.file, "Polytope file")->required();

    auto* family = app.add_subcommand("family", "Report on one member of a parametric family");
    family->require_subcommand(1);
    auto* fam_sp = family->add_subcommand("simplex-product", "n coordinates, Delta^{p-1} x Delta^{n-p-1}");
    fam_sp->add_option("--n", o.n)->required();
    fam_sp->add_option("--p", o.p)->required();
    fam_sp->add_option("--k", o.k)->required();
    auto* fam_st = family->add_subcommand("stretched", "4p coordinates; p = 1 is the trapezoid");
    fam_st->add_option("--p", o.p)->required();
    fam_st->add_option("--k", o.k)->required();

    auto* compare = app.add_subcommand("compare", "Partition family members by (diffeo type, minimal Maslov, m)");
    compare->add_option("family", o.family, "simplex-product or stretched")->required();
    compare->add_option("--n", o.n);
    compare->add_option("--p", o.p)->required();
    compare->add_option("--k", o.k_list, "Comma-separated k values")->required();

    auto* verify = app.add_subcommand("verify", "Numerical checks at sample points");
    verify->add_option("target", o.file, "Polytope file, simplex-product or stretched")->required();
    verify->add_option("--n", o.n);
    verify->add_option("--p", o.p);
    verify->add_option("--k", o.k);
    verify->add_option("--samples", o.samples);
    verify->add_option("--seed", o.seed);

    for (auto* sub : {analyze, vertices, family, fam_sp, fam_st, compare, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input;
    }

    Json doc = report::document(join_args(argc, argv));
    int status = exit_ok;
    try {
        if (*analyze) {
            const HalfspacePresentation p = read_polytope_file(o.file);
            doc["presentation"] = report::presentation_section(p);
            bool ok = true;
            std::string reason;
            try {
                const LagrangianModel m = gated_model(p, ok, reason);
                doc["quadrics"] = report::quadrics_section(m);
                doc["lagrangian"] = report::lagrangian_section(m);
            } catch (const GateFailure&) {
            }
            if (!ok) {
                doc["gate"] = Json{{"passed", false}, {"reason", reason}};
                status = exit_gate;
            }
        } else if (*vertices) {
            const HalfspacePresentation p = read_polytope_file(o.file);
            doc["vertices"] = report::vertices_section(p);
        } else if (*family) {
            const FamilyModel f = *fam_sp ? simplex_product_family(o.n, o.p, o.k) : stretched_family(o.p, o.k);
            doc["family"] = report::family_section(f);
            doc["quadrics"] = report::quadrics_section(f.model);
            doc["lagrangian"] = report::lagrangian_section(f.model);
            doc["invariants"] = report::invariants_section(f, o.bound);
        } else if (*compare) {
            std::vector<FamilyModel> fs;
            for (long k : parse_k_list(o.k_list)) fs.push_back(make_family(o.family, o.n, o.p, k));
            doc["comparison"] = report::distinguish_section(distinguish(fs));
        } else if (*verify) {
            report::VerifySettings s;
            s.samples = o.samples;
            s.seed = o.seed;
            s.lagrangian_tol = o.tol;
            bool passed = true;
            if (o.file == "simplex-product" || o.file == "stretched") {
                const FamilyModel f = make_family(o.file, o.n, o.p, o.k);
                doc["family"] = report::family_section(f);
                doc["verification"] = report::verification_section(f.model, &f, s, passed);
            } else {
                const HalfspacePresentation p = read_polytope_file(o.file);
                bool ok = true;
                std::string reason;
                try {
                    const LagrangianModel m = gated_model(p, ok, reason);
                    doc["verification"] = report::verification_section(m, nullptr, s, passed);
                } catch (const GateFailure&) {
                }
                if (!ok) {
                    doc["gate"] = Json{{"passed", false}, {"reason", reason}};
                    passed = false;
                }
            }
            if (!passed) status = exit_gate;
        }
    } catch (const ParseError& e) {
        err << "error: " << o.file << ": " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        emit(doc, o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return status;
}

}  // namespace toriclag::cli
