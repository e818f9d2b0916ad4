#include "cli.hpp"

#include "residua/dual.hpp"
#include "residua/error.hpp"
#include "residua/fenchel.hpp"
#include "residua/io.hpp"
#include "residua/laws.hpp"
#include "residua/metric.hpp"
#include "residua/project.hpp"
#include "residua/render.hpp"
#include "residua/separate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace residua::cli {

namespace {

struct Globals {
    std::string semiring;
    std::string phi;
    std::uint64_t seed = 1;
    std::string out;

    std::optional<SemiringId> semiring_id() const {
        return semiring.empty() ? std::nullopt : std::optional<SemiringId>(SemiringId::parse(semiring));
    }
    std::optional<std::string> phi_text() const { return phi.empty() ? std::nullopt : std::optional<std::string>(phi); }
    ProblemFile load(const std::string& path) const { return ProblemFile::load(path, semiring_id(), phi_text()); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw io_error("cannot write '" + path + "'");
    }
    f << text;
    f.close();
    if (!f) {
        throw io_error("failed writing '" + path + "'");
    }
}

void emit(const Globals& g, const json& j, std::ostream& out) {
    const std::string text = canonical_dump(j) + "\n";
    if (g.out.empty()) {
        out << text;
    } else {
        write_file(g.out, text);
    }
}

json cmd_project(const ProblemFile& pf) {
    const GeneratingFamily w = pf.family("generators");
    const Vector x = pf.vector("point");
    const ProjectionResult r = project(w, x);
    return json{{"projection", to_json(r.projection)},
                {"coefficients", to_json(r.coefficients)},
                {"member", is_member(w, x)}};
}

json cmd_member(const ProblemFile& pf) {
    const GeneratingFamily w = pf.family("generators");
    const Vector x = pf.vector("point");
    json j{{"member", is_member(w, x)}, {"projection", to_json(project(w, x).projection)}};
    if (pf.semiring().kind() == SemiringKind::rmax) {
        bool finite_gens = true;
        for (const Vector& g : w) {
            for (const Scalar& s : g) {
                finite_gens = finite_gens && !s.is_top();
            }
        }
        if (finite_gens) {
            j["dominating_meet"] = to_json(qv_inf(w, x).value);
        }
    }
    return j;
}

json halfspace_json(const HalfSpace& h) {
    return json{{"x", to_json(h.x_ref())}, {"y", to_json(h.y())}, {"nu", to_json(h.nu())}};
}

json cmd_separate(const ProblemFile& pf) {
    const GeneratingFamily c = pf.family(pf.has("convex") ? "convex" : "generators");
    const Vector x = pf.vector("point");
    if (c.empty()) {
        throw input_error("separate needs a nonempty convex set");
    }
    const ConvexSeparation s = separate_from_convex(c, x);
    json j{{"nu", to_json(s.nu)}, {"y", to_json(s.y)}, {"member", s.member}, {"halfspace", halfspace_json(halfspace(c, x))}};
    if (s.normalized) {
        j["normalized"] = to_json(*s.normalized);
    }
    return j;
}

DualPairConfig bracket_of(const ProblemFile& pf) {
    const std::string kind = pf.has("bracket") ? pf.body().at("bracket").get<std::string>() : "canonical";
    if (kind == "canonical") {
        return DualPairConfig::canonical(pf.phi());
    }
    if (kind == "matrix") {
        return DualPairConfig::matrix_bracket(pf.matrix("matrix"), pf.phi());
    }
    if (kind == "opposite") {
        return DualPairConfig::opposite(pf.phi());
    }
    throw input_error("unknown bracket '" + kind + "'");
}

json cmd_dual(const ProblemFile& pf) {
    const DualPairConfig cfg = bracket_of(pf);
    const bool reflexive = is_reflexive_instance(cfg.phi());
    json j{{"bracket", pf.has("bracket") ? pf.body().at("bracket") : json("canonical")},
           {"phi", to_json(cfg.phi().value())},
           {"reflexive", reflexive}};
    if (pf.has("point")) {
        const Vector x = pf.vector("point");
        j["conjugate"] = to_json(conj_left(cfg, x));
        j["closed"] = is_closed(cfg, x);
        if (reflexive && cfg.kind() == BracketKind::canonical) {
            std::vector<Scalar> on_basis;
            for (std::size_t i = 0; i < x.size(); ++i) {
                on_basis.push_back(riesz_eval(x, cfg.phi(), Vector::basis(x.semiring(), x.size(), i)));
            }
            j["riesz_on_basis"] = to_json(on_basis);
        }
    }
    if (pf.has("covector")) {
        j["preconjugate"] = to_json(conj_right(cfg, pf.covector("covector")));
    }
    if (pf.has("samples")) {
        j["reflexive_at_samples"] = check_reflexive(pf.semiring(), cfg.phi(), pf.scalars("samples"));
    }
    if (pf.has("generators") && pf.has("values")) {
        j["extension"] = to_json(extend_form(pf.family("generators", nullptr), pf.scalars("values"), cfg.phi()).representer);
    }
    return j;
}

json cmd_hilbert(const ProblemFile& pf) {
    const Vector x = pf.vector("point");
    json j;
    if (pf.has("other")) {
        const Vector y = pf.vector("other");
        require_same_shape(x, y, "hilbert");
        j["distance"] = to_json(d_h(x, y));
    }
    if (pf.has("generators")) {
        const GeneratingFamily w = pf.family("generators");
        const Vector p = project(w, x).projection;
        const std::vector<Vector> samples = pf.has("samples") ? pf.vectors("samples") : w.generators();
        j["projection"] = to_json(p);
        j["distance_to_projection"] = to_json(d_h(x, p));
        j["best_approximation"] = hilbert_check_projection(w, x, samples);
    }
    return j;
}

json cmd_hull(const ProblemFile& pf) {
    const GridFunction f = pf.grid("function");
    const SlopeSet s = pf.slopes("slopes");
    return json{{"hull", to_json(lsc_convex_hull(f, s).values())},
                {"conjugate", to_json(fenchel_transform(f, s).values)},
                {"biconjugate_fixed", biconjugate_fixed_point_check(f, s)}};
}

json cmd_rowcol(const ProblemFile& pf) {
    const LatticeReport r = rowcol_report(pf.matrix("matrix"), pf.phi());
    json rows = json::array();
    json cols = json::array();
    json pairs = json::array();
    for (const CoVector& z : r.row_space) {
        rows.push_back(to_json(z));
    }
    for (const Vector& c : r.col_space) {
        cols.push_back(to_json(c));
    }
    for (const auto& [z, c] : r.iso_pairs) {
        pairs.push_back(json::array({to_json(z), to_json(c)}));
    }
    return json{{"row_space", rows},       {"col_space", cols},
                {"pairs", pairs},          {"bijective", r.bijective},
                {"order_reversing", r.order_reversing}, {"joins_to_meets", r.joins_to_meets}};
}

int cmd_laws(const Globals& g, const std::string& suite, std::size_t trials, std::ostream& out, std::ostream& err) {
    const LawReport r = run_law_suite(suite, g.seed, trials);
    emit(g,
         json{{"suite", r.suite},
              {"seed", r.seed},
              {"trials", r.trials},
              {"checks", r.checks},
              {"failures", r.failures},
              {"pinned", r.pinned},
              {"ok", r.ok()}},
         out);
    if (!r.ok()) {
        err << "counterexample: " << r.failures.front() << "\n";
        return violation;
    }
    return ok;
}

int cmd_render(const Globals& g, const std::string& scene_path, std::ostream& out) {
    if (g.out.empty()) {
        throw input_error("render needs --out");
    }
    std::ifstream in(scene_path);
    if (!in) {
        throw io_error("cannot open '" + scene_path + "'");
    }
    json scene;
    try {
        scene = json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + scene_path + "' is not valid JSON: " + e.what());
    }
    const RenderResult r = render_scene(scene_from_json(scene));
    write_file(g.out, r.svg);
    json points = json::array();
    for (const PointClass& p : r.points) {
        points.push_back(json{{"label", p.label}, {"in_convex", p.in_convex}, {"in_halfspaces", p.in_halfspaces}});
    }
    out << canonical_dump(json{{"out", g.out}, {"points", points}}) << "\n";
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Residuation, projection, separation and duality over idempotent semirings", "residua"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--semiring", g.semiring, "rmax | boolean | nmax | matrix:n (overrides the file)");
    app.add_option("--phi", g.phi, "bracket value phi (overrides the file)");
    app.add_option("--seed", g.seed, "seed for the law suites");
    app.add_option("--out", g.out, "output path (SVG for render, JSON otherwise)");

    std::string file;
    auto file_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "problem file (JSON)")->required();
        sub->fallthrough();
        return sub;
    };
    CLI::App* c_project = file_command("project", "project a point onto the span of generators");
    CLI::App* c_member = file_command("member", "test membership in the span of generators");
    CLI::App* c_separate = file_command("separate", "separate a point from a convex set");
    CLI::App* c_dual = file_command("dual", "conjugates, closedness and forms for a dual pair");
    CLI::App* c_hilbert = file_command("hilbert", "Hilbert-type distance and best approximation");
    CLI::App* c_hull = file_command("hull", "Fenchel conjugate and convex hull on a grid");
    CLI::App* c_rowcol = file_command("rowcol", "row/column space anti-isomorphism of a boolean matrix");

    std::string suite;
    std::size_t trials = 1000;
    CLI::App* c_laws = app.add_subcommand("laws", "run a seeded property suite");
    c_laws->add_option("suite", suite, "suite name")->required();
    c_laws->add_option("--trials", trials, "number of random trials");
    c_laws->fallthrough();

    std::string scene;
    CLI::App* c_render = app.add_subcommand("render", "render a 2-D scene to SVG");
    c_render->add_option("scene", scene, "scene file (JSON)")->required();
    c_render->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (c_laws->parsed()) {
            return cmd_laws(g, suite, trials, out, err);
        }
        if (c_render->parsed()) {
            return cmd_render(g, scene, out);
        }
        const ProblemFile pf = g.load(file);
        json result;
        if (c_project->parsed()) {
            result = cmd_project(pf);
        } else if (c_member->parsed()) {
            result = cmd_member(pf);
        } else if (c_separate->parsed()) {
            result = cmd_separate(pf);
        } else if (c_dual->parsed()) {
            result = cmd_dual(pf);
        } else if (c_hilbert->parsed()) {
            result = cmd_hilbert(pf);
        } else if (c_hull->parsed()) {
            result = cmd_hull(pf);
        } else if (c_rowcol->parsed()) {
            result = cmd_rowcol(pf);
        }
        emit(g, result, out);
        return ok;
    } catch (const theorem_violation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return violation;
    } catch (const dimension_mismatch& e) {
        err << "dimension error: " << e.what() << "\n";
        return bad_dimension;
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return io_failure;
    } catch (const error& e) {
        err << "input error: " << e.what() << "\n";
        return bad_input;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return bad_input;
    }
}

} // namespace residua::cli
