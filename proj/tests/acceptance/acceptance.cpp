// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "residua/dual.hpp"
#include "residua/fenchel.hpp"
#include "residua/io.hpp"
#include "residua/laws.hpp"
#include "residua/project.hpp"
#include "residua/sampling.hpp"
#include "residua/separate.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace residua;
using th::r;
using th::rv;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s && o.ok) {
        o.ok = false;
        o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
    }
    if (!o.ok) {
        ++failures;
    }
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  (" << t.str() << " s)";
    if (!o.ok) {
        std::cout << "  " << o.detail;
    }
    std::cout << std::endl;
}

void suite(Outcome& o, const char* name, std::uint64_t seed, std::size_t trials) {
    const LawReport rep = run_law_suite(name, seed, trials);
    o.require(rep.ok(), std::string(name) + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
    o.require(rep.checks > 0, std::string(name) + ": no checks ran");
}

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = residua::cli::run(args, out, err);
    return {code, out.str()};
}

std::string data(const char* name) { return std::string(RESIDUA_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("residua_acceptance_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<oracle::Vec> gens_of(const GeneratingFamily& w) {
    std::vector<oracle::Vec> out;
    for (const Vector& g : w) {
        out.push_back(oracle::from(g));
    }
    return out;
}

} // namespace

int main() {
    criterion(1, "worked 2-D example reproduced exactly", 1.0, [](Outcome& o) {
        const GeneratingFamily c = th::family({rv({"0", "0"}), rv({"1", "3"}), rv({"3", "4"})});
        const GeneratingFamily w = lift_convex(c);
        const Vector m = rv({"-1", "0"});
        o.require(project(w, rv({"-1", "0", "0"})).projection == rv({"-1", "0", "-1"}), "P_V(x) != (-1,0,-1)");
        const ConvexSeparation s = separate_from_convex(c, m);
        o.require(s.nu == r("-1"), "nu != -1");
        o.require(s.y == rv({"-1", "0"}), "y != (-1,0)");
        o.require(s.normalized && *s.normalized == rv({"0", "1"}), "normalized P != (0,1)");
        const Scalar e = Scalar::unit(th::rm);
        o.require(meet(vec_lres(m, m), e) == r("0") && meet(vec_lres(m, s.y), s.nu) == r("-1"),
                  "half-space sides at M are not 0 > -1");
        const HalfSpace h = halfspace(c, m);
        o.require(!h.contains(m), "M inside the half-space");
        for (const Vector& g : c) {
            o.require(h.contains(g), "a vertex outside the half-space");
        }
    });

    criterion(2, "dominating meet counterexample", 0, [](Outcome& o) {
        const GeneratingFamily w = th::family({rv({"0", "-1", "0"}), rv({"-1", "0", "0"})});
        const Vector x = rv({"-1", "-1", "0"});
        const DominatingMeet q = qv_inf(w, x);
        o.require(q.value == rv({"-1", "-1", "0"}), "Q_V(x) != (-1,-1,0)");
        o.require(!q.member, "Q_V(x) reported in V");
        const Vector p = project(w, x).projection;
        o.require(p == rv({"-1", "-1", "-1"}), "P_V(x) != (-1,-1,-1)");
        o.require(leq(p, x), "P_V(x) not below x");
        const auto grid = oracle::grid(-6, 6, 1);
        o.require(oracle::from(q.value) == oracle::dominating_grid(gens_of(w), oracle::from(x), grid),
                  "Q_V disagrees with brute force");
        o.require(oracle::from(p) == oracle::project_grid(gens_of(w), oracle::from(x), grid),
                  "P_V disagrees with brute force");
    });

    criterion(3, "residuation laws, 10^4 trials per instance", 10.0,
              [](Outcome& o) { suite(o, "residuation", 42, 10000); });

    criterion(4, "projector and separation laws, 10^3 trials", 0,
              [](Outcome& o) { suite(o, "projection", 4, 1000); });

    criterion(5, "Hilbert metric laws, 10^3 trials", 0, [](Outcome& o) { suite(o, "hilbert", 7, 1000); });

    criterion(6, "duality laws", 0, [](Outcome& o) {
        suite(o, "duality", 6, 1000);
        const LawReport n = run_law_suite("nmax-reflexive", 6, 1);
        o.require(n.ok() && n.pinned.size() == 2, "nmax non-reflexivity not pinned");
        o.require(!check_reflexive(th::nm, Phi(th::n("0")), {th::n("2")}), "nmax reflexive at 2");
    });

    criterion(7, "row/column anti-isomorphism, all boolean matrices up to 3x3", 30.0, [](Outcome& o) {
        suite(o, "rowcol", 0, 1);
        // independent bit-mask check
        std::size_t count = 0;
        for (std::size_t m = 1; m <= 3; ++m) {
            for (std::size_t p = 1; p <= 3; ++p) {
                for (std::uint32_t bits = 0; bits < (1U << (m * p)); ++bits) {
                    ++count;
                    const oracle::BoolMatrix a{m, p, bits};
                    const auto rows = oracle::row_space(a);
                    const auto cols = oracle::col_space(a);
                    std::set<std::uint32_t> image;
                    for (std::uint32_t z : rows) {
                        image.insert(oracle::rowcol_map(a, z));
                    }
                    o.require(image == cols && image.size() == rows.size(), "map is not a bijection");
                    for (std::uint32_t z1 : rows) {
                        for (std::uint32_t z2 : rows) {
                            const std::uint32_t f1 = oracle::rowcol_map(a, z1);
                            const std::uint32_t f2 = oracle::rowcol_map(a, z2);
                            o.require(!oracle::subset(z1, z2) || oracle::subset(f2, f1), "order not reversed");
                            std::uint32_t meet = 0;
                            for (std::uint32_t c : cols) {
                                if (oracle::subset(c, f1) && oracle::subset(c, f2)) {
                                    meet |= c;
                                }
                            }
                            o.require(oracle::rowcol_map(a, z1 | z2) == meet, "join not sent to meet");
                        }
                    }
                }
            }
        }
        o.require(count == 682, "wrong number of matrices enumerated");
    });

    criterion(8, "Fenchel laws and double-loop oracle, 10^3 functions", 0, [](Outcome& o) {
        suite(o, "fenchel", 8, 1000);
        Sampler s(88);
        for (int t = 0; t < 1000; ++t) {
            const GridFunction f = s.grid_function(2 + s.below(40));
            const SlopeSet sl = s.slope_set(1 + s.below(21));
            const oracle::Vec fv = oracle::from(f.as_vector());
            const Transform tr = fenchel_transform(f, sl);
            for (std::size_t j = 0; j < sl.size(); ++j) {
                o.require(oracle::from(tr.values[j]) == oracle::conjugate_direct(f.points(), fv, sl.slopes()[j]),
                          "conjugate disagrees with oracle");
            }
            o.require(oracle::from(lsc_convex_hull(f, sl).as_vector()) ==
                          oracle::biconjugate_direct(f.points(), fv, sl.slopes()),
                      "hull disagrees with oracle");
        }
    });

    criterion(9, "command-line contract", 0, [](Outcome& o) {
        const CliRun p = run_cli({"project", data("project_abc.json")});
        o.require(p.code == 0 && json::parse(p.out).at("projection").dump() == R"(["-1","0","-1"])",
                  "project output");
        const CliRun s = run_cli({"separate", data("separate_abc.json")});
        const json sj = json::parse(s.out);
        const json expected = json::parse(R"({"nu":"-1","y":["-1","0"],"normalized":["0","1"]})");
        for (const auto& [k, v] : expected.items()) {
            o.require(sj.contains(k) && sj.at(k).dump() == v.dump(), "separate field " + k);
        }
        o.require(canonical_dump(json::parse(s.out)) + "\n" == s.out, "output not canonical");
        const json mj = json::parse(run_cli({"separate", data("separate_member.json")}).out);
        o.require(mj.at("member") == true && mj.at("normalized").dump() == R"(["1","3"])", "member example");

        const std::string svg = (std::filesystem::temp_directory_path() / "residua_acceptance.svg").string();
        const CliRun rd = run_cli({"render", data("scene_abc.json"), "--out", svg});
        o.require(rd.code == 0, "render failed");
        const json classified = json::parse(rd.out);
        for (const json& pt : classified.at("points")) {
            const bool is_m = pt.at("label") == "M";
            o.require(pt.at("in_convex") == !is_m && pt.at("in_halfspaces") == json::array({!is_m}),
                      "point " + pt.at("label").get<std::string>() + " misclassified");
        }

        o.require(run_cli({"separate", temp_file("oops.json", R"({"convex":[["oops","0"]],"point":["0","0"]})")}).code == 2,
                  "malformed scalar not exit 2");
        o.require(run_cli({"project", temp_file("dim.json", R"({"generators":[["0","0","0"]],"point":["0","0"]})")}).code ==
                      3,
                  "dimension mismatch not exit 3");
        o.require(run_cli({"project", "/nonexistent/problem.json"}).code == 4, "missing file not exit 4");
        o.require(run_cli({"render", data("scene_abc.json"), "--out", "/nonexistent/dir/x.svg"}).code == 4,
                  "unwritable output not exit 4");
        o.require(run_cli({"laws", "no-such-suite"}).code == 2, "unknown suite not exit 2");
        o.require(run_cli({"--semiring", "boolean", "project", data("project_abc.json")}).code == 2,
                  "semiring mismatch not exit 2");
    });

    return failures == 0 ? 0 : 1;
}
