#include "helpers.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"
#include "residua/render.hpp"

#include <doctest.h>

using namespace residua;

namespace {

json abc_scene(int samples) {
    json j = json::parse(R"({
      "generators": [["0", "0"], ["1", "3"], ["3", "4"]],
      "points": [{"label": "A", "at": ["0", "0"]}, {"label": "B", "at": ["1", "3"]},
                 {"label": "C", "at": ["3", "4"]}, {"label": "M", "at": ["-1", "0"]}],
      "separate": ["M"],
      "viewport": ["-2", "5", "-2", "6"]})");
    j["samples_per_axis"] = samples;
    return j;
}

} // namespace

TEST_CASE("labeled points are classified exactly") {
    const RenderResult r = render_scene(scene_from_json(abc_scene(40)));
    REQUIRE(r.points.size() == 4);
    REQUIRE(r.all_halfspaces.size() == 1);
    for (const PointClass& p : r.points) {
        const bool is_m = p.label == "M";
        CHECK(p.in_convex == !is_m);
        CHECK(p.in_halfspaces == std::vector<bool>{!is_m});
    }
    CHECK(r.svg.find("data-label=\"M\" data-in-convex=\"0\" data-in-halfspace=\"0\"") != std::string::npos);
    CHECK(r.svg.find("data-label=\"A\" data-in-convex=\"1\" data-in-halfspace=\"1\"") != std::string::npos);
    REQUIRE(r.arrows.size() == 1);
    CHECK(r.arrows[0].to == th::rv({"0", "1"}));
}

TEST_CASE("pixel masks agree with the exact predicates") {
    const Scene s = scene_from_json(abc_scene(32));
    const RenderResult r = render_scene(s);
    const GeneratingFamily lifted = lift_convex(GeneratingFamily(s.generators));
    const std::size_t n = r.samples;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto [u, v] = pixel_center(s, i, j);
            const Vector p(th::rm, {Scalar::rmax(u), Scalar::rmax(v)});
            const Vector lp(th::rm, {p[0], p[1], Scalar::unit(th::rm)});
            CHECK(static_cast<bool>(r.convex[j * n + i]) == (project(lifted, lp).projection == lp));
            CHECK(static_cast<bool>(r.halfspaces[0][j * n + i]) == r.all_halfspaces[0].contains(p));
        }
    }
}

TEST_CASE("rendering is deterministic") {
    const Scene s = scene_from_json(abc_scene(24));
    CHECK(render_scene(s).svg == render_scene(s).svg);
}

TEST_CASE("generic line") {
    const Scene s = scene_from_json(json::parse(R"({
      "lines": [{"a": ["+", "0"], "b": ["-", "0"], "c": [".", "1"]}],
      "viewport": ["-4", "4", "-4", "4"], "samples_per_axis": 32})"));
    const RenderResult r = render_scene(s);
    const auto [lhs, rhs] = line_sides(s.lines[0], Rational(2), Rational(2));
    CHECK(lhs == rhs);
    const auto [l2, r2] = line_sides(s.lines[0], Rational(3), Rational(2));
    CHECK(l2 == th::r("3"));
    CHECK(r2 == th::r("2"));
    std::size_t marked = 0;
    for (auto m : r.lines) {
        marked += m;
    }
    CHECK(marked > 0);
    CHECK(marked < r.lines.size());
    // every pixel where the balance holds exactly is marked
    for (std::size_t j = 0; j < r.samples; ++j) {
        for (std::size_t i = 0; i < r.samples; ++i) {
            const auto [u, v] = pixel_center(s, i, j);
            const auto [a, b] = line_sides(s.lines[0], u, v);
            if (a == b) {
                CHECK(r.lines[j * r.samples + i] == 1);
            }
        }
    }
}

TEST_CASE("empty scene draws axes only") {
    const RenderResult r = render_scene(scene_from_json(json::object()));
    CHECK(r.svg.find("<svg") != std::string::npos);
    CHECK(r.svg.find("id=\"axes\"") != std::string::npos);
    CHECK(r.svg.find("<rect x=\"0\"") != std::string::npos);
    CHECK(r.svg.find("<circle") == std::string::npos);
    CHECK(r.svg.find("id=\"convex\"") == std::string::npos);
}

TEST_CASE("scene validation") {
    CHECK_THROWS_AS(scene_from_json(json::parse(R"({"viewport": ["1", "0", "0", "1"]})")), input_error);
    CHECK_THROWS_AS(scene_from_json(json::parse(R"({"samples_per_axis": 8})")), input_error);
    CHECK_THROWS_AS(scene_from_json(json::parse(R"({"generators": [["0", "0", "0"]]})")), dimension_mismatch);
    CHECK_THROWS_AS(scene_from_json(json::parse(R"({"lines": [{"a": ["*", "0"], "b": ["+", "0"], "c": ["+", "0"]}]})")),
                    input_error);
}
