#pragma once

/**
 * @file render.hpp
 * @brief SVG rendering of two-dimensional max-plus scenes.
 *
 * Regions are drawn by evaluating the exact predicates (convex membership,
 * half-space containment, line balance) at the rational center of every
 * pixel; only the geometry is approximated. Output is deterministic.
 *
 * Scene JSON:
 *   {"generators": [["0","0"], ...],           convex set C (may be empty)
 *    "points": [{"label": "A", "at": ["0","0"]}, ...],
 *    "separate": ["M"],                        labels to separate from C
 *    "halfspaces": [{"x": [...], "y": [...], "nu": "..."}],
 *    "lines": [{"a": ["+","0"], "b": ["-","0"], "c": [".","1"]}],
 *    "viewport": ["xmin","xmax","ymin","ymax"],
 *    "samples_per_axis": 400}
 *
 * A line tag "+" puts the term a+u (or b+v, or c) on the left of
 * max(...) = max(...), "-" on the right and "." on both sides.
 */

#include "residua/io.hpp"
#include "residua/separate.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace residua {

enum class LineSign { plus, minus, dot };

struct LineTerm {
    LineSign sign;
    Rational value;
};

struct LineSpec {
    LineTerm a;
    LineTerm b;
    LineTerm c;
};

struct LabeledPoint {
    std::string label;
    Vector at;
};

struct Scene {
    std::vector<Vector> generators;
    std::vector<LabeledPoint> points;
    std::vector<std::string> separate;
    std::vector<HalfSpace> halfspaces;
    std::vector<LineSpec> lines;
    std::array<Rational, 4> viewport{Rational(-5), Rational(5), Rational(-5), Rational(5)};
    std::size_t samples_per_axis = 400;
};

Scene scene_from_json(const json& j);

/// Left and right side of the balance max(a+u, b+v, c) = max(a'+u, b'+v, c').
std::pair<Scalar, Scalar> line_sides(const LineSpec& line, const Rational& u, const Rational& v);

struct PointClass {
    std::string label;
    Vector at;
    bool in_convex;
    std::vector<bool> in_halfspaces;
};

struct Arrow {
    std::string label;
    Vector from;
    Vector to;
};

struct RenderResult {
    std::string svg;
    std::size_t samples = 0;
    /// Row-major masks, row 0 at the top (largest v).
    std::vector<std::uint8_t> convex;
    std::vector<std::vector<std::uint8_t>> halfspaces;
    std::vector<std::uint8_t> lines;
    /// Explicit half-spaces first, then one per separated label.
    std::vector<HalfSpace> all_halfspaces;
    std::vector<PointClass> points;
    std::vector<Arrow> arrows;
};

/// Center (u, v) of pixel column i, row j.
std::pair<Rational, Rational> pixel_center(const Scene& s, std::size_t i, std::size_t j);

RenderResult render_scene(const Scene& s);

} // namespace residua
