#include "residua/render.hpp"

#include "residua/error.hpp"
#include "residua/project.hpp"

#include <algorithm>
#include <sstream>

namespace residua {

namespace {

constexpr long long canvas = 800;
constexpr long long margin = 40;

const SemiringId rm = SemiringId::rmax();

Rational rational_field(const json& j, const char* what) {
    if (!j.is_string()) {
        throw input_error(std::string(what) + " must be a rational string");
    }
    return parse_rational(j.get<std::string>());
}

Vector point2(const json& j, const char* what) {
    Vector v = vector_from_json(rm, j);
    if (v.size() != 2) {
        throw dimension_mismatch(std::string(what) + " must have two coordinates");
    }
    for (const Scalar& s : v) {
        if (!s.is_finite()) {
            throw input_error(std::string(what) + " must have finite coordinates");
        }
    }
    return v;
}

LineTerm line_term(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string()) {
        throw input_error("line coefficient must be [sign, value]");
    }
    const std::string sign = j[0].get<std::string>();
    LineSign s;
    if (sign == "+") {
        s = LineSign::plus;
    } else if (sign == "-") {
        s = LineSign::minus;
    } else if (sign == ".") {
        s = LineSign::dot;
    } else {
        throw input_error("line sign must be \"+\", \"-\" or \".\", got \"" + sign + "\"");
    }
    return LineTerm{s, rational_field(j[1], "line coefficient")};
}

// Decimal text with two places, rounded half away from zero.
std::string fixed2(const Rational& q) {
    const Rational scaled = q * 100;
    Integer n = boost::multiprecision::numerator(scaled);
    const Integer d = boost::multiprecision::denominator(scaled);
    const bool negative = n < 0;
    if (negative) {
        n = -n;
    }
    const Integer r = (2 * n + d) / (2 * d);
    const Integer whole = r / 100;
    const Integer frac = r % 100;
    std::string f = frac.str();
    if (f.size() < 2) {
        f.insert(0, 2 - f.size(), '0');
    }
    return (negative && r != 0 ? "-" : "") + whole.str() + "." + f;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

class Frame {
public:
    explicit Frame(const Scene& s) : s_(s) {}

    Rational px(const Rational& u) const {
        const auto& vp = s_.viewport;
        return margin + (u - vp[0]) * canvas / (vp[1] - vp[0]);
    }
    Rational py(const Rational& v) const {
        const auto& vp = s_.viewport;
        return margin + (vp[3] - v) * canvas / (vp[3] - vp[2]);
    }
    Rational cell() const { return Rational(canvas, static_cast<long long>(s_.samples_per_axis)); }

private:
    const Scene& s_;
};

void emit_mask(std::ostream& out, const Frame& f, const std::vector<std::uint8_t>& mask, std::size_t n,
               const char* id, const char* fill) {
    out << "<g id=\"" << id << "\" fill=\"" << fill << "\" shape-rendering=\"crispEdges\">\n";
    const Rational c = f.cell();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t i = 0;
        while (i < n) {
            if (!mask[j * n + i]) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < n && mask[j * n + i]) {
                ++i;
            }
            out << "<rect x=\"" << fixed2(margin + c * static_cast<long long>(start)) << "\" y=\""
                << fixed2(margin + c * static_cast<long long>(j)) << "\" width=\""
                << fixed2(c * static_cast<long long>(i - start)) << "\" height=\"" << fixed2(c) << "\"/>\n";
        }
    }
    out << "</g>\n";
}

Vector lift(const Vector& p) { return Vector(rm, {p[0], p[1], Scalar::unit(rm)}); }

int sign_of(const std::pair<Scalar, Scalar>& sides) {
    if (sides.first == sides.second) {
        return 0;
    }
    return lt(sides.first, sides.second) ? -1 : 1;
}

} // namespace

Scene scene_from_json(const json& j) {
    if (!j.is_object()) {
        throw input_error("scene must be a JSON object");
    }
    if (j.contains("semiring") && (!j.at("semiring").is_string() || j.at("semiring").get<std::string>() != "rmax")) {
        throw input_error("scenes are drawn over rmax only");
    }
    Scene s;
    if (j.contains("generators")) {
        const json& g = j.at("generators");
        if (!g.is_array()) {
            throw input_error("\"generators\" must be an array");
        }
        for (const json& p : g) {
            s.generators.push_back(point2(p, "generator"));
        }
    }
    if (j.contains("points")) {
        if (!j.at("points").is_array()) {
            throw input_error("\"points\" must be an array");
        }
        for (const json& p : j.at("points")) {
            if (!p.is_object() || !p.contains("label") || !p.at("label").is_string() || !p.contains("at")) {
                throw input_error("labeled point must be {\"label\": string, \"at\": point}");
            }
            s.points.push_back(LabeledPoint{p.at("label").get<std::string>(), point2(p.at("at"), "labeled point")});
        }
    }
    if (j.contains("separate")) {
        if (!j.at("separate").is_array()) {
            throw input_error("\"separate\" must be an array of labels");
        }
        for (const json& l : j.at("separate")) {
            if (!l.is_string()) {
                throw input_error("\"separate\" must be an array of labels");
            }
            s.separate.push_back(l.get<std::string>());
        }
    }
    if (j.contains("halfspaces")) {
        if (!j.at("halfspaces").is_array()) {
            throw input_error("\"halfspaces\" must be an array");
        }
        for (const json& h : j.at("halfspaces")) {
            if (!h.is_object() || !h.contains("x") || !h.contains("y") || !h.contains("nu")) {
                throw input_error("half-space must be {\"x\", \"y\", \"nu\"}");
            }
            s.halfspaces.emplace_back(point2(h.at("x"), "half-space x"), point2(h.at("y"), "half-space y"),
                                      scalar_from_json(rm, h.at("nu")));
        }
    }
    if (j.contains("lines")) {
        if (!j.at("lines").is_array()) {
            throw input_error("\"lines\" must be an array");
        }
        for (const json& l : j.at("lines")) {
            if (!l.is_object() || !l.contains("a") || !l.contains("b") || !l.contains("c")) {
                throw input_error("line must be {\"a\", \"b\", \"c\"}");
            }
            s.lines.push_back(LineSpec{line_term(l.at("a")), line_term(l.at("b")), line_term(l.at("c"))});
        }
    }
    if (j.contains("viewport")) {
        const json& v = j.at("viewport");
        if (!v.is_array() || v.size() != 4) {
            throw input_error("\"viewport\" must be [xmin, xmax, ymin, ymax]");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            s.viewport[k] = rational_field(v[k], "viewport bound");
        }
    }
    if (!(s.viewport[0] < s.viewport[1]) || !(s.viewport[2] < s.viewport[3])) {
        throw input_error("viewport must be nonempty");
    }
    if (j.contains("samples_per_axis")) {
        const json& n = j.at("samples_per_axis");
        if (!n.is_number_integer() || n.get<long long>() < 16) {
            throw input_error("\"samples_per_axis\" must be an integer >= 16");
        }
        s.samples_per_axis = n.get<std::size_t>();
    }
    return s;
}

std::pair<Scalar, Scalar> line_sides(const LineSpec& line, const Rational& u, const Rational& v) {
    Scalar lhs = Scalar::bottom(rm);
    Scalar rhs = Scalar::bottom(rm);
    auto put = [&](const LineTerm& t, const Rational& value) {
        const Scalar s = Scalar::rmax(value);
        if (t.sign != LineSign::minus) {
            lhs = add(lhs, s);
        }
        if (t.sign != LineSign::plus) {
            rhs = add(rhs, s);
        }
    };
    put(line.a, line.a.value + u);
    put(line.b, line.b.value + v);
    put(line.c, line.c.value);
    return {lhs, rhs};
}

std::pair<Rational, Rational> pixel_center(const Scene& s, std::size_t i, std::size_t j) {
    const auto& vp = s.viewport;
    const long long n = static_cast<long long>(s.samples_per_axis);
    const Rational u = vp[0] + (vp[1] - vp[0]) * Rational(2 * static_cast<long long>(i) + 1, 2 * n);
    const Rational v = vp[3] - (vp[3] - vp[2]) * Rational(2 * static_cast<long long>(j) + 1, 2 * n);
    return {u, v};
}

RenderResult render_scene(const Scene& s) {
    if (s.samples_per_axis < 16) {
        throw input_error("samples_per_axis must be at least 16");
    }
    if (!(s.viewport[0] < s.viewport[1]) || !(s.viewport[2] < s.viewport[3])) {
        throw input_error("viewport must be nonempty");
    }
    RenderResult r;
    const std::size_t n = s.samples_per_axis;
    r.samples = n;

    const bool has_convex = !s.generators.empty();
    const GeneratingFamily c(rm, 2, s.generators);
    const GeneratingFamily lifted = lift_convex(c);
    auto in_convex = [&](const Vector& p) { return has_convex && is_member(lifted, lift(p)); };

    r.all_halfspaces = s.halfspaces;
    for (const std::string& label : s.separate) {
        const auto it = std::find_if(s.points.begin(), s.points.end(),
                                     [&](const LabeledPoint& p) { return p.label == label; });
        if (it == s.points.end()) {
            throw input_error("\"separate\" names unknown point '" + label + "'");
        }
        if (!has_convex) {
            throw input_error("separating '" + label + "' needs a nonempty convex set");
        }
        const ConvexSeparation sep = separate_from_convex(c, it->at);
        if (sep.member) {
            continue;
        }
        r.all_halfspaces.push_back(halfspace(c, it->at));
        if (sep.normalized) {
            r.arrows.push_back(Arrow{label, it->at, *sep.normalized});
        }
    }

    r.convex.assign(n * n, 0);
    r.lines.assign(n * n, 0);
    r.halfspaces.assign(r.all_halfspaces.size(), std::vector<std::uint8_t>(n * n, 0));
    std::vector<std::vector<int>> signs(s.lines.size(), std::vector<int>(n * n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto [u, v] = pixel_center(s, i, j);
            const Vector p(rm, {Scalar::rmax(u), Scalar::rmax(v)});
            r.convex[j * n + i] = in_convex(p) ? 1 : 0;
            for (std::size_t h = 0; h < r.all_halfspaces.size(); ++h) {
                r.halfspaces[h][j * n + i] = r.all_halfspaces[h].contains(p) ? 1 : 0;
            }
            for (std::size_t l = 0; l < s.lines.size(); ++l) {
                signs[l][j * n + i] = sign_of(line_sides(s.lines[l], u, v));
            }
        }
    }
    // a pixel is on a line where the balance holds or its sign changes
    for (const auto& sg : signs) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                const int here = sg[j * n + i];
                const bool cross = here == 0 || (i + 1 < n && sg[j * n + i + 1] != here) ||
                                   (j + 1 < n && sg[(j + 1) * n + i] != here);
                if (cross) {
                    r.lines[j * n + i] = 1;
                }
            }
        }
    }

    for (const LabeledPoint& p : s.points) {
        PointClass pc{p.label, p.at, in_convex(p.at), {}};
        for (const HalfSpace& h : r.all_halfspaces) {
            pc.in_halfspaces.push_back(h.contains(p.at));
        }
        r.points.push_back(std::move(pc));
    }

    // SVG
    const Frame f(s);
    const long long size = canvas + 2 * margin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    std::vector<std::uint8_t> any_half(n * n, 0);
    for (const auto& m : r.halfspaces) {
        for (std::size_t k = 0; k < n * n; ++k) {
            any_half[k] |= m[k];
        }
    }
    if (!r.halfspaces.empty()) {
        emit_mask(out, f, any_half, n, "halfspace", "#d9d9d9");
    }
    if (has_convex) {
        emit_mask(out, f, r.convex, n, "convex", "#595959");
    }
    if (!s.lines.empty()) {
        emit_mask(out, f, r.lines, n, "lines", "#1f4e9c");
    }

    const auto& vp = s.viewport;
    const Rational zero(0);
    const Rational ax = std::clamp(zero, vp[0], vp[1]);
    const Rational ay = std::clamp(zero, vp[2], vp[3]);
    out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << fixed2(f.px(vp[0])) << "\" y1=\"" << fixed2(f.py(ay)) << "\" x2=\"" << fixed2(f.px(vp[1]))
        << "\" y2=\"" << fixed2(f.py(ay)) << "\"/>\n"
        << "<line x1=\"" << fixed2(f.px(ax)) << "\" y1=\"" << fixed2(f.py(vp[2])) << "\" x2=\"" << fixed2(f.px(ax))
        << "\" y2=\"" << fixed2(f.py(vp[3])) << "\"/>\n"
        << "</g>\n";

    if (!r.arrows.empty()) {
        out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
               "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b00000\"/></marker></defs>\n"
            << "<g id=\"arrows\" stroke=\"#b00000\" stroke-width=\"2\">\n";
        for (const Arrow& a : r.arrows) {
            out << "<line data-from=\"" << escape(a.label) << "\" x1=\"" << fixed2(f.px(a.from[0].value()))
                << "\" y1=\"" << fixed2(f.py(a.from[1].value())) << "\" x2=\"" << fixed2(f.px(a.to[0].value()))
                << "\" y2=\"" << fixed2(f.py(a.to[1].value())) << "\" marker-end=\"url(#head)\"/>\n";
        }
        out << "</g>\n";
    }

    out << "<g id=\"points\" font-family=\"sans-serif\" font-size=\"16\">\n";
    for (const PointClass& p : r.points) {
        std::string halves;
        for (bool b : p.in_halfspaces) {
            halves += (halves.empty() ? "" : ",") + std::string(b ? "1" : "0");
        }
        const std::string x = fixed2(f.px(p.at[0].value()));
        const std::string y = fixed2(f.py(p.at[1].value()));
        out << "<circle data-label=\"" << escape(p.label) << "\" data-in-convex=\"" << (p.in_convex ? 1 : 0)
            << "\" data-in-halfspace=\"" << halves << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\"/>\n"
            << "<text x=\"" << x << "\" y=\"" << y << "\" dx=\"6\" dy=\"-6\">" << escape(p.label) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    r.svg = out.str();
    return r;
}

} // namespace residua
