#include "helpers.hpp"
#include "oracles.hpp"

#include "residua/dual.hpp"
#include "residua/error.hpp"
#include "residua/sampling.hpp"

#include <doctest.h>

using namespace residua;
using th::r;
using th::rc;
using th::rv;

namespace {

const Phi phi0{Scalar::rmax(0)};

Vector bvec(std::initializer_list<const char*> xs) { return th::vec(th::bl, xs); }

Matrix bmat(const oracle::BoolMatrix& a) {
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < a.m; ++i) {
        for (std::size_t j = 0; j < a.p; ++j) {
            e.push_back(a.at(i, j) ? Scalar::unit(th::bl) : Scalar::bottom(th::bl));
        }
    }
    return Matrix(th::bl, a.m, a.p, std::move(e));
}

std::uint32_t mask_of(const std::vector<Scalar>& v) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_bottom()) {
            out |= 1U << i;
        }
    }
    return out;
}

} // namespace

TEST_CASE("canonical conjugates over rmax") {
    const auto cfg = DualPairConfig::canonical(phi0);
    CHECK(conj_left(cfg, rv({"2", "-1"})) == rc({"-2", "1"}));
    CHECK(conj_left(cfg, rv({"-inf", "-inf"})) == rc({"+inf", "+inf"}));
    CHECK(conj_right(cfg, rc({"-2", "1"})) == rv({"2", "-1"}));
    CHECK(conj_right(cfg, rc({"+inf", "+inf"})) == rv({"-inf", "-inf"}));
    CHECK(is_closed(cfg, rv({"5", "-inf", "+inf"})));
}

TEST_CASE("boolean conjugate by exhaustive scan") {
    const auto cfg = DualPairConfig::canonical(Phi::default_for(th::bl));
    const Vector x = bvec({"e", "eps"});
    CHECK(conj_left(cfg, x) == transpose(bvec({"eps", "e"})));
    // greatest y with <y, x> <= eps among the four covectors
    Vector best = bvec({"eps", "eps"});
    for (const char* a : {"eps", "e"}) {
        for (const char* b : {"eps", "e"}) {
            const Vector y = bvec({a, b});
            if (leq(dot(transpose(y), x), Scalar::bottom(th::bl))) {
                best = vjoin(best, y);
            }
        }
    }
    CHECK(transpose(conj_left(cfg, x)) == best);
    CHECK(conj_right(cfg, transpose(bvec({"eps", "eps"}))) == bvec({"e", "e"}));
}

TEST_CASE("nmax is not reflexive") {
    const Phi p(Scalar::finite(th::nm, 0));
    const auto cfg = DualPairConfig::canonical(p);
    CHECK_FALSE(is_closed(cfg, th::vec(th::nm, {"2"})));
    CHECK_FALSE(check_reflexive(th::nm, p, {th::n("2")}));
    CHECK_FALSE(is_reflexive_instance(p));
}

TEST_CASE("reflexivity") {
    CHECK(check_reflexive(th::rm, phi0, {r("-5"), r("0"), r("3"), r("+inf"), r("-inf")}));
    CHECK(check_reflexive(th::rm, Phi(r("7/2")), {r("-5"), r("+inf"), r("-inf")}));
    Sampler s(17);
    for (int t = 0; t < 100; ++t) {
        const Phi p = Phi::diagonal_matrix(2, s.finite_scalar(th::rm));
        CHECK(check_reflexive(SemiringId::matrix(2), p, {s.finite_scalar(SemiringId::matrix(2))}));
    }
}

TEST_CASE("matrix and opposite brackets satisfy the Galois laws") {
    Sampler s(23);
    const Matrix a = th::rmat({{"0", "1"}, {"-2", "+inf"}, {"-inf", "3"}});
    const auto cm = DualPairConfig::matrix_bracket(a, phi0);
    const auto co = DualPairConfig::opposite(phi0);
    for (int t = 0; t < 200; ++t) {
        const Vector x = s.vector(th::rm, 2);
        const CoVector y = s.covector(th::rm, 3);
        const bool below = leq(cm.bracket(y, x), phi0.value());
        CHECK(below == leq(y, conj_left(cm, x)));
        CHECK(below == leq(x, conj_right(cm, y)));

        const CoVector z = s.covector(th::rm, 2);
        const bool above = leq(phi0.value(), co.bracket(z, x));
        CHECK(above == co.y_leq(z, conj_left(co, x)));
        CHECK(above == leq(x, conj_right(co, z)));
    }
    CHECK_THROWS_AS(conj_left(cm, rv({"0"})), dimension_mismatch);
}

TEST_CASE("riesz evaluation and representation") {
    const Vector x = rv({"2", "-1"});
    CHECK(riesz_eval(x, phi0, rv({"0", "-inf"})) == r("-2"));
    CHECK(riesz_eval(x, phi0, rv({"-inf", "0"})) == r("1"));
    CHECK(leq(riesz_eval(x, phi0, x), phi0.value()));
    CHECK(riesz_eval(x, phi0, rv({"-inf", "-inf"})) == r("-inf"));
    CHECK(riesz_represent({r("-2"), r("1")}, phi0) == x);
    CHECK(riesz_represent({r("-inf"), r("-inf")}, phi0) == rv({"+inf", "+inf"}));
    CHECK_THROWS_AS(riesz_eval(th::vec(th::nm, {"1"}), Phi(th::n("0")), th::vec(th::nm, {"1"})), input_error);

    Sampler s(29);
    for (int t = 0; t < 100; ++t) {
        const Vector v = s.vector(th::rm, 3);
        std::vector<Scalar> f;
        for (std::size_t i = 0; i < 3; ++i) {
            f.push_back(riesz_eval(v, phi0, Vector::basis(th::rm, 3, i)));
        }
        CHECK(riesz_represent(f, phi0) == v);
    }
}

TEST_CASE("form extension") {
    const GeneratingFamily w = th::family({rv({"0", "-inf"})});
    const FormExtension ext = extend_form(w, {r("-3")}, phi0);
    CHECK(ext.representer == rv({"3", "-inf"}));
    CHECK(ext.form(w[0]) == r("-3"));

    const GeneratingFamily w2 = th::family({rv({"0", "1", "2"}), rv({"2", "0", "-1"})});
    const Vector z = rv({"1", "-1", "0"});
    const FormExtension e2 = extend_form(w2, {riesz_eval(z, phi0, w2[0]), riesz_eval(z, phi0, w2[1])}, phi0);
    Sampler s(31);
    for (int t = 0; t < 100; ++t) {
        const Vector v = s.member_of(w2);
        CHECK(e2.form(v) == riesz_eval(z, phi0, v));
    }
    // a value too large for any linear form
    CHECK_THROWS_AS(extend_form(th::family({rv({"0", "0"}), rv({"1", "1"})}), {r("0"), r("5")}, phi0), input_error);

    const FormExtension empty = extend_form(GeneratingFamily(th::rm, 2), {}, phi0);
    CHECK(empty.representer == rv({"-inf", "-inf"}));
}

TEST_CASE("opposite bracket") {
    CHECK(opposite_bracket(rv({"2", "-3"}), rv({"2", "-3"})) == Scalar::unit(th::rm));
    CHECK(opposite_bracket(rv({"-inf", "-inf"}), rv({"1", "2"})) == r("+inf"));
}

TEST_CASE("row and column spaces of small boolean matrices") {
    const Phi eps = Phi::default_for(th::bl);
    const LatticeReport id = rowcol_report(Matrix::identity(th::bl, 2), eps);
    CHECK(id.row_space.size() == 4);
    CHECK(id.col_space.size() == 4);
    CHECK(id.bijective);
    CHECK(id.order_reversing);
    for (const auto& [z, c] : id.iso_pairs) {
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(z[i].is_bottom() != c[i].is_bottom());
        }
    }
    const LatticeReport zero = rowcol_report(Matrix::filled(th::bl, 2, 2, Scalar::bottom(th::bl)), eps);
    CHECK(zero.row_space.size() == 1);
    CHECK(zero.bijective);
    const LatticeReport upper = rowcol_report(bmat({2, 2, 0b1011}), eps);
    CHECK(upper.row_space.size() == upper.col_space.size());
    CHECK(upper.bijective);
    CHECK(upper.order_reversing);
    CHECK_THROWS_AS(rowcol_report(th::rmat({{"0"}}), Phi(r("0"))), input_error);
}

TEST_CASE("row/column report agrees with the bit-mask oracle") {
    const Phi eps = Phi::default_for(th::bl);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t p = 1; p <= 3; ++p) {
            for (std::uint32_t bits = 0; bits < (1U << (m * p)); bits += 7) {
                const oracle::BoolMatrix a{m, p, bits};
                const LatticeReport rep = rowcol_report(bmat(a), eps);
                const auto rows = oracle::row_space(a);
                const auto cols = oracle::col_space(a);
                REQUIRE(rep.row_space.size() == rows.size());
                REQUIRE(rep.col_space.size() == cols.size());
                for (const auto& [z, c] : rep.iso_pairs) {
                    CHECK(rows.count(mask_of(z.entries())));
                    CHECK(mask_of(c.entries()) == oracle::rowcol_map(a, mask_of(z.entries())));
                }
            }
        }
    }
}
