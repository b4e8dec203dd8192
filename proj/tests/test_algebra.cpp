#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cellres/polynomial.hpp"
#include "cellres/solve.hpp"

using namespace cellres;

namespace {

Ring abcd() { return Ring({"a", "b", "c", "d"}); }

Polynomial rand_poly(std::mt19937& rng, const Ring& ring) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(0, 2), coef(-3, 3);
    Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponent e(ring.nvars());
        for (auto& v : e) v = expd(rng);
        p += Polynomial::term(rational_of(coef(rng)), e);
    }
    return p;
}

}  // namespace

TEST_CASE("lcm of exponent vectors is the componentwise maximum") {
    Ring r = abcd();
    Exponent ab = r.parse_monomial("a*b"), bc = r.parse_monomial("b*c"),
             cd = r.parse_monomial("c*d");
    CHECK(lcm_exp(ab, bc) == r.parse_monomial("a*b*c"));
    CHECK(lcm_exp(ab, r.zero()) == ab);
    CHECK(lcm_exp(lcm_exp(ab, bc), cd) == r.parse_monomial("a*b*c*d"));
    CHECK_THROWS_AS(lcm_exp(ab, Exponent{1, 2}), DimensionError);
}

TEST_CASE("monomial rendering and parsing round-trip") {
    Ring r = abcd();
    CHECK(r.monomial_string(r.parse_monomial("a*b^2")) == "a*b^2");
    CHECK(r.monomial_string(r.zero()) == "1");
    CHECK(r.parse_monomial("b^2*a") == r.parse_monomial("a*b^2"));
}

TEST_CASE("polynomial arithmetic laws on random inputs") {
    Ring r = abcd();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = rand_poly(rng, r), q = rand_poly(rng, r), s = rand_poly(rng, r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + s == p + (q + s));
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("polynomial string forms") {
    Ring r = abcd();
    Polynomial p = Polynomial::term(rational_of(3, 2), r.parse_monomial("a*b^2")) -
                   Polynomial::monomial(r.parse_monomial("c"));
    CHECK(p.to_string(r) == "3/2*a*b^2 - c");
    CHECK(Polynomial::parse("3/2*a*b^2 - c", r) == p);
    CHECK(Polynomial::parse("0", r).is_zero());
}

TEST_CASE("matrix composition is exact and checks modules") {
    Ring r = Ring({"x", "y"});
    GradedFreeModule m1(r), m2(r), m0(r);
    m0.add_generator("comp0", r.zero());
    m1.add_generator("vx", r.variable(0));
    m1.add_generator("vy", r.variable(1));
    m2.add_generator("e", r.parse_monomial("x*y"));

    GradedMatrix d1(m0, m1);
    d1.set_entry(0, 0, Polynomial::monomial(r.variable(0)));
    d1.set_entry(0, 1, Polynomial::monomial(r.variable(1)));
    GradedMatrix d2(m1, m2);
    d2.set_entry(0, 0, -Polynomial::monomial(r.variable(1)));
    d2.set_entry(1, 0, Polynomial::monomial(r.variable(0)));

    // Koszul: [x y]·[-y, x]^T = 0.
    CHECK(matrix_compose(d1, d2).is_zero());
    CHECK(matrix_compose(d1, GradedMatrix::identity(m1)) == d1);
    CHECK_THROWS_AS(matrix_compose(d2, d1), DimensionError);
    CHECK(d1.is_homogeneous(r.zero()));
    CHECK(d2.is_homogeneous(r.zero()));
}

TEST_CASE("graded_solve returns zero for zero rhs and lifts multiplication maps") {
    Ring r = Ring({"x", "y", "z"});
    // Koszul complex of (x,y,z), degree-1 part.
    GradedFreeModule f0(r), f1(r);
    f0.add_generator("comp0", r.zero());
    for (int i = 0; i < 3; ++i) f1.add_generator("v" + std::to_string(i), r.variable(i));
    GradedMatrix d1(f0, f1);
    for (int i = 0; i < 3; ++i) d1.set_entry(0, i, Polynomial::monomial(r.variable(i)));

    // Minimal resolution of (x,y,z)^2, degree-0/1 data.
    GradedFreeModule g0(r), g1(r);
    g0.add_generator("comp0", r.zero());
    const char* sq[] = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
    for (int i = 0; i < 6; ++i) g1.add_generator(sq[i], r.parse_monomial(sq[i]));
    GradedMatrix e1(g0, g1);
    for (int i = 0; i < 6; ++i) e1.set_entry(0, i, Polynomial::monomial(r.parse_monomial(sq[i])));

    // f0 = multiplication by z: solve e1 * H = z * d1 with shift z.
    GradedMatrix rhs(g0, f1);
    for (int i = 0; i < 3; ++i)
        rhs.set_entry(0, i, Polynomial::monomial(add_exp(r.variable(i), r.variable(2))));
    auto h = graded_solve_left(e1, rhs, r.variable(2));
    REQUIRE(h.has_value());
    CHECK(matrix_compose(e1, *h) == rhs);
    // The lift lands on the xz, yz, z^2 rows with unit coefficients.
    for (int i = 0; i < 3; ++i) {
        const Polynomial& p = h->entry(static_cast<std::size_t>(3 + i), static_cast<std::size_t>(i));
        CHECK(p.is_single_term());
        CHECK(p.sole_coefficient() == 1);
        CHECK(is_zero_exp(p.sole_exponent()));
    }

    // Zero rhs: canonical solution is the zero matrix.
    auto h0 = graded_solve_left(e1, GradedMatrix::zero(g0, f1), r.zero());
    REQUIRE(h0.has_value());
    CHECK(h0->is_zero());
}

TEST_CASE("graded_solve reports absence on the incompatible square") {
    Ring r = Ring({"x", "y"});
    // d2 of the Koszul complex of (x,y): [-y, x]^T; target complex edge map
    // [-1, 1]^T. Four vertex-level candidates; none admits an edge map.
    GradedFreeModule f1(r), f2(r), g1(r), g2(r);
    f1.add_generator("vx", r.variable(0));
    f1.add_generator("vy", r.variable(1));
    f2.add_generator("e", r.parse_monomial("x*y"));
    g1.add_generator("w1", r.parse_monomial("x*y"));
    g1.add_generator("w2", r.parse_monomial("x*y"));
    g2.add_generator("e'", r.parse_monomial("x*y"));
    GradedMatrix d2(f1, f2);
    d2.set_entry(0, 0, -Polynomial::monomial(r.variable(1)));
    d2.set_entry(1, 0, Polynomial::monomial(r.variable(0)));
    GradedMatrix e2(g1, g2);
    e2.set_entry(0, 0, Polynomial::constant(rational_of(-1), 2));
    e2.set_entry(1, 0, Polynomial::constant(rational_of(1), 2));

    int candidates[4][2][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}, {{1, 1}, {0, 0}}};
    for (auto& m : candidates) {
        GradedMatrix f(g1, f1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[i][j]) f.set_entry(i, j, Polynomial::constant(rational_of(m[i][j]), 2));
        GradedMatrix rhs = matrix_compose(f, d2);
        // Unconstrained polynomial unknown (candidates from the rhs).
        MatrixProblem prob;
        MatrixUnknown u;
        u.target = g2;
        u.source = f2;
        u.mode = MatrixUnknown::Mode::FromRhs;
        auto j = prob.add_unknown(std::move(u));
        prob.add_equation({{LinearTerm{e2, j, std::nullopt, Rational(1)}}, rhs});
        CHECK_FALSE(prob.solve().has_value());
    }
}

TEST_CASE("joint systems solve for planted homotopies") {
    // Plant h with d*h = f on a two-step complex and recover it.
    Ring r = Ring({"x", "y"});
    GradedFreeModule m0(r), m1(r);
    m0.add_generator("comp0", r.zero());
    m1.add_generator("vx", r.variable(0));
    m1.add_generator("vy", r.variable(1));
    GradedMatrix d1(m0, m1);
    d1.set_entry(0, 0, Polynomial::monomial(r.variable(0)));
    d1.set_entry(0, 1, Polynomial::monomial(r.variable(1)));

    GradedMatrix h(m1, m0);
    h.set_entry(0, 0, Polynomial::monomial(r.variable(0)));
    GradedMatrix f = matrix_compose(d1, h);

    // h has uniform degree shift x^2 (source degree 0, target degree x).
    Exponent shift = add_exp(r.variable(0), r.variable(0));
    auto sol = graded_solve_left(d1, f, shift);
    REQUIRE(sol.has_value());
    CHECK(matrix_compose(d1, *sol) == f);
}
