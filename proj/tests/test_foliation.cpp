#include "doctest.h"
#include "support.hpp"

#include "pfol/algebra.hpp"
#include "pfol/families.hpp"
#include "pfol/foliation.hpp"

using namespace pfol;
using pfol::test::F2;
using pfol::test::F3;
using pfol::test::P;

namespace {

PlaneVectorField field(const std::string& A, const std::string& B, const Ring& ring) {
    return PlaneVectorField(P(A, ring), P(B, ring));
}

PlaneVectorField j3_mod2() { return field("x*y^3 + 1", "x^3 + y^4", F2()); }

}  // namespace

TEST_CASE("vector field construction") {
    CHECK_THROWS_AS(field("0", "0", F2()), std::invalid_argument);
    CHECK_THROWS_AS(PlaneVectorField(P("x", F2()), P("y", F3())), std::invalid_argument);
    CHECK(field("x*y^3 - 1", "-(x^3 - y^4)", Ring::integers()).over(F2()) == j3_mod2());
    CHECK_THROWS_AS(field("2*x", "2", Ring::integers()).over(F2()), std::invalid_argument);
}

TEST_CASE("derive") {
    CHECK(derive(field("y", "x", F2()), P("x*y", F2())) == P("x^2 + y^2", F2()));
    CHECK(derive(j3_mod2(), P("x", F2())) == P("x*y^3 + 1", F2()));
    CHECK(derive(j3_mod2(), P("1", F2())).is_zero());
    CHECK_THROWS_AS(derive(j3_mod2(), P("x", F3())), std::invalid_argument);
}

TEST_CASE("p-th power examples") {
    const auto v2 = p_power(field("y", "x", F2()), 2);
    CHECK(v2.x_component == P("x", F2()));
    CHECK(v2.y_component == P("y", F2()));

    const auto j = p_power(j3_mod2(), 2);
    CHECK(j.x_component == P("x^4*y^2 + y^3", F2()));
    CHECK(j.y_component == P("x^3*y^3 + x^2", F2()));

    const auto d = p_power(field("1", "0", F2()), 2);
    CHECK(d.x_component.is_zero());
    CHECK(d.y_component.is_zero());

    CHECK_THROWS_AS(p_power(j3_mod2(), 3), std::invalid_argument);
    CHECK_THROWS_AS(p_power(field("y", "x", Ring::integers()), 2), std::invalid_argument);
}

TEST_CASE("J3 square by hand") {
    // v(x) = A, v(A) = A*A_x + B*A_y = (xy^3+1)y^3 + (x^3+y^4)(3xy^2)
    const SparsePoly A = P("x*y^3 + 1", F2());
    const SparsePoly B = P("x^3 + y^4", F2());
    const SparsePoly vA = A * P("y^3", F2()) + B * P("x*y^2", F2());
    const SparsePoly vB = A * P("x^2", F2());  // B_x = 3x^2 = x^2, B_y = 4y^3 = 0
    CHECK(vA == P("x^4*y^2 + y^3", F2()));
    CHECK(vB == P("x^3*y^3 + x^2", F2()));
}

TEST_CASE("wedge") {
    const auto v = j3_mod2();
    CHECK(wedge(v, v).is_zero());
    CHECK(wedge(field("y", "x", F2()), field("x", "y", F2())) == P("x^2 + y^2", F2()));
    CHECK(wedge(field("1", "0", F2()), field("0", "1", F2())) == P("1", F2()));
}

TEST_CASE("p-divisor") {
    const auto j = p_divisor(j3_mod2());
    CHECK(j.f == P("x^7*y^2 + x^3*y^3 + y^7 + x^2", F2()));
    CHECK_FALSE(j.p_closed);
    CHECK(j.affine_degree == 9);
    CHECK(j.expected_projective_degree == 2 * (3 - 1) + 3 + 2);
    CHECK(j.z_multiplicity == 0);
    CHECK(j.degree.foliation_degree == 3);
    CHECK(j.components.empty());

    const auto dx = p_divisor(field("1", "0", F2()));
    CHECK(dx.p_closed);
    CHECK(dx.f.is_zero());

    // Claudia d = 3: y^12 (y^14 + B y^7 + B^2), B = x + y^2 + y^7 + y^12
    const auto c = p_divisor(field("y^13", "x + y^2 + y^7 + y^12", F2()));
    const SparsePoly B = P("x + y^2 + y^7 + y^12", F2());
    const SparsePoly g = P("y^14", F2()) + B * P("y^7", F2()) + B * B;
    CHECK(c.f == P("y^12", F2()) * g);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].factor == P("y", F2()));
    CHECK(c.components[0].multiplicity == 12);
    CHECK(c.cofactor == g);

    CHECK_THROWS(p_divisor(field("y", "x", Ring::integers())));
}

TEST_CASE("p-closedness") {
    CHECK(is_p_closed(field("1", "0", F2())));
    CHECK_FALSE(is_p_closed(j3_mod2()));
    CHECK(is_p_closed(field("x", "y", F2())));
    const auto r = p_power(field("x", "y", F2()), 2);
    CHECK(r.x_component == P("x", F2()));
    CHECK(r.y_component == P("y", F2()));
}

TEST_CASE("invariant curves") {
    CHECK(is_invariant_curve(field("x", "y", F2()), P("x", F2())));
    CHECK_FALSE(is_invariant_curve(field("y^13", "x + y^2 + y^7 + y^12", F2()), P("y", F2())));
    CHECK(is_invariant_curve(j3_mod2(), P("x^7*y^2 + x^3*y^3 + y^7 + x^2", F2())));
    CHECK_THROWS_AS(is_invariant_curve(j3_mod2(), P("1", F2())), std::invalid_argument);
    // products of invariant curves are invariant
    const auto v = field("x", "2*y", Ring::integers());
    CHECK(is_invariant_curve(v, P("x")));
    CHECK(is_invariant_curve(v, P("y")));
    CHECK(is_invariant_curve(v, P("x*y")));
    CHECK(is_invariant_curve(v, P("x^2 - y")));
    CHECK(is_invariant_curve(v, P("x*y*(x^2 - y)")));
    CHECK_FALSE(is_invariant_curve(v, P("x + y")));
}

TEST_CASE("degree and line at infinity") {
    for (long long d : {1, 2, 3, 5, 7}) {
        const auto rep = degree_and_linf(make_field(FamilySpec::jouanolou(d)));
        CHECK(rep.top_degree == d + 1);
        CHECK(rep.foliation_degree == d);
        CHECK_FALSE(rep.line_at_infinity_invariant);
        CHECK(rep.witness.is_zero());
    }
    for (long long e : {6, 7, 8}) {
        const auto rep = degree_and_linf(make_field(FamilySpec::family_f(e, 1, 1, 1)));
        CHECK(rep.foliation_degree == e + 1);
        CHECK(rep.line_at_infinity_invariant);
        CHECK_FALSE(rep.witness.is_zero());
    }
    for (long long d : {5, 7}) {
        const auto rep = degree_and_linf(make_field(FamilySpec::family_g(d, 1, 1, 1, 1)));
        CHECK(rep.foliation_degree == d);
        CHECK_FALSE(rep.line_at_infinity_invariant);
    }
    // Claudia: top part y^{f(d)} d/dx is not radial
    const auto rep = degree_and_linf(make_field(FamilySpec::claudia(3, 1, 1, 1)));
    CHECK(rep.foliation_degree == 13);
    CHECK(rep.line_at_infinity_invariant);
}

TEST_CASE("first-jet dicriticality") {
    const auto radial = first_jet_dicritical_at(field("x", "y", F2()), FieldPoint{F2(), 0, 0});
    CHECK(radial.dicritical);
    CHECK(radial.order == 1);
    CHECK(radial.witness.is_zero());

    const auto claudia = first_jet_dicritical_at(field("y^13", "x + y^2 + y^7 + y^12", F2()), FieldPoint{F2(), 0, 0});
    CHECK_FALSE(claudia.dicritical);
    CHECK(claudia.order == 1);
    CHECK(claudia.witness == P("x^2", F2()));

    const auto hyp = first_jet_dicritical_at(field("y", "x", Ring::integers()), RationalPoint{0, 0});
    CHECK_FALSE(hyp.dicritical);
    CHECK(hyp.witness == P("x^2 - y^2"));

    CHECK_THROWS_AS(first_jet_dicritical_at(j3_mod2(), FieldPoint{F2(), 0, 0}), NotSingular);
    // J3 is singular at (1, 1) over F2
    CHECK_NOTHROW(first_jet_dicritical_at(j3_mod2(), FieldPoint{F2(), 1, 1}));
    // a radial point away from the origin over Q
    const auto shifted = first_jet_dicritical_at(field("x - 1", "y + 2", Ring::integers()), RationalPoint{1, -2});
    CHECK(shifted.dicritical);
    const auto half = first_jet_dicritical_at(field("2*x - 1", "2*y - 1", Ring::integers()),
                                              RationalPoint{Rational(1, 2), Rational(1, 2)});
    CHECK(half.dicritical);
}

TEST_CASE("singular points") {
    const auto j = singular_points_over(j3_mod2(), 1);
    REQUIRE(j.size() == 1);
    CHECK(j[0] == FieldPoint{F2(), 1, 1});
    const auto r = singular_points_over(field("x", "y", F2()), 1);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == FieldPoint{F2(), 0, 0});
    CHECK(singular_points_over(field("1", "0", F2()), 2).empty());

    // brute-force oracle over F16: every returned point is a zero and none is missed
    const Ring F16 = Ring::extension_field(2, 4);
    const auto pts = singular_points_over(j3_mod2(), 4);
    const SparsePoly A = change_ring(j3_mod2().A(), F16);
    const SparsePoly B = change_ring(j3_mod2().B(), F16);
    std::size_t count = 0;
    for (const auto& x : F16.elements())
        for (const auto& y : F16.elements()) count += (evaluate(A, {x, y}) == 0 && evaluate(B, {x, y}) == 0);
    CHECK(pts.size() == count);
    for (const auto& pt : pts) {
        CHECK(evaluate(A, {pt.x, pt.y}) == 0);
        CHECK(evaluate(B, {pt.x, pt.y}) == 0);
    }
}

TEST_CASE("good reduction") {
    for (long long d : {3, 5, 7}) CHECK(good_reduction_at(make_field(FamilySpec::jouanolou(d)), 2).good);
    const auto bad = good_reduction_at(field("x + 2*x^3", "y + 2*y^3", Ring::integers()), 2);
    CHECK_FALSE(bad.good);
    CHECK_FALSE(bad.reason.empty());
    CHECK_FALSE(good_reduction_at(field("2*x^2 + y", "x", Ring::integers()), 2).good);
    // common factor modulo 3
    CHECK_FALSE(good_reduction_at(field("x*y + 3*y^2", "x^2", Ring::integers()), 3).good);
    CHECK_THROWS_AS(good_reduction_at(field("2*x", "4*y", Ring::integers()), 2), std::invalid_argument);
    CHECK_THROWS_AS(good_reduction_at(j3_mod2(), 2), std::invalid_argument);
}

TEST_CASE("degree bookkeeping is reported, never dropped") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const SparsePoly A = test::random_poly(rng, F2(), 4);
        const SparsePoly B = test::random_poly(rng, F2(), 4);
        if (A.is_zero() && B.is_zero()) continue;
        const auto res = p_divisor(PlaneVectorField(A, B));
        if (res.p_closed) continue;
        ++checked;
        const long long d = res.degree.foliation_degree;
        CHECK(res.expected_projective_degree == 2 * (d - 1) + d + 2);
        CHECK(res.z_multiplicity == res.expected_projective_degree - res.affine_degree);
        CHECK(res.degree_consistent == (res.z_multiplicity >= 0));
        SparsePoly prod = res.cofactor;
        for (const auto& c : res.components) prod *= pow(c.factor, c.multiplicity);
        CHECK(prod == res.f);
    }
    CHECK(checked > 50);
}
