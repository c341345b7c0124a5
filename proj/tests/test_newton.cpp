#include "doctest.h"
#include "support.hpp"

#include "pfol/algebra.hpp"
#include "pfol/newton.hpp"

#include <set>

using namespace pfol;
using pfol::test::F2;
using pfol::test::P;

namespace {

using Pts = std::vector<LatticePoint>;

LatticePolytope H(Pts pts) { return LatticePolytope::hull(std::move(pts)); }

// Proper nonempty zero-sum sub-multiset by plain subset enumeration.
bool decomposable_by_enumeration(const LatticePolytope& P) {
    std::vector<LatticePoint> steps;
    for (const auto& e : P.edges())
        for (long long i = 0; i < e.multiplicity; ++i) steps.push_back(e.direction);
    REQUIRE(steps.size() <= 20);
    const std::uint32_t n = static_cast<std::uint32_t>(steps.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        LatticePoint s{};
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1u) s = s + steps[i];
        if (s == LatticePoint{}) return true;
    }
    return false;
}

LatticePoint edge_sum(const LatticePolytope& P) {
    LatticePoint s{};
    for (const auto& e : P.edges()) s = s + LatticePoint{e.direction.x * e.multiplicity, e.direction.y * e.multiplicity};
    return s;
}

std::vector<Monomial> monomials_up_to(int degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= degree; ++d)
        for (int i = 0; i <= d; ++i) {
            Monomial m{};
            m[0] = static_cast<std::uint32_t>(i);
            m[1] = static_cast<std::uint32_t>(d - i);
            out.push_back(m);
        }
    return out;
}

SparsePoly from_mask(const std::vector<Monomial>& basis, std::uint32_t mask) {
    SparsePoly f(F2());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (mask >> i & 1u) f += SparsePoly::monomial(F2(), basis[i], 1);
    return f;
}

}  // namespace

TEST_CASE("newton polytope examples") {
    const auto j = newton_polytope(P("x^7*y^2 + x^3*y^3 + y^7 + x^2", F2()));
    CHECK(j.vertices() == Pts{{0, 7}, {2, 0}, {7, 2}});

    const auto g = newton_polytope(P("x^9*y^4 + x^5*y^10 + x^4*y^5 + x^3*y^4 + x*y^10 + x*y^5 + x*y^4 + y^11 + y^5 + 1", F2()));
    CHECK(g.vertices() == Pts{{0, 0}, {9, 4}, {5, 10}, {0, 11}});

    const auto pt = newton_polytope(P("x^3*y"));
    CHECK(pt.is_point());
    CHECK(pt.vertices() == Pts{{3, 1}});

    const auto seg = newton_polytope(P("x^2 + y^4"));
    CHECK(seg.is_segment());
    CHECK(seg.vertices() == Pts{{0, 4}, {2, 0}});

    CHECK_THROWS_AS(newton_polytope(P("0")), std::invalid_argument);
    CHECK_THROWS_AS(newton_polytope(P("x + z", Ring::integers(), 3)), std::invalid_argument);
}

TEST_CASE("hull drops collinear points") {
    const auto sq = H({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 1}, {0, 2}, {1, 2}});
    CHECK(sq.vertices() == Pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(H({{1, 1}, {1, 1}}).is_point());
    CHECK(H({{0, 0}, {1, 1}, {3, 3}}).vertices() == Pts{{0, 0}, {3, 3}});
}

TEST_CASE("primitive edge vectors") {
    const auto tri = primitive_edge_vectors(H({{2, 0}, {7, 2}, {0, 7}}));
    CHECK(tri == std::vector<EdgeStep>{{{2, -7}, 1}, {{5, 2}, 1}, {{-7, 5}, 1}});

    const auto seg = primitive_edge_vectors(H({{0, 0}, {0, 2}}));
    CHECK(seg == std::vector<EdgeStep>{{{0, 1}, 2}, {{0, -1}, 2}});

    const auto sq = primitive_edge_vectors(H({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(sq == std::vector<EdgeStep>{{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}});

    CHECK_THROWS_AS(primitive_edge_vectors(H({{1, 1}})), std::invalid_argument);
}

TEST_CASE("indecomposability examples") {
    CHECK(is_indecomposable(H({{2, 0}, {7, 2}, {0, 7}})));
    CHECK_FALSE(is_indecomposable(H({{0, 0}, {2, 0}, {2, 2}, {0, 2}})));
    CHECK(is_indecomposable(H({{0, 0}, {1, 0}})));
    CHECK_FALSE(is_indecomposable(H({{0, 0}, {0, 2}})));
    CHECK_FALSE(is_indecomposable(H({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
    CHECK(is_indecomposable(H({{0, 0}, {1, 0}, {0, 1}})));
    CHECK_FALSE(is_indecomposable(H({{0, 0}, {2, 0}, {0, 2}})));
    CHECK_THROWS_AS(is_indecomposable(H({{0, 0}})), std::invalid_argument);
}

TEST_CASE("figure vertices") {
    const SparsePoly g5 = P("x^9*y^4 + x^5*y^10 + x^4*y^5 + x^3*y^4 + x*y^10 + x*y^5 + x*y^4 + y^11 + y^5 + 1", F2());
    CHECK(verify_polytope_figure({{0, 0}, {0, 11}, {5, 10}, {9, 4}}, g5));
    CHECK_FALSE(verify_polytope_figure({{0, 0}, {0, 11}, {5, 10}}, g5));
    const SparsePoly f6 = P("x^12*y^2 + x^9*y^5 + x^8 + x^4*y^11 + x^3*y^6 + y^4", F2());
    CHECK(verify_polytope_figure({{0, 4}, {4, 11}, {12, 2}, {8, 0}}, f6));
    const SparsePoly f7 = P("x^15*y^8 + x^11*y^12 + x^9 + x^8*y^9 + x^7*y^3 + y^4", F2());
    CHECK(verify_polytope_figure({{0, 4}, {11, 12}, {15, 8}, {9, 0}}, f7));
    for (const SparsePoly* f : {&g5, &f6, &f7}) CHECK(is_indecomposable(newton_polytope(*f)));
}

TEST_CASE("Minkowski sums") {
    CHECK(minkowski_sum(H({{0, 0}, {1, 0}}), H({{0, 0}, {0, 1}})) == H({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    const auto tri = H({{2, 0}, {7, 2}, {0, 7}});
    CHECK(minkowski_sum(tri, H({{3, -1}})) == H({{5, -1}, {10, 1}, {3, 6}}));
    CHECK(minkowski_sum(newton_polytope(P("x + 1")), newton_polytope(P("y + 1"))) ==
          newton_polytope(P("x*y + x + y + 1")));
}

TEST_CASE("certify examples") {
    const SparsePoly j = P("x^7*y^2 + x^3*y^3 + y^7 + x^2", F2());
    const auto poly = certify_irreducible(j, {Backend::polytope});
    CHECK(poly.status == VerdictStatus::irreducible_by_polytope);
    const auto fs = certify_irreducible(j, {Backend::factor_search, 4});
    CHECK(fs.status == VerdictStatus::irreducible_by_factor_search);
    CHECK(fs.search_bound == 4);
    const auto both = certify_irreducible(j, {Backend::both, 4});
    CHECK(both.status == VerdictStatus::irreducible_by_polytope);
    CHECK(both.factor_search_status == VerdictStatus::irreducible_by_factor_search);

    const auto red = certify_irreducible(P("x^2 + y^2", F2()), {Backend::factor_search, 4});
    CHECK(red.status == VerdictStatus::reducible);
    REQUIRE(red.witness);
    CHECK(*red.witness == P("x + y", F2()));
    CHECK(certify_irreducible(P("x^2 + y^2", F2())).status == VerdictStatus::reducible);

    // monomial content is stripped and reported
    const auto m = certify_irreducible(P("x^3*y + x^2*y^2 + x^2", F2()), {Backend::polytope});
    CHECK(m.stripped_monomial[0] == 2);
    CHECK(m.stripped_monomial[1] == 0);
    CHECK(m.status == VerdictStatus::reducible);
    CHECK(m.cofactor == P("x*y + y^2 + 1", F2()));
    CHECK(certify_irreducible(P("x", F2())).irreducible());

    CHECK_THROWS_AS(certify_irreducible(P("1", F2())), std::invalid_argument);
    CHECK_THROWS_AS(certify_irreducible(P("x^2 + y^3"), {Backend::factor_search}), std::invalid_argument);
    CHECK(certify_irreducible(P("x^2 + y^3"), {Backend::polytope}).status == VerdictStatus::irreducible_by_polytope);
}

TEST_CASE("bounded factor search is inconclusive") {
    // (x^3 + y^2 + 1)(x^3*y + y + 1) only has factors of degree >= 3
    const SparsePoly f = P("(x^3 + y^2 + 1)*(x^3*y + y + 1)", F2());
    const auto v = certify_irreducible(f, {Backend::factor_search, 2});
    CHECK(v.status == VerdictStatus::inconclusive);
    CHECK(v.search_bound == 2);
    const auto w = certify_irreducible(f, {Backend::factor_search, 4});
    CHECK(w.status == VerdictStatus::reducible);
    REQUIRE(w.witness);
    CHECK(exact_div(f, *w.witness).has_value());
}

TEST_CASE("quadratic backend decides absolute reducibility in v") {
    // (y + x)(y + x + 1) over F2 is visible over F2
    const auto a = certify_irreducible(P("y^2 + y + x^2 + x", F2()), {Backend::quadratic});
    CHECK(a.status == VerdictStatus::reducible);
    // y^2 + x*y + x^2 splits over F4 as (y + a x)(y + a^2 x)
    const auto b = certify_irreducible(P("y^2 + x*y + x^2", F2()), {Backend::quadratic});
    CHECK(b.status == VerdictStatus::reducible);
    REQUIRE(b.witness);
    CHECK(b.witness->ring() == Ring::from_tag("F4"));
    // y^2 + x is absolutely irreducible
    const auto c = certify_irreducible(P("y^2 + x^3 + x*y + 1", F2()), {Backend::quadratic});
    CHECK(c.status == VerdictStatus::irreducible_by_quadratic_roots);
    CHECK_THROWS_AS(certify_irreducible(P("y^2 + x", test::F3()), {Backend::quadratic}), std::invalid_argument);
}

TEST_CASE("zero-sum search agrees with subset enumeration") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coord(0, 6);
    std::uniform_int_distribution<int> count(2, 7);
    int tested = 0;
    for (int i = 0; i < 400; ++i) {
        Pts pts;
        const int n = count(rng);
        for (int k = 0; k < n; ++k) pts.push_back({coord(rng), coord(rng)});
        const auto poly = H(pts);
        if (poly.is_point()) continue;
        std::size_t steps = 0;
        for (const auto& e : poly.edges()) steps += static_cast<std::size_t>(e.multiplicity);
        if (steps > 20) continue;
        ++tested;
        CHECK(edge_sum(poly) == LatticePoint{});
        CHECK(is_indecomposable(poly) == !decomposable_by_enumeration(poly));
    }
    CHECK(tested >= 100);
}

TEST_CASE("Ostrowski and decomposability of products") {
    std::mt19937_64 rng(43);
    int products = 0;
    for (int i = 0; i < 400; ++i) {
        const SparsePoly f = test::random_nonzero(rng, F2(), 5);
        const SparsePoly g = test::random_nonzero(rng, F2(), 5);
        CHECK(newton_polytope(f * g) == minkowski_sum(newton_polytope(f), newton_polytope(g)));

        const SparsePoly fs = monomial_content(f).cofactor;
        const SparsePoly gs = monomial_content(g).cofactor;
        if (fs.size() < 2 || gs.size() < 2) continue;
        ++products;
        CHECK_FALSE(is_indecomposable(newton_polytope(fs * gs)));
    }
    CHECK(products >= 100);
}

TEST_CASE("certification is sound on products") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 120; ++i) {
        const SparsePoly f = test::random_nonconstant(rng, F2(), 3, 4);
        const SparsePoly g = test::random_nonconstant(rng, F2(), 3, 4);
        for (Backend b : {Backend::polytope, Backend::factor_search, Backend::automatic}) {
            const auto v = certify_irreducible(f * g, {b, 3});
            CHECK_FALSE(v.irreducible());
            if (v.status == VerdictStatus::reducible) {
                REQUIRE(v.witness);
                CHECK(exact_div(change_ring(f * g, v.witness->ring()), *v.witness).has_value());
            }
        }
    }
}

TEST_CASE("factor search of bound 2 is complete in degree <= 4") {
    // brute force: every product of two nonconstant polynomials of total degree <= 4
    const auto basis2 = monomials_up_to(2);
    const auto basis3 = monomials_up_to(3);
    const auto basis4 = monomials_up_to(4);
    std::set<std::string> reducible;
    std::vector<SparsePoly> small, medium;
    for (std::uint32_t m = 0; m < (1u << basis2.size()); ++m) small.push_back(from_mask(basis2, m));
    for (std::uint32_t m = 0; m < (1u << basis3.size()); ++m) medium.push_back(from_mask(basis3, m));
    for (const auto& g : small) {
        if (g.is_zero() || g.is_constant()) continue;
        for (const auto& h : medium) {
            if (h.is_zero() || h.is_constant()) continue;
            if (g.total_degree().value() + h.total_degree().value() > 4) continue;
            reducible.insert((g * h).str());
        }
    }
    int disagreements = 0;
    for (std::uint32_t m = 0; m < (1u << basis4.size()); ++m) {
        const SparsePoly f = from_mask(basis4, m);
        if (f.is_zero() || f.is_constant()) continue;
        const auto v = certify_irreducible(f, {Backend::factor_search, 2});
        const bool oracle = reducible.count(f.str()) > 0;
        if (oracle != (v.status == VerdictStatus::reducible) || v.status == VerdictStatus::inconclusive) ++disagreements;
    }
    CHECK(disagreements == 0);
}
