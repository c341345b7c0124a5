#include "doctest.h"

#include "pfol/ring.hpp"

#include <random>

using pfol::Integer;
using pfol::Ring;

TEST_CASE("prime field arithmetic") {
    const Ring f7 = Ring::prime_field(7);
    CHECK(f7.add(5, 4) == 2);
    CHECK(f7.sub(2, 5) == 4);
    CHECK(f7.neg(3) == 4);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.pow(3, 6) == 1);
    CHECK(f7.from_integer(-1) == 6);
    CHECK(f7.from_integer(Integer(1) << 100) == f7.pow(2, 100));
    CHECK_THROWS_AS(f7.inv(0), std::domain_error);
}

TEST_CASE("integers") {
    const Ring z = Ring::integers();
    CHECK(z.is_integers());
    CHECK(z.characteristic() == 0);
    Integer q;
    CHECK(z.divide(12, -4, q));
    CHECK(q == -3);
    CHECK_FALSE(z.divide(7, 2, q));
    CHECK(z.tag() == "Z");
}

TEST_CASE("ring tags") {
    CHECK(Ring::from_tag("F2") == Ring::prime_field(2));
    CHECK(Ring::from_tag("F9") == Ring::extension_field(3, 2));
    CHECK(Ring::from_tag("F16").order() == 16);
    CHECK(Ring::from_tag("F16").extension_degree() == 4);
    CHECK(Ring::from_tag("Z").is_integers());
    CHECK_THROWS_AS(Ring::from_tag("F6"), std::invalid_argument);
    CHECK_THROWS_AS(Ring::from_tag("Q"), std::invalid_argument);
    CHECK_THROWS(Ring::prime_field(4));
}

TEST_CASE("tabled moduli are irreducible") {
    for (std::uint64_t p : {2u, 3u}) {
        CHECK(pfol::tabled_modulus(p, 5).empty());
        for (int k = 2; k <= 4; ++k) {
            const auto mod = pfol::tabled_modulus(p, k);
            CHECK(mod.size() == static_cast<std::size_t>(k + 1));
            CHECK(pfol::is_irreducible_mod_p(mod, p));
        }
    }
    CHECK_FALSE(pfol::is_irreducible_mod_p({1, 0, 1}, 2));  // 1 + a^2 = (1 + a)^2
    CHECK(pfol::is_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_THROWS(Ring::extension_field(2, {1, 0, 1}));
}

TEST_CASE("extension fields satisfy the field axioms") {
    for (const char* tag : {"F4", "F8", "F16", "F9", "F27", "F81"}) {
        const Ring k = Ring::from_tag(tag);
        const auto elems = k.elements();
        CHECK(elems.size() == k.order());
        // multiplicative group is cyclic of order q - 1
        for (const auto& a : elems) {
            if (a == 0) continue;
            CHECK(k.pow(a, k.order() - 1) == 1);
            CHECK(k.mul(a, k.inv(a)) == 1);
        }
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int i = 0; i < 200; ++i) {
            const Integer a = elems[pick(rng)], b = elems[pick(rng)], c = elems[pick(rng)];
            CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
            CHECK(k.add(a, b) == k.add(b, a));
            // Frobenius is additive
            const auto p = k.characteristic();
            CHECK(k.pow(k.add(a, b), p) == k.add(k.pow(a, p), k.pow(b, p)));
            CHECK(k.pow(k.frobenius_root(a), p) == a);
        }
    }
}

TEST_CASE("prime field codes embed in extensions") {
    const Ring f8 = Ring::extension_field(2, 3);
    CHECK(Ring::prime_field(2).embeds_into(f8));
    CHECK_FALSE(Ring::prime_field(3).embeds_into(f8));
    CHECK(f8.prime_subfield() == Ring::prime_field(2));
    // the generator satisfies the tabled modulus
    const auto mod = pfol::tabled_modulus(2, 3);
    Integer acc = 0;
    for (std::size_t i = 0; i < mod.size(); ++i) acc = f8.add(acc, f8.mul(mod[i], f8.pow(f8.generator(), i)));
    CHECK(acc == 0);
}
