#pragma once

#include "pfol/parse.hpp"
#include "pfol/poly.hpp"

#include <random>
#include <string>

namespace pfol::test {

inline SparsePoly P(const std::string& text, const Ring& ring = Ring::integers(), int nvars = 2) {
    return parse_poly(text, ring, nvars);
}

inline Ring F2() { return Ring::prime_field(2); }
inline Ring F3() { return Ring::prime_field(3); }

// Random polynomial in two variables with total degree <= max_degree.
// Over Z the coefficients are drawn from [-3, 3].
inline SparsePoly random_poly(std::mt19937_64& rng, const Ring& ring, int max_degree, int max_terms = 6,
                              int nvars = 2) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> count(1, max_terms);
    const std::uint64_t q = ring.is_field() ? ring.order() : 7;
    std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
    SparsePoly out(ring, nvars);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m{};
        int budget = deg(rng);
        for (int v = 0; v < nvars && budget > 0; ++v) {
            std::uniform_int_distribution<int> take(0, budget);
            const int e = (v == nvars - 1) ? budget : take(rng);
            m[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
            budget -= e;
        }
        Integer c = ring.is_field() ? Integer(coef(rng)) : Integer(static_cast<long long>(coef(rng)) - 3);
        out += SparsePoly::monomial(ring, m, c, nvars);
    }
    return out;
}

inline SparsePoly random_nonzero(std::mt19937_64& rng, const Ring& ring, int max_degree, int max_terms = 6) {
    for (;;) {
        SparsePoly f = random_poly(rng, ring, max_degree, max_terms);
        if (!f.is_zero()) return f;
    }
}

inline SparsePoly random_nonconstant(std::mt19937_64& rng, const Ring& ring, int max_degree, int max_terms = 6) {
    for (;;) {
        SparsePoly f = random_poly(rng, ring, max_degree, max_terms);
        if (!f.is_zero() && !f.is_constant()) return f;
    }
}

}  // namespace pfol::test
