#include "pfol/algebra.hpp"

#include <algorithm>

namespace pfol {

std::optional<SparsePoly> exact_div(const SparsePoly& f, const SparsePoly& g) {
    require_compatible(f, g);
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Ring& R = f.ring();
    if (f.is_zero()) return SparsePoly(R, f.nvars());

    // graded-lex is a monomial order, so both extreme monomials must divide
    const Term& lg = g.leading_term();
    if (!divides(lg.exponent, f.leading_term().exponent)) return std::nullopt;
    if (!divides(g.trailing_term().exponent, f.trailing_term().exponent)) return std::nullopt;

    std::vector<Term> quotient;
    SparsePoly rem = f;
    while (!rem.is_zero()) {
        const Term& lr = rem.leading_term();
        if (!divides(lg.exponent, lr.exponent)) return std::nullopt;
        Term q;
        for (int v = 0; v < kMaxVars; ++v) q.exponent[v] = lr.exponent[v] - lg.exponent[v];
        if (!R.divide(lr.coeff, lg.coeff, q.coeff)) return std::nullopt;
        rem -= g.times_term(q.exponent, q.coeff);
        quotient.push_back(std::move(q));
    }
    SparsePoly out = SparsePoly::from_terms(R, f.nvars(), std::move(quotient));
    if (out * g != f) return std::nullopt;
    return out;
}

namespace {

int main_variable(const SparsePoly& f, const SparsePoly& g) {
    for (int v = f.nvars() - 1; v >= 0; --v) {
        if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
    }
    return -1;
}

// Coefficients of f viewed as a univariate polynomial in `var`.
std::vector<SparsePoly> coefficients_in(const SparsePoly& f, int var) {
    long long d = std::max<long long>(f.degree_in(var), 0);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : f.terms()) {
        Term s = t;
        s.exponent[var] = 0;
        buckets[t.exponent[var]].push_back(std::move(s));
    }
    std::vector<SparsePoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(SparsePoly::from_terms(f.ring(), f.nvars(), std::move(b)));
    return out;
}

SparsePoly leading_coefficient_in(const SparsePoly& f, int var) {
    return coefficients_in(f, var).back();
}

SparsePoly normalize_gcd(const SparsePoly& f) { return f.monic(); }

SparsePoly gcd_rec(const SparsePoly& f, const SparsePoly& g);

SparsePoly content_in(const SparsePoly& f, int var) {
    SparsePoly c(f.ring(), f.nvars());
    for (const auto& coeff : coefficients_in(f, var)) {
        if (coeff.is_zero()) continue;
        c = gcd_rec(c, coeff);
        if (c.is_constant() && f.ring().is_field()) break;
    }
    return c;
}

SparsePoly primitive_part(const SparsePoly& f, int var) {
    if (f.is_zero()) return f;
    auto q = exact_div(f, content_in(f, var));
    return normalize_gcd(*q);
}

// Pseudo-remainder of a by b as univariate polynomials in `var`.
SparsePoly pseudo_remainder(SparsePoly a, const SparsePoly& b, int var) {
    const long long db = b.degree_in(var);
    const SparsePoly lb = leading_coefficient_in(b, var);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const long long da = a.degree_in(var);
        Monomial shift{};
        shift[var] = static_cast<std::uint32_t>(da - db);
        SparsePoly la = leading_coefficient_in(a, var);
        a = lb * a - la * b.times_term(shift, a.ring().one());
    }
    return a;
}

SparsePoly gcd_rec(const SparsePoly& f, const SparsePoly& g) {
    const Ring& R = f.ring();
    if (f.is_zero()) return normalize_gcd(g);
    if (g.is_zero()) return normalize_gcd(f);
    const int var = main_variable(f, g);
    if (var < 0) {
        if (R.is_field()) return SparsePoly::constant(R, 1, f.nvars());
        Integer a = abs(f.constant_coefficient()), b = abs(g.constant_coefficient());
        return SparsePoly::constant(R, boost::multiprecision::gcd(a, b), f.nvars());
    }

    const SparsePoly cf = content_in(f, var);
    const SparsePoly cg = content_in(g, var);
    const SparsePoly c = gcd_rec(cf, cg);

    SparsePoly a = *exact_div(f, cf);
    SparsePoly b = *exact_div(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (b.degree_in(var) > 0) {
        SparsePoly r = pseudo_remainder(a, b, var);
        if (r.is_zero()) return normalize_gcd(c * primitive_part(b, var));
        a = std::move(b);
        b = primitive_part(r, var);
    }
    // b is free of var and primitive, hence a unit
    return normalize_gcd(c);
}

}  // namespace

SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g) {
    require_compatible(f, g);
    return gcd_rec(f, g);
}

std::optional<SparsePoly> is_pth_power(const SparsePoly& f) {
    const Ring& R = f.ring();
    if (!R.is_field()) throw std::invalid_argument("p-th roots need a finite field");
    const std::uint32_t p = static_cast<std::uint32_t>(R.characteristic());
    std::vector<Term> root;
    root.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term r;
        for (int v = 0; v < kMaxVars; ++v) {
            if (t.exponent[v] % p != 0) return std::nullopt;
            r.exponent[v] = t.exponent[v] / p;
        }
        r.coeff = R.frobenius_root(t.coeff);
        root.push_back(std::move(r));
    }
    return SparsePoly::from_terms(R, f.nvars(), std::move(root));
}

PFactorResult p_factor_test(const SparsePoly& F, std::uint64_t p) {
    if (F.is_zero()) throw std::invalid_argument("p_factor_test needs a nonzero polynomial");
    const SparsePoly fbar = reduce_mod_p(F, p);
    if (fbar.is_zero()) throw DegenerateReduction("polynomial vanishes modulo " + std::to_string(p));

    PFactorResult out;
    const long long deg = fbar.total_degree().value();
    if (deg % static_cast<long long>(p) != 0) {
        out.reason = PFactorResult::Reason::degree_not_divisible;
        out.detail = "degree " + std::to_string(deg) + " is not divisible by " + std::to_string(p);
        return out;
    }
    if (auto root = is_pth_power(fbar.monic())) {
        out.is_p_factor = true;
        out.reason = PFactorResult::Reason::pth_power;
        out.detail = "reduction is a constant times (" + root->str() + ")^" + std::to_string(p);
        return out;
    }
    out.reason = PFactorResult::Reason::not_a_pth_power;
    SparsePoly common = fbar;
    for (int v = 0; v < fbar.nvars(); ++v) common = poly_gcd(common, partial_derivative(fbar, v));
    out.detail = common.is_constant() ? "reduction is squarefree"
                                      : "reduction has repeated factors but is not a p-th power";
    return out;
}

}  // namespace pfol
