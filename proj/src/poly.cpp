#include "pfol/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfol {

std::uint32_t monomial_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

std::strong_ordering graded_lex(const Monomial& a, const Monomial& b) {
    if (auto c = monomial_degree(a) <=> monomial_degree(b); c != 0) return c;
    return a <=> b;
}

bool divides(const Monomial& a, const Monomial& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

long long Degree::value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial is -infinity");
    return *value_;
}

Degree Degree::operator+(const Degree& other) const {
    if (!value_ || !other.value_) return minus_infinity();
    return Degree(*value_ + *other.value_);
}

std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
}

std::string Degree::str() const { return value_ ? std::to_string(*value_) : "-inf"; }

namespace {

bool canonical_before(const Term& a, const Term& b) { return graded_lex(a.exponent, b.exponent) > 0; }

// Sorts, merges equal monomials and drops zeros. Coefficients must already be
// canonical ring elements.
void normalize(const Ring& ring, std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), canonical_before);
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = std::move(terms[i]);
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].exponent == acc.exponent) {
            acc.coeff = ring.add(acc.coeff, terms[j].coeff);
            ++j;
        }
        if (acc.coeff != 0) terms[out++] = std::move(acc);
        i = j;
    }
    terms.resize(out);
}

// Merge of two canonical term lists: a + sign*b.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && canonical_before(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || canonical_before(b[j], a[i])) {
            out.push_back({b[j].exponent, subtract ? ring.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Integer c = subtract ? ring.sub(a[i].coeff, b[j].coeff) : ring.add(a[i].coeff, b[j].coeff);
            if (c != 0) out.push_back({a[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

void check_var(int var, int nvars) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
}

}  // namespace

SparsePoly::SparsePoly(Ring ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("arity must be 1, 2 or 3");
}

SparsePoly SparsePoly::constant(const Ring& ring, const Integer& c, int nvars) {
    return monomial(ring, Monomial{}, c, nvars);
}

SparsePoly SparsePoly::variable(const Ring& ring, int index, int nvars) {
    check_var(index, nvars);
    Monomial m{};
    m[index] = 1;
    return monomial(ring, m, 1, nvars);
}

SparsePoly SparsePoly::monomial(const Ring& ring, const Monomial& m, const Integer& c, int nvars) {
    SparsePoly out(ring, nvars);
    for (int v = nvars; v < kMaxVars; ++v) {
        if (m[v] != 0) throw std::invalid_argument("monomial uses a variable beyond the arity");
    }
    if (c != 0) out.terms_.push_back({m, c});
    return out;
}

SparsePoly SparsePoly::from_terms(const Ring& ring, int nvars, std::vector<Term> terms) {
    SparsePoly out(ring, nvars);
    for (auto& t : terms) {
        for (int v = nvars; v < kMaxVars; ++v) {
            if (t.exponent[v] != 0) throw std::invalid_argument("term uses a variable beyond the arity");
        }
    }
    normalize(ring, terms);
    out.terms_ = std::move(terms);
    return out;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].exponent) == 0);
}

Degree SparsePoly::total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree::of(monomial_degree(terms_.front().exponent));
}

long long SparsePoly::degree_in(int var) const {
    check_var(var, nvars_);
    long long d = -1;
    for (const auto& t : terms_) d = std::max<long long>(d, t.exponent[var]);
    return d;
}

Integer SparsePoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, canonical_before);
    if (it != terms_.end() && it->exponent == m) return it->coeff;
    return 0;
}

Integer SparsePoly::constant_coefficient() const { return coefficient(Monomial{}); }

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.coeff = ring_.neg(t.coeff);
    return out;
}

void require_compatible(const SparsePoly& a, const SparsePoly& b) {
    if (a.ring() != b.ring()) {
        throw std::invalid_argument("ring mismatch: " + a.ring().tag() + " vs " + b.ring().tag());
    }
    if (a.nvars() != b.nvars()) throw std::invalid_argument("arity mismatch");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    require_compatible(*this, other);
    terms_ = merge(ring_, terms_, other.terms_, false);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    require_compatible(*this, other);
    terms_ = merge(ring_, terms_, other.terms_, true);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    require_compatible(a, b);
    SparsePoly out(a.ring(), a.nvars());
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            Monomial m{s.exponent[0] + t.exponent[0], s.exponent[1] + t.exponent[1], s.exponent[2] + t.exponent[2]};
            prod.push_back({m, a.ring().mul(s.coeff, t.coeff)});
        }
    }
    normalize(a.ring(), prod);
    out.terms_ = std::move(prod);
    return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) { return *this = *this * other; }

SparsePoly SparsePoly::scaled(const Integer& cc) const {
    SparsePoly out(ring_, nvars_);
    if (cc == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Integer v = ring_.mul(t.coeff, cc);
        if (v != 0) out.terms_.push_back({t.exponent, std::move(v)});
    }
    return out;
}

SparsePoly SparsePoly::times_term(const Monomial& m, const Integer& c) const {
    SparsePoly out = scaled(c);
    for (auto& t : out.terms_) {
        for (int v = 0; v < kMaxVars; ++v) t.exponent[v] += m[v];
    }
    return out;  // order is preserved by multiplication with a monomial
}

SparsePoly SparsePoly::monic() const {
    if (terms_.empty()) return *this;
    if (!ring_.is_field()) {
        return terms_.front().coeff < 0 ? -*this : *this;
    }
    return scaled(ring_.inv(terms_.front().coeff));
}

SparsePoly SparsePoly::with_nvars(int nvars) const {
    SparsePoly out(ring_, nvars);
    for (const auto& t : terms_) {
        for (int v = nvars; v < kMaxVars; ++v) {
            if (t.exponent[v] != 0) throw std::invalid_argument("polynomial uses a variable beyond the new arity");
        }
    }
    out.terms_ = terms_;
    return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

SparsePoly poly_arith(ArithOp op, const SparsePoly& f, const SparsePoly& g) {
    switch (op) {
        case ArithOp::add: return f + g;
        case ArithOp::sub: return f - g;
        case ArithOp::mul: return f * g;
    }
    throw std::logic_error("unknown operation");
}

SparsePoly pow(const SparsePoly& f, long long exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    SparsePoly result = SparsePoly::constant(f.ring(), 1, f.nvars());
    SparsePoly base = f;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

SparsePoly partial_derivative(const SparsePoly& f, int var) {
    check_var(var, f.nvars());
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.exponent[var] == 0) continue;
        Term d{t.exponent, f.ring().mul(t.coeff, f.ring().from_integer(t.exponent[var]))};
        d.exponent[var] -= 1;
        out.push_back(std::move(d));
    }
    return SparsePoly::from_terms(f.ring(), f.nvars(), std::move(out));
}

SparsePoly graded_part(const SparsePoly& f, long long degree) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (monomial_degree(t.exponent) == degree) out.push_back(t);
    }
    return SparsePoly::from_terms(f.ring(), f.nvars(), std::move(out));
}

SparsePoly reduce_mod_p(const SparsePoly& f, std::uint64_t p) {
    if (!f.ring().is_integers()) throw std::invalid_argument("reduce_mod_p expects an integer polynomial");
    return change_ring(f, Ring::prime_field(p));
}

SparsePoly change_ring(const SparsePoly& f, const Ring& target) {
    if (f.ring() == target) return f;
    if (!f.ring().is_integers() && !f.ring().embeds_into(target)) {
        throw std::invalid_argument("cannot map " + f.ring().tag() + " into " + target.tag());
    }
    // prime-field codes coincide with their images in any extension
    std::vector<Term> terms = f.terms();
    if (f.ring().is_integers()) {
        for (auto& t : terms) t.coeff = target.from_integer(t.coeff);
    }
    return SparsePoly::from_terms(target, f.nvars(), std::move(terms));
}

Integer evaluate(const SparsePoly& f, const std::vector<Integer>& point) {
    if (static_cast<int>(point.size()) != f.nvars()) throw std::invalid_argument("point dimension mismatch");
    const Ring& R = f.ring();
    // power tables per variable
    std::vector<std::vector<Integer>> powers(f.nvars());
    for (int v = 0; v < f.nvars(); ++v) {
        long long d = f.degree_in(v);
        powers[v].push_back(R.one());
        for (long long i = 1; i <= d; ++i) powers[v].push_back(R.mul(powers[v].back(), point[v]));
    }
    Integer acc = R.zero();
    for (const auto& t : f.terms()) {
        Integer v = t.coeff;
        for (int i = 0; i < f.nvars(); ++i) v = R.mul(v, powers[i][t.exponent[i]]);
        acc = R.add(acc, v);
    }
    return acc;
}

SparsePoly translate(const SparsePoly& f, const std::vector<Integer>& shift) {
    if (static_cast<int>(shift.size()) != f.nvars()) throw std::invalid_argument("shift dimension mismatch");
    const Ring& R = f.ring();
    const int n = f.nvars();
    // powers of (x_v + s_v)
    std::vector<std::vector<SparsePoly>> powers(n);
    for (int v = 0; v < n; ++v) {
        SparsePoly lin = SparsePoly::variable(R, v, n) + SparsePoly::constant(R, shift[v], n);
        long long d = f.degree_in(v);
        powers[v].push_back(SparsePoly::constant(R, 1, n));
        for (long long i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * lin);
    }
    SparsePoly out(R, n);
    for (const auto& t : f.terms()) {
        SparsePoly term = SparsePoly::constant(R, t.coeff, n);
        for (int v = 0; v < n; ++v) {
            if (t.exponent[v]) term *= powers[v][t.exponent[v]];
        }
        out += term;
    }
    return out;
}

MonomialContent monomial_content(const SparsePoly& f) {
    MonomialContent out{Monomial{}, f};
    if (f.is_zero()) return out;
    Monomial m = f.terms().front().exponent;
    for (const auto& t : f.terms()) {
        for (int v = 0; v < kMaxVars; ++v) m[v] = std::min(m[v], t.exponent[v]);
    }
    out.monomial = m;
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) {
        for (int v = 0; v < kMaxVars; ++v) t.exponent[v] -= m[v];
    }
    out.cofactor = SparsePoly::from_terms(f.ring(), f.nvars(), std::move(terms));
    return out;
}

HomogenizationResult homogenize(const SparsePoly& f, std::optional<long long> target_degree) {
    if (f.nvars() != 2) throw std::invalid_argument("homogenize expects a polynomial in (x, y)");
    long long d = f.is_zero() ? 0 : f.total_degree().value();
    long long target = target_degree.value_or(d);
    if (target < d) throw std::invalid_argument("target degree below the polynomial degree");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Term h = t;
        h.exponent[2] = static_cast<std::uint32_t>(target - monomial_degree(t.exponent));
        terms.push_back(std::move(h));
    }
    return {SparsePoly::from_terms(f.ring(), 3, std::move(terms)), static_cast<std::uint32_t>(target - d)};
}

SparsePoly dehomogenize(const SparsePoly& F) {
    if (F.nvars() != 3) throw std::invalid_argument("dehomogenize expects a polynomial in (x, y, z)");
    std::vector<Term> terms;
    for (const auto& t : F.terms()) {
        Term a = t;
        a.exponent[2] = 0;
        terms.push_back(std::move(a));
    }
    return SparsePoly::from_terms(F.ring(), 2, std::move(terms));
}

}  // namespace pfol
