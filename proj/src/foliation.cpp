#include "pfol/foliation.hpp"

#include "pfol/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfol {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;

SparsePoly var_x(const Ring& R) { return SparsePoly::variable(R, kX, 2); }
SparsePoly var_y(const Ring& R) { return SparsePoly::variable(R, kY, 2); }

long long order_of(const SparsePoly& f) {
    // the graded-lex trailing term has minimal total degree
    return monomial_degree(f.trailing_term().exponent);
}

JetReport jet_of_translated(const SparsePoly& A, const SparsePoly& B, std::string point) {
    JetReport out;
    out.point = std::move(point);
    long long m = -1;
    for (const SparsePoly* c : {&A, &B}) {
        if (c->is_zero()) continue;
        long long o = order_of(*c);
        m = m < 0 ? o : std::min(m, o);
    }
    out.order = m;
    const Ring& R = A.ring();
    out.witness = var_x(R) * graded_part(B, m) - var_y(R) * graded_part(A, m);
    out.dicritical = out.witness.is_zero();
    return out;
}

}  // namespace

PlaneVectorField::PlaneVectorField(SparsePoly A, SparsePoly B) : A_(std::move(A)), B_(std::move(B)) {
    require_compatible(A_, B_);
    if (A_.nvars() != 2) throw std::invalid_argument("vector fields live in two variables");
    if (A_.is_zero() && B_.is_zero()) throw std::invalid_argument("the zero vector field defines no foliation");
}

PlaneVectorField PlaneVectorField::over(const Ring& target) const {
    return PlaneVectorField(change_ring(A_, target), change_ring(B_, target));
}

SparsePoly derive(const PlaneVectorField& v, const SparsePoly& f) {
    require_compatible(v.A(), f);
    return v.A() * partial_derivative(f, kX) + v.B() * partial_derivative(f, kY);
}

VectorPair p_power(const PlaneVectorField& v, std::uint64_t p) {
    if (v.ring().characteristic() != p || !is_prime(p)) {
        throw std::invalid_argument("p-th power needs characteristic " + std::to_string(p) + ", got ring " +
                                    v.ring().tag());
    }
    SparsePoly ax = v.A();
    SparsePoly by = v.B();
    for (std::uint64_t i = 1; i < p; ++i) {
        ax = derive(v, ax);
        by = derive(v, by);
    }
    return {std::move(ax), std::move(by)};
}

SparsePoly wedge(const SparsePoly& vx, const SparsePoly& vy, const SparsePoly& wx, const SparsePoly& wy) {
    return vx * wy - vy * wx;
}

SparsePoly wedge(const PlaneVectorField& v, const PlaneVectorField& w) { return wedge(v.A(), v.B(), w.A(), w.B()); }

SparsePoly wedge(const PlaneVectorField& v, const VectorPair& w) {
    return wedge(v.A(), v.B(), w.x_component, w.y_component);
}

DegreeReport degree_and_linf(const PlaneVectorField& v) {
    const Ring& R = v.ring();
    DegreeReport out;
    out.top_degree = std::max(v.A().total_degree(), v.B().total_degree()).value();
    out.witness = var_x(R) * graded_part(v.B(), out.top_degree) - var_y(R) * graded_part(v.A(), out.top_degree);
    out.line_at_infinity_invariant = !out.witness.is_zero();
    out.foliation_degree = out.line_at_infinity_invariant ? out.top_degree : out.top_degree - 1;
    return out;
}

PDivisorResult p_divisor(const PlaneVectorField& v) {
    const Ring& R = v.ring();
    if (!R.is_field()) throw std::invalid_argument("p-divisors are defined in positive characteristic");
    PDivisorResult out;
    out.p = R.characteristic();
    out.f = wedge(v, p_power(v, out.p));
    out.degree = degree_and_linf(v);
    const long long d = out.degree.foliation_degree;
    const long long p = static_cast<long long>(out.p);
    out.expected_projective_degree = p * (d - 1) + d + 2;
    out.cofactor = out.f;
    if (out.f.is_zero()) {
        out.p_closed = true;
        return out;
    }
    out.affine_degree = out.f.total_degree().value();
    out.z_multiplicity = out.expected_projective_degree - out.affine_degree;
    out.degree_consistent = out.z_multiplicity >= 0;

    auto content = monomial_content(out.f);
    for (int var : {kX, kY}) {
        if (content.monomial[var] > 0) {
            out.components.push_back({SparsePoly::variable(R, var, 2), content.monomial[var]});
        }
    }
    out.cofactor = std::move(content.cofactor);
    return out;
}

bool is_p_closed(const PlaneVectorField& v) { return p_divisor(v).p_closed; }

bool is_invariant_curve(const PlaneVectorField& v, const SparsePoly& F) {
    if (F.is_constant()) throw std::invalid_argument("invariance needs a nonconstant curve equation");
    return exact_div(derive(v, F), F).has_value();
}

std::string FieldPoint::str() const { return "(" + ring.format(x) + ", " + ring.format(y) + ") in " + ring.tag(); }

std::string RationalPoint::str() const { return "(" + x.str() + ", " + y.str() + ") in Q"; }

JetReport first_jet_dicritical_at(const PlaneVectorField& v, const FieldPoint& point) {
    if (!v.ring().embeds_into(point.ring)) {
        throw std::invalid_argument("point field " + point.ring.tag() + " does not contain " + v.ring().tag());
    }
    const PlaneVectorField w = v.over(point.ring);
    const std::vector<Integer> shift{point.x, point.y};
    SparsePoly A = translate(w.A(), shift);
    SparsePoly B = translate(w.B(), shift);
    if (A.constant_coefficient() != 0 || B.constant_coefficient() != 0) {
        throw NotSingular("vector field does not vanish at " + point.str());
    }
    return jet_of_translated(A, B, point.str());
}

JetReport first_jet_dicritical_at(const PlaneVectorField& v, const RationalPoint& point) {
    if (!v.ring().is_integers()) throw std::invalid_argument("rational points need an integer vector field");
    const Ring Z = Ring::integers();
    const Integer s = boost::multiprecision::lcm(denominator(point.x), denominator(point.y));
    const Integer rx = numerator(point.x) * (s / denominator(point.x));
    const Integer ry = numerator(point.y) * (s / denominator(point.y));
    const long long D = std::max(v.A().total_degree(), v.B().total_degree()).value();

    // s^D * f(rx/s + X, ry/s + Y) has integer coefficients
    const SparsePoly lx = SparsePoly::constant(Z, rx) + SparsePoly::variable(Z, kX).scaled(s);
    const SparsePoly ly = SparsePoly::constant(Z, ry) + SparsePoly::variable(Z, kY).scaled(s);
    auto shifted = [&](const SparsePoly& f) {
        SparsePoly out(Z, 2);
        for (const auto& t : f.terms()) {
            const long long rest = D - monomial_degree(t.exponent);
            out += pow(lx, t.exponent[kX]) * pow(ly, t.exponent[kY]) *
                   SparsePoly::constant(Z, t.coeff * boost::multiprecision::pow(s, static_cast<unsigned>(rest)));
        }
        return out;
    };
    SparsePoly A = shifted(v.A());
    SparsePoly B = shifted(v.B());
    if (A.constant_coefficient() != 0 || B.constant_coefficient() != 0) {
        throw NotSingular("vector field does not vanish at " + point.str());
    }
    return jet_of_translated(A, B, point.str());
}

std::vector<FieldPoint> singular_points_over(const PlaneVectorField& v, int k) {
    if (!v.ring().is_prime_field()) throw std::invalid_argument("singular point search expects a field F_p");
    const Ring K = Ring::extension_field(v.ring().characteristic(), k);
    const PlaneVectorField w = v.over(K);
    std::vector<FieldPoint> out;
    const auto elements = K.elements();
    for (const auto& x : elements) {
        for (const auto& y : elements) {
            const std::vector<Integer> pt{x, y};
            if (evaluate(w.A(), pt) == 0 && evaluate(w.B(), pt) == 0) out.push_back({K, x, y});
        }
    }
    return out;
}

GoodReduction good_reduction_at(const PlaneVectorField& v, std::uint64_t p) {
    if (!v.ring().is_integers()) throw std::invalid_argument("good reduction is checked for integer vector fields");
    const SparsePoly a = reduce_mod_p(v.A(), p);
    const SparsePoly b = reduce_mod_p(v.B(), p);
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("vector field vanishes modulo " + std::to_string(p));
    }
    GoodReduction out;
    const SparsePoly common = poly_gcd(a, b);
    if (!common.is_constant()) {
        out.reason = "components share the factor " + common.str() + " modulo " + std::to_string(p);
        return out;
    }
    const DegreeReport over_q = degree_and_linf(v);
    const DegreeReport over_p = degree_and_linf(PlaneVectorField(a, b));
    if (over_q.foliation_degree != over_p.foliation_degree) {
        out.reason = "degree drops from " + std::to_string(over_q.foliation_degree) + " to " +
                     std::to_string(over_p.foliation_degree) + " modulo " + std::to_string(p);
        return out;
    }
    if (over_q.line_at_infinity_invariant != over_p.line_at_infinity_invariant) {
        out.reason = "invariance of the line at infinity changes modulo " + std::to_string(p);
        return out;
    }
    out.good = true;
    out.reason = "components coprime modulo " + std::to_string(p) + ", degree " +
                 std::to_string(over_q.foliation_degree) + " and line at infinity preserved";
    return out;
}

}  // namespace pfol
