#pragma once

// Plane vector fields v = A d/dx + B d/dy as derivations of k[x, y], their
// p-th powers, p-divisors and the local/global invariants built on them.

#include "pfol/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pfol {

class PlaneVectorField {
public:
    /// Throws std::invalid_argument unless A and B share a ring, are bivariate
    /// and not both zero.
    PlaneVectorField(SparsePoly A, SparsePoly B);

    const SparsePoly& A() const { return A_; }
    const SparsePoly& B() const { return B_; }
    const Ring& ring() const { return A_.ring(); }

    /// Coefficient-wise image in another ring (reduction mod p, field lift).
    /// Throws std::invalid_argument if both components vanish there.
    PlaneVectorField over(const Ring& target) const;

    friend bool operator==(const PlaneVectorField&, const PlaneVectorField&) = default;

private:
    SparsePoly A_;
    SparsePoly B_;
};

/// v(f) = A f_x + B f_y.
SparsePoly derive(const PlaneVectorField& v, const SparsePoly& f);

/// The components (v^p(x), v^p(y)) of the p-th power, computed by p-1
/// re-derivations of A and B. Both may vanish, so the result is a pair rather
/// than a PlaneVectorField.
struct VectorPair {
    SparsePoly x_component;
    SparsePoly y_component;
};
VectorPair p_power(const PlaneVectorField& v, std::uint64_t p);

/// v(x) w(y) - v(y) w(x).
SparsePoly wedge(const SparsePoly& vx, const SparsePoly& vy, const SparsePoly& wx, const SparsePoly& wy);
SparsePoly wedge(const PlaneVectorField& v, const PlaneVectorField& w);
SparsePoly wedge(const PlaneVectorField& v, const VectorPair& w);

struct DegreeReport {
    long long top_degree = 0;        // e = max(deg A, deg B)
    long long foliation_degree = 0;  // e if l_inf is invariant, else e - 1
    bool line_at_infinity_invariant = false;
    SparsePoly witness;  // x B_e - y A_e
};
DegreeReport degree_and_linf(const PlaneVectorField& v);

struct DivisorComponent {
    SparsePoly factor;
    long long multiplicity = 0;
};

struct PDivisorResult {
    SparsePoly f;  // A v^p(y) - B v^p(x)
    bool p_closed = false;
    std::uint64_t p = 0;
    DegreeReport degree;
    long long expected_projective_degree = 0;  // p(d-1) + d + 2
    long long affine_degree = 0;               // total degree of f (0 when p-closed)
    long long z_multiplicity = 0;              // expected - affine; may be negative
    bool degree_consistent = false;            // z_multiplicity >= 0 and not p-closed
    std::vector<DivisorComponent> components;  // coordinate-line factors split off
    SparsePoly cofactor;                       // f divided by the listed components
};
PDivisorResult p_divisor(const PlaneVectorField& v);

bool is_p_closed(const PlaneVectorField& v);

/// {F = 0} is invariant iff F divides v(F). Throws for constant F.
bool is_invariant_curve(const PlaneVectorField& v, const SparsePoly& F);

/// A point with coordinates in a finite field (possibly an extension of the
/// field of the vector field).
struct FieldPoint {
    Ring ring;
    Integer x;
    Integer y;

    std::string str() const;
    friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

using Rational = boost::multiprecision::cpp_rational;
struct RationalPoint {
    Rational x;
    Rational y;

    std::string str() const;
};

struct JetReport {
    std::string point;
    long long order = 0;  // m, the minimal degree of a nonzero graded part
    bool dicritical = false;
    SparsePoly witness;  // x B_m - y A_m at the translated point
};

class NotSingular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// First-jet dicriticality test. Throws NotSingular when A or B is nonzero at the point.
JetReport first_jet_dicritical_at(const PlaneVectorField& v, const FieldPoint& point);
/// Same over Q for an integer vector field (coordinates are scaled to clear denominators).
JetReport first_jet_dicritical_at(const PlaneVectorField& v, const RationalPoint& point);

/// Common zeros of A and B in F_{p^k}^2 by exhaustive search, ordered by
/// (x, y) code. The field of v must be F_p and F_{p^k} tabled.
std::vector<FieldPoint> singular_points_over(const PlaneVectorField& v, int k);

struct GoodReduction {
    bool good = false;
    std::string reason;
};
/// Throws std::invalid_argument when v is not over Z or vanishes modulo p.
GoodReduction good_reduction_at(const PlaneVectorField& v, std::uint64_t p);

}  // namespace pfol
