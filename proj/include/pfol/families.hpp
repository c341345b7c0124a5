#pragma once

// The foliation families studied here, their closed-form 2-divisors and the
// routines that check a computed divisor against the closed form.

#include "pfol/foliation.hpp"
#include "pfol/newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfol {

enum class FamilyKind { jouanolou, claudia, family_f, family_g };

/// Exponents of the Claudia family; integral exactly when d is odd.
struct ClaudiaExponents {
    long long f, g, h, s;
};
ClaudiaExponents claudia_exponents(long long d);

class FamilySpec {
public:
    /// (x y^d - 1) d/dx - (x^d - y^{d+1}) d/dy, d >= 1.
    static FamilySpec jouanolou(long long d);
    /// y^{f(d)} d/dx + (x + a y^{g(d)} + b y^{h(d)} + c y^{s(d)}) d/dy; d odd > 1, abc odd.
    static FamilySpec claudia(long long d, long long a, long long b, long long c);
    /// (a x^e y - c y^2) d/dx + (a x^2 y^{e-1} + b x) d/dy; e >= 6, abc odd.
    static FamilySpec family_f(long long e, long long a, long long b, long long c);
    /// (u + x y^d) d/dx + (a + b x + c x^{d-1} + y^{d+1}) d/dy; d odd >= 5, abcu odd.
    static FamilySpec family_g(long long d, long long u, long long a, long long b, long long c);

    /// Parses "jouanolou:3", "claudia:3,1,1,1", "family-f:6,1,1,1", "family-g:5,1,1,1,1".
    static FamilySpec parse(const std::string& text);
    /// Same with the kind and the comma-separated parameters given separately.
    static FamilySpec parse(const std::string& kind, const std::string& params);

    FamilyKind kind() const { return kind_; }
    long long d() const { return d_; }
    long long u() const { return u_; }
    long long a() const { return a_; }
    long long b() const { return b_; }
    long long c() const { return c_; }

    /// "Claudia(3,1,1,1)" and the like.
    std::string name() const;
    /// The inverse of parse: "claudia:3,1,1,1".
    std::string tag() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    FamilySpec(FamilyKind kind, long long d, long long u, long long a, long long b, long long c)
        : kind_(kind), d_(d), u_(u), a_(a), b_(b), c_(c) {}

    FamilyKind kind_;
    long long d_, u_, a_, b_, c_;
};

PlaneVectorField make_field(const FamilySpec& spec, const Ring& ring = Ring::integers());

/// `as_printed` transcribes the stated closed forms literally. `corrected`
/// replaces the family G term a x y^{2d-1} by a x y^{2d}, which is what the
/// recurrence produces (the x-linear part of the divisor is
/// u b x y^d + a x y^{2d} + a^2 x y^{d-1}).
enum class ClosedForm { as_printed, corrected };

/// Closed-form affine 2-divisor over F2, monomial cofactor included.
/// Throws std::invalid_argument for Jouanolou.
SparsePoly expected_divisor(const FamilySpec& spec, ClosedForm form = ClosedForm::as_printed);

/// Hull vertices of the non-monomial part of the 2-divisor.
/// Throws std::invalid_argument for Jouanolou.
std::vector<LatticePoint> expected_polytope(const FamilySpec& spec);

/// Foliation degree and l_inf invariance stated for the family. Empty for
/// Claudia, whose degree is reported but not asserted.
struct ExpectedDegree {
    long long degree;
    bool line_at_infinity_invariant;
};
std::optional<ExpectedDegree> expected_degree(const FamilySpec& spec);

/// d + 2. Throws std::invalid_argument for d < 0.
long long carnicer_bound(long long d);

struct Comparison {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct FamilyVerification {
    FamilySpec spec;
    PDivisorResult divisor;
    std::optional<SparsePoly> expected;
    IrreducibilityVerdict verdict;
    std::vector<Comparison> checks;

    bool all_ok() const;
};

/// Computes the 2-divisor over F2 and compares it with the closed form,
/// the polygon figure, the degree data and the irreducibility claim.
/// Mismatches are reported in `checks`, never thrown.
FamilyVerification verify_family_theorem(const FamilySpec& spec);

/// The default verification grid.
std::vector<FamilySpec> default_grid();

}  // namespace pfol
