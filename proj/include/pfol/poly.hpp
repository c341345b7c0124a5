#pragma once

// Sparse multivariate polynomials in up to three variables x, y, z.
//
// Terms are kept sorted in graded-lex descending order (total degree first,
// then exponents of x, y, z) with no zero coefficients, so structural
// equality is polynomial equality.

#include "pfol/ring.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pfol {

inline constexpr int kMaxVars = 3;

using Monomial = std::array<std::uint32_t, kMaxVars>;

std::uint32_t monomial_degree(const Monomial& m);
/// Graded-lex comparison; `greater` means earlier in canonical order.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

/// Total degree with a distinguished value for the zero polynomial.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    static Degree of(long long d) { return Degree(d); }

    bool is_minus_infinity() const { return !value_.has_value(); }
    /// Throws std::logic_error on MinusInfinity.
    long long value() const;

    Degree operator+(const Degree& other) const;
    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b);
    std::string str() const;

private:
    Degree() = default;
    explicit Degree(long long d) : value_(d) {}
    std::optional<long long> value_;
};

struct Term {
    Monomial exponent{};
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class SparsePoly {
public:
    SparsePoly() : SparsePoly(Ring::integers(), 2) {}
    explicit SparsePoly(Ring ring, int nvars = 2);

    static SparsePoly constant(const Ring& ring, const Integer& c, int nvars = 2);
    static SparsePoly variable(const Ring& ring, int index, int nvars = 2);
    static SparsePoly monomial(const Ring& ring, const Monomial& m, const Integer& c, int nvars = 2);
    // Coefficients passed to the factories below must already be canonical
    // ring elements (use Ring::from_integer to map plain integers).

    /// Builds a canonical polynomial from unsorted terms: like monomials
    /// combined, zeros dropped.
    static SparsePoly from_terms(const Ring& ring, int nvars, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    Degree total_degree() const;
    /// Degree in one variable; -1 for the zero polynomial.
    long long degree_in(int var) const;
    /// Largest monomial in graded-lex order. Precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }
    const Term& trailing_term() const { return terms_.back(); }
    Integer coefficient(const Monomial& m) const;
    /// Constant term value.
    Integer constant_coefficient() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const SparsePoly& other);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    SparsePoly scaled(const Integer& c) const;
    /// Multiplies by c * x^m.
    SparsePoly times_term(const Monomial& m, const Integer& c) const;
    /// Divides by the leading coefficient (fields only).
    SparsePoly monic() const;

    /// Same coefficients viewed with more (or fewer, when unused) variables.
    SparsePoly with_nvars(int nvars) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b);
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    std::string str() const;

private:
    Ring ring_;
    int nvars_;
    std::vector<Term> terms_;
};

/// Throws std::invalid_argument unless both polynomials share ring and arity.
void require_compatible(const SparsePoly& a, const SparsePoly& b);

enum class ArithOp { add, sub, mul };
SparsePoly poly_arith(ArithOp op, const SparsePoly& f, const SparsePoly& g);
/// Throws std::invalid_argument for a negative exponent.
SparsePoly pow(const SparsePoly& f, long long exponent);

SparsePoly partial_derivative(const SparsePoly& f, int var);
SparsePoly graded_part(const SparsePoly& f, long long degree);
inline Degree total_degree(const SparsePoly& f) { return f.total_degree(); }

/// Coefficient-wise reduction of an integer polynomial into F_p.
SparsePoly reduce_mod_p(const SparsePoly& f, std::uint64_t p);
/// Maps coefficients into `target`: Z -> anything, F_p -> F_{p^k}.
SparsePoly change_ring(const SparsePoly& f, const Ring& target);

Integer evaluate(const SparsePoly& f, const std::vector<Integer>& point);
/// f(x + shift_x, y + shift_y, ...) with shifts given as ring elements.
SparsePoly translate(const SparsePoly& f, const std::vector<Integer>& shift);

/// Largest monomial dividing every term, and the cofactor.
struct MonomialContent {
    Monomial monomial{};
    SparsePoly cofactor;
};
MonomialContent monomial_content(const SparsePoly& f);

struct HomogenizationResult {
    SparsePoly homogeneous;     // in (x, y, z)
    std::uint32_t z_shift = 0;  // target degree minus deg f
};
/// Homogenizes a polynomial in (x, y). `target_degree` must be >= deg f.
HomogenizationResult homogenize(const SparsePoly& f, std::optional<long long> target_degree = std::nullopt);
/// Sets z = 1 and returns a polynomial in (x, y).
SparsePoly dehomogenize(const SparsePoly& F);

}  // namespace pfol
