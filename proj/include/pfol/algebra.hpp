#pragma once

// Divisibility, gcd and p-th power structure of sparse polynomials.

#include "pfol/poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pfol {

/// Returns q with f = q*g, or nullopt when g does not divide f.
/// Throws std::domain_error when g is zero. Works over fields and over Z.
std::optional<SparsePoly> exact_div(const SparsePoly& f, const SparsePoly& g);

/// Normalized gcd: monic over a field, positive leading coefficient over Z.
/// gcd(f, 0) is the normalization of f.
SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g);

/// If f = g^p over a field of characteristic p, returns g (unique).
std::optional<SparsePoly> is_pth_power(const SparsePoly& f);

class DegenerateReduction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PFactorResult {
    enum class Reason { degree_not_divisible, not_a_pth_power, pth_power };
    bool is_p_factor = false;
    Reason reason = Reason::degree_not_divisible;
    std::string detail;
};

/// Decides whether the reduction of the integer polynomial F modulo p is a
/// constant times a p-th power. Throws DegenerateReduction when F = 0 mod p.
PFactorResult p_factor_test(const SparsePoly& F, std::uint64_t p);

}  // namespace pfol
