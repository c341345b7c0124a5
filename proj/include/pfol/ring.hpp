#pragma once

// Coefficient rings: the integers, prime fields F_p and small extensions F_{p^k}.
//
// Elements of every ring are carried as `Integer` codes. For Z the code is the
// integer itself; for F_{p^k} the code is sum(d_i * p^i) where d_0 + d_1*a + ...
// is the element written in the power basis of the defining modulus. Prime
// field elements therefore keep the same code inside any extension.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pfol {

using Integer = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

class Ring {
public:
    /// The ring Z (arbitrary precision).
    Ring();

    static Ring integers() { return Ring(); }
    static Ring prime_field(std::uint64_t p);
    /// Extension with the built-in modulus table (p in {2,3}, k <= 4).
    static Ring extension_field(std::uint64_t p, int k);
    /// Extension with a user-supplied monic modulus, coefficients low to high.
    /// Throws std::invalid_argument unless the modulus is irreducible over F_p.
    static Ring extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus);
    /// Parses "Z", "F<q>" with q prime or a tabled prime power.
    static Ring from_tag(std::string_view tag);

    bool is_integers() const { return field_ == nullptr; }
    bool is_field() const { return field_ != nullptr; }
    bool is_prime_field() const { return field_ && field_->degree == 1; }
    /// 0 for Z.
    std::uint64_t characteristic() const { return field_ ? field_->p : 0; }
    /// Extension degree over the prime field (1 for F_p, 0 for Z).
    int extension_degree() const { return field_ ? field_->degree : 0; }
    /// Number of elements, 0 for Z.
    std::uint64_t order() const { return field_ ? field_->order : 0; }
    /// Monic modulus of the extension, low to high. Empty for Z and prime fields.
    const std::vector<std::uint64_t>& modulus() const;
    std::string tag() const;

    /// Prime subfield, or Z for Z.
    Ring prime_subfield() const;
    /// True when this ring is F_p and `other` is an extension of F_p (or equal).
    bool embeds_into(const Ring& other) const;

    Integer zero() const { return 0; }
    Integer one() const { return 1; }
    /// Canonical image of an integer.
    Integer from_integer(const Integer& n) const;
    /// The generator `a` of an extension (throws for Z and prime fields).
    Integer generator() const;

    Integer add(const Integer& a, const Integer& b) const;
    Integer sub(const Integer& a, const Integer& b) const;
    Integer neg(const Integer& a) const;
    Integer mul(const Integer& a, const Integer& b) const;
    Integer pow(const Integer& a, std::uint64_t e) const;
    /// Multiplicative inverse; throws std::domain_error for 0 or a non-unit of Z.
    Integer inv(const Integer& a) const;
    /// Exact quotient a/b; in Z returns false when b does not divide a.
    bool divide(const Integer& a, const Integer& b, Integer& out) const;
    /// p-th root in a finite field of characteristic p (Frobenius inverse).
    Integer frobenius_root(const Integer& a) const;

    /// Human-readable element. Extension elements use the generator name `a`.
    std::string format(const Integer& a) const;
    /// All field elements in code order (finite fields only).
    std::vector<Integer> elements() const;

    friend bool operator==(const Ring& a, const Ring& b);
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    struct FieldData {
        std::uint64_t p = 0;
        int degree = 1;
        std::uint64_t order = 0;
        std::vector<std::uint64_t> modulus;  // monic, size degree+1 for extensions
    };
    explicit Ring(std::shared_ptr<const FieldData> data) : field_(std::move(data)) {}

    std::vector<std::uint64_t> digits(const Integer& a) const;
    Integer encode(const std::vector<std::uint64_t>& digits) const;

    std::shared_ptr<const FieldData> field_;
};

/// True when `modulus` (monic, low to high) is irreducible over F_p, by trial
/// division with every monic polynomial of degree <= k/2.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& modulus, std::uint64_t p);

/// Built-in moduli, keyed by (p, k); empty when not tabled.
std::vector<std::uint64_t> tabled_modulus(std::uint64_t p, int k);

}  // namespace pfol
