#include "pfol/ring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace pfol {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

std::uint64_t to_u64(const Integer& a) { return a.convert_to<std::uint64_t>(); }

std::uint64_t mod_reduce(const Integer& n, std::uint64_t p) {
    Integer r = n % p;
    if (r < 0) r += p;
    return to_u64(r);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit values; p < 2^31
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Remainder of `a` modulo the monic polynomial `m` over F_p, low to high.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& m,
                                    std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
    if (modulus.size() < 2 || modulus.back() != 1) return false;
    const int k = static_cast<int>(modulus.size()) - 1;
    if (k == 1) return true;
    // every monic candidate divisor of degree 1..k/2
    for (int deg = 1; deg <= k / 2; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint64_t> cand(deg + 1);
            std::uint64_t c = code;
            for (int i = 0; i < deg; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[deg] = 1;
            auto r = poly_rem(modulus, cand, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; })) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> tabled_modulus(std::uint64_t p, int k) {
    if (p == 2) {
        switch (k) {
            case 2: return {1, 1, 1};        // a^2 + a + 1
            case 3: return {1, 1, 0, 1};     // a^3 + a + 1
            case 4: return {1, 1, 0, 0, 1};  // a^4 + a + 1
        }
    } else if (p == 3) {
        switch (k) {
            case 2: return {2, 2, 1};        // a^2 + 2a + 2
            case 3: return {1, 2, 0, 1};     // a^3 + 2a + 1
            case 4: return {2, 0, 0, 2, 1};  // a^4 + 2a^3 + 2
        }
    }
    return {};
}

Ring::Ring() = default;

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p >= kMaxCharacteristic) throw std::invalid_argument("characteristic too large");
    auto data = std::make_shared<FieldData>();
    data->p = p;
    data->degree = 1;
    data->order = p;
    return Ring(std::move(data));
}

Ring Ring::extension_field(std::uint64_t p, int k) {
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return prime_field(p);
    auto m = tabled_modulus(p, k);
    if (m.empty()) {
        throw std::invalid_argument("no built-in modulus for F_" + std::to_string(p) + "^" + std::to_string(k) +
                                    "; supply one explicitly");
    }
    return extension_field(p, std::move(m));
}

Ring Ring::extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p >= kMaxCharacteristic) throw std::invalid_argument("characteristic too large");
    for (auto& c : modulus) c %= p;
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    const int k = static_cast<int>(modulus.size()) - 1;
    if (k == 1) return prime_field(p);
    if (!is_irreducible_mod_p(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");
    std::uint64_t order = 1;
    for (int i = 0; i < k; ++i) {
        if (order > (std::uint64_t{1} << 40) / p) throw std::invalid_argument("extension field too large");
        order *= p;
    }
    auto data = std::make_shared<FieldData>();
    data->p = p;
    data->degree = k;
    data->order = order;
    data->modulus = std::move(modulus);
    return Ring(std::move(data));
}

Ring Ring::from_tag(std::string_view tag) {
    if (tag == "Z" || tag == "ZZ") return integers();
    if (tag.size() >= 2 && (tag[0] == 'F' || tag[0] == 'f')) {
        std::uint64_t q = 0;
        auto [ptr, ec] = std::from_chars(tag.data() + 1, tag.data() + tag.size(), q);
        if (ec == std::errc() && ptr == tag.data() + tag.size() && q >= 2) {
            if (is_prime(q)) return prime_field(q);
            for (std::uint64_t p : {2u, 3u}) {
                std::uint64_t pk = p;
                for (int k = 2; k <= 4; ++k) {
                    pk *= p;
                    if (pk == q) return extension_field(p, k);
                }
            }
        }
    }
    throw std::invalid_argument("unknown ring tag '" + std::string(tag) + "'");
}

const std::vector<std::uint64_t>& Ring::modulus() const {
    static const std::vector<std::uint64_t> empty;
    return field_ ? field_->modulus : empty;
}

std::string Ring::tag() const {
    if (!field_) return "Z";
    return "F" + std::to_string(field_->order);
}

Ring Ring::prime_subfield() const {
    if (!field_ || field_->degree == 1) return *this;
    return prime_field(field_->p);
}

bool Ring::embeds_into(const Ring& other) const {
    if (*this == other) return true;
    return is_prime_field() && other.is_field() && other.characteristic() == characteristic();
}

bool operator==(const Ring& a, const Ring& b) {
    if (a.field_ == b.field_) return true;
    if (!a.field_ || !b.field_) return false;
    return a.field_->p == b.field_->p && a.field_->modulus == b.field_->modulus &&
           a.field_->degree == b.field_->degree;
}

std::vector<std::uint64_t> Ring::digits(const Integer& a) const {
    std::vector<std::uint64_t> out(field_->degree, 0);
    std::uint64_t c = to_u64(a);
    for (int i = 0; i < field_->degree; ++i) {
        out[i] = c % field_->p;
        c /= field_->p;
    }
    return out;
}

Integer Ring::encode(const std::vector<std::uint64_t>& d) const {
    std::uint64_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * field_->p + d[i];
    return Integer(c);
}

Integer Ring::from_integer(const Integer& n) const {
    if (!field_) return n;
    return Integer(mod_reduce(n, field_->p));
}

Integer Ring::generator() const {
    if (!field_ || field_->degree == 1) throw std::logic_error("ring " + tag() + " has no extension generator");
    return Integer(field_->p);
}

Integer Ring::add(const Integer& a, const Integer& b) const {
    if (!field_) return a + b;
    const std::uint64_t p = field_->p;
    if (field_->degree == 1) return Integer((to_u64(a) + to_u64(b)) % p);
    auto da = digits(a), db = digits(b);
    for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da);
}

Integer Ring::neg(const Integer& a) const {
    if (!field_) return -a;
    const std::uint64_t p = field_->p;
    if (field_->degree == 1) return Integer((p - to_u64(a)) % p);
    auto da = digits(a);
    for (auto& d : da) d = (p - d) % p;
    return encode(da);
}

Integer Ring::sub(const Integer& a, const Integer& b) const { return field_ ? add(a, neg(b)) : a - b; }

Integer Ring::mul(const Integer& a, const Integer& b) const {
    if (!field_) return a * b;
    const std::uint64_t p = field_->p;
    if (field_->degree == 1) return Integer((to_u64(a) * to_u64(b)) % p);
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(da.size() + db.size() - 1, 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    auto r = poly_rem(std::move(prod), field_->modulus, p);
    r.resize(field_->degree, 0);
    return encode(r);
}

Integer Ring::pow(const Integer& a, std::uint64_t e) const {
    Integer result = one();
    Integer base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Integer Ring::inv(const Integer& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!field_) {
        if (a == 1 || a == -1) return a;
        throw std::domain_error("integer " + a.str() + " is not a unit");
    }
    if (field_->degree == 1) return Integer(inv_mod(to_u64(a), field_->p));
    return pow(a, field_->order - 2);
}

bool Ring::divide(const Integer& a, const Integer& b, Integer& out) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (!field_) {
        if (a % b != 0) return false;
        out = a / b;
        return true;
    }
    out = mul(a, inv(b));
    return true;
}

Integer Ring::frobenius_root(const Integer& a) const {
    if (!field_) throw std::logic_error("p-th roots need a finite field");
    if (field_->degree == 1) return a;
    // a^(p^(k-1)) inverts a -> a^p on F_{p^k}
    Integer r = a;
    for (int i = 1; i < field_->degree; ++i) r = pow(r, field_->p);
    return r;
}

std::string Ring::format(const Integer& a) const {
    if (!field_ || field_->degree == 1) return a.str();
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (mono.empty())
            out += std::to_string(d[i]);
        else if (d[i] == 1)
            out += mono;
        else
            out += std::to_string(d[i]) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

std::vector<Integer> Ring::elements() const {
    if (!field_) throw std::logic_error("Z is infinite");
    std::vector<Integer> out;
    out.reserve(field_->order);
    for (std::uint64_t c = 0; c < field_->order; ++c) out.emplace_back(c);
    return out;
}

}  // namespace pfol
