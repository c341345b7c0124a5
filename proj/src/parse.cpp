#include "pfol/parse.hpp"

#include <cctype>
#include <limits>

namespace pfol {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ring& ring, int nvars) : text_(text), ring_(ring), nvars_(nvars) {}

    SparsePoly parse() {
        SparsePoly result = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        SparsePoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    SparsePoly factor() {
        SparsePoly b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            Integer e = digits();
            if (e > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large", start);
            b = pow(b, e.convert_to<long long>());
        }
        return b;
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        Integer n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected unsigned integer", start);
        return n;
    }

    SparsePoly base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return SparsePoly::constant(ring_, ring_.from_integer(digits()), nvars_);
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            const int var = c - 'x';
            if (var >= nvars_) throw ParseError(std::string("variable '") + c + "' not available in this arity", pos_);
            ++pos_;
            return SparsePoly::variable(ring_, var, nvars_);
        }
        if (c == 'a') {
            if (ring_.extension_degree() < 2) {
                throw ParseError("generator 'a' is not representable in " + ring_.tag(), pos_);
            }
            ++pos_;
            return SparsePoly::constant(ring_, ring_.generator(), nvars_);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    const Ring& ring_;
    int nvars_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
    static constexpr char names[kMaxVars] = {'x', 'y', 'z'};
    std::string out;
    for (int v = 0; v < kMaxVars; ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[v];
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out;
}

}  // namespace

SparsePoly parse_poly(std::string_view text, const Ring& ring, int nvars) {
    return Parser(text, ring, nvars).parse();
}

std::string print_poly(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    const Ring& R = f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const std::string mono = monomial_text(t.exponent);
        Integer c = t.coeff;
        bool negative = R.is_integers() && c < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string coeff = R.format(c);
        if (coeff.find('+') != std::string::npos || coeff.find('*') != std::string::npos) {
            coeff = "(" + coeff + ")";
        }
        if (mono.empty())
            out += coeff;
        else if (c == 1)
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::string SparsePoly::str() const { return print_poly(*this); }

}  // namespace pfol
