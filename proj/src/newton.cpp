#include "pfol/newton.hpp"

#include "pfol/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace pfol {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<EdgeStep> steps_of(const std::vector<LatticePoint>& vertices) {
    std::vector<EdgeStep> out;
    if (vertices.size() < 2) return out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const LatticePoint d = vertices[(i + 1) % vertices.size()] - vertices[i];
        const long long g = std::gcd(d.x, d.y);
        out.push_back({{d.x / g, d.y / g}, g});
    }
    return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::vector<LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope P;
    if (points.size() == 1) {
        P.vertices_ = points;
        return P;
    }
    // Andrew's monotone chain, dropping collinear points
    std::vector<LatticePoint> chain(2 * points.size());
    std::size_t k = 0;
    for (const auto& pt : points) {
        while (k >= 2 && cross(chain[k - 2], chain[k - 1], pt) <= 0) --k;
        chain[k++] = pt;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(chain[k - 2], chain[k - 1], points[i]) <= 0) --k;
        chain[k++] = points[i];
    }
    chain.resize(k - 1);
    P.vertices_ = std::move(chain);
    P.edges_ = steps_of(P.vertices_);
    return P;
}

LatticePolytope newton_polytope(const SparsePoly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("Newton polygons need a bivariate polynomial");
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no Newton polygon");
    std::vector<LatticePoint> support;
    support.reserve(f.size());
    for (const auto& t : f.terms()) support.push_back({t.exponent[0], t.exponent[1]});
    return LatticePolytope::hull(std::move(support));
}

std::vector<EdgeStep> primitive_edge_vectors(const LatticePolytope& P) {
    if (P.is_point()) throw std::invalid_argument("a point has no edges");
    return P.edges();
}

bool is_indecomposable(const LatticePolytope& P) {
    const auto edges = primitive_edge_vectors(P);
    long long min_x = P.vertices()[0].x, max_x = min_x, min_y = P.vertices()[0].y, max_y = min_y;
    for (const auto& v : P.vertices()) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const long long W = max_x - min_x;
    const long long H = max_y - min_y;

    // A proper zero-sum sub-multiset exists iff one avoiding a fixed copy of the
    // first edge exists (take the complement otherwise). Taken in boundary
    // order, its partial sums walk the boundary of a summand of P, whose
    // extent is bounded by that of P.
    auto key = [&](long long x, long long y) { return (x + W) * (2 * H + 1) + (y + H); };
    std::unordered_set<long long> sums;
    std::vector<LatticePoint> frontier;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const long long copies = edges[i].multiplicity - (i == 0 ? 1 : 0);
        if (copies == 0) continue;
        const LatticePoint v = edges[i].direction;
        std::vector<LatticePoint> next;
        std::vector<LatticePoint> bases = frontier;
        bases.push_back({0, 0});
        for (const auto& base : bases) {
            for (long long c = 1; c <= copies; ++c) {
                const long long x = base.x + c * v.x;
                const long long y = base.y + c * v.y;
                if (std::llabs(x) > W || std::llabs(y) > H) break;
                if (x == 0 && y == 0) return false;
                if (sums.insert(key(x, y)).second) next.push_back({x, y});
            }
        }
        frontier.insert(frontier.end(), next.begin(), next.end());
    }
    return true;
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    std::vector<LatticePoint> sums;
    sums.reserve(P.vertices().size() * Q.vertices().size());
    for (const auto& a : P.vertices()) {
        for (const auto& b : Q.vertices()) sums.push_back(a + b);
    }
    return LatticePolytope::hull(std::move(sums));
}

bool verify_polytope_figure(const std::vector<LatticePoint>& expected, const SparsePoly& f) {
    std::vector<LatticePoint> want = expected;
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::vector<LatticePoint> got = newton_polytope(f).vertices();
    std::sort(got.begin(), got.end());
    return got == want;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::irreducible_by_polytope: return "IrreducibleByPolytope";
        case VerdictStatus::irreducible_by_factor_search: return "IrreducibleByFactorSearch";
        case VerdictStatus::irreducible_by_quadratic_roots: return "IrreducibleByQuadraticRoots";
        case VerdictStatus::reducible: return "Reducible";
        case VerdictStatus::inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Backend b) {
    switch (b) {
        case Backend::polytope: return "polytope";
        case Backend::factor_search: return "factor_search";
        case Backend::quadratic: return "quadratic";
        case Backend::both: return "both";
        case Backend::automatic: return "auto";
    }
    return "?";
}

Backend backend_from_string(const std::string& name) {
    for (Backend b : {Backend::polytope, Backend::factor_search, Backend::quadratic, Backend::both,
                      Backend::automatic}) {
        if (to_string(b) == name) return b;
    }
    throw std::invalid_argument("unknown backend '" + name + "' (polytope, factor_search, quadratic, both, auto)");
}

namespace {

struct BackendResult {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::optional<SparsePoly> witness;
    int bound = 0;
    std::string reason;
};

BackendResult polytope_backend(const SparsePoly& h) {
    const LatticePolytope P = newton_polytope(h);
    if (is_indecomposable(P)) {
        return {VerdictStatus::irreducible_by_polytope, std::nullopt, 0,
                "Newton polygon with " + std::to_string(P.vertices().size()) + " vertices is indecomposable"};
    }
    return {VerdictStatus::inconclusive, std::nullopt, 0, "Newton polygon is decomposable"};
}

// Bivariate monomials of total degree <= k in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(long long k) {
    std::vector<Monomial> out;
    for (long long d = 0; d <= k; ++d) {
        for (long long i = 0; i <= d; ++i) {
            out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i), 0});
        }
    }
    return out;
}

long double candidate_count(std::uint64_t q, long long k) {
    // monic candidates: leading monomial at ascending index i leaves q^i choices
    const long long n = (k + 1) * (k + 2) / 2;
    long double total = 0;
    for (long long i = 1; i < n; ++i) total += std::pow(static_cast<long double>(q), static_cast<long double>(i));
    return total;
}

BackendResult factor_search_backend(const SparsePoly& h, int bound, std::uint64_t ceiling) {
    const Ring& R = h.ring();
    if (!R.is_field()) throw std::invalid_argument("factor search needs a finite coefficient field, got " + R.tag());
    const long long half = h.total_degree().value() / 2;
    long long target = std::min<long long>(bound, half);
    long long k = 0;
    while (k < target && candidate_count(R.order(), k + 1) <= static_cast<long double>(ceiling)) ++k;

    const auto elements = R.elements();
    const auto mons = monomials_up_to(k);
    const Monomial lead_h = h.leading_term().exponent;
    const Monomial trail_h = h.trailing_term().exponent;
    const std::uint64_t q = R.order();

    for (std::size_t top = 1; top < mons.size(); ++top) {
        const Monomial& m = mons[top];
        if (!divides(m, lead_h)) continue;
        std::vector<std::uint64_t> digits(top, 0);
        while (true) {
            bool free_of_x = m[0] == 0;
            bool free_of_y = m[1] == 0;
            std::size_t lowest = top;
            for (std::size_t i = 0; i < top; ++i) {
                if (digits[i] == 0) continue;
                free_of_x |= mons[i][0] == 0;
                free_of_y |= mons[i][1] == 0;
                if (lowest == top) lowest = i;
            }
            // h has no monomial factor, so neither has any factor of it
            if (free_of_x && free_of_y && divides(mons[lowest], trail_h)) {
                std::vector<Term> terms{{m, R.one()}};
                for (std::size_t i = 0; i < top; ++i) {
                    if (digits[i] != 0) terms.push_back({mons[i], elements[digits[i]]});
                }
                SparsePoly g = SparsePoly::from_terms(R, 2, std::move(terms));
                if (exact_div(h, g)) {
                    return {VerdictStatus::reducible, std::move(g), static_cast<int>(k), "factor found by search"};
                }
            }
            std::size_t pos = 0;
            while (pos < top && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == top) break;
        }
    }
    if (k == half) {
        return {VerdictStatus::irreducible_by_factor_search, std::nullopt, static_cast<int>(k),
                "no factor of degree <= " + std::to_string(k) + " = floor(deg/2) over " + R.tag()};
    }
    return {VerdictStatus::inconclusive, std::nullopt, static_cast<int>(k),
            "bound exhausted: no factor of degree <= " + std::to_string(k) + " over " + R.tag() +
                ", floor(deg/2) = " + std::to_string(half)};
}

// Univariate coefficient vector (in variable t) of the part of h with
// v-exponent e.
std::vector<Integer> slice(const SparsePoly& h, int v, std::uint32_t e) {
    const int t = 1 - v;
    std::vector<Integer> out;
    for (const auto& term : h.terms()) {
        if (term.exponent[v] != e) continue;
        const std::size_t i = term.exponent[t];
        if (out.size() <= i) out.resize(i + 1, 0);
        out[i] = term.coeff;
    }
    return out;
}

// Over F2, h monic quadratic in v factors over the algebraic closure iff
// h = (v + r)(v + r + L) with r^2 + L r = M; Frobenius permutes the two roots,
// so r has coefficients in F4. r -> r^2 + L r is F2-linear and deg r is
// bounded, so the root search is a linear system over F2.
BackendResult quadratic_backend(const SparsePoly& h) {
    const Ring& R = h.ring();
    if (!(R.is_prime_field() && R.characteristic() == 2)) {
        return {VerdictStatus::inconclusive, std::nullopt, 0, "quadratic test needs coefficients in F2"};
    }
    int v = -1;
    for (int cand : {0, 1}) {
        if (h.degree_in(cand) != 2) continue;
        const auto lead = slice(h, cand, 2);
        if (lead.size() == 1 && lead[0] == 1) {
            v = cand;
            break;
        }
    }
    if (v < 0) return {VerdictStatus::inconclusive, std::nullopt, 0, "not monic quadratic in x or y"};
    const int t = 1 - v;
    const auto L = slice(h, v, 1);
    const auto M = slice(h, v, 0);
    const long long degL = static_cast<long long>(L.size()) - 1;
    const long long degM = static_cast<long long>(M.size()) - 1;
    const long long D = std::max<long long>({degL, (degM + 1) / 2, 0});

    const Ring F4 = Ring::extension_field(2, 2);
    auto tpow = [&](long long i) {
        Monomial m{};
        m[t] = static_cast<std::uint32_t>(i);
        return m;
    };
    std::vector<Term> lterms;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i] != 0) lterms.push_back({tpow(i), 1});
    }
    const SparsePoly Lp = SparsePoly::from_terms(F4, 2, std::move(lterms));

    const long long rows_t = std::max({2 * D, D + std::max<long long>(degL, 0), std::max<long long>(degM, 0)}) + 1;
    const std::size_t nrows = static_cast<std::size_t>(2 * rows_t);
    const std::size_t ncols = static_cast<std::size_t>(2 * (D + 1));
    std::vector<std::vector<std::uint8_t>> mat(nrows, std::vector<std::uint8_t>(ncols + 1, 0));
    auto row_of = [&](std::uint32_t tdeg, int bit) { return 2 * static_cast<std::size_t>(tdeg) + bit; };

    for (long long i = 0; i <= D; ++i) {
        for (int j = 0; j < 2; ++j) {
            const SparsePoly e = SparsePoly::monomial(F4, tpow(i), j == 0 ? Integer(1) : F4.generator(), 2);
            const SparsePoly image = e * e + Lp * e;
            const std::size_t col = static_cast<std::size_t>(2 * i + j);
            for (const auto& term : image.terms()) {
                for (int bit = 0; bit < 2; ++bit) {
                    if (bit_test(term.coeff, bit)) mat[row_of(term.exponent[t], bit)][col] = 1;
                }
            }
        }
    }
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (M[i] != 0) mat[row_of(static_cast<std::uint32_t>(i), 0)][ncols] = 1;
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = rank;
        while (piv < nrows && !mat[piv][col]) ++piv;
        if (piv == nrows) continue;
        std::swap(mat[piv], mat[rank]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r != rank && mat[r][col]) {
                for (std::size_t c = col; c <= ncols; ++c) mat[r][c] ^= mat[rank][c];
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < nrows; ++r) {
        if (mat[r][ncols]) {
            return {VerdictStatus::irreducible_by_quadratic_roots, std::nullopt, 0,
                    std::string("r^2 + L r = M has no polynomial root over F4 (monic quadratic in ") +
                        (v == 0 ? "x" : "y") + ")"};
        }
    }

    std::vector<Integer> root(static_cast<std::size_t>(D + 1), 0);
    for (std::size_t r = 0; r < rank; ++r) {
        if (!mat[r][ncols]) continue;
        const std::size_t col = pivot_col[r];
        root[col / 2] += (col % 2 == 0) ? 1 : 2;
    }
    std::vector<Term> fterms;
    Monomial vm{};
    vm[v] = 1;
    fterms.push_back({vm, 1});
    for (std::size_t i = 0; i < root.size(); ++i) {
        if (root[i] != 0) fterms.push_back({tpow(static_cast<long long>(i)), root[i]});
    }
    SparsePoly factor = SparsePoly::from_terms(F4, 2, std::move(fterms));
    if (!exact_div(change_ring(h, F4), factor)) {
        throw std::logic_error("quadratic root does not divide " + h.str());
    }
    return {VerdictStatus::reducible, std::move(factor), 0, "linear factor over F4"};
}

}  // namespace

IrreducibilityVerdict certify_irreducible(const SparsePoly& f, const CertifyOptions& options) {
    if (f.nvars() != 2) throw std::invalid_argument("irreducibility certificates need a bivariate polynomial");
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("irreducibility of a constant is undefined");
    const bool searches = options.backend == Backend::factor_search || options.backend == Backend::both;
    if (searches && !f.ring().is_field()) {
        throw std::invalid_argument("factor search needs a finite coefficient field, got " + f.ring().tag());
    }
    if (options.backend == Backend::quadratic &&
        !(f.ring().is_prime_field() && f.ring().characteristic() == 2)) {
        throw std::invalid_argument("the quadratic backend works over F2, got " + f.ring().tag());
    }

    IrreducibilityVerdict out;
    auto content = monomial_content(f);
    out.stripped_monomial = content.monomial;
    out.cofactor = content.cofactor;
    const SparsePoly& h = out.cofactor;
    const bool has_monomial = content.monomial != Monomial{};

    if (has_monomial) {
        const int var = content.monomial[0] > 0 ? 0 : 1;
        if (f.total_degree().value() == 1) {
            out.status = VerdictStatus::irreducible_by_factor_search;
            out.reason = "linear polynomial";
            return out;
        }
        out.status = VerdictStatus::reducible;
        out.witness = SparsePoly::variable(f.ring(), var, 2);
        out.reason = std::string("divisible by ") + (var == 0 ? "x" : "y");
        return out;
    }

    auto adopt = [&](const BackendResult& r) {
        out.status = r.status;
        out.witness = r.witness;
        out.reason = r.reason;
        if (r.status == VerdictStatus::irreducible_by_factor_search || r.status == VerdictStatus::inconclusive) {
            out.search_bound = std::max(out.search_bound, r.bound);
        }
    };

    switch (options.backend) {
        case Backend::polytope: {
            auto r = polytope_backend(h);
            out.polytope_status = r.status;
            adopt(r);
            break;
        }
        case Backend::quadratic: {
            auto r = quadratic_backend(h);
            out.quadratic_status = r.status;
            adopt(r);
            break;
        }
        case Backend::factor_search: {
            auto r = factor_search_backend(h, options.factor_bound, options.max_candidates);
            out.factor_search_status = r.status;
            out.search_bound = r.bound;
            adopt(r);
            break;
        }
        case Backend::both: {
            auto poly = polytope_backend(h);
            auto search = factor_search_backend(h, options.factor_bound, options.max_candidates);
            out.polytope_status = poly.status;
            out.factor_search_status = search.status;
            out.search_bound = search.bound;
            if (search.status == VerdictStatus::reducible && poly.status == VerdictStatus::irreducible_by_polytope) {
                throw std::logic_error("polytope and factor search disagree on " + h.str());
            }
            adopt(poly.status == VerdictStatus::irreducible_by_polytope ? poly : search);
            break;
        }
        case Backend::automatic: {
            auto poly = polytope_backend(h);
            out.polytope_status = poly.status;
            if (poly.status != VerdictStatus::inconclusive) {
                adopt(poly);
                break;
            }
            auto quad = quadratic_backend(h);
            out.quadratic_status = quad.status;
            if (quad.status != VerdictStatus::inconclusive) {
                adopt(quad);
                break;
            }
            if (!h.ring().is_field()) {
                adopt(poly);
                break;
            }
            auto search = factor_search_backend(h, options.factor_bound, options.max_candidates);
            out.factor_search_status = search.status;
            out.search_bound = search.bound;
            adopt(search);
            break;
        }
    }
    return out;
}

}  // namespace pfol
