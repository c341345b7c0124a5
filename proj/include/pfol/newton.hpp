#pragma once

// Newton polygons of bivariate polynomials, Minkowski indecomposability and
// irreducibility certificates.

#include "pfol/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pfol {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

/// A primitive lattice vector repeated `multiplicity` times along one edge.
struct EdgeStep {
    LatticePoint direction;
    long long multiplicity = 0;

    friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

/// Convex lattice polygon (possibly a segment or a point). Vertices are in
/// strictly convex position, counterclockwise, starting from the
/// lexicographically least one.
class LatticePolytope {
public:
    /// Convex hull of a nonempty point set.
    static LatticePolytope hull(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    /// Boundary traversal split into primitive steps, in counterclockwise order.
    const std::vector<EdgeStep>& edges() const { return edges_; }
    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

private:
    std::vector<LatticePoint> vertices_;
    std::vector<EdgeStep> edges_;
};

/// Throws std::invalid_argument for the zero polynomial or arity != 2.
LatticePolytope newton_polytope(const SparsePoly& f);
/// Throws std::invalid_argument for a point polytope.
std::vector<EdgeStep> primitive_edge_vectors(const LatticePolytope& P);
/// True iff no proper nonempty sub-multiset of the primitive edge vectors sums
/// to zero. Throws std::invalid_argument for a point polytope.
bool is_indecomposable(const LatticePolytope& P);
LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);
/// Computed hull vertex set equals `expected` (order ignored).
bool verify_polytope_figure(const std::vector<LatticePoint>& expected, const SparsePoly& f);

enum class Backend {
    polytope,
    factor_search,
    quadratic,
    both,       // polytope and factor search, both recorded
    automatic,  // polytope, then quadratic, then factor search
};

enum class VerdictStatus {
    irreducible_by_polytope,
    irreducible_by_factor_search,
    irreducible_by_quadratic_roots,
    reducible,
    inconclusive,
};

std::string to_string(VerdictStatus s);
std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

struct CertifyOptions {
    Backend backend = Backend::automatic;
    int factor_bound = 4;
    std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

struct IrreducibilityVerdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    Monomial stripped_monomial{};
    SparsePoly cofactor;                 // input divided by the stripped monomial
    std::optional<SparsePoly> witness;   // verified proper factor when reducible
    int search_bound = 0;                // degree bound covered by factor search
    std::string reason;
    std::optional<VerdictStatus> polytope_status;
    std::optional<VerdictStatus> quadratic_status;
    std::optional<VerdictStatus> factor_search_status;

    /// Irreducible over the algebraic closure of the coefficient field.
    bool absolutely_irreducible() const {
        return status == VerdictStatus::irreducible_by_polytope ||
               status == VerdictStatus::irreducible_by_quadratic_roots;
    }
    bool irreducible() const {
        return absolutely_irreducible() || status == VerdictStatus::irreducible_by_factor_search;
    }
};

/// Throws std::invalid_argument for constant input, or when factor search is
/// requested over Z.
IrreducibilityVerdict certify_irreducible(const SparsePoly& f, const CertifyOptions& options = {});

}  // namespace pfol
