#pragma once

// Non-algebraicity certificate: an integer vector field has no affine
// algebraic invariant curve when it is nondicritical, has good reduction at 2
// with an irreducible 2-divisor (after discarding non-invariant coordinate
// lines), and that divisor is too large to be an invariant curve.

#include "pfol/foliation.hpp"
#include "pfol/newton.hpp"

#include <string>
#include <vector>

namespace pfol {

enum class HypothesisStatus { proved, evidence, failed, assumed };
std::string to_string(HypothesisStatus s);
/// Proved and Assumed rank 2, Evidence 1, Failed 0.
int strength(HypothesisStatus s);

struct Hypothesis {
    std::string name;
    HypothesisStatus status = HypothesisStatus::failed;
    std::string detail;
};

enum class Conclusion {
    no_algebraic_solutions,
    unique_invariant_curve_line_at_infinity,
    conditional_on_dicriticality,
    not_established,
};
std::string to_string(Conclusion c);

struct CertificateDegrees {
    long long foliation_degree = 0;
    bool line_at_infinity_invariant = false;
    long long divisor_affine_degree = 0;
    long long expected_projective_degree = 0;
    long long z_multiplicity = 0;
    long long remainder_degree = 0;  // after stripping coordinate lines
    long long carnicer_bound = 0;
    bool inequality_holds = false;   // d > 1 and remainder degree > d + 2
};

struct CertificateReport {
    // integer coefficients, dicriticality, good reduction at 2, divisor irreducibility
    std::vector<Hypothesis> hypotheses;
    CertificateDegrees degrees;
    Conclusion conclusion = Conclusion::not_established;
    std::vector<std::string> evidence;
};

struct CertificateOptions {
    bool assert_nondicritical = false;
    int max_extension_degree = 4;
    CertifyOptions irreducibility{Backend::automatic, 4, std::uint64_t{1} << 22};
};

/// Conclusion from the four hypothesis statuses (in report order), the degree
/// inequality and l_inf invariance. Monotone in every status.
Conclusion conclude(const std::vector<Hypothesis>& hypotheses, bool inequality_holds,
                    bool line_at_infinity_invariant);

/// Throws std::invalid_argument unless v is over Z.
CertificateReport theorem_main_certificate(const PlaneVectorField& v, const CertificateOptions& options = {});

}  // namespace pfol
