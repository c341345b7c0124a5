#include "pfol/certificate.hpp"

#include "pfol/families.hpp"

#include <stdexcept>

namespace pfol {

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::proved: return "Proved";
        case HypothesisStatus::evidence: return "Evidence";
        case HypothesisStatus::failed: return "Failed";
        case HypothesisStatus::assumed: return "Assumed";
    }
    return "?";
}

int strength(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::proved:
        case HypothesisStatus::assumed: return 2;
        case HypothesisStatus::evidence: return 1;
        case HypothesisStatus::failed: return 0;
    }
    return 0;
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::no_algebraic_solutions: return "NoAlgebraicSolutions";
        case Conclusion::unique_invariant_curve_line_at_infinity: return "UniqueInvariantCurveLineAtInfinity";
        case Conclusion::conditional_on_dicriticality: return "ConditionalOnDicriticality";
        case Conclusion::not_established: return "NotEstablished";
    }
    return "?";
}

namespace {

constexpr std::size_t kDicriticality = 1;

}  // namespace

Conclusion conclude(const std::vector<Hypothesis>& hypotheses, bool inequality_holds,
                    bool line_at_infinity_invariant) {
    if (!inequality_holds) return Conclusion::not_established;
    bool conditional = false;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
        const int s = strength(hypotheses[i].status);
        if (s == 0) return Conclusion::not_established;
        if (s == 1) {
            // only the dicriticality gap has its own conclusion level
            if (i != kDicriticality) return Conclusion::not_established;
            conditional = true;
        }
    }
    if (conditional) return Conclusion::conditional_on_dicriticality;
    return line_at_infinity_invariant ? Conclusion::unique_invariant_curve_line_at_infinity
                                      : Conclusion::no_algebraic_solutions;
}

namespace {

Hypothesis dicriticality(const PlaneVectorField& v2, const CertificateOptions& options,
                         std::vector<std::string>& evidence) {
    if (options.assert_nondicritical) {
        return {"nondicritical", HypothesisStatus::assumed, "asserted by the caller"};
    }
    std::size_t total = 0;
    std::string dicritical_at;
    for (int k = 1; k <= options.max_extension_degree; ++k) {
        const auto points = singular_points_over(v2, k);
        total += points.size();
        for (const auto& pt : points) {
            const JetReport jet = first_jet_dicritical_at(v2, pt);
            if (jet.dicritical && dicritical_at.empty()) dicritical_at = jet.point;
        }
        evidence.push_back(std::to_string(points.size()) + " affine singular point(s) of the reduction over " +
                           Ring::extension_field(2, k).tag());
    }
    if (!dicritical_at.empty()) {
        return {"nondicritical", HypothesisStatus::failed, "first jet is radial at " + dicritical_at};
    }
    return {"nondicritical", HypothesisStatus::evidence,
            "no radial first jet among " + std::to_string(total) +
                " singular points of the reduction over F_{2^k}, k <= " +
                std::to_string(options.max_extension_degree) + "; not a proof over C"};
}

}  // namespace

CertificateReport theorem_main_certificate(const PlaneVectorField& v, const CertificateOptions& options) {
    if (!v.ring().is_integers()) throw std::invalid_argument("the certificate needs an integer vector field");
    CertificateReport out;
    const Ring F2 = Ring::prime_field(2);
    const DegreeReport over_z = degree_and_linf(v);
    out.degrees.foliation_degree = over_z.foliation_degree;
    out.degrees.line_at_infinity_invariant = over_z.line_at_infinity_invariant;
    out.degrees.carnicer_bound = carnicer_bound(over_z.foliation_degree);

    out.hypotheses.push_back({"integer coefficients", HypothesisStatus::proved, "vector field is defined over Z"});

    const SparsePoly a2 = reduce_mod_p(v.A(), 2);
    const SparsePoly b2 = reduce_mod_p(v.B(), 2);
    if (a2.is_zero() && b2.is_zero()) {
        out.hypotheses.push_back({"nondicritical", options.assert_nondicritical ? HypothesisStatus::assumed
                                                                                : HypothesisStatus::failed,
                                  "reduction modulo 2 is zero"});
        out.hypotheses.push_back({"good reduction at 2", HypothesisStatus::failed, "vector field vanishes modulo 2"});
        out.hypotheses.push_back({"irreducible 2-divisor", HypothesisStatus::failed, "no reduction modulo 2"});
        out.conclusion = conclude(out.hypotheses, false, over_z.line_at_infinity_invariant);
        return out;
    }
    const PlaneVectorField v2(a2, b2);

    out.hypotheses.push_back(dicriticality(v2, options, out.evidence));

    const GoodReduction good = good_reduction_at(v, 2);
    out.hypotheses.push_back({"good reduction at 2", good.good ? HypothesisStatus::proved : HypothesisStatus::failed,
                              good.reason});

    const PDivisorResult div = p_divisor(v2);
    Hypothesis irreducible{"irreducible 2-divisor", HypothesisStatus::failed, ""};
    if (div.p_closed) {
        irreducible.detail = "the reduction is 2-closed, so there is no 2-divisor";
    } else {
        out.degrees.divisor_affine_degree = div.affine_degree;
        out.degrees.expected_projective_degree = div.expected_projective_degree;
        out.degrees.z_multiplicity = div.z_multiplicity;
        out.evidence.push_back("2-divisor " + div.f.str());
        std::string invariant_line;
        for (const auto& comp : div.components) {
            const bool inv = is_invariant_curve(v2, comp.factor);
            out.evidence.push_back("component {" + comp.factor.str() + " = 0}^" + std::to_string(comp.multiplicity) +
                                   (inv ? " is invariant" : " is not invariant"));
            if (inv && invariant_line.empty()) invariant_line = comp.factor.str();
        }
        if (!invariant_line.empty()) {
            irreducible.detail = "stripped component {" + invariant_line + " = 0} is invariant";
        } else if (div.cofactor.is_constant()) {
            irreducible.status = HypothesisStatus::proved;
            irreducible.detail = "2-divisor consists of non-invariant coordinate lines only";
        } else {
            out.degrees.remainder_degree = div.cofactor.total_degree().value();
            const IrreducibilityVerdict verdict = certify_irreducible(div.cofactor, options.irreducibility);
            std::string detail = to_string(verdict.status) + ": " + verdict.reason;
            if (verdict.witness) detail += "; factor " + verdict.witness->str() + " over " + verdict.witness->ring().tag();
            if (verdict.absolutely_irreducible()) {
                irreducible.status = HypothesisStatus::proved;
            } else if (verdict.irreducible()) {
                irreducible.status = HypothesisStatus::evidence;
                detail += " (irreducible over F2 only)";
            } else if (verdict.status == VerdictStatus::inconclusive) {
                detail += " (not certified)";
            }
            irreducible.detail = std::move(detail);
        }
    }
    out.hypotheses.push_back(std::move(irreducible));

    const long long d = over_z.foliation_degree;
    out.degrees.inequality_holds = d > 1 && out.degrees.remainder_degree > out.degrees.carnicer_bound;
    out.evidence.push_back("remainder degree " + std::to_string(out.degrees.remainder_degree) + " vs bound " +
                           std::to_string(out.degrees.carnicer_bound));
    out.conclusion = conclude(out.hypotheses, out.degrees.inequality_holds, over_z.line_at_infinity_invariant);
    return out;
}

}  // namespace pfol
