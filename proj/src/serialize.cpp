#include "pfol/serialize.hpp"

namespace pfol {

namespace {

Json point(const LatticePoint& p) { return Json::array({p.x, p.y}); }

}  // namespace

Json to_json(const SparsePoly& f) { return f.str(); }

Json to_json(const PlaneVectorField& v) {
    return Json{{"ring", v.ring().tag()}, {"A", v.A().str()}, {"B", v.B().str()}};
}

Json to_json(const DegreeReport& d) {
    return Json{{"top_degree", d.top_degree},
                {"foliation_degree", d.foliation_degree},
                {"line_at_infinity_invariant", d.line_at_infinity_invariant},
                {"witness", d.witness.str()}};
}

Json to_json(const PDivisorResult& r) {
    Json out{{"p", r.p}, {"divisor", r.f.str()}, {"p_closed", r.p_closed}, {"degree", to_json(r.degree)}};
    if (r.p_closed) return out;
    out["affine_degree"] = r.affine_degree;
    out["expected_projective_degree"] = r.expected_projective_degree;
    out["z_multiplicity"] = r.z_multiplicity;
    out["degree_consistent"] = r.degree_consistent;
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back({{"factor", c.factor.str()}, {"multiplicity", c.multiplicity}});
    out["components"] = std::move(comps);
    out["cofactor"] = r.cofactor.str();
    return out;
}

Json to_json(const LatticePolytope& P) {
    Json vertices = Json::array();
    for (const auto& v : P.vertices()) vertices.push_back(point(v));
    Json edges = Json::array();
    for (const auto& e : P.edges()) edges.push_back({{"direction", point(e.direction)}, {"multiplicity", e.multiplicity}});
    return Json{{"vertices", std::move(vertices)}, {"primitive_edges", std::move(edges)}};
}

Json to_json(const IrreducibilityVerdict& v) {
    Json out{{"status", to_string(v.status)}, {"reason", v.reason}};
    out["stripped_monomial"] = Json::array({v.stripped_monomial[0], v.stripped_monomial[1]});
    out["cofactor"] = v.cofactor.str();
    if (v.witness) out["witness"] = {{"factor", v.witness->str()}, {"ring", v.witness->ring().tag()}};
    if (v.status == VerdictStatus::irreducible_by_factor_search || v.factor_search_status) {
        out["search_bound"] = v.search_bound;
    }
    Json backends = Json::object();
    if (v.polytope_status) backends["polytope"] = to_string(*v.polytope_status);
    if (v.quadratic_status) backends["quadratic"] = to_string(*v.quadratic_status);
    if (v.factor_search_status) backends["factor_search"] = to_string(*v.factor_search_status);
    out["backends"] = std::move(backends);
    out["absolutely_irreducible"] = v.absolutely_irreducible();
    return out;
}

Json to_json(const CertificateReport& r) {
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) {
        hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
    }
    const auto& d = r.degrees;
    Json degrees{{"foliation_degree", d.foliation_degree},
                 {"line_at_infinity_invariant", d.line_at_infinity_invariant},
                 {"divisor_affine_degree", d.divisor_affine_degree},
                 {"expected_projective_degree", d.expected_projective_degree},
                 {"z_multiplicity", d.z_multiplicity},
                 {"remainder_degree", d.remainder_degree},
                 {"carnicer_bound", d.carnicer_bound},
                 {"inequality_holds", d.inequality_holds}};
    return Json{{"hypotheses", std::move(hyps)},
                {"degrees", std::move(degrees)},
                {"conclusion", to_string(r.conclusion)},
                {"evidence", r.evidence}};
}

Json to_json(const FamilyVerification& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    Json out{{"spec", v.spec.name()}, {"ok", v.all_ok()}, {"checks", std::move(checks)}};
    out["divisor"] = to_json(v.divisor);
    if (v.expected) out["expected"] = v.expected->str();
    if (!v.divisor.p_closed) out["verdict"] = to_json(v.verdict);
    return out;
}

}  // namespace pfol
