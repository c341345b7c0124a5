// pfol: p-th powers, p-divisors, Newton polygons and non-algebraicity
// certificates for plane polynomial vector fields.
//
// Exit codes: 0 computed, 1 verification mismatch, 2 input error.

#include "pfol/certificate.hpp"
#include "pfol/families.hpp"
#include "pfol/parse.hpp"
#include "pfol/serialize.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace pfol;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct FieldArgs {
    std::string A, B, ring;
    std::string jouanolou, claudia, family_f, family_g;

    void attach(CLI::App* cmd, bool with_ring = true) {
        cmd->add_option("--A", A, "x-component A(x,y)");
        cmd->add_option("--B", B, "y-component B(x,y)");
        if (with_ring) cmd->add_option("--ring", ring, "coefficient ring: Z, F<p> or F<p^k>");
        cmd->add_option("--jouanolou", jouanolou, "Jouanolou family: d");
        cmd->add_option("--claudia", claudia, "Claudia family: d,a,b,c");
        cmd->add_option("--family-f", family_f, "family F: e,a,b,c");
        cmd->add_option("--family-g", family_g, "family G: d,u,a,b,c");
    }

    std::optional<FamilySpec> family() const {
        std::optional<FamilySpec> out;
        auto take = [&](const std::string& kind, const std::string& params) {
            if (params.empty()) return;
            if (out) throw std::invalid_argument("give at most one family shortcut");
            out = FamilySpec::parse(kind, params);
        };
        take("jouanolou", jouanolou);
        take("claudia", claudia);
        take("family-f", family_f);
        take("family-g", family_g);
        return out;
    }

    PlaneVectorField field(const Ring& R) const {
        if (auto spec = family()) {
            if (!A.empty() || !B.empty()) throw std::invalid_argument("give either --A/--B or a family shortcut");
            return make_field(*spec, R);
        }
        if (A.empty() || B.empty()) throw std::invalid_argument("both --A and --B are required");
        return PlaneVectorField(parse_poly(A, R), parse_poly(B, R));
    }
};

// Ring for p-th power computations: --ring defaults to F<p>; Z inputs are reduced mod p.
PlaneVectorField field_in_char(const FieldArgs& args, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("--p must be prime, got " + std::to_string(p));
    const Ring R = args.ring.empty() ? Ring::prime_field(p) : Ring::from_tag(args.ring);
    if (R.is_integers()) return args.field(R).over(Ring::prime_field(p));
    if (R.characteristic() != p) {
        throw std::invalid_argument("ring " + R.tag() + " does not have characteristic " + std::to_string(p));
    }
    return args.field(R);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json envelope(const std::string& command) { return Json{{"schema", kJsonSchema}, {"command", command}}; }

int run_pcampo(const FieldArgs& args, std::uint64_t p, bool json) {
    const PlaneVectorField v = field_in_char(args, p);
    const VectorPair vp = p_power(v, p);
    if (json) {
        Json doc = envelope("pcampo");
        doc["p"] = p;
        doc["field"] = to_json(v);
        doc["vp_x"] = vp.x_component.str();
        doc["vp_y"] = vp.y_component.str();
        emit(doc);
    } else {
        std::cout << "v^" << p << "(x) = " << vp.x_component.str() << "\n";
        std::cout << "v^" << p << "(y) = " << vp.y_component.str() << "\n";
    }
    return kOk;
}

int run_pdiv(const FieldArgs& args, std::uint64_t p, bool json) {
    const PlaneVectorField v = field_in_char(args, p);
    const PDivisorResult r = p_divisor(v);
    if (json) {
        Json doc = envelope("pdiv");
        doc["field"] = to_json(v);
        doc["result"] = to_json(r);
        emit(doc);
        return kOk;
    }
    std::cout << r.f.str() << "\n";
    std::cout << "p-closed: " << (r.p_closed ? "yes" : "no") << "\n";
    std::cout << "foliation degree: " << r.degree.foliation_degree << " (l_inf "
              << (r.degree.line_at_infinity_invariant ? "invariant" : "not invariant") << ")\n";
    if (!r.p_closed) {
        std::cout << "affine degree: " << r.affine_degree << "\n";
        std::cout << "projective degree: " << r.expected_projective_degree << " (z-multiplicity "
                  << r.z_multiplicity << ")\n";
    }
    return kOk;
}

int run_certify(const FieldArgs& args, bool nondicritical, const std::string& backend, int bound) {
    CertificateOptions options;
    options.assert_nondicritical = nondicritical;
    options.irreducibility.backend = backend_from_string(backend);
    options.irreducibility.factor_bound = bound;
    const PlaneVectorField v = args.field(Ring::integers());
    Json doc = envelope("certify");
    if (auto spec = args.family()) doc["family"] = spec->name();
    doc["field"] = to_json(v);
    const Json report = to_json(theorem_main_certificate(v, options));
    for (const auto& [key, value] : report.items()) doc[key] = value;
    emit(doc);
    return kOk;
}

std::vector<FamilySpec> parse_grid(const std::string& grid) {
    if (grid == "default") return default_grid();
    std::vector<FamilySpec> out;
    std::string item;
    std::stringstream ss(grid);
    while (std::getline(ss, item, ';')) {
        const auto first = item.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        out.push_back(FamilySpec::parse(item.substr(first, item.find_last_not_of(' ') - first + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty verification grid");
    return out;
}

int run_family_verify(const std::string& grid, unsigned jobs, bool json) {
    const auto specs = parse_grid(grid);
    std::vector<std::optional<FamilyVerification>> results(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < specs.size();) results[i] = verify_family_theorem(specs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool all_ok = true;
    Json doc = envelope("family-verify");
    doc["results"] = Json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r->all_ok();
        if (json) {
            doc["results"].push_back(to_json(*r));
            continue;
        }
        std::cout << r->spec.name() << ": " << (r->all_ok() ? "ok" : "MISMATCH") << "\n";
        for (const auto& c : r->checks) {
            std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
        }
    }
    if (json) {
        doc["ok"] = all_ok;
        emit(doc);
    }
    return all_ok ? kOk : kMismatch;
}

int run_newton(const std::string& poly, const std::string& ring, bool certify, const std::string& backend, int bound,
               bool json) {
    const Ring R = Ring::from_tag(ring.empty() ? "F2" : ring);
    const SparsePoly f = parse_poly(poly, R);
    const LatticePolytope P = newton_polytope(f);
    std::optional<IrreducibilityVerdict> verdict;
    if (certify) verdict = certify_irreducible(f, {backend_from_string(backend), bound, std::uint64_t{1} << 22});
    std::optional<bool> indecomposable;
    if (!P.is_point()) indecomposable = is_indecomposable(P);

    if (json) {
        Json doc = envelope("newton");
        doc["poly"] = f.str();
        doc["ring"] = R.tag();
        doc["polytope"] = to_json(P);
        if (indecomposable) doc["indecomposable"] = *indecomposable;
        if (verdict) doc["verdict"] = to_json(*verdict);
        emit(doc);
        return kOk;
    }
    std::cout << "vertices:";
    for (const auto& v : P.vertices()) std::cout << " (" << v.x << "," << v.y << ")";
    std::cout << "\n";
    if (indecomposable) std::cout << "indecomposable: " << (*indecomposable ? "yes" : "no") << "\n";
    if (verdict) {
        std::cout << "verdict: " << to_string(verdict->status) << " (" << verdict->reason << ")\n";
        if (verdict->witness) {
            std::cout << "factor: " << verdict->witness->str() << " over " << verdict->witness->ring().tag() << "\n";
        }
    }
    return kOk;
}

int run_invariance(const FieldArgs& args, const std::string& F, bool json) {
    const Ring R = Ring::from_tag(args.ring.empty() ? "Z" : args.ring);
    const PlaneVectorField v = args.field(R);
    const SparsePoly curve = parse_poly(F, R);
    const bool inv = is_invariant_curve(v, curve);
    const SparsePoly image = derive(v, curve);
    if (json) {
        Json doc = envelope("invariance");
        doc["field"] = to_json(v);
        doc["curve"] = curve.str();
        doc["v(F)"] = image.str();
        doc["invariant"] = inv;
        emit(doc);
    } else {
        std::cout << "v(F) = " << image.str() << "\n";
        std::cout << "invariant: " << (inv ? "yes" : "no") << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-th powers, p-divisors and invariant-curve certificates for plane vector fields"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::uint64_t p = 2;
    FieldArgs pc_args, pd_args, cert_args, inv_args;

    auto* pcampo = app.add_subcommand("pcampo", "components of the p-th power v^p");
    pcampo->add_option("--p", p, "characteristic")->required();
    pc_args.attach(pcampo);
    pcampo->add_flag("--json", json, "machine-readable output");

    auto* pdiv = app.add_subcommand("pdiv", "p-divisor A v^p(y) - B v^p(x)");
    pdiv->add_option("--p", p, "characteristic")->required();
    pd_args.attach(pdiv);
    pdiv->add_flag("--json", json, "machine-readable output");

    bool nondicritical = false;
    std::string backend = "auto";
    int bound = 4;
    auto* certify = app.add_subcommand("certify", "non-algebraicity certificate for an integer vector field (JSON)");
    cert_args.attach(certify, false);
    certify->add_flag("--assert-nondicritical", nondicritical, "take nondicriticality as given");
    certify->add_option("--backend", backend, "irreducibility backend: polytope, factor_search, quadratic, both, auto");
    certify->add_option("--bound", bound, "factor search degree bound");
    certify->add_flag("--json", json, "accepted for uniformity; output is always JSON");

    std::string grid = "default";
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("family-verify", "check computed 2-divisors against the closed forms");
    verify->add_option("--grid", grid, "'default' or specs like 'claudia:3,1,1,1;family-g:5,1,1,1,1'");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--json", json, "machine-readable output");

    std::string poly, newton_ring;
    bool newton_certify = false;
    auto* newton = app.add_subcommand("newton", "Newton polygon and irreducibility of a bivariate polynomial");
    newton->add_option("--poly", poly, "polynomial in x, y")->required();
    newton->add_option("--ring", newton_ring, "coefficient ring (default F2)");
    newton->add_flag("--certify", newton_certify, "run the irreducibility certificate");
    newton->add_option("--backend", backend, "polytope, factor_search, quadratic, both, auto");
    newton->add_option("--bound", bound, "factor search degree bound");
    newton->add_flag("--json", json, "machine-readable output");

    std::string curve;
    auto* invariance = app.add_subcommand("invariance", "test whether {F = 0} is invariant (F divides v(F))");
    inv_args.attach(invariance);
    invariance->add_option("--F", curve, "curve equation")->required();
    invariance->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*pcampo) return run_pcampo(pc_args, p, json);
        if (*pdiv) return run_pdiv(pd_args, p, json);
        if (*certify) return run_certify(cert_args, nondicritical, backend, bound);
        if (*verify) return run_family_verify(grid, jobs, json);
        if (*newton) return run_newton(poly, newton_ring, newton_certify, backend, bound, json);
        if (*invariance) return run_invariance(inv_args, curve, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failed: " << e.what() << "\n";
        return kMismatch;
    }
    return kInputError;
}
