#include "ratineq/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ratineq {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json complex_array(cplx v) { return json::array({v.real(), v.imag()}); }

std::vector<cplx> complex_list_from_json(const json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(cplx_from_json(e));
    return out;
}

} // namespace

json to_json(cplx value) { return complex_array(value); }

json to_json(const Polynomial& p) {
    json j;
    json coeffs = json::array();
    for (const cplx& c : p.coeffs()) coeffs.push_back(complex_array(c));
    j["coeffs"] = std::move(coeffs);
    if (p.roots()) {
        json roots = json::array();
        for (const cplx& r : *p.roots()) roots.push_back(complex_array(r));
        j["roots"] = std::move(roots);
    } else {
        j["roots"] = nullptr;
    }
    return j;
}

json to_json(const RationalFn& r) {
    json j;
    j["numerator"] = to_json(r.numerator());
    json poles = json::array();
    for (const cplx& a : r.poles().poles()) poles.push_back(complex_array(a));
    j["poles"] = std::move(poles);
    return j;
}

json to_json(const NormEstimate& est) {
    return json{{"value", est.value},
                {"argmax_theta", est.argmax_theta},
                {"samples_used", est.samples_used},
                {"refined", est.refined}};
}

json to_json(const CheckReport& rep) {
    json j{{"check_id", rep.check_id},
           {"lhs", rep.lhs},
           {"rhs", rep.rhs},
           {"slack", rep.slack},
           {"hypotheses_ok", rep.hypotheses_ok},
           {"tolerance", rep.tolerance},
           {"pass", rep.pass}};
    j["theta"] = rep.theta ? json(*rep.theta) : json(nullptr);
    if (rep.quarantined) j["quarantined"] = true;
    if (rep.equality) j["equality"] = true;
    return j;
}

json to_json(const SuiteCounts& counts) {
    return json{{"pass", counts.pass},
                {"fail", counts.fail},
                {"skipped", counts.skipped},
                {"hypothesis_violations", counts.hypothesis_violations},
                {"quarantined", counts.quarantined}};
}

json to_json(const SuiteOptions& opts) {
    json betas = json::array();
    for (const cplx& b : opts.betas) betas.push_back(complex_array(b));
    return json{{"suite", opts.suite_name},
                {"check_ids", opts.check_ids},
                {"grid_size", opts.grid_size},
                {"instances", opts.instances_requested},
                {"seed", opts.seed},
                {"betas", std::move(betas)},
                {"tolerances",
                 json{{"slack_rel", opts.tol.slack_rel},
                      {"tight_rel", opts.tol.tight_rel},
                      {"identity_abs", opts.tol.identity_abs},
                      {"identity_rel", opts.tol.identity_rel},
                      {"unimod_abs", opts.tol.unimod_abs},
                      {"lemma4_abs", opts.tol.lemma4_abs},
                      {"equality_rel", opts.tol.equality_rel}}}};
}

json to_json(const SuiteReport& report) {
    json reports = json::array();
    for (const CheckReport& rep : report.reports) reports.push_back(to_json(rep));
    return json{{"config", to_json(report.config)},
                {"counts", to_json(report.counts)},
                {"reports", std::move(reports)}};
}

json to_json(const InstanceSpec& spec) {
    return json{{"n", spec.n},
                {"k", spec.k},
                {"zero_width", spec.zero_width},
                {"pole_margin", spec.pole_margin},
                {"pole_width", spec.pole_width},
                {"boundary_prob", spec.boundary_prob},
                {"force_boundary", spec.force_boundary},
                {"seed", spec.seed}};
}

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("complex values must be [re, im] arrays");
    return {j[0].get<double>(), j[1].get<double>()};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial needs a coeffs array");
    std::vector<cplx> coeffs = complex_list_from_json(j["coeffs"], "coeffs");
    std::optional<std::vector<cplx>> roots;
    if (j.contains("roots") && !j["roots"].is_null())
        roots = complex_list_from_json(j["roots"], "roots");
    Polynomial p(std::move(coeffs), std::move(roots));
    if (p.roots() && !roots_consistent(p))
        throw std::invalid_argument("root list does not reproduce the coefficients");
    return p;
}

RationalFn rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("numerator") || !j.contains("poles"))
        throw std::invalid_argument("rational function needs numerator and poles");
    return RationalFn(polynomial_from_json(j["numerator"]),
                      PoleSet(complex_list_from_json(j["poles"], "poles")));
}

InstanceSpec instance_spec_from_json(const json& j) {
    InstanceSpec spec;
    if (!j.is_object()) throw std::invalid_argument("instance spec must be an object");
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("k")) spec.k = j["k"].get<double>();
    if (j.contains("zero_width")) spec.zero_width = j["zero_width"].get<double>();
    if (j.contains("pole_margin")) spec.pole_margin = j["pole_margin"].get<double>();
    if (j.contains("pole_width")) spec.pole_width = j["pole_width"].get<double>();
    if (j.contains("boundary_prob")) spec.boundary_prob = j["boundary_prob"].get<double>();
    if (j.contains("force_boundary")) spec.force_boundary = j["force_boundary"].get<bool>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    spec.validate();
    return spec;
}

bool roots_consistent(const Polynomial& p, double rel_tol) {
    if (!p.roots()) return true;
    if (static_cast<int>(p.roots()->size()) != p.degree()) return false;
    if (p.is_zero()) return p.roots()->empty();
    const Polynomial expanded = Polynomial::from_roots(*p.roots(), p.leading());
    const auto& a = p.coeffs();
    const auto& b = expanded.coeffs();
    if (a.size() != b.size()) return false;
    double scale = 0.0;
    for (const cplx& c : a) scale = std::max(scale, std::abs(c));
    for (std::size_t m = 0; m < a.size(); ++m)
        if (std::abs(a[m] - b[m]) > rel_tol * std::max(1.0, scale)) return false;
    return true;
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
    std::string out =
        "check_id,theta,lhs,rhs,slack,hypotheses_ok,tolerance,pass,quarantined,equality\n";
    for (const CheckReport& rep : reports) {
        out += rep.check_id;
        out += ',';
        if (rep.theta) out += fmt_double(*rep.theta);
        out += ',';
        out += fmt_double(rep.lhs);
        out += ',';
        out += fmt_double(rep.rhs);
        out += ',';
        out += fmt_double(rep.slack);
        out += ',';
        out += rep.hypotheses_ok ? '1' : '0';
        out += ',';
        out += fmt_double(rep.tolerance);
        out += ',';
        out += rep.pass ? '1' : '0';
        out += ',';
        out += rep.quarantined ? '1' : '0';
        out += ',';
        out += rep.equality ? '1' : '0';
        out += '\n';
    }
    return out;
}

} // namespace ratineq
