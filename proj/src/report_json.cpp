#include "diagasym/report_json.hpp"

#include "diagasym/errors.hpp"

namespace diagasym {

using nlohmann::json;

namespace {

constexpr int kFloatDigits = 40;

json poly_json(const RationalPoly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_string(c));
    return arr;
}

RationalPoly poly_from_json(const json& arr) {
    std::vector<Rat> c;
    for (const auto& s : arr) c.push_back(parse_rat(s.get<std::string>()));
    return RationalPoly(std::move(c));
}

}  // namespace

json to_json(const SmoothPointReport& rep) {
    json checks = json::array();
    auto add_check = [&](const std::string& name, const std::string& kind, bool passed) {
        checks.push_back({{"name", name}, {"kind", kind}, {"passed", passed}});
    };
    add_check("on_variety", "exact", rep.s_at_c == 0);
    add_check("smooth", "exact", rep.dH != 0);
    add_check("critical_gradient_symmetry", "exact", rep.gradient_symmetric);
    add_check("nondegenerate", "exact", rep.det_g != 0);
    add_check("hessian_q", "exact", rep.q == frac(rep.d - 2, rep.d));
    add_check("isolation_identity", "exact", rep.isolation_identity);
    add_check("aperiodic", "exact", rep.aperiodic);
    add_check("minimality_sampled", "sampled", rep.minimality.all_strict);

    json constant_terms = json::array();
    for (const PowerTerm& t : rep.form.constant_power_terms) {
        constant_terms.push_back({{"base", t.base.get_str()}, {"exponent", rat_string(t.exponent)}});
    }

    return json{
        {"d", rep.d},
        {"c", rat_string(rep.c)},
        {"s_at_c", rat_string(rep.s_at_c)},
        {"dH", rat_string(rep.dH)},
        {"ddH", rat_string(rep.ddH)},
        {"d1dH", rat_string(rep.d1dH)},
        {"q", rat_string(rep.q)},
        {"det_g", rat_string(rep.det_g)},
        {"L0", rat_string(rep.l0)},
        {"aperiodic", rep.aperiodic},
        {"gradient_symmetric", rep.gradient_symmetric},
        {"isolation_identity", rep.isolation_identity},
        {"minimality_samples_passed", rep.minimality.passed},
        {"minimality",
         {{"samples", rep.minimality.samples},
          {"passed", rep.minimality.passed},
          {"all_strict", rep.minimality.all_strict},
          {"max_value", rat_string(rep.minimality.max_value)}}},
        {"asymptotic_form",
         {{"growth", rep.form.growth.get_str()},
          {"poly_exponent", rat_string(rep.form.poly_exponent)},
          {"constant_power_terms", constant_terms},
          {"pi_power", rat_string(rep.form.pi_power)},
          {"constant_float", rep.form.constant_float.to_string(kFloatDigits)},
          {"precision_bits", rep.form.precision_bits}}},
        {"checks", checks},
    };
}

json to_json(const PRecurrence& rec) {
    json coeffs = json::array();
    for (const RationalPoly& p : rec.coeffs) coeffs.push_back(poly_json(p));
    return json{{"order", rec.order}, {"offset", rec.offset}, {"coeffs", coeffs}};
}

PRecurrence p_recurrence_from_json(const json& j) {
    PRecurrence rec;
    rec.order = j.at("order").get<int>();
    rec.offset = j.at("offset").get<int>();
    for (const auto& arr : j.at("coeffs")) rec.coeffs.push_back(poly_from_json(arr));
    if (rec.coeffs.size() != static_cast<std::size_t>(rec.order) + 1) {
        throw DomainError("p_recurrence_from_json: coefficient count does not match order");
    }
    if (rec.coeffs[0].is_zero()) throw DomainError("p_recurrence_from_json: p_0 is identically zero");
    return rec;
}

json to_json(const GrowthCandidates& g) {
    json arr = json::array();
    for (const RootEstimate& r : g.roots) {
        arr.push_back({{"re", r.value.re.to_string(kFloatDigits)},
                       {"im", r.value.im.to_string(kFloatDigits)},
                       {"multiplicity", r.multiplicity},
                       {"uncertainty", r.uncertainty.to_string(8)}});
    }
    return arr;
}

json to_json(const SingularityEstimate& s) {
    json j{{"re", s.location.re.to_string(kFloatDigits)},
           {"im", s.location.im.to_string(kFloatDigits)},
           {"uncertainty", s.uncertainty.to_string(8)},
           {"multiplicity", s.multiplicity},
           {"n_supporting", s.n_supporting},
           {"spurious", s.spurious}};
    j["exponent"] = s.exponent ? json(s.exponent->to_string(20)) : json(nullptr);
    return j;
}

json to_json(const DifferentialApproximant& da) {
    return json{{"order", da.order},
                {"q_degrees", [&] {
                     json degs = json::array();
                     for (const RationalPoly& q : da.q_polys) degs.push_back(q.degree());
                     return degs;
                 }()},
                {"inhom_degree", da.inhom.degree()},
                {"terms_used", da.terms_used}};
}

json to_json(const SubdominanceReport& rep) {
    json ordered = json::array();
    for (const SingularityEstimate& e : rep.ordered) ordered.push_back(to_json(e));
    json j{{"signature", rep.signature}, {"ordered_estimates", ordered}};
    j["closest_vs_conjecture_reldev"] =
        rep.closest_vs_conjecture_reldev ? json(*rep.closest_vs_conjecture_reldev) : json(nullptr);
    j["dominant_vs_growth_reldev"] =
        rep.dominant_vs_growth_reldev ? json(*rep.dominant_vs_growth_reldev) : json(nullptr);
    return j;
}

}  // namespace diagasym
