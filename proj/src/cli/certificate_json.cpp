#include "edcert/cli/certificate_json.hpp"

#include <stdexcept>

#include "edcert/cli/poly_text.hpp"

namespace edcert::cli {

using nlohmann::json;

namespace {

json coeffs_json(const FormalPoly& poly) {
    json out = json::array();
    for (const Rational& c : poly.coeffs()) out.push_back(c.exact_str());
    return out;
}

Stage parse_stage(const std::string& s) {
    for (Stage st : {Stage::direct, Stage::upper, Stage::lower, Stage::one_parameter}) {
        if (to_string(st) == s) return st;
    }
    throw std::invalid_argument("unknown stage '" + s + "'");
}

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

} // namespace

json to_json(const EDReport& report) {
    json r;
    r["d0"] = report.d0;
    r["d1"] = report.d1;
    r["d2"] = report.d2;
    r["gcd_value"] = report.gcd_value ? json(*report.gcd_value) : json(nullptr);
    r["failing_index"] = report.failing_index ? json(*report.failing_index) : json(nullptr);
    r["verdict"] = report.verdict;
    return r;
}

json to_json(const Certificate& cert) {
    json doc;
    doc["input"] = format_poly(cert.input);
    doc["formal_degree"] = cert.input.formal_degree();
    doc["verdict"] = cert.verdict == Verdict::irreducible ? "irreducible" : "inconclusive";
    doc["prime"] = cert.prime ? json(to_string(*cert.prime)) : json(nullptr);
    doc["stage"] = cert.stage ? json(std::string(to_string(*cert.stage))) : json(nullptr);
    if (cert.transform) {
        const Mat2& g = *cert.transform;
        doc["transform"] = {g.a().exact_str(), g.b().exact_str(), g.c().exact_str(), g.d().exact_str()};
    } else {
        doc["transform"] = nullptr;
    }
    doc["witness_coeffs"] = cert.witness ? coeffs_json(*cert.witness) : json(nullptr);
    doc["report"] = cert.report ? to_json(*cert.report) : json(nullptr);
    doc["candidates_complete"] = cert.candidates_complete;
    json audit = json::array();
    for (const AuditEntry& e : cert.audit)
        audit.push_back({{"prime", to_string(e.prime)}, {"stage", std::string(to_string(e.stage))}, {"reason", e.reason}});
    doc["audit"] = std::move(audit);
    return doc;
}

Certificate certificate_from_json(const json& doc) {
    try {
        Certificate cert;
        cert.input = parse_poly(doc.at("input").get<std::string>(), doc.at("formal_degree").get<std::size_t>());
        const std::string verdict = doc.at("verdict").get<std::string>();
        if (verdict != "irreducible" && verdict != "inconclusive")
            throw std::invalid_argument("unknown verdict '" + verdict + "'");
        cert.verdict = verdict == "irreducible" ? Verdict::irreducible : Verdict::inconclusive;
        if (auto p = optional_field<std::string>(doc, "prime")) cert.prime = parse_bigint(*p);
        if (auto s = optional_field<std::string>(doc, "stage")) cert.stage = parse_stage(*s);
        if (auto t = optional_field<std::vector<std::string>>(doc, "transform")) {
            if (t->size() != 4) throw std::invalid_argument("transform needs four entries");
            cert.transform = Mat2(Rational::parse((*t)[0]), Rational::parse((*t)[1]), Rational::parse((*t)[2]),
                                  Rational::parse((*t)[3]));
        }
        if (auto w = optional_field<std::vector<std::string>>(doc, "witness_coeffs")) {
            std::vector<Rational> coeffs;
            for (const auto& c : *w) coeffs.push_back(Rational::parse(c));
            cert.witness = FormalPoly(std::move(coeffs));
        }
        if (doc.contains("report") && !doc.at("report").is_null()) {
            const json& r = doc.at("report");
            EDReport rep;
            rep.d0 = r.at("d0").get<bool>();
            rep.d1 = r.at("d1").get<bool>();
            rep.d2 = r.at("d2").get<bool>();
            rep.gcd_value = optional_field<long>(r, "gcd_value");
            rep.failing_index = optional_field<std::size_t>(r, "failing_index");
            rep.verdict = r.at("verdict").get<bool>();
            cert.report = rep;
        }
        cert.candidates_complete = doc.value("candidates_complete", true);
        if (doc.contains("audit")) {
            for (const json& e : doc.at("audit"))
                cert.audit.push_back({parse_bigint(e.at("prime").get<std::string>()),
                                      parse_stage(e.at("stage").get<std::string>()), e.at("reason").get<std::string>()});
        }
        return cert;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

VerifyResult verify_json(const json& doc) {
    Certificate cert;
    try {
        cert = certificate_from_json(doc);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    if (cert.verdict != Verdict::irreducible) return {false, "certificate makes no irreducibility claim"};
    if (!cert.prime || !cert.transform || !cert.witness || !cert.report)
        return {false, "irreducible certificate is missing prime, transform, witness or report"};
    const auto deg = cert.input.actual_degree();
    if (!deg || *deg != cert.input.formal_degree()) return {false, "input has a root at infinity (a_n = 0)"};

    std::optional<PAdic> v;
    try {
        v.emplace(*cert.prime);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    const FormalPoly witness = act(cert.input, *cert.transform);
    if (coeffs_json(witness) != doc.at("witness_coeffs")) return {false, "witness does not match act(input, transform)"};
    const EDReport report = is_ed(witness, *v);
    if (to_json(report) != doc.at("report")) return {false, "stored report differs from the recomputed one"};
    if (!report.verdict) return {false, "witness is not an Eisenstein-Dumas polynomial"};
    return {true, "witness and report recomputed exactly"};
}

} // namespace edcert::cli
