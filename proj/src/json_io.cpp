#include "crtkit/json_io.hpp"

#include "crtkit/error.hpp"

namespace crtkit {

Int int_from_json(const Json& j) {
    if (!j.is_string())
        throw Error(errc::bad_input, "expected an integer as a decimal string, got " + j.dump());
    return Int::from_string(j.get<std::string>());
}

Json int_to_json(const Int& v) { return v.to_string(); }

SparsePoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("terms"))
        throw Error(errc::bad_input,
                    "expected a polynomial {\"p\": str, \"terms\": [[exp, coeff], ...]}, got " +
                        j.dump());
    PrimeField field{int_from_json(j.at("p"))};
    const Json& terms = j.at("terms");
    if (!terms.is_array()) throw Error(errc::bad_input, "polynomial terms must be an array");
    std::vector<std::pair<std::uint64_t, Int>> parsed;
    std::optional<std::uint64_t> previous;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t.at(0).is_number_unsigned())
            throw Error(errc::bad_input, "polynomial term must be [exponent, \"coeff\"], got " +
                                             t.dump());
        std::uint64_t e = t.at(0).get<std::uint64_t>();
        if (previous && e <= *previous)
            throw Error(errc::bad_input, "polynomial exponents must be strictly increasing");
        previous = e;
        parsed.emplace_back(e, int_from_json(t.at(1)));
    }
    return SparsePoly::from_terms(std::move(field), std::move(parsed));
}

Json poly_to_json(const SparsePoly& q) {
    Json terms = Json::array();
    for (const auto& [e, c] : q.terms()) terms.push_back(Json::array({e, int_to_json(c)}));
    return Json{{"p", int_to_json(q.field().p())}, {"terms", std::move(terms)}};
}

Json poly_to_json(const DensePoly& p) { return poly_to_json(to_sparse(p)); }

SystemDocument system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("moduli") || !j.contains("residues"))
        throw Error(errc::bad_input, "expected {\"moduli\": [...], \"residues\": [...]}");
    const Json& moduli = j.at("moduli");
    const Json& residues = j.at("residues");
    if (!moduli.is_array() || !residues.is_array())
        throw Error(errc::bad_input, "moduli and residues must be arrays");
    SystemDocument doc;
    doc.moduli.assign(moduli.begin(), moduli.end());
    doc.residues.assign(residues.begin(), residues.end());
    if (j.contains("range_start")) doc.range_start = int_from_json(j.at("range_start"));
    return doc;
}

Json iso_report_to_json(const IsoReport& r) {
    return Json{{"checked", r.checked},
                {"bijective", r.bijective},
                {"additive", r.additive},
                {"multiplicative", r.multiplicative}};
}

Json theorem5_report_to_json(const Theorem5Report& r) {
    return Json{{"size", r.size},
                {"pairs_checked", r.pairs_checked},
                {"kernel_ok", r.kernel_ok},
                {"onto_ok", r.onto_ok}};
}

}  // namespace crtkit
