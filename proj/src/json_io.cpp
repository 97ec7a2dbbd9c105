#include "mcount/json_io.hpp"

#include <stdexcept>

namespace mcount {

nlohmann::json qpoly_to_json(const TruncatedQPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    const auto& m = p.coefficients();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {  // descending degree
        coeffs.push_back({it->first, rational_to_string(it->second)});
    }
    nlohmann::json j;
    j["variable"] = "q";
    j["coefficients"] = coeffs;
    if (p.floor()) {
        j["trusted_min_degree"] = *p.floor();
    } else {
        j["trusted_min_degree"] = nullptr;
    }
    return j;
}

TruncatedQPoly qpoly_from_json(const nlohmann::json& j) {
    TruncatedQPoly p;
    for (const auto& entry : j.at("coefficients")) {
        const int deg = entry.at(0).get<int>();
        const Rational c = rational_from_string(entry.at(1).get<std::string>());
        p = p + TruncatedQPoly::monomial(deg, c);
    }
    const auto& fl = j.at("trusted_min_degree");
    if (!fl.is_null()) p = p.truncated_to(fl.get<int>());
    return p;
}

nlohmann::json schur_to_json(const SchurVector& v) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& lambda : partitions_of(v.n())) {
        const TruncatedQPoly p = v.term(lambda);
        if (!(p.exact() && p.is_zero())) terms[lambda.to_string()] = qpoly_to_json(p);
    }
    return {{"n", v.n()}, {"terms", terms}};
}

SchurVector schur_from_json(const nlohmann::json& j) {
    SchurVector v(j.at("n").get<int>());
    for (const auto& [key, val] : j.at("terms").items()) {
        v.set_term(PartitionLabel::parse(key), qpoly_from_json(val));
    }
    return v;
}

}  // namespace mcount
