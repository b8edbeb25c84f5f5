#include "remspec/report.hpp"

#include "remspec/parse.hpp"

namespace remspec {

OrderedJson to_json(const LatticePolygon& polygon) {
    OrderedJson verts = OrderedJson::array();
    for (const auto& v : polygon.vertices) {
        verts.push_back(OrderedJson::array({v.x, v.y}));
    }
    return verts;
}

OrderedJson to_json(const NewtonReport& report) {
    OrderedJson j;
    j["vertices"] = to_json(report.polygon);
    j["bcount"] = report.count;
    return j;
}

OrderedJson to_json(const Derivation& derivation) {
    OrderedJson j;
    j["a"] = to_string(derivation.a);
    j["b"] = to_string(derivation.b);
    j["degree"] = derivation.degree;
    return j;
}

OrderedJson to_json(const SpectrumEntry& entry) {
    OrderedJson j;
    j["at_infinity"] = entry.at_infinity;
    if (entry.at_infinity) {
        j["modulus"] = nullptr;
        j["modulus_str"] = nullptr;
    } else {
        OrderedJson coeffs = OrderedJson::array();
        for (const auto& c : entry.modulus.coeffs()) coeffs.push_back(c.get_str());
        j["modulus"] = std::move(coeffs); // low degree first
        j["modulus_str"] = entry.modulus.str("t");
    }
    j["m"] = entry.conjugates;
    j["n"] = entry.factor_count;
    j["defect"] = entry.defect;
    j["gamma"] = entry.pure_power;
    OrderedJson profile = OrderedJson::array();
    for (const auto& [deg, mult] : entry.profile) {
        profile.push_back(OrderedJson::array({deg, mult}));
    }
    j["profile"] = std::move(profile);
    j["remainder_term"] = entry.remainder_term;
    return j;
}

OrderedJson to_json(const PencilReport& report) {
    OrderedJson j;
    j["degree"] = report.degree;
    j["seed"] = report.seed;
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : report.entries) entries.push_back(to_json(e));
    j["entries"] = std::move(entries);
    j["rho"] = report.rho;
    j["sigma_count"] = report.sigma_size;
    j["gamma_count"] = report.gamma_size;
    j["deg_R"] = report.remainder_degree;
    if (report.change) {
        OrderedJson rows = OrderedJson::array();
        for (const auto& row : *report.change) {
            OrderedJson cells = OrderedJson::array();
            for (const auto& c : row) cells.push_back(c.get_str());
            rows.push_back(std::move(cells));
        }
        j["matrix"] = std::move(rows);
    } else {
        j["matrix"] = nullptr;
    }
    return j;
}

OrderedJson to_json(const IndecomposabilityReport& report) {
    OrderedJson j;
    j["verdict"] = report.verdict == DecompositionVerdict::kIndecomposable
                       ? "indecomposable"
                       : "likely_decomposable";
    j["certified"] = report.certified;
    if (report.witness) {
        j["witness"] = report.witness->get_str();
    } else {
        j["witness"] = nullptr;
    }
    j["trials_used"] = report.trials_used;
    return j;
}

OrderedJson to_json(const BoundsReport& report) {
    OrderedJson j;
    j["pencil"] = to_json(report.pencil);
    j["newton"] = to_json(report.newton);
    j["derivation_degree"] = report.derivation_degree;
    j["bcount"] = report.newton.count;
    OrderedJson verdicts;
    verdicts["rho_lt_bcount_plus_2"] = report.theorem_bound_holds;
    verdicts["sigma_le_rho_plus_gamma"] = report.sigma_chain_holds;
    verdicts["gamma_le_3"] = report.gamma_small_holds;
    verdicts["sigma_lt_bcount_plus_2_plus_gamma"] = report.corollary_holds;
    OrderedJson degrel;
    degrel["holds"] = report.poincare_holds;
    degrel["lhs"] = report.poincare_lhs;
    degrel["rhs"] = report.poincare_rhs;
    degrel["informational"] = true;
    verdicts["degree_relation"] = std::move(degrel);
    j["verdicts"] = std::move(verdicts);
    j["falsified"] = report.falsified;
    return j;
}

} // namespace remspec
