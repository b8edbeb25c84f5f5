#include "remspec/spectrum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "remspec/errors.hpp"
#include "remspec/ruppert.hpp"

namespace remspec {

namespace {

// Invariants of one homogeneous member, read off its affine part.
struct MemberClass {
    bool is_sigma = false;
    int factor_count = 1;
    int defect = 0;
    bool pure_power = false;
    std::vector<std::pair<int, int>> profile;
    int remainder_term = 0;
};

// Classifies the degree-d homogenization of `member`: multiplicity layers
// from the affine square-free decomposition, one extra factor of
// multiplicity d - deg(member) for the degree drop, absolute factor count
// from the closed-1-form system.
template <class Dom>
MemberClass classify_member(const BiPolyT<Dom>& member, int d) {
    MemberClass out;
    const int td = member.decided_total_degree();
    if (td < 0) {
        throw MathError(MathError::Kind::precondition,
                        "pencil member vanishes identically");
    }
    out.defect = d - td;
    int n_affine = 0;
    int affine_sf_degree = 0;
    if (td >= 1) {
        auto layers = squarefree_decompose(member);
        BiPolyT<Dom> sf = BiPolyT<Dom>::constant(member.dom(), member.dom().one());
        for (const auto& layer : layers) {
            const int layer_degree = layer.factor.decided_total_degree();
            out.profile.emplace_back(layer_degree, layer.exponent);
            affine_sf_degree += layer_degree;
            sf = sf * layer.factor;
        }
        if constexpr (Dom::kMaySplit) {
            n_affine = absolute_factor_count_decided(sf);
        } else {
            n_affine = absolute_factor_count(sf);
        }
    }
    if (out.defect > 0) {
        bool merged = false;
        for (auto& [deg, e] : out.profile) {
            if (e == out.defect) {
                deg += 1;
                merged = true;
                break;
            }
        }
        if (!merged) out.profile.emplace_back(1, out.defect);
        std::sort(out.profile.begin(), out.profile.end(),
                  [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second < b.second : a.first < b.first;
                  });
    }
    out.factor_count = n_affine + (out.defect > 0 ? 1 : 0);
    int max_exp = 0;
    int gcd_exp = 0;
    for (const auto& [deg, e] : out.profile) {
        max_exp = std::max(max_exp, e);
        gcd_exp = std::gcd(gcd_exp, e);
    }
    out.pure_power = gcd_exp >= 2;
    // Only affine factors feed the remainder product; the degree-drop
    // factor never contributes a repeated-root term to it.
    out.remainder_term = td - affine_sf_degree;
    out.is_sigma = out.factor_count >= 2 || max_exp >= 2;
    return out;
}

// Seeded random projective change that keeps every member of the pencil at
// full degree: degree-d images, non-proportional top forms, and each corner
// monomial (X^d, Y^d) reached by at least one generator.
struct ChangedPencil {
    BiPoly f;
    BiPoly g;
    std::array<std::array<Rational, 3>, 3> matrix;
};

ChangedPencil sample_coordinate_change(const RationalFunctionPair& pair, int d, Rng& rng) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::array<std::array<Rational, 3>, 3> m;
        for (auto& row : m) {
            for (auto& e : row) e = Rational(rng_range(rng, -4, 4));
        }
        const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det == 0) continue;
        BiPoly cf = projective_change(pair.numerator, d, m);
        BiPoly cg = projective_change(pair.denominator, d, m);
        if (cf.syntactic_total_degree() != d || cg.syntactic_total_degree() != d) continue;
        const auto tf = top_form(cf, d);
        const auto tg = top_form(cg, d);
        bool proportional = true;
        for (std::size_t i = 0; i < tf.size() && proportional; ++i) {
            for (std::size_t j = i + 1; j < tf.size(); ++j) {
                if (tf[i] * tg[j] != tf[j] * tg[i]) {
                    proportional = false;
                    break;
                }
            }
        }
        if (proportional) continue;
        if (tf.front() == 0 && tg.front() == 0) continue;
        if (tf.back() == 0 && tg.back() == 0) continue;
        return ChangedPencil{std::move(cf), std::move(cg), m};
    }
    throw MathError(MathError::Kind::singular_change,
                    "no usable coordinate change found; the pencil resists normalization");
}

bool modulus_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const int cmp = mpq_cmp(ca[i].get_mpq_t(), cb[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

} // namespace

IndecomposabilityReport indecomposability_test(const RationalFunctionPair& pair,
                                               int trials, std::uint64_t seed) {
    IndecomposabilityReport report;
    report.trials_used = 0;
    if (pair.degree == 1) {
        // A composite fraction has degree deg(outer) * deg(inner) >= 2, so
        // degree one is indecomposable outright.
        report.verdict = DecompositionVerdict::kIndecomposable;
        report.certified = true;
        return report;
    }
    Rng rng(seed);
    const int d = pair.degree;
    for (int trial = 0; trial < trials; ++trial) {
        report.trials_used = trial + 1;
        const Rational t0 = Rational(rng_range(rng, -50, 50));
        BiPoly member = pair.numerator - pair.denominator.scaled(t0);
        if (member.syntactic_total_degree() != d) continue; // degenerate sample
        BiPoly rep = gcd_bi(gcd_bi(member, member.derivative(Var::X)),
                            member.derivative(Var::Y));
        if (rep.syntactic_total_degree() >= 1) continue; // repeated factor
        if (absolute_factor_count(member) == 1) {
            report.verdict = DecompositionVerdict::kIndecomposable;
            report.certified = true;
            report.witness = t0;
            return report;
        }
    }
    report.verdict = DecompositionVerdict::kLikelyDecomposable;
    report.certified = false;
    return report;
}

PencilReport analyze_pencil(const RationalFunctionPair& pair, std::uint64_t seed) {
    PencilReport report;
    report.seed = seed;
    report.degree = pair.degree;
    const int d = pair.degree;
    if (d == 1) return report; // members are lines; no remarkable directions

    Rng rng(seed);

    // Gate: refuse composite fractions (their spectrum is the whole line).
    const IndecomposabilityReport gate = indecomposability_test(pair, 5, rng());
    if (!gate.certified) {
        throw MathError(MathError::Kind::decomposable,
                        "the fraction appears decomposable: every sampled member "
                        "is reducible or degenerate");
    }

    // The direction (0 : 1) is never on the chart lambda = 1; classify its
    // member (the denominator) directly over the rationals.
    std::optional<SpectrumEntry> infinity_entry;
    {
        const MemberClass mc = classify_member(pair.denominator, d);
        if (mc.is_sigma) {
            SpectrumEntry e;
            e.at_infinity = true;
            e.modulus = UniPoly::zero();
            e.conjugates = 1;
            e.factor_count = mc.factor_count;
            e.defect = mc.defect;
            e.pure_power = mc.pure_power;
            e.profile = mc.profile;
            e.remainder_term = mc.remainder_term;
            infinity_entry = std::move(e);
        }
    }

    // Candidate finite directions from a generic coordinate change; each
    // candidate root is then verified in the original coordinates, where
    // the pencil is sparse.
    const ChangedPencil changed = sample_coordinate_change(pair, d, rng);
    report.change = changed.matrix;
    const CandidateSet cand = pencil_candidates(changed.f, changed.g, d, rng);

    struct Key {
        int factor_count;
        int defect;
        bool pure_power;
        std::vector<std::pair<int, int>> profile;
        int remainder_term;
        bool operator<(const Key& o) const {
            return std::tie(factor_count, defect, pure_power, profile, remainder_term) <
                   std::tie(o.factor_count, o.defect, o.pure_power, o.profile, o.remainder_term);
        }
    };
    std::map<Key, UniPoly> merged;

    if (cand.poly.degree() >= 1) {
        const ExtScope root = ExtScope::make(cand.poly);
        const auto branches = run_branches<MemberClass>(
            root, std::function<MemberClass(const ExtScope&)>([&](const ExtScope& scope) {
                const ExtDomain dom(scope);
                const BiPolyExt member =
                    lift_to_scope(pair.numerator, dom) -
                    lift_to_scope(pair.denominator, dom).scaled(scope.generator());
                return classify_member(member, d);
            }));
        for (const auto& [scope, mc] : branches) {
            if (!mc.is_sigma) continue;
            const Key key{mc.factor_count, mc.defect, mc.pure_power, mc.profile,
                          mc.remainder_term};
            auto it = merged.find(key);
            if (it == merged.end()) {
                merged.emplace(key, scope.modulus());
            } else {
                it->second = it->second * scope.modulus(); // coprime factors
            }
        }
    }

    for (const auto& [key, modulus] : merged) {
        SpectrumEntry e;
        e.at_infinity = false;
        e.modulus = modulus;
        e.conjugates = modulus.degree();
        e.factor_count = key.factor_count;
        e.defect = key.defect;
        e.pure_power = key.pure_power;
        e.profile = key.profile;
        e.remainder_term = key.remainder_term;
        report.entries.push_back(std::move(e));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return modulus_less(a.modulus, b.modulus);
              });
    if (infinity_entry) report.entries.push_back(std::move(*infinity_entry));

    for (const auto& e : report.entries) {
        report.rho += e.conjugates * (e.factor_count - 1);
        report.sigma_size += e.conjugates;
        if (e.pure_power) report.gamma_size += e.conjugates;
        report.remainder_degree += e.conjugates * e.remainder_term;
    }
    return report;
}

PoincareReport poincare_relation_check(const RationalFunctionPair& pair,
                                       const PencilReport& pencil,
                                       int derivation_degree) {
    PoincareReport r;
    r.lhs = pair.numerator.syntactic_total_degree() +
            pair.denominator.syntactic_total_degree() - 1;
    r.rhs = derivation_degree + pencil.remainder_degree;
    r.holds = r.lhs == r.rhs;
    return r;
}

BoundsReport verify_remarkable_bounds(const RationalFunctionPair& pair,
                                      const std::optional<Derivation>& deriv,
                                      std::uint64_t seed) {
    Derivation d = deriv ? *deriv : jacobian_derivation(pair);
    if (deriv && !is_first_integral(d, pair)) {
        throw MathError(MathError::Kind::not_first_integral,
                        "the supplied derivation does not annihilate the fraction");
    }
    BoundsReport r;
    r.pencil = analyze_pencil(pair, seed);
    r.newton = bcount(d);
    r.derivation_degree = d.degree;
    const auto b = r.newton.count;
    r.theorem_bound_holds = r.pencil.rho < b + 2;
    r.sigma_chain_holds = r.pencil.sigma_size <= r.pencil.rho + r.pencil.gamma_size;
    r.gamma_small_holds = r.pencil.gamma_size <= 3;
    r.corollary_holds = r.pencil.sigma_size < b + 2 + r.pencil.gamma_size;
    const PoincareReport poin = poincare_relation_check(pair, r.pencil, d.degree);
    r.poincare_holds = poin.holds;
    r.poincare_lhs = poin.lhs;
    r.poincare_rhs = poin.rhs;
    r.falsified = !(r.theorem_bound_holds && r.sigma_chain_holds &&
                    r.gamma_small_holds && r.corollary_holds);
    return r;
}

} // namespace remspec
