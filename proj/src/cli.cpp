#include "remspec/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "remspec/corpus.hpp"
#include "remspec/errors.hpp"
#include "remspec/newton.hpp"
#include "remspec/parse.hpp"
#include "remspec/report.hpp"
#include "remspec/spectrum.hpp"

#ifndef REMSPEC_CORPUS_DEFAULT
#define REMSPEC_CORPUS_DEFAULT "data/corpus.txt"
#endif

namespace remspec {

namespace {

std::string profile_text(const std::vector<std::pair<int, int>>& profile) {
    std::string s;
    for (const auto& [deg, exp] : profile) {
        if (!s.empty()) s += ",";
        s += std::to_string(deg) + "^" + std::to_string(exp);
    }
    return s;
}

void print_entry(std::ostream& out, const SpectrumEntry& e) {
    if (e.at_infinity) {
        out << "  (0:1)";
    } else {
        out << "  (1:t) for t with " << e.modulus.str("t") << " = 0";
    }
    out << ": m=" << e.conjugates << ", n=" << e.factor_count << ", defect=" << e.defect
        << ", profile " << profile_text(e.profile);
    if (e.pure_power) out << ", pure power";
    out << "\n";
}

void print_pencil(std::ostream& out, const PencilReport& r) {
    out << "pencil degree: " << r.degree << " (seed " << r.seed << ")\n";
    if (r.entries.empty()) {
        out << "no remarkable directions\n";
    } else {
        out << "remarkable directions:\n";
        for (const auto& e : r.entries) print_entry(out, e);
    }
    out << "rho = " << r.rho << ", |sigma| = " << r.sigma_size << ", |gamma| = "
        << r.gamma_size << ", deg R = " << r.remainder_degree << "\n";
}

void print_verdict(std::ostream& out, const char* label, bool ok) {
    out << "  " << label << ": " << (ok ? "holds" : "FAILS") << "\n";
}

RationalFunctionPair parse_pair(const std::string& f, const std::string& g) {
    return RationalFunctionPair::make(parse_bipoly(f), parse_bipoly(g));
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectrum, reducibility order and polygon bounds of "
                 "rational first integrals of planar polynomial derivations",
                 "remspec"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string poly_a, poly_b, poly_f, poly_g, filter, corpus_path = REMSPEC_CORPUS_DEFAULT;
    std::uint64_t seed = 0;
    int trials = 5;

    CLI::App* newton = app.add_subcommand(
        "newton", "polygon of a derivation and its first-quadrant lattice count");
    newton->add_option("-A", poly_a, "X-component of the derivation")->required();
    newton->add_option("-B", poly_b, "Y-component of the derivation")->required();

    CLI::App* darboux = app.add_subcommand(
        "darboux", "cofactor of an invariant polynomial, if it is one");
    darboux->add_option("-A", poly_a, "X-component of the derivation")->required();
    darboux->add_option("-B", poly_b, "Y-component of the derivation")->required();
    darboux->add_option("-f", poly_f, "candidate invariant polynomial")->required();

    CLI::App* jacobian = app.add_subcommand(
        "jacobian", "reduced derivation annihilating the fraction f/g");
    jacobian->add_option("-f", poly_f, "numerator")->required();
    jacobian->add_option("-g", poly_g, "denominator")->required();

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "remarkable directions of the pencil of f/g");
    spectrum->add_option("-f", poly_f, "numerator")->required();
    spectrum->add_option("-g", poly_g, "denominator")->required();
    spectrum->add_option("--seed", seed, "seed for the coordinate change");

    CLI::App* verify = app.add_subcommand(
        "verify", "spectrum plus mechanical check of every proved bound");
    verify->add_option("-f", poly_f, "numerator")->required();
    verify->add_option("-g", poly_g, "denominator")->required();
    verify->add_option("-A", poly_a, "X-component of a derivation to use");
    verify->add_option("-B", poly_b, "Y-component of a derivation to use");
    verify->add_option("--seed", seed, "seed for the coordinate change");

    CLI::App* indec = app.add_subcommand(
        "indecomposable", "probabilistic composition test for f/g");
    indec->add_option("-f", poly_f, "numerator")->required();
    indec->add_option("-g", poly_g, "denominator")->required();
    indec->add_option("--trials", trials, "number of sampled members");
    indec->add_option("--seed", seed, "sampling seed");

    CLI::App* corpus = app.add_subcommand(
        "corpus", "run the fixture corpus and compare to expectations");
    corpus->add_option("--filter", filter, "only fixtures whose name contains this");
    corpus->add_option("--file", corpus_path, "fixture file to run");

    for (CLI::App* sub : {newton, darboux, jacobian, spectrum, verify, indec, corpus}) {
        sub->fallthrough();
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*newton) {
            const Derivation d = make_derivation(parse_bipoly(poly_a), parse_bipoly(poly_b));
            const NewtonReport report = bcount(d);
            if (json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                out << "polygon vertices:";
                for (const auto& v : report.polygon.vertices) {
                    out << " (" << v.x << "," << v.y << ")";
                }
                out << "\nlattice points in the first quadrant: " << report.count << "\n";
            }
            return 0;
        }
        if (*darboux) {
            const Derivation d = make_derivation(parse_bipoly(poly_a), parse_bipoly(poly_b));
            const BiPoly p = parse_bipoly(poly_f);
            const std::optional<BiPoly> cof = cofactor_of(d, p);
            if (json) {
                OrderedJson j;
                j["invariant"] = cof.has_value();
                j["cofactor"] = cof ? OrderedJson(to_string(*cof)) : OrderedJson(nullptr);
                out << j.dump(2) << "\n";
            } else if (cof) {
                out << "invariant: yes\ncofactor: " << to_string(*cof) << "\n";
            } else {
                out << "invariant: no\n";
            }
            return 0;
        }
        if (*jacobian) {
            const Derivation d = jacobian_derivation(parse_pair(poly_f, poly_g));
            if (json) {
                out << to_json(d).dump(2) << "\n";
            } else {
                out << "D = (" << to_string(d.a) << ") d/dX + (" << to_string(d.b)
                    << ") d/dY\ndegree: " << d.degree << "\n";
            }
            return 0;
        }
        if (*spectrum) {
            const PencilReport report = analyze_pencil(parse_pair(poly_f, poly_g), seed);
            if (json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                print_pencil(out, report);
            }
            return 0;
        }
        if (*verify) {
            if (poly_a.empty() != poly_b.empty()) {
                err << "verify needs both -A and -B or neither\n";
                return 1;
            }
            std::optional<Derivation> d;
            if (!poly_a.empty()) {
                d = make_derivation(parse_bipoly(poly_a), parse_bipoly(poly_b));
            }
            const BoundsReport report =
                verify_remarkable_bounds(parse_pair(poly_f, poly_g), d, seed);
            if (json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                print_pencil(out, report.pencil);
                out << "polygon count = " << report.newton.count
                    << " (derivation degree " << report.derivation_degree << ")\n";
                print_verdict(out, "rho < count + 2", report.theorem_bound_holds);
                print_verdict(out, "|sigma| <= rho + |gamma|", report.sigma_chain_holds);
                print_verdict(out, "|gamma| <= 3", report.gamma_small_holds);
                print_verdict(out, "|sigma| < count + 2 + |gamma|", report.corollary_holds);
                out << "  degree relation (informational): " << report.poincare_lhs
                    << (report.poincare_holds ? " = " : " != ") << report.poincare_rhs
                    << "\n";
                if (report.falsified) {
                    out << "FALSIFICATION: a proved inequality failed on this input\n";
                } else {
                    out << "all proved bounds hold\n";
                }
            }
            return report.falsified ? 3 : 0;
        }
        if (*indec) {
            const IndecomposabilityReport report =
                indecomposability_test(parse_pair(poly_f, poly_g), trials, seed);
            if (json) {
                out << to_json(report).dump(2) << "\n";
            } else {
                out << "verdict: "
                    << (report.verdict == DecompositionVerdict::kIndecomposable
                            ? "INDECOMPOSABLE (certified)"
                            : "LIKELY_DECOMPOSABLE")
                    << "\n";
                if (report.witness) {
                    out << "irreducible member at t = " << report.witness->get_str() << "\n";
                }
                out << "trials used: " << report.trials_used << "\n";
            }
            return 0;
        }
        // corpus
        const std::vector<CorpusItem> items = load_corpus_file(corpus_path);
        const std::vector<FixtureOutcome> outcomes = run_corpus(items, filter);
        bool all_passed = true;
        bool falsified = false;
        for (const FixtureOutcome& o : outcomes) {
            all_passed = all_passed && o.passed;
            falsified = falsified || o.falsified;
        }
        if (json) {
            OrderedJson j;
            OrderedJson list = OrderedJson::array();
            for (const FixtureOutcome& o : outcomes) {
                OrderedJson jo;
                jo["name"] = o.name;
                jo["passed"] = o.passed;
                jo["mismatches"] = o.mismatches;
                list.push_back(std::move(jo));
            }
            j["fixtures"] = std::move(list);
            j["passed"] = all_passed;
            j["falsified"] = falsified;
            out << j.dump(2) << "\n";
        } else {
            for (const FixtureOutcome& o : outcomes) {
                out << (o.passed ? "[PASS] " : "[FAIL] ") << o.name << "\n";
                for (const std::string& m : o.mismatches) out << "       " << m << "\n";
            }
            std::size_t passed =
                static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                       [](const FixtureOutcome& o) {
                                                           return o.passed;
                                                       }));
            out << passed << "/" << outcomes.size() << " fixtures passed\n";
        }
        if (falsified) return 3;
        return all_passed ? 0 : 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace remspec
