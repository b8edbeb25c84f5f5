#include "remspec/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "remspec/errors.hpp"
#include "remspec/parse.hpp"
#include "remspec/rng.hpp"

namespace remspec {

namespace {

Rational draw_nonzero(Rng& rng, long bound) {
    long c = 0;
    while (c == 0) c = rng_range(rng, -bound, bound);
    return Rational(c);
}

// Draws the two polynomials on the given supports until they are coprime.
Derivation seeded_derivation(const std::vector<Mono>& support, std::uint64_t seed) {
    Rng rng(seed);
    RationalDomain dom;
    for (;;) {
        BiPoly a = BiPoly::zero(dom);
        BiPoly b = BiPoly::zero(dom);
        for (const Mono& m : support) a.add_term(m, draw_nonzero(rng, 9));
        for (const Mono& m : support) b.add_term(m, draw_nonzero(rng, 9));
        if (gcd_bi(a, b).decided_total_degree() == 0) {
            return make_derivation(a, b);
        }
    }
}

} // namespace

SharpFamily sharp_family(int k) {
    if (k < 1) {
        throw MathError(MathError::Kind::precondition, "sharp family needs k >= 1");
    }
    const std::string ks = std::to_string(k);
    BiPoly a = parse_bipoly("X^" + ks + "-1");
    BiPoly b = parse_bipoly("-(" + ks + "*X^" + std::to_string(k - 1) + "*Y+1)");
    BiPoly f = parse_bipoly("Y*(X^" + ks + "-1)+X");
    BiPoly g = parse_bipoly("1");
    return SharpFamily{make_derivation(a, b), RationalFunctionPair::make(f, g)};
}

Derivation dense_family(int k, std::uint64_t seed) {
    if (k < 1) {
        throw MathError(MathError::Kind::precondition, "dense family needs k >= 1");
    }
    std::vector<Mono> support;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; i + j <= k; ++j) support.push_back(Mono{i, j});
    }
    return seeded_derivation(support, seed);
}

Derivation sparse_family(int e, std::uint64_t seed) {
    if (e < 1) {
        throw MathError(MathError::Kind::precondition, "sparse family needs e >= 1");
    }
    const std::vector<Mono> support{Mono{e, e}, Mono{e - 1, e}, Mono{e, e - 1}, Mono{0, 0}};
    return seeded_derivation(support, seed);
}

// ---------------------------------------------------------------------------
// Fixture file parsing.
// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        const auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
    throw ParseError(line_no, "fixture line " + std::to_string(line_no) + ": " + message);
}

long parse_long(const std::string& s, std::size_t line_no, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) fail(line_no, "trailing characters in " + what + ": '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, "expected an integer for " + what + ", got '" + s + "'");
    }
}

std::vector<ExpectedEntry> parse_entries(const std::string& text, std::size_t line_no) {
    std::vector<ExpectedEntry> out;
    for (const std::string& chunk : split(text, ';')) {
        const std::string spec = trim(chunk);
        if (spec.empty()) fail(line_no, "empty spectrum entry");
        ExpectedEntry e;
        bool have_n = false, have_def = false, have_g = false, have_p = false;
        const auto parts = split(spec, '~');
        if (parts.empty()) fail(line_no, "malformed spectrum entry '" + spec + "'");
        if (parts[0] == "inf") {
            e.at_infinity = true;
        } else {
            try {
                e.modulus = parse_unipoly(parts[0]);
            } catch (const ParseError& pe) {
                fail(line_no, "bad entry value '" + parts[0] + "': " + pe.what());
            }
            if (e.modulus.degree() < 1) fail(line_no, "entry value must be non-constant");
        }
        for (std::size_t i = 1; i < parts.size(); ++i) {
            const std::string& tok = parts[i];
            if (tok.rfind("def", 0) == 0) {
                e.defect = static_cast<int>(parse_long(tok.substr(3), line_no, "def"));
                have_def = true;
            } else if (tok.rfind('n', 0) == 0) {
                e.factor_count = static_cast<int>(parse_long(tok.substr(1), line_no, "n"));
                have_n = true;
            } else if (tok.rfind('g', 0) == 0) {
                const long v = parse_long(tok.substr(1), line_no, "g");
                if (v != 0 && v != 1) fail(line_no, "g flag must be 0 or 1");
                e.pure_power = v == 1;
                have_g = true;
            } else if (tok.rfind('p', 0) == 0) {
                for (const std::string& layer : split(tok.substr(1), ',')) {
                    const auto caret = layer.find('^');
                    if (caret == std::string::npos) {
                        fail(line_no, "profile layer '" + layer + "' needs deg^exp");
                    }
                    e.profile.emplace_back(
                        static_cast<int>(parse_long(layer.substr(0, caret), line_no, "layer degree")),
                        static_cast<int>(parse_long(layer.substr(caret + 1), line_no, "layer exponent")));
                }
                have_p = true;
            } else {
                fail(line_no, "unknown entry token '" + tok + "'");
            }
        }
        if (!have_n || !have_def || !have_g || !have_p) {
            fail(line_no, "entry '" + spec + "' must carry n, def, g and p");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<LatticePoint> parse_vertices(const std::string& text, std::size_t line_no) {
    std::vector<LatticePoint> out;
    for (const std::string& chunk : split(text, ';')) {
        const auto xy = split(trim(chunk), ',');
        if (xy.size() != 2) fail(line_no, "vertex '" + chunk + "' needs x,y");
        out.push_back(LatticePoint{parse_long(trim(xy[0]), line_no, "vertex x"),
                                   parse_long(trim(xy[1]), line_no, "vertex y")});
    }
    return out;
}

BiPoly parse_poly_field(const std::string& text, std::size_t line_no, const std::string& key) {
    try {
        return parse_bipoly(text);
    } catch (const ParseError& pe) {
        fail(line_no, "bad polynomial for " + key + ": " + pe.what());
    }
}

} // namespace

std::vector<CorpusItem> parse_corpus(std::istream& in) {
    std::vector<CorpusItem> items;
    std::set<std::string> names;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto fields = split(stripped, '|');
        CorpusItem item;
        item.name = trim(fields[0]);
        if (item.name.empty()) fail(line_no, "missing fixture name");
        if (!names.insert(item.name).second) {
            fail(line_no, "duplicate fixture name '" + item.name + "'");
        }

        std::map<std::string, std::string> kv;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const std::string field = trim(fields[i]);
            if (field.empty()) continue;
            const auto eq = field.find('=');
            if (eq == std::string::npos) fail(line_no, "field '" + field + "' is not key=value");
            const std::string key = trim(field.substr(0, eq));
            const std::string value = trim(field.substr(eq + 1));
            if (!kv.emplace(key, value).second) fail(line_no, "duplicate key '" + key + "'");
        }

        const auto take = [&](const char* key) -> std::optional<std::string> {
            auto it = kv.find(key);
            if (it == kv.end()) return std::nullopt;
            std::string v = it->second;
            kv.erase(it);
            return v;
        };

        const auto kind = take("kind");
        if (!kind) fail(line_no, "missing kind");
        if (*kind == "newton") item.kind = CorpusItem::Kind::kNewton;
        else if (*kind == "pencil") item.kind = CorpusItem::Kind::kPencil;
        else if (*kind == "verify") item.kind = CorpusItem::Kind::kVerify;
        else fail(line_no, "unknown kind '" + *kind + "'");

        if (auto s = take("seed")) item.seed = static_cast<std::uint64_t>(parse_long(*s, line_no, "seed"));
        if (auto s = take("source")) item.source = *s;

        if (auto gen = take("gen")) {
            const auto parts = split(*gen, ':');
            const auto param = [&](std::size_t i, const char* what) {
                if (i >= parts.size()) fail(line_no, std::string("gen needs ") + what);
                return parse_long(parts[i], line_no, what);
            };
            if (parts[0] == "sharp") {
                SharpFamily fam = sharp_family(static_cast<int>(param(1, "k")));
                item.derivation = std::move(fam.derivation);
                item.pair = std::move(fam.pair);
            } else if (parts[0] == "dense") {
                item.derivation = dense_family(static_cast<int>(param(1, "k")),
                                               static_cast<std::uint64_t>(param(2, "seed")));
            } else if (parts[0] == "sparse") {
                item.derivation = sparse_family(static_cast<int>(param(1, "e")),
                                                static_cast<std::uint64_t>(param(2, "seed")));
            } else {
                fail(line_no, "unknown generator '" + parts[0] + "'");
            }
        }

        const auto f = take("f");
        const auto g = take("g");
        if (f.has_value() != g.has_value()) fail(line_no, "f and g must come together");
        if (f) {
            item.pair = RationalFunctionPair::make(parse_poly_field(*f, line_no, "f"),
                                                   parse_poly_field(*g, line_no, "g"));
        }
        const auto a = take("A");
        const auto b = take("B");
        if (a.has_value() != b.has_value()) fail(line_no, "A and B must come together");
        if (a) {
            item.derivation = make_derivation(parse_poly_field(*a, line_no, "A"),
                                              parse_poly_field(*b, line_no, "B"));
        }

        if (auto s = take("bcount")) item.bcount = parse_long(*s, line_no, "bcount");
        if (auto s = take("rho")) item.rho = static_cast<int>(parse_long(*s, line_no, "rho"));
        if (auto s = take("sigma")) item.sigma = static_cast<int>(parse_long(*s, line_no, "sigma"));
        if (auto s = take("gamma")) item.gamma = static_cast<int>(parse_long(*s, line_no, "gamma"));
        if (auto s = take("degR")) item.deg_r = static_cast<int>(parse_long(*s, line_no, "degR"));
        if (auto s = take("entries")) item.entries = parse_entries(*s, line_no);
        if (auto s = take("vertices")) item.vertices = parse_vertices(*s, line_no);

        if (!kv.empty()) fail(line_no, "unknown key '" + kv.begin()->first + "'");

        switch (item.kind) {
            case CorpusItem::Kind::kNewton:
                if (!item.derivation) fail(line_no, "newton fixture needs A/B or gen");
                if (!item.bcount) fail(line_no, "newton fixture needs bcount");
                break;
            case CorpusItem::Kind::kPencil:
                if (!item.pair) fail(line_no, "pencil fixture needs f and g");
                break;
            case CorpusItem::Kind::kVerify:
                if (!item.pair) fail(line_no, "verify fixture needs f/g or gen=sharp");
                break;
        }
        items.push_back(std::move(item));
    }
    std::sort(items.begin(), items.end(),
              [](const CorpusItem& a2, const CorpusItem& b2) { return a2.name < b2.name; });
    return items;
}

std::vector<CorpusItem> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open fixture file '" + path + "'");
    return parse_corpus(in);
}

// ---------------------------------------------------------------------------
// Runner.
// ---------------------------------------------------------------------------

namespace {

void expect_eq(std::vector<std::string>& out, const char* what, long expected, long got) {
    if (expected != got) {
        out.push_back(std::string(what) + ": expected " + std::to_string(expected) + ", got " +
                      std::to_string(got));
    }
}

std::string profile_string(const std::vector<std::pair<int, int>>& profile) {
    std::string s;
    for (const auto& [deg, exp] : profile) {
        if (!s.empty()) s += ",";
        s += std::to_string(deg) + "^" + std::to_string(exp);
    }
    return s.empty() ? "-" : s;
}

void compare_entries(const std::vector<ExpectedEntry>& expected,
                     const std::vector<SpectrumEntry>& got,
                     std::vector<std::string>& mismatches) {
    if (expected.size() != got.size()) {
        mismatches.push_back("entry count: expected " + std::to_string(expected.size()) +
                             ", got " + std::to_string(got.size()));
        return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const ExpectedEntry& e = expected[i];
        const SpectrumEntry& c = got[i];
        const std::string tag = "entry " + std::to_string(i);
        if (e.at_infinity != c.at_infinity) {
            mismatches.push_back(tag + ": direction mismatch");
            continue;
        }
        if (!e.at_infinity && !(e.modulus == c.modulus)) {
            mismatches.push_back(tag + ": modulus mismatch");
        }
        if (e.factor_count != c.factor_count) {
            mismatches.push_back(tag + ": n expected " + std::to_string(e.factor_count) +
                                 ", got " + std::to_string(c.factor_count));
        }
        if (e.defect != c.defect) {
            mismatches.push_back(tag + ": defect expected " + std::to_string(e.defect) +
                                 ", got " + std::to_string(c.defect));
        }
        if (e.pure_power != c.pure_power) {
            mismatches.push_back(tag + ": pure-power flag expected " +
                                 std::to_string(e.pure_power) + ", got " +
                                 std::to_string(c.pure_power));
        }
        if (e.profile != c.profile) {
            mismatches.push_back(tag + ": profile expected " + profile_string(e.profile) +
                                 ", got " + profile_string(c.profile));
        }
    }
}

void compare_aggregates(const CorpusItem& item, const PencilReport& report,
                        std::vector<std::string>& mismatches) {
    if (item.rho) expect_eq(mismatches, "rho", *item.rho, report.rho);
    if (item.sigma) expect_eq(mismatches, "sigma", *item.sigma, report.sigma_size);
    if (item.gamma) expect_eq(mismatches, "gamma", *item.gamma, report.gamma_size);
    if (item.deg_r) expect_eq(mismatches, "degR", *item.deg_r, report.remainder_degree);
    if (item.entries) compare_entries(*item.entries, report.entries, mismatches);
    // Proved for every pencil: the direction count is at most the total
    // order of reducibility plus the pure-power count, and at most three
    // directions are pure powers.
    if (report.sigma_size > report.rho + report.gamma_size) {
        mismatches.push_back("direction-count chain violated: " +
                             std::to_string(report.sigma_size) + " > " +
                             std::to_string(report.rho) + " + " +
                             std::to_string(report.gamma_size));
    }
    if (report.gamma_size > 3) {
        mismatches.push_back("more than three pure-power directions: " +
                             std::to_string(report.gamma_size));
    }
}

} // namespace

FixtureOutcome run_fixture(const CorpusItem& item) {
    FixtureOutcome outcome;
    outcome.name = item.name;
    try {
        switch (item.kind) {
            case CorpusItem::Kind::kNewton: {
                const NewtonReport report = bcount(*item.derivation);
                expect_eq(outcome.mismatches, "bcount", *item.bcount, report.count);
                if (item.vertices) {
                    std::vector<LatticePoint> support;
                    for (const auto& [m, c] : item.derivation->a.terms()) {
                        support.push_back(LatticePoint{m.x, m.y});
                    }
                    for (const auto& [m, c] : item.derivation->b.terms()) {
                        support.push_back(LatticePoint{m.x, m.y});
                    }
                    const LatticePolygon hull = convex_hull(std::move(support));
                    if (hull.vertices != *item.vertices) {
                        outcome.mismatches.push_back("support hull vertices differ");
                    }
                }
                break;
            }
            case CorpusItem::Kind::kPencil: {
                const PencilReport report = analyze_pencil(*item.pair, item.seed);
                compare_aggregates(item, report, outcome.mismatches);
                break;
            }
            case CorpusItem::Kind::kVerify: {
                const BoundsReport report =
                    verify_remarkable_bounds(*item.pair, item.derivation, item.seed);
                if (item.bcount) {
                    expect_eq(outcome.mismatches, "bcount", *item.bcount, report.newton.count);
                }
                compare_aggregates(item, report.pencil, outcome.mismatches);
                if (!report.theorem_bound_holds) {
                    outcome.mismatches.push_back("reducibility-order bound failed");
                }
                if (!report.sigma_chain_holds) {
                    outcome.mismatches.push_back("direction-count chain failed");
                }
                if (!report.gamma_small_holds) {
                    outcome.mismatches.push_back("pure-power cap failed");
                }
                if (!report.corollary_holds) {
                    outcome.mismatches.push_back("direction-count corollary failed");
                }
                outcome.falsified = report.falsified;
                break;
            }
        }
    } catch (const std::exception& e) {
        outcome.mismatches.push_back(std::string("exception: ") + e.what());
    }
    outcome.passed = outcome.mismatches.empty();
    return outcome;
}

std::vector<FixtureOutcome> run_corpus(const std::vector<CorpusItem>& items,
                                       const std::string& filter) {
    std::vector<const CorpusItem*> selected;
    for (const CorpusItem& item : items) {
        if (filter.empty() || item.name.find(filter) != std::string::npos) {
            selected.push_back(&item);
        }
    }
    std::sort(selected.begin(), selected.end(),
              [](const CorpusItem* a, const CorpusItem* b) { return a->name < b->name; });
    std::vector<FixtureOutcome> outcomes;
    outcomes.reserve(selected.size());
    for (const CorpusItem* item : selected) outcomes.push_back(run_fixture(*item));
    return outcomes;
}

} // namespace remspec
