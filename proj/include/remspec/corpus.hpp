#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remspec/derivation.hpp"
#include "remspec/newton.hpp"
#include "remspec/spectrum.hpp"

namespace remspec {

// ---------------------------------------------------------------------------
// Example families.
// ---------------------------------------------------------------------------

// The family whose polygon count equals k while the spectrum has k+1
// directions: D = (X^k - 1) d/dX - (k X^{k-1} Y + 1) d/dY with first
// integral (Y (X^k - 1) + X) / 1. Requires k >= 1.
struct SharpFamily {
    Derivation derivation;
    RationalFunctionPair pair;
};
SharpFamily sharp_family(int k);

// Seeded derivation with full support up to total degree k in both
// coordinates: every coefficient drawn non-zero, redrawing until the pair
// is coprime. Its polygon count is always k(k+1)/2. Requires k >= 1.
Derivation dense_family(int k, std::uint64_t seed);

// Seeded derivation whose two polynomials are supported exactly on
// {(e,e), (e-1,e), (e,e-1), (0,0)} with non-zero coefficients (coprime by
// redraw). Requires e >= 1.
Derivation sparse_family(int e, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fixture file. One record per line, fields separated by '|'. The first
// field is the unique fixture name; every other field is one key=value
// assignment. '#' starts a comment, blank lines are skipped.
//
//   kind=     newton | pencil | verify
//   f=, g=    the fraction (pencil, verify)
//   A=, B=    an explicit derivation (newton; optional for verify)
//   gen=      sharp:K | dense:K:SEED | sparse:E:SEED builds the inputs
//   seed=     analysis seed (default 0)
//   bcount=   expected polygon count (newton, verify)
//   rho=, sigma=, gamma=, degR=   expected aggregates (pencil, verify)
//   entries=  expected spectrum entries, ';'-separated, each of the form
//             VALUE~nN~defD~gG~pD1^E1[,D2^E2...] where VALUE is 'inf' or a
//             monic square-free polynomial in t
//   vertices= expected hull vertices of the union of the supports of A and
//             B, as x,y pairs separated by ';' (newton)
//   source=   free-form provenance label (closed-form | hand | oracle)
// ---------------------------------------------------------------------------

struct ExpectedEntry {
    bool at_infinity = false;
    UniPoly modulus; // zero polynomial at infinity
    int factor_count = 1;
    int defect = 0;
    bool pure_power = false;
    std::vector<std::pair<int, int>> profile;
};

struct CorpusItem {
    enum class Kind { kNewton, kPencil, kVerify };

    std::string name;
    Kind kind = Kind::kPencil;
    std::string source;
    std::uint64_t seed = 0;

    std::optional<RationalFunctionPair> pair;
    std::optional<Derivation> derivation;

    std::optional<std::int64_t> bcount;
    std::optional<int> rho;
    std::optional<int> sigma;
    std::optional<int> gamma;
    std::optional<int> deg_r;
    std::optional<std::vector<ExpectedEntry>> entries;
    std::optional<std::vector<LatticePoint>> vertices;
};

// Parses fixture records; throws ParseError (with a line-scoped message) on
// malformed input, duplicate names, or missing required fields. Items are
// returned sorted by name.
std::vector<CorpusItem> parse_corpus(std::istream& in);
std::vector<CorpusItem> load_corpus_file(const std::string& path);

// ---------------------------------------------------------------------------
// Runner.
// ---------------------------------------------------------------------------

struct FixtureOutcome {
    std::string name;
    bool passed = false;
    // One of the four proved inequalities failed while running a verify
    // fixture; reported separately because it contradicts proved results.
    bool falsified = false;
    std::vector<std::string> mismatches;
};

FixtureOutcome run_fixture(const CorpusItem& item);

// Runs every fixture whose name contains `filter` (all when empty), in
// name order.
std::vector<FixtureOutcome> run_corpus(const std::vector<CorpusItem>& items,
                                       const std::string& filter);

} // namespace remspec
