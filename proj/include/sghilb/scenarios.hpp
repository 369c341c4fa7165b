#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sghilb/geometry.hpp"
#include "sghilb/hilbert.hpp"
#include "sghilb/ideal.hpp"
#include "sghilb/monomial_ideal.hpp"
#include "sghilb/ring.hpp"

namespace sghilb {

// The verification dataset: each case fixes a ring, a quotient Hilbert
// polynomial and a Hilbert function, and records the expected strongly
// stable lists, tangent dimensions, component data and degeneration
// witnesses. The text lives in data/cases.txt (embedded at build time);
// the grammar is documented there.

// A named monomial ideal with its expected regularity and tangent dimension.
struct NamedStableIdeal {
    std::string name;
    MonomialIdeal ideal;
    int regularity = 0;
    std::int64_t tangent = 0;
};

// A component of the stratum: expected dimension plus a representative
// ideal at which the tangent space has exactly that dimension.
struct NamedComponent {
    std::string name;
    std::int64_t dim = 0;
    GradedIdeal representative;
};

// An auxiliary ideal with a frozen tangent dimension.
struct NamedPoint {
    std::string name;
    std::int64_t tangent = 0;
    GradedIdeal ideal;
};

struct SaturationClaim {
    std::string ideal;      // name in the strongly stable list
    std::string saturated;  // name in the saturated list
};

struct ExpansionClaim {
    std::string saturated;  // name in the saturated list
    std::string ideal;      // the unique hf-compatible expansion
};

struct NamedGamma {
    std::string name;
    CoordinateChange change;
};

struct TransformClaim {
    std::string point;   // equals gamma applied to source, as ideals
    std::string gamma;
    std::string source;
};

struct LexInitialClaim {
    std::string point;
    std::string target;  // name in the strongly stable list
};

struct GinEqualityClaim {
    std::string point;
    std::string source;  // generic initial ideals agree
};

struct SpecializationClaim {
    enum class Mode { weight, grevlex, search };

    std::string source;
    std::string target;  // name in the strongly stable list
    Mode mode = Mode::search;
    std::vector<std::int64_t> weight;  // Mode::weight only
};

struct FamilySpec {
    enum class Kind { orbit, complete_intersection };

    std::string id;
    Kind kind = Kind::orbit;
    std::string source;       // Kind::orbit: representative to move
    std::vector<int> degrees;  // Kind::complete_intersection
};

struct ScenarioCase {
    std::string id;
    RingContext ctx = RingContext::standard(1);
    HilbertPoly polynomial;
    int gotzmann = 0;
    std::vector<std::int64_t> h_ideal;  // h_ideal[d] = dim I_d

    std::vector<NamedStableIdeal> stable;     // canonical order, lex segment first
    std::vector<NamedStableIdeal> saturated;  // canonical order
    std::vector<SaturationClaim> saturations;
    std::vector<ExpansionClaim> expansions;
    std::vector<NamedComponent> components;
    std::vector<NamedPoint> points;
    std::vector<NamedGamma> gammas;
    std::vector<TransformClaim> transforms;
    std::vector<LexInitialClaim> lex_initials;
    std::vector<GinEqualityClaim> gin_equalities;
    std::vector<SpecializationClaim> specializations;
    std::vector<FamilySpec> families;

    const NamedStableIdeal* find_stable(const std::string& name) const;
    const NamedStableIdeal* find_saturated(const std::string& name) const;
    const NamedComponent* find_component(const std::string& name) const;
    const NamedPoint* find_point(const std::string& name) const;
    const NamedGamma* find_gamma(const std::string& name) const;
    const FamilySpec* find_family(const std::string& id) const;

    // Ideal behind a claim source name: components, then points, then the
    // stable and saturated lists (monomial ideals converted to grevlex
    // generators). Throws std::out_of_range for unknown names.
    GradedIdeal resolve_ideal(const std::string& name) const;
};

// Parses dataset text; throws std::runtime_error with a line number on
// malformed input.
std::vector<ScenarioCase> parse_cases(std::string_view text);

// The cases embedded from data/cases.txt, parsed once.
const std::vector<ScenarioCase>& builtin_cases();
// Case with the given id, or nullptr.
const ScenarioCase* find_case(const std::string& id);

struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string case_id;
    std::vector<CheckResult> checks;

    int failures() const;
    bool all_passed() const { return failures() == 0; }
};

struct RunOptions {
    std::uint64_t seed = kDefaultGinSeed;
    int gin_trials = 3;
    int family_samples = 2;  // members sampled per family
    int weight_bound = 6;    // entry bound for searched specialization weights
};

// Recomputes every recorded value for the case and compares exactly:
// enumerations, lex segment, Gotzmann number, regularities, tangent
// dimensions, Hilbert polynomials, saturations and their unique expansions,
// component dimensions and generic initial ideals, coordinate-change and
// initial-ideal claims, specialization witnesses, sampled family members,
// and the strict singularity of the lex point.
VerificationReport run_case(const ScenarioCase& c, const RunOptions& opts = {});

// Deterministic pseudo-random member of the named family. Integer parameters
// are drawn from [-9, 9]; draws whose Hilbert function disagrees with the
// case are rejected (bounded retries). Throws std::runtime_error for unknown
// ids or when every retry fails.
GradedIdeal sample_family_member(const ScenarioCase& c, const std::string& family_id,
                                 std::uint64_t seed);

}  // namespace sghilb
