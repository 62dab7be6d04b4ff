#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srg/exact.hpp"

namespace srg {

// Parameter tuple (v, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
    long long v{0};
    long long k{0};
    long long lambda{0};
    long long mu{0};

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct NonIntegralMultiplicity : std::runtime_error {
    explicit NonIntegralMultiplicity(const std::string& m) : std::runtime_error(m) {}
};
struct ComplementDegenerate : std::runtime_error {
    explicit ComplementDegenerate(const std::string& m) : std::runtime_error(m) {}
};
struct ThresholdUndefined : std::runtime_error {
    explicit ThresholdUndefined(const std::string& m) : std::runtime_error(m) {}
};

// Exact spectrum {k^1, r^f, s^g} of a parameter tuple.
struct Spectrum {
    long long k{0};
    ExactEig r;
    ExactEig s;
    long long f{0};
    long long g{0};
    bool conference{false};

    // Second eigenvalue max(r, -s).
    double lambda2() const;
    bool integral() const { return r.integral() && s.integral(); }
};

enum class FamilyTag {
    CompleteMultipartite,
    Conference,
    LatinSquareType,
    SteinerType,
    ExceptionalType,
};

const char* family_tag_name(FamilyTag t);

struct ParamClass {
    FamilyTag tag{FamilyTag::ExceptionalType};
    // CompleteMultipartite: n parts of size m.  LatinSquareType / SteinerType:
    // the (m, n) of the family form.  Conference: t of (4t+1, 2t, t-1, t).
    long long m{0};
    long long n{0};
    long long t{0};
    bool primitive{false};
};

struct FeasibilityCheck {
    std::string name;
    bool applicable{true};
    bool pass{true};
};

struct FeasibilityReport {
    SrgParams p;
    std::vector<FeasibilityCheck> checks;
    bool feasible{false};

    const FeasibilityCheck* find(const std::string& name) const;
};

struct BoundEntry {
    std::string name;
    double lhs{0};
    double rhs{0};
    bool satisfied{false};
    bool applicable{false};
};

struct BoundReport {
    SrgParams p;
    std::vector<BoundEntry> entries;
    bool all_ok{true};  // every applicable entry satisfied

    const BoundEntry* find(const std::string& name) const;
};

// Exact eigenvalues and multiplicities from the parameter identities.
// Throws NonIntegralMultiplicity when the tuple admits no valid spectrum.
Spectrum spectrum_from_params(const SrgParams& p);

// Necessary-condition feasibility report (parameter identities, spectrum
// integrality and range, Seidel absolute bounds, complement validity).
FeasibilityReport check_feasibility(const SrgParams& p);

// Parameter-form classification with fixed precedence:
// complete multipartite > conference > Latin-square > Steiner > exceptional.
ParamClass classify_params(const SrgParams& p);

// Parameters of the complement graph; an involution on feasible tuples.
SrgParams complement_params(const SrgParams& p);

// Evaluates the eigenvalue-ratio inequality suite on a feasible tuple.
BoundReport bound_suite(const SrgParams& p);

// Hamiltonicity threshold 1000 * ln v * lnlnln v / (lnln v)^2, natural logs.
// Throws ThresholdUndefined for v < 16.
double ks_threshold(long long v);

struct FeasibleEntry {
    SrgParams p;
    Spectrum spectrum;
    ParamClass cls;
    BoundReport bounds;
};

// Streams every feasible tuple with v <= v_max in lexicographic
// (v, k, lambda, mu) order.
void enumerate_feasible(long long v_max, const std::function<void(const FeasibleEntry&)>& sink);
std::vector<FeasibleEntry> enumerate_feasible(long long v_max);

}  // namespace srg
