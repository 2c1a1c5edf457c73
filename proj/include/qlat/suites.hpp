#pragma once

#include <string>

#include "qlat/quasipoly.hpp"

namespace qlat::suites {

struct SuiteConfig {
    uint64_t seed = 0;
    long long sample_count = 100'000;  // sampled spaces (boolean domain)
    int max_elems = 3;                 // chain-size cap for the test spaces
    int max_arity = 3;
    long long budget = 1'000'000;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = true;
    long long checked = 0;  // functions (or pairs) examined
    std::string detail;     // first disagreement, empty when passing
};

// One entry per acceptance criterion; each runs the full exhaustive (or
// seeded-sample) battery for its characterization at the configured sizes.
CheckResult polynomial_equivalences(const SuiteConfig& cfg);   // three recognizers agree
CheckResult chain_comonotone(const SuiteConfig& cfg);          // comonotone characterization
CheckResult quasi_vs_oracle(const SuiteConfig& cfg);           // recognizer vs brute force
CheckResult factorization_sets(const SuiteConfig& cfg);        // bracket identities = composition
CheckResult sugeno_factorizations(const SuiteConfig& cfg);     // Sugeno factor always exists
CheckResult quasi_homogeneity(const SuiteConfig& cfg);         // homogeneity/horizontal flags
CheckResult quasi_comonotone(const SuiteConfig& cfg);          // quasi-comonotone characterization
CheckResult hat_fixtures(const SuiteConfig& cfg);              // binary-sum fixture + hat agreement
CheckResult threshold_counterexample(const SuiteConfig& cfg);  // quasi-idempotency necessity
CheckResult transformed_vs_oracle(const SuiteConfig& cfg);     // recognizer vs brute force
CheckResult enumeration_counts(const SuiteConfig& cfg);        // frozen counts 6 / 20
CheckResult bracket_identities(const SuiteConfig& cfg);        // (p, phi) identity sweep

/// suite in {core, chains, transformed, all}; throws std::invalid_argument
/// on anything else.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteConfig& cfg);

}  // namespace qlat::suites
