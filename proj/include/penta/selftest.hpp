#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace penta::selftest {

struct SuiteResult {
    std::string name;
    bool passed{};
    std::size_t checks{};
    std::string detail;  // first counterexample, verbatim inputs
};

// One function per verified property family. The counts are the knobs the
// CLI exposes; the acceptance harness pins them to the reference sizes.
SuiteResult criteria_agreement(std::size_t n_triples, std::size_t n_ball, std::uint64_t seed);
SuiteResult kappa_agreement(std::size_t n, std::uint64_t seed, double step = 1e-3);
SuiteResult radius_identity(std::size_t n, std::uint64_t seed);
SuiteResult lifting_roundtrip(std::size_t n, std::uint64_t seed);
SuiteResult mu_consistency(std::size_t n, std::uint64_t seed, double grid = 1e-2);
SuiteResult automorphism_laws(std::size_t n, std::uint64_t seed);
SuiteResult boundary_roundtrip(std::size_t n, std::uint64_t seed);
SuiteResult real_convexity(std::size_t n_hessian, std::size_t n_pairs, std::uint64_t seed);
SuiteResult fixed_regressions();
SuiteResult starlike(std::size_t n_derivative, std::size_t n_members, std::size_t n_scales,
                     std::uint64_t seed);
SuiteResult separation(std::size_t n_points, std::uint64_t seed);

std::vector<std::string> suite_names();

/// Dispatch by suite name with a single size knob; unknown names throw.
SuiteResult run_suite(const std::string& name, std::size_t n, std::uint64_t seed);

}  // namespace penta::selftest
