#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "torsion/sphere.hpp"

namespace torsion {

/// The fixed catalogue of sphere models exercised by the self-check and the
/// round-trip tests: n = 1..10, rank 1..3, both cell models, radii 1 and 5/2.
std::vector<SphereSpec> builtin_sphere_specs();

std::string model_name(CellModel model);
CellModel parse_model(const std::string& name);

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    std::string detail;  ///< first failure, empty on success
};

/// Runs every property suite, independent suites concurrently. Deterministic for a given seed.
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed = 20240601);

}  // namespace torsion
