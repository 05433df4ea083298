#pragma once

#include "pcalc/decompose.hpp"

namespace pcalc {

struct SuiteOptions {
    uint64_t seed = 42;
    int trials = 100;
    std::vector<int> max_grid = {4, 4, 3};  // per-axis cap; third entry enables 3-factor shapes
    bool inject_fault = false;              // harness self-test: force one failure per suite
    long long cost_cap = 10000000;
};

struct PropertyResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool ok() const {
        for (const auto& p : properties)
            if (p.failures) return false;
        return true;
    }
};

SuiteResult check_lattice(const SuiteOptions& opts);
SuiteResult check_calculus(const SuiteOptions& opts);
SuiteResult check_exactness(const SuiteOptions& opts);
SuiteResult check_decompose(const SuiteOptions& opts);
SuiteResult check_homotopy(const SuiteOptions& opts);

// which: lattice | calculus | exactness | decompose | homotopy | all
std::vector<SuiteResult> run_suites(const std::string& which, const SuiteOptions& opts);

// Test-support generators (deterministic per seed).

// Conjugates every value by a random invertible matrix; the result is
// isomorphic to F but has scrambled bases.
ModulePtr conjugate_module(const ModulePtr& F, uint64_t seed);

std::vector<int> random_grid_shape(uint64_t seed, const std::vector<int>& max_grid);

// Direct sum of distinct random blocks on a 2-factor grid.
ModulePtr random_block_sum(PosetPtr grid2, uint64_t seed, uint32_t p,
                           std::vector<Block>* blocks_out = nullptr);

} // namespace pcalc
