#pragma once

#include "hhgq/config.hpp"
#include "hhgq/pipeline.hpp"

namespace hhgq::test {

inline SimulationConfig defaults() { return SimulationConfig{}; }

/// Reduced grids for tests that loop over many pipeline runs.
inline SimulationConfig small() {
    SimulationConfig cfg;
    cfg.n_k = 41;
    cfg.n_t = 4096;
    cfg.q_cutoff = 9;
    return cfg;
}

} // namespace hhgq::test
