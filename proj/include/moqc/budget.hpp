#pragma once

#include <chrono>

#include "errors.hpp"

namespace moqc {

// Cooperative wall-clock limit. Strategies consult it before every oracle
// call; the branch and bound additionally polls it between batches of nodes
// so one long call cannot blow far past the limit.
struct Budget {
    using clock = std::chrono::steady_clock;

    bool enabled = false;
    clock::time_point deadline{};

    static Budget unlimited() { return {}; }

    static Budget seconds(double s) {
        Budget b;
        b.enabled = true;
        b.deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                        std::chrono::duration<double>(s));
        return b;
    }

    bool expired() const { return enabled && clock::now() >= deadline; }

    void check() const {
        if (expired()) throw timeout_error();
    }
};

} // namespace moqc
