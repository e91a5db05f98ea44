#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fc/multigraph.hpp"

namespace fc {

// Deterministic PRNG wrapper: raw mt19937_64 draws with modulo reduction so
// instances are byte-identical across standard libraries.
struct Rng {
    explicit Rng(uint64_t seed);
    uint64_t next();
    int below(int n);  // uniform-ish in [0, n)
    double unit();

  private:
    uint64_t s[4];
};

struct GenParams {
    uint64_t seed = 1;
    int n = 8;
    double density = 0.8;           // fraction of 3n-6 edges kept
    double terminal_fraction = 0.5;
    int k = 2;
};

// Random planar instance: a stacked triangulation grown by repeated face
// splits, thinned by random edge deletions, with random terminal marks.
Instance gen_planar(const GenParams &params);

// Every connected simple planar graph on exactly n labeled vertices 0..n-1.
void enumerate_connected_planar(int n, const std::function<void(const MultiGraph &)> &visit);

// Seeded biconnected planar graph on <= max_n vertices whose rotation count
// stays within the brute-force budget.
MultiGraph gen_biconnected_small(uint64_t seed, int max_n, long long rotation_budget);

struct SuiteReport {
    std::string name;
    bool pass = false;
    int checked = 0;
    int failures = 0;
    std::string detail;
    std::vector<std::string> counterexamples;  // serialized instances

    std::string to_json() const;
};

// Verification suites backing the acceptance criteria. Failures persist the
// offending instances under counterexamples/.
SuiteReport run_suite(const std::string &name);
std::vector<std::string> suite_names();

}  // namespace fc
