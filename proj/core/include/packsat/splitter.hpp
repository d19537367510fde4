#pragma once

// Cube generation for the cube-and-conquer split over regional variables.
// Cases are built from the R regions closest to the center and the T highest
// colors, with at most P positive literals per cube; cubes with fewer than P
// positives carry negative literals for every region variable of every
// unchosen top color. The emitted DNF is a tautology.

#include <cstdint>
#include <optional>
#include <vector>

#include "packsat/cnf.hpp"
#include "packsat/varmap.hpp"

namespace packsat {

struct Cube {
    std::vector<Lit> positives;  // regional literals, colors ascending
    std::vector<Lit> negatives;  // negated regional literals; empty iff full
    uint64_t index = 0;          // generation sequence number

    std::vector<Lit> literals() const;
};

struct SplitParams {
    int max_positives = 0;    // P
    int top_colors = 1;       // T
    int closest_regions = 1;  // R
    int k = 0;
    int c = 0;

    void validate(int available_regions) const;
};

// Closed-form cube count: sum over p of C(T, p) * R^p.
uint64_t count_cubes(int P, int T, int R);

// Deterministic cube stream: p descending from P, color subsets in
// lexicographic order, region tuples in row-major order.
class PtrCubeStream {
public:
    PtrCubeStream(const SplitParams& params, const VarMap& vars);

    std::optional<Cube> next();
    uint64_t emitted() const { return emitted_; }
    // Resolved top colors, ascending (center color replaced by k-T when it
    // would otherwise be a top color).
    const std::vector<int>& colors() const { return colors_; }

private:
    void rebuild_negatives();
    bool advance();

    SplitParams params_;
    const VarMap* vars_;
    std::vector<int> colors_;
    int p_;
    std::vector<int> comb_;   // indices into colors_, strictly increasing
    std::vector<int> tuple_;  // region indices, odometer with last digit fastest
    std::vector<Lit> negatives_;
    bool done_ = false;
    uint64_t emitted_ = 0;
};

std::vector<Cube> collect_cubes(const SplitParams& params, const VarMap& vars);

// True iff every assignment to the involved variables satisfies some cube.
// Brute force requires at most 24 involved variables.
bool check_tautology_bruteforce(const std::vector<Cube>& cubes);
// General route: the negation CNF is handed to the embedded solver.
bool check_tautology_negation(const std::vector<Cube>& cubes);
// Dispatches on the number of involved variables.
bool check_tautology(const std::vector<Cube>& cubes);

}  // namespace packsat
