#pragma once

// Embedded CDCL solver: two-watched-literal propagation, activity-based
// branching with phase saving, LBD-driven restarts and clause-database
// reduction, deep conflict-clause minimization, incremental solving under
// assumptions, and DRAT logging.

#include <cstdint>
#include <span>
#include <vector>

#include "packsat/cnf.hpp"
#include "packsat/grid.hpp"
#include "packsat/varmap.hpp"

namespace packsat {

enum class SolveStatus { sat, unsat, unknown };

inline const char* status_name(SolveStatus s)
{
    switch (s) {
        case SolveStatus::sat: return "SAT";
        case SolveStatus::unsat: return "UNSAT";
        default: return "UNKNOWN";
    }
}

struct SolveStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t restarts = 0;
    double seconds = 0.0;
};

struct SolveBudget {
    uint64_t max_conflicts = 0;  // 0 = no limit
    double max_seconds = 0.0;    // 0 = no limit
};

struct SolveResult {
    SolveStatus status = SolveStatus::unknown;
    // Indexed by variable id (entry 0 unused); empty unless SAT. Every model
    // is checked against the full clause list before being reported.
    std::vector<bool> model;
    SolveStats stats;
};

// Consumer of DRAT clause addition/deletion events.
class ProofSink {
public:
    virtual ~ProofSink() = default;
    virtual void add_clause(std::span<const Lit> lits) = 0;
    virtual void delete_clause(std::span<const Lit> lits) = 0;
};

class Solver {
public:
    explicit Solver(const Formula& f, ProofSink* proof = nullptr);
    ~Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    SolveResult solve(std::span<const Lit> assumptions = {}, const SolveBudget& budget = {});

    // After UNSAT under assumptions: a derived clause over negated
    // assumptions (empty after a global UNSAT).
    const std::vector<Lit>& final_conflict() const { return final_conflict_; }

private:
    struct Impl;
    Impl* impl_;
};

// Projects a model to a coloring: each vertex takes its lowest true color.
// Throws if some vertex has no true color (the model violates ALOC).
Coloring extract_coloring(const std::vector<bool>& model, const VarMap& vars, int r, int k);

}  // namespace packsat
