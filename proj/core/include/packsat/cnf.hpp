#pragma once

// Propositional layer shared by the encoders, the solver and the proof
// machinery. Literals use the DIMACS convention: nonzero signed ints,
// variable ids starting at 1.

#include <cstdint>
#include <string>
#include <vector>

namespace packsat {

using Lit = std::int32_t;

inline int lit_var(Lit l) { return l < 0 ? -l : l; }
inline bool lit_sign(Lit l) { return l < 0; }  // true = negated

using Clause = std::vector<Lit>;

enum class Variant { direct, plus };

inline const char* variant_name(Variant v) { return v == Variant::direct ? "direct" : "plus"; }

// Instance descriptor carried as formula metadata; enough to regenerate the
// formula byte-for-byte.
struct InstanceInfo {
    int r = 0;
    int k = 0;
    int c = 0;
    Variant variant = Variant::direct;
    bool alod = false;
    std::vector<int> sym_colors;  // empty = no symmetry layers
    bool chessboard = false;

    std::string to_json() const;
    static InstanceInfo from_json(const std::string& text);
    // Short tag like "plus-r6-k11-c6+alod+sym" for filenames and logs.
    std::string tag() const;
};

struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;
    InstanceInfo info;

    void add(Clause c) { clauses.push_back(std::move(c)); }
    size_t size() const { return clauses.size(); }
};

}  // namespace packsat
