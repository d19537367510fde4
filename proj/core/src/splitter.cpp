#include "packsat/splitter.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "packsat/solver.hpp"

namespace packsat {

std::vector<Lit> Cube::literals() const
{
    std::vector<Lit> out;
    out.reserve(positives.size() + negatives.size());
    out.insert(out.end(), positives.begin(), positives.end());
    out.insert(out.end(), negatives.begin(), negatives.end());
    return out;
}

void SplitParams::validate(int available_regions) const
{
    if (max_positives < 0 || top_colors < 1 || closest_regions < 1)
        throw std::invalid_argument("split parameters must be positive");
    if (max_positives > top_colors)
        throw std::invalid_argument("P must not exceed T");
    if (top_colors > k) throw std::invalid_argument("T must not exceed k");
    if (closest_regions > available_regions)
        throw std::invalid_argument("R exceeds the number of available regions");
}

uint64_t count_cubes(int P, int T, int R)
{
    if (P > T) throw std::invalid_argument("P must not exceed T");
    // sum over p of C(T, p) * R^p
    uint64_t total = 0;
    for (int p = 0; p <= P; ++p) {
        uint64_t binom = 1;
        for (int i = 0; i < p; ++i) binom = binom * uint64_t(T - i) / uint64_t(i + 1);
        uint64_t pw = 1;
        for (int i = 0; i < p; ++i) pw *= uint64_t(R);
        total += binom * pw;
    }
    return total;
}

PtrCubeStream::PtrCubeStream(const SplitParams& params, const VarMap& vars)
    : params_(params), vars_(&vars)
{
    params.validate(vars.region_count());
    std::set<int> top;
    for (int t = params.k; t > params.k - params.top_colors; --t) top.insert(t);
    if (top.count(params.c)) {
        top.insert(params.k - params.top_colors);
        top.erase(params.c);
    }
    for (int t : top)
        if (t < 4) throw std::invalid_argument("top colors must have regional variables (>= 4)");
    colors_.assign(top.begin(), top.end());  // ascending

    p_ = params_.max_positives;
    comb_.resize(size_t(p_));
    for (int i = 0; i < p_; ++i) comb_[size_t(i)] = i;
    tuple_.assign(size_t(p_), 0);
    rebuild_negatives();
}

void PtrCubeStream::rebuild_negatives()
{
    negatives_.clear();
    if (p_ == params_.max_positives) return;  // full cubes carry no negatives
    std::vector<bool> chosen(colors_.size(), false);
    for (int ci : comb_) chosen[size_t(ci)] = true;
    for (size_t ci = 0; ci < colors_.size(); ++ci) {
        if (chosen[ci]) continue;
        for (int s = 0; s < params_.closest_regions; ++s)
            negatives_.push_back(-vars_->var_of_region(s, colors_[ci]));
    }
}

bool PtrCubeStream::advance()
{
    // Odometer over the region tuple, last digit fastest.
    for (int i = p_ - 1; i >= 0; --i) {
        if (++tuple_[size_t(i)] < params_.closest_regions) return true;
        tuple_[size_t(i)] = 0;
    }
    // Next color subset of size p in lexicographic order.
    int n = int(colors_.size());
    int i = p_ - 1;
    while (i >= 0 && comb_[size_t(i)] == n - (p_ - i)) --i;
    if (i >= 0) {
        ++comb_[size_t(i)];
        for (int j = i + 1; j < p_; ++j) comb_[size_t(j)] = comb_[size_t(j - 1)] + 1;
        rebuild_negatives();
        return true;
    }
    // Next (smaller) p.
    if (--p_ < 0) return false;
    comb_.resize(size_t(p_));
    for (int j = 0; j < p_; ++j) comb_[size_t(j)] = j;
    tuple_.assign(size_t(p_), 0);
    rebuild_negatives();
    return true;
}

std::optional<Cube> PtrCubeStream::next()
{
    if (done_) return std::nullopt;
    Cube cube;
    cube.index = emitted_;
    cube.positives.reserve(size_t(p_));
    for (int j = 0; j < p_; ++j)
        cube.positives.push_back(vars_->var_of_region(tuple_[size_t(j)], colors_[size_t(comb_[size_t(j)])]));
    cube.negatives = negatives_;
    ++emitted_;
    if (!advance()) done_ = true;
    return cube;
}

std::vector<Cube> collect_cubes(const SplitParams& params, const VarMap& vars)
{
    PtrCubeStream stream(params, vars);
    std::vector<Cube> out;
    while (auto c = stream.next()) out.push_back(std::move(*c));
    return out;
}

namespace {

std::vector<int> involved_vars(const std::vector<Cube>& cubes)
{
    std::set<int> vars;
    for (const Cube& c : cubes) {
        for (Lit l : c.positives) vars.insert(lit_var(l));
        for (Lit l : c.negatives) vars.insert(lit_var(l));
    }
    return {vars.begin(), vars.end()};
}

}  // namespace

bool check_tautology_bruteforce(const std::vector<Cube>& cubes)
{
    auto vars = involved_vars(cubes);
    if (vars.size() > 24)
        throw std::invalid_argument("brute-force tautology check capped at 24 variables");
    std::unordered_map<int, int> bit;
    for (size_t i = 0; i < vars.size(); ++i) bit[vars[i]] = int(i);

    // Mask form: cube satisfied iff all positive bits set and no negative bit set.
    struct Masks {
        uint32_t pos = 0, neg = 0;
    };
    std::vector<Masks> masks(cubes.size());
    for (size_t i = 0; i < cubes.size(); ++i) {
        for (Lit l : cubes[i].positives) masks[i].pos |= 1u << bit[lit_var(l)];
        for (Lit l : cubes[i].negatives) masks[i].neg |= 1u << bit[lit_var(l)];
    }
    uint64_t space = uint64_t(1) << vars.size();
    for (uint64_t m = 0; m < space; ++m) {
        bool hit = false;
        for (const Masks& c : masks)
            if ((m & c.pos) == c.pos && (m & c.neg) == 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool check_tautology_negation(const std::vector<Cube>& cubes)
{
    // The negation of the DNF as CNF: one clause of flipped literals per cube.
    Formula neg;
    for (const Cube& c : cubes) {
        Clause cl;
        for (Lit l : c.positives) cl.push_back(-l);
        for (Lit l : c.negatives) cl.push_back(-l);
        for (Lit l : cl) neg.num_vars = std::max(neg.num_vars, lit_var(l));
        neg.add(std::move(cl));
    }
    Solver solver(neg);
    return solver.solve().status == SolveStatus::unsat;
}

bool check_tautology(const std::vector<Cube>& cubes)
{
    if (involved_vars(cubes).size() <= 24) return check_tautology_bruteforce(cubes);
    return check_tautology_negation(cubes);
}

}  // namespace packsat
