#include "packsat/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace packsat {

namespace {

using ILit = uint32_t;  // internal literal: var0 * 2 + sign
constexpr uint32_t kNoRef = UINT32_MAX;

inline ILit mk_ilit(int var0, bool neg) { return uint32_t(var0) * 2 + (neg ? 1 : 0); }
inline ILit from_dimacs(Lit l) { return mk_ilit(lit_var(l) - 1, l < 0); }
inline Lit to_dimacs(ILit p) { return (p & 1) ? -Lit(p / 2 + 1) : Lit(p / 2 + 1); }
inline ILit neg(ILit p) { return p ^ 1; }
inline int ivar(ILit p) { return int(p >> 1); }

using lbool = int8_t;  // 1 true, -1 false, 0 undef
inline lbool lit_value(lbool var_value, ILit p) { return (p & 1) ? lbool(-var_value) : var_value; }

struct Watcher {
    uint32_t cref;
    ILit blocker;
};

// Clause layout in the arena:
//   [0] size << 3 | learnt | deleted << 1
//   [1] lbd (learnts) / unused
//   [2..] literals
struct Arena {
    std::vector<uint32_t> mem;

    uint32_t alloc(std::span<const ILit> lits, bool learnt)
    {
        uint32_t ref = uint32_t(mem.size());
        mem.push_back(uint32_t(lits.size()) << 3 | (learnt ? 1u : 0u));
        mem.push_back(0);
        mem.insert(mem.end(), lits.begin(), lits.end());
        return ref;
    }
    uint32_t size(uint32_t ref) const { return mem[ref] >> 3; }
    bool learnt(uint32_t ref) const { return mem[ref] & 1; }
    bool deleted(uint32_t ref) const { return mem[ref] & 2; }
    void mark_deleted(uint32_t ref) { mem[ref] |= 2; }
    void shrink(uint32_t ref, uint32_t new_size)
    {
        mem[ref] = (new_size << 3) | (mem[ref] & 7);
    }
    uint32_t& lbd(uint32_t ref) { return mem[ref + 1]; }
    ILit* lits(uint32_t ref) { return &mem[ref + 2]; }
    const ILit* lits(uint32_t ref) const { return &mem[ref + 2]; }
};

// Max-activity binary heap over variables (minisat-style indexed heap).
struct VarHeap {
    std::vector<int> heap;
    std::vector<int> pos;  // -1 = absent
    const std::vector<double>* act;

    void init(int nvars, const std::vector<double>* activities)
    {
        act = activities;
        heap.clear();
        pos.assign(size_t(nvars), -1);
        for (int v = 0; v < nvars; ++v) insert(v);
    }
    bool lt(int a, int b) const { return (*act)[size_t(a)] > (*act)[size_t(b)]; }
    bool in_heap(int v) const { return pos[size_t(v)] >= 0; }
    bool empty() const { return heap.empty(); }

    void percolate_up(int i)
    {
        int v = heap[size_t(i)];
        while (i > 0) {
            int parent = (i - 1) / 2;
            if (!lt(v, heap[size_t(parent)])) break;
            heap[size_t(i)] = heap[size_t(parent)];
            pos[size_t(heap[size_t(i)])] = i;
            i = parent;
        }
        heap[size_t(i)] = v;
        pos[size_t(v)] = i;
    }
    void percolate_down(int i)
    {
        int v = heap[size_t(i)];
        int n = int(heap.size());
        while (2 * i + 1 < n) {
            int child = 2 * i + 1;
            if (child + 1 < n && lt(heap[size_t(child + 1)], heap[size_t(child)])) ++child;
            if (!lt(heap[size_t(child)], v)) break;
            heap[size_t(i)] = heap[size_t(child)];
            pos[size_t(heap[size_t(i)])] = i;
            i = child;
        }
        heap[size_t(i)] = v;
        pos[size_t(v)] = i;
    }
    void insert(int v)
    {
        if (in_heap(v)) return;
        heap.push_back(v);
        pos[size_t(v)] = int(heap.size()) - 1;
        percolate_up(int(heap.size()) - 1);
    }
    void update(int v)
    {
        if (in_heap(v)) percolate_up(pos[size_t(v)]);
    }
    int pop()
    {
        int v = heap[0];
        pos[size_t(v)] = -1;
        heap[0] = heap.back();
        heap.pop_back();
        if (!heap.empty()) {
            pos[size_t(heap[0])] = 0;
            percolate_down(0);
        }
        return v;
    }
};

}  // namespace

struct Solver::Impl {
    int nvars = 0;
    const Formula* formula = nullptr;
    ProofSink* proof = nullptr;

    Arena arena;
    std::vector<uint32_t> original_refs;
    std::vector<uint32_t> learnt_refs;
    std::vector<std::vector<Watcher>> watches;  // by internal literal

    std::vector<lbool> assigns;   // by var0
    std::vector<uint8_t> phase;   // saved polarity (1 = assign false)
    std::vector<int> level;       // by var0
    std::vector<uint32_t> reason;  // by var0
    std::vector<ILit> trail;
    std::vector<int> trail_lim;
    size_t qhead = 0;

    std::vector<double> activity;
    double var_inc = 1.0;
    static constexpr double kVarDecay = 0.95;
    VarHeap order;

    // Conflict analysis scratch.
    std::vector<uint8_t> seen;
    std::vector<ILit> analyze_stack;
    std::vector<ILit> analyze_clear;
    std::vector<uint64_t> level_stamp;
    uint64_t stamp_counter = 0;

    // Restart policy: exponential moving averages of conflict LBDs.
    double lbd_ema_fast = 0.0;
    double lbd_ema_slow = 0.0;
    uint64_t conflicts_at_restart = 0;

    uint64_t next_reduce = 2000;
    uint64_t reduce_count = 0;

    bool ok = true;  // false after a root-level conflict
    SolveStats stats;
    std::vector<Lit> final_conflict;
    std::vector<ILit> assumptions;

    std::vector<Lit> scratch_dimacs;

    // ---- setup ----

    explicit Impl(const Formula& f, ProofSink* sink) : formula(&f), proof(sink)
    {
        nvars = f.num_vars;
        for (const Clause& c : f.clauses)
            for (Lit l : c)
                if (lit_var(l) > nvars)
                    throw std::invalid_argument("clause literal exceeds formula variable count");
        watches.assign(size_t(nvars) * 2, {});
        assigns.assign(size_t(nvars), 0);
        phase.assign(size_t(nvars), 1);
        level.assign(size_t(nvars), 0);
        reason.assign(size_t(nvars), kNoRef);
        activity.assign(size_t(nvars), 0.0);
        seen.assign(size_t(nvars), 0);
        level_stamp.assign(size_t(nvars) + 1, 0);
        order.init(nvars, &activity);

        std::vector<ILit> tmp;
        for (const Clause& c : f.clauses) {
            tmp.clear();
            for (Lit l : c) tmp.push_back(from_dimacs(l));
            if (!attach_input_clause(tmp)) {
                ok = false;
                break;
            }
        }
    }

    // ---- basic state ----

    lbool value(ILit p) const { return lit_value(assigns[size_t(ivar(p))], p); }
    int decision_level() const { return int(trail_lim.size()); }

    void enqueue(ILit p, uint32_t from)
    {
        assigns[size_t(ivar(p))] = (p & 1) ? lbool(-1) : lbool(1);
        level[size_t(ivar(p))] = decision_level();
        reason[size_t(ivar(p))] = from;
        trail.push_back(p);
    }

    bool attach_input_clause(std::vector<ILit>& lits)
    {
        // Root-level simplification of the input clause: drop false literals,
        // detect satisfied/tautological clauses.
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == neg(lits[i + 1])) return true;  // tautology
        std::vector<ILit> kept;
        for (ILit p : lits) {
            lbool v = value(p);
            if (v > 0) return true;
            if (v == 0) kept.push_back(p);
        }
        if (kept.empty()) {
            emit_empty();
            return false;
        }
        if (kept.size() == 1) {
            enqueue(kept[0], kNoRef);
            if (propagate() != kNoRef) {
                emit_empty();
                return false;
            }
            return true;
        }
        uint32_t ref = arena.alloc(kept, false);
        original_refs.push_back(ref);
        attach_watches(ref);
        return true;
    }

    void attach_watches(uint32_t ref)
    {
        const ILit* ls = arena.lits(ref);
        watches[size_t(neg(ls[0]))].push_back({ref, ls[1]});
        watches[size_t(neg(ls[1]))].push_back({ref, ls[0]});
    }

    void detach_watches(uint32_t ref)
    {
        const ILit* ls = arena.lits(ref);
        for (int i = 0; i < 2; ++i) {
            auto& wl = watches[size_t(neg(ls[size_t(i)]))];
            for (size_t j = 0; j < wl.size(); ++j)
                if (wl[j].cref == ref) {
                    wl[j] = wl.back();
                    wl.pop_back();
                    break;
                }
        }
    }

    // ---- proof events ----

    void emit_add(std::span<const ILit> lits)
    {
        if (!proof) return;
        scratch_dimacs.clear();
        for (ILit p : lits) scratch_dimacs.push_back(to_dimacs(p));
        proof->add_clause(scratch_dimacs);
    }
    void emit_delete(uint32_t ref)
    {
        if (!proof) return;
        scratch_dimacs.clear();
        const ILit* ls = arena.lits(ref);
        for (uint32_t i = 0; i < arena.size(ref); ++i) scratch_dimacs.push_back(to_dimacs(ls[i]));
        proof->delete_clause(scratch_dimacs);
    }
    void emit_empty()
    {
        if (proof) proof->add_clause({});
    }

    // ---- propagation ----

    uint32_t propagate()
    {
        uint32_t conflict = kNoRef;
        while (qhead < trail.size()) {
            ILit p = trail[qhead++];
            ++stats.propagations;
            auto& wl = watches[size_t(p)];
            size_t keep = 0, i = 0;
            while (i < wl.size()) {
                Watcher w = wl[i];
                if (value(w.blocker) > 0) {
                    wl[keep++] = wl[i++];
                    continue;
                }
                uint32_t ref = w.cref;
                ILit* ls = arena.lits(ref);
                ILit false_lit = neg(p);
                if (ls[0] == false_lit) std::swap(ls[0], ls[1]);
                ILit first = ls[0];
                if (first != w.blocker && value(first) > 0) {
                    wl[keep++] = {ref, first};
                    ++i;
                    continue;
                }
                uint32_t sz = arena.size(ref);
                uint32_t swap_pos = 0;
                for (uint32_t j = 2; j < sz; ++j)
                    if (value(ls[j]) >= 0) {
                        swap_pos = j;
                        break;
                    }
                if (swap_pos) {
                    std::swap(ls[1], ls[swap_pos]);
                    watches[size_t(neg(ls[1]))].push_back({ref, first});
                    ++i;
                    continue;
                }
                // No replacement watch: unit or conflict.
                wl[keep++] = {ref, first};
                ++i;
                if (value(first) < 0) {
                    conflict = ref;
                    qhead = trail.size();
                    while (i < wl.size()) wl[keep++] = wl[i++];
                    break;
                }
                enqueue(first, ref);
            }
            wl.resize(keep);
            if (conflict != kNoRef) break;
        }
        return conflict;
    }

    // ---- branching ----

    void bump_var(int v)
    {
        activity[size_t(v)] += var_inc;
        if (activity[size_t(v)] > 1e100) {
            for (double& a : activity) a *= 1e-100;
            var_inc *= 1e-100;
        }
        order.update(v);
    }
    void decay_activity() { var_inc /= kVarDecay; }

    int pick_branch_var()
    {
        while (!order.empty()) {
            int v = order.heap[0];
            if (assigns[size_t(v)] == 0) return order.pop();
            order.pop();
        }
        return -1;
    }

    void backtrack_to(int lvl)
    {
        if (decision_level() <= lvl) return;
        size_t bound = size_t(trail_lim[size_t(lvl)]);
        for (size_t i = trail.size(); i-- > bound;) {
            int v = ivar(trail[i]);
            assigns[size_t(v)] = 0;
            phase[size_t(v)] = uint8_t(trail[i] & 1);
            reason[size_t(v)] = kNoRef;
            if (!order.in_heap(v)) order.insert(v);
        }
        trail.resize(bound);
        trail_lim.resize(size_t(lvl));
        qhead = trail.size();
    }

    // ---- conflict analysis ----

    uint32_t compute_lbd(std::span<const ILit> lits)
    {
        ++stamp_counter;
        uint32_t n = 0;
        for (ILit p : lits) {
            int lvl = level[size_t(ivar(p))];
            if (level_stamp[size_t(lvl)] != stamp_counter) {
                level_stamp[size_t(lvl)] = stamp_counter;
                ++n;
            }
        }
        return n;
    }

    void analyze(uint32_t conflict, std::vector<ILit>& learnt, int& bt_level, uint32_t& lbd)
    {
        learnt.clear();
        learnt.push_back(0);  // slot for the asserting literal
        int path = 0;
        ILit p = kNoRef;
        size_t idx = trail.size();

        uint32_t ref = conflict;
        do {
            ILit* ls = arena.lits(ref);
            uint32_t sz = arena.size(ref);
            if (arena.learnt(ref) && arena.lbd(ref) > 2) {
                uint32_t nl = compute_lbd({ls, sz});
                if (nl < arena.lbd(ref)) arena.lbd(ref) = nl;
            }
            for (uint32_t j = (p == kNoRef ? 0 : 1); j < sz; ++j) {
                ILit q = ls[j];
                int v = ivar(q);
                if (seen[size_t(v)] || level[size_t(v)] == 0) continue;
                seen[size_t(v)] = 1;
                bump_var(v);
                if (level[size_t(v)] >= decision_level())
                    ++path;
                else
                    learnt.push_back(q);
            }
            while (!seen[size_t(ivar(trail[idx - 1]))]) --idx;
            p = trail[--idx];
            ref = reason[size_t(ivar(p))];
            seen[size_t(ivar(p))] = 0;
            --path;
        } while (path > 0);
        learnt[0] = neg(p);

        minimize(learnt);

        lbd = compute_lbd(learnt);
        if (learnt.size() == 1) {
            bt_level = 0;
        } else {
            size_t max_i = 1;
            for (size_t i = 2; i < learnt.size(); ++i)
                if (level[size_t(ivar(learnt[i]))] > level[size_t(ivar(learnt[max_i]))]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            bt_level = level[size_t(ivar(learnt[1]))];
        }
        for (ILit q : analyze_clear) seen[size_t(ivar(q))] = 0;
        analyze_clear.clear();
    }

    // Deep minimization: drop literals whose negation is implied by the rest
    // of the clause through reason clauses.
    void minimize(std::vector<ILit>& learnt)
    {
        for (ILit q : learnt) analyze_clear.push_back(q);
        uint64_t abstract = 0;
        for (size_t i = 1; i < learnt.size(); ++i)
            abstract |= uint64_t(1) << (level[size_t(ivar(learnt[i]))] & 63);
        size_t keep = 1;
        for (size_t i = 1; i < learnt.size(); ++i)
            if (reason[size_t(ivar(learnt[i]))] == kNoRef || !redundant(learnt[i], abstract))
                learnt[keep++] = learnt[i];
        learnt.resize(keep);
    }

    bool redundant(ILit p, uint64_t abstract)
    {
        analyze_stack.clear();
        analyze_stack.push_back(p);
        size_t top = analyze_clear.size();
        while (!analyze_stack.empty()) {
            ILit q = analyze_stack.back();
            analyze_stack.pop_back();
            uint32_t ref = reason[size_t(ivar(q))];
            ILit* ls = arena.lits(ref);
            uint32_t sz = arena.size(ref);
            for (uint32_t j = 1; j < sz; ++j) {
                ILit r = ls[j];
                int v = ivar(r);
                if (seen[size_t(v)] || level[size_t(v)] == 0) continue;
                if (reason[size_t(v)] == kNoRef ||
                    !(abstract & (uint64_t(1) << (level[size_t(v)] & 63)))) {
                    // Not removable: undo the markings made in this probe.
                    for (size_t k = top; k < analyze_clear.size(); ++k)
                        seen[size_t(ivar(analyze_clear[k]))] = 0;
                    analyze_clear.resize(top);
                    return false;
                }
                seen[size_t(v)] = 1;
                analyze_clear.push_back(r);
                analyze_stack.push_back(r);
            }
        }
        return true;
    }

    // ---- clause database ----

    uint32_t add_learnt(std::vector<ILit>& lits, uint32_t lbd)
    {
        emit_add(lits);
        if (lits.size() == 1) {
            enqueue(lits[0], kNoRef);
            return kNoRef;
        }
        uint32_t ref = arena.alloc(lits, true);
        arena.lbd(ref) = lbd;
        learnt_refs.push_back(ref);
        attach_watches(ref);
        enqueue(lits[0], ref);
        return ref;
    }

    bool locked(uint32_t ref) const
    {
        const ILit* ls = arena.lits(ref);
        int v = ivar(ls[0]);
        return assigns[size_t(v)] != 0 && reason[size_t(v)] == ref &&
               lit_value(assigns[size_t(v)], ls[0]) > 0;
    }

    void reduce_db()
    {
        ++reduce_count;
        std::vector<uint32_t> sorted = learnt_refs;
        std::sort(sorted.begin(), sorted.end(), [&](uint32_t a, uint32_t b) {
            if (arena.lbd(a) != arena.lbd(b)) return arena.lbd(a) > arena.lbd(b);
            return arena.size(a) > arena.size(b);
        });
        size_t target = sorted.size() / 2;
        size_t removed = 0;
        for (uint32_t ref : sorted) {
            if (removed >= target) break;
            if (arena.lbd(ref) <= 2 || arena.size(ref) == 2 || locked(ref)) continue;
            detach_watches(ref);
            arena.mark_deleted(ref);
            emit_delete(ref);
            ++removed;
        }
        learnt_refs.erase(
            std::remove_if(learnt_refs.begin(), learnt_refs.end(),
                           [&](uint32_t ref) { return arena.deleted(ref); }),
            learnt_refs.end());
        maybe_gc();
    }

    void maybe_gc()
    {
        size_t live = 0;
        for (uint32_t ref : original_refs) live += arena.size(ref) + 2;
        for (uint32_t ref : learnt_refs) live += arena.size(ref) + 2;
        if (live * 2 > arena.mem.size()) return;

        Arena fresh;
        fresh.mem.reserve(live);
        std::vector<std::pair<uint32_t, uint32_t>> remap;
        auto move_all = [&](std::vector<uint32_t>& refs) {
            for (uint32_t& ref : refs) {
                uint32_t nref =
                    fresh.alloc({arena.lits(ref), arena.size(ref)}, arena.learnt(ref));
                fresh.lbd(nref) = arena.lbd(ref);
                remap.emplace_back(ref, nref);
                ref = nref;
            }
        };
        move_all(original_refs);
        move_all(learnt_refs);
        std::sort(remap.begin(), remap.end());
        auto lookup = [&](uint32_t old) {
            auto it = std::lower_bound(remap.begin(), remap.end(), std::pair{old, 0u});
            return it->second;
        };
        for (size_t v = 0; v < size_t(nvars); ++v)
            if (reason[v] != kNoRef) reason[v] = lookup(reason[v]);
        for (auto& wl : watches) wl.clear();
        arena = std::move(fresh);
        for (uint32_t ref : original_refs) attach_watches(ref);
        for (uint32_t ref : learnt_refs) attach_watches(ref);
    }

    // ---- assumptions ----

    // p is the negation of the failed assumption (true on the trail). The
    // result is a clause over negated assumptions implied by the formula.
    void analyze_final(ILit p)
    {
        final_conflict.clear();
        final_conflict.push_back(to_dimacs(p));
        if (decision_level() == 0) return;
        seen[size_t(ivar(p))] = 1;
        for (size_t i = trail.size(); i-- > size_t(trail_lim[0]);) {
            int v = ivar(trail[i]);
            if (!seen[size_t(v)]) continue;
            if (reason[size_t(v)] == kNoRef) {
                if (level[size_t(v)] > 0 && v != ivar(p))
                    final_conflict.push_back(to_dimacs(neg(trail[i])));
            } else {
                const ILit* ls = arena.lits(reason[size_t(v)]);
                uint32_t sz = arena.size(reason[size_t(v)]);
                for (uint32_t j = 1; j < sz; ++j)
                    if (level[size_t(ivar(ls[j]))] > 0) seen[size_t(ivar(ls[j]))] = 1;
            }
            seen[size_t(v)] = 0;
        }
        seen[size_t(ivar(p))] = 0;
    }

    // ---- main search ----

    bool within_budget(const SolveBudget& budget,
                       const std::chrono::steady_clock::time_point& start) const
    {
        if (budget.max_conflicts && stats.conflicts >= budget.max_conflicts) return false;
        if (budget.max_seconds > 0.0) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (elapsed >= budget.max_seconds) return false;
        }
        return true;
    }

    bool restart_due() const
    {
        if (stats.conflicts - conflicts_at_restart < 50) return false;
        return lbd_ema_fast > 1.25 * lbd_ema_slow;
    }

    SolveStatus search(const SolveBudget& budget,
                       const std::chrono::steady_clock::time_point& start)
    {
        std::vector<ILit> learnt;
        for (;;) {
            uint32_t conflict = propagate();
            if (conflict != kNoRef) {
                ++stats.conflicts;
                if (decision_level() == 0) {
                    emit_empty();
                    ok = false;
                    return SolveStatus::unsat;
                }
                int bt = 0;
                uint32_t lbd = 0;
                analyze(conflict, learnt, bt, lbd);
                backtrack_to(bt);
                add_learnt(learnt, lbd);
                decay_activity();
                lbd_ema_fast += (double(lbd) - lbd_ema_fast) / 32.0;
                lbd_ema_slow += (double(lbd) - lbd_ema_slow) / 4096.0;
                if (stats.conflicts >= next_reduce) {
                    next_reduce += 2000 + 300 * reduce_count;
                    reduce_db();
                }
                if ((stats.conflicts & 127) == 0 && !within_budget(budget, start))
                    return SolveStatus::unknown;
                continue;
            }

            if (restart_due() && decision_level() > int(assumptions.size())) {
                ++stats.restarts;
                conflicts_at_restart = stats.conflicts;
                backtrack_to(int(assumptions.size()));
                continue;
            }

            // Next decision: pending assumptions first.
            if (decision_level() < int(assumptions.size())) {
                ILit a = assumptions[size_t(decision_level())];
                lbool v = value(a);
                if (v < 0) {
                    analyze_final(neg(a));
                    return SolveStatus::unsat;
                }
                trail_lim.push_back(int(trail.size()));
                if (v == 0) {
                    ++stats.decisions;
                    enqueue(a, kNoRef);
                }
                continue;
            }

            int v = pick_branch_var();
            if (v < 0) return SolveStatus::sat;
            ++stats.decisions;
            trail_lim.push_back(int(trail.size()));
            enqueue(mk_ilit(v, phase[size_t(v)] != 0), kNoRef);
        }
    }

    SolveResult run(std::span<const Lit> assume, const SolveBudget& budget)
    {
        auto start = std::chrono::steady_clock::now();
        SolveResult res;
        final_conflict.clear();

        if (!ok) {
            res.status = SolveStatus::unsat;
            res.stats = stats;
            return res;
        }

        assumptions.clear();
        for (Lit l : assume) {
            if (lit_var(l) > nvars) throw std::invalid_argument("assumption variable out of range");
            assumptions.push_back(from_dimacs(l));
        }

        backtrack_to(0);
        res.status = search(budget, start);
        if (res.status == SolveStatus::sat) {
            res.model.assign(size_t(nvars) + 1, false);
            for (int v = 0; v < nvars; ++v) res.model[size_t(v) + 1] = assigns[size_t(v)] > 0;
            check_model(res.model);
        } else if (res.status == SolveStatus::unsat && !assumptions.empty() && ok) {
            // UNSAT under assumptions: make the derived clause part of the
            // proof so segments can build on it.
            if (proof && !final_conflict.empty()) proof->add_clause(final_conflict);
        }
        backtrack_to(0);

        stats.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.stats = stats;
        return res;
    }

    void check_model(const std::vector<bool>& model) const
    {
        for (const Clause& c : formula->clauses) {
            bool satisfied = false;
            for (Lit l : c)
                if (model[size_t(lit_var(l))] == (l > 0)) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) throw std::logic_error("internal error: model fails clause check");
        }
    }
};

Solver::Solver(const Formula& f, ProofSink* proof) : impl_(new Impl(f, proof)) {}
Solver::~Solver() { delete impl_; }

SolveResult Solver::solve(std::span<const Lit> assumptions, const SolveBudget& budget)
{
    return impl_->run(assumptions, budget);
}

const std::vector<Lit>& Solver::final_conflict() const { return impl_->final_conflict; }

Coloring extract_coloring(const std::vector<bool>& model, const VarMap& vars, int r, int k)
{
    Coloring col(r, k);
    for (Vertex v : vars.vertices()) {
        int chosen = 0;
        for (int t = 1; t <= k; ++t)
            if (model[size_t(vars.var_of_vertex(v, t))]) {
                chosen = t;
                break;  // lowest true color
            }
        if (chosen == 0) throw std::runtime_error("model assigns no color to a vertex");
        col.set_color(v, chosen);
    }
    return col;
}

}  // namespace packsat
