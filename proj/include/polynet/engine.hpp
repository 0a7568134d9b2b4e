#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polynet/classes.hpp"
#include "polynet/errors.hpp"
#include "polynet/network.hpp"
#include "polynet/prng.hpp"

namespace polynet {

/// Vertex set, sorted ascending: the canonical encoding used for the family W.
using VSet = std::vector<std::string>;

inline VSet vset_intersect(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VSet vset_difference(const VSet& a, const VSet& b) {
    VSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

enum class Rule { InitBath, TargetClass, Intersect, DiffLeft, DiffRight, NewController, CkSingleton };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::InitBath: return "InitBath";
        case Rule::TargetClass: return "TargetClass";
        case Rule::Intersect: return "Intersect";
        case Rule::DiffLeft: return "DiffLeft";
        case Rule::DiffRight: return "DiffRight";
        case Rule::NewController: return "NewController";
        case Rule::CkSingleton: return "CkSingleton";
    }
    return "?";
}

struct TraceStep {
    Rule rule;
    std::string controller;     // empty when no single controller applies
    std::vector<VSet> operands; // the sets consumed
    VSet produced;              // the set added
};

/// Working state of the refinement algorithm: the family W of jointly
/// controllable sets and the ordered controller list K. W only grows; K holds
/// one used/unused flag per controller.
struct ControlState {
    std::vector<VSet> W;
    std::vector<std::pair<std::string, bool>> K; // (controller id, used)
    std::vector<TraceStep> trace;
    std::size_t w_cap = 1000000;

    bool w_contains(const VSet& s) const { return w_index.count(s) > 0; }

    bool w_add(const VSet& s) {
        if (s.empty() || w_contains(s)) return false;
        if (W.size() >= w_cap)
            throw CapacityError("set family exceeded the safety cap of " + std::to_string(w_cap));
        W.push_back(s);
        w_index.insert(s);
        return true;
    }

    bool k_contains(const std::string& id) const {
        return std::any_of(K.begin(), K.end(), [&](const auto& p) { return p.first == id; });
    }

private:
    std::set<VSet> w_index;
};

enum class Status { Controllable, Inconclusive };
enum class Method { Algorithm, CkRecursion, Singleton };

inline const char* status_name(Status s) {
    return s == Status::Controllable ? "Controllable" : "Inconclusive";
}

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Algorithm: return "Algorithm";
        case Method::CkRecursion: return "CkRecursion";
        case Method::Singleton: return "Singleton";
    }
    return "?";
}

struct Verdict {
    Status status = Status::Inconclusive;
    VSet controlled;
    Method method = Method::Algorithm;
};

struct RunResult {
    Verdict verdict;
    std::vector<TraceStep> trace;
    std::vector<VSet> blocking; // equivalence classes the criteria could not split
};

struct RunOptions {
    /// Initial controller queue; defaults to the bath set in input order.
    std::vector<std::string> controller_order;
    std::size_t w_cap = 1000000;
};

namespace detail {

inline void require_anharmonic(const Network& net) {
    const Mode m = net.mode();
    if (m.kind == ModeKind::Harmonic)
        throw ModeError("network is fully harmonic; use the Kalman check");
    if (m.kind == ModeKind::Unsupported) throw ModeError(m.reason);
}

inline VSet sorted_bath(const Network& net) {
    VSet s = net.bath_set();
    std::sort(s.begin(), s.end());
    return s;
}

/// Blocking diagnosis for an inconclusive verdict: the C-equivalence classes
/// of N(controlled) of size >= 2 are exactly the neighbors the criteria
/// could not tell apart.
inline std::vector<VSet> blocking_classes(const Network& net, const VSet& controlled) {
    std::vector<VSet> out;
    for (auto& cls : c_equivalence_classes(net, controlled))
        if (cls.size() >= 2) out.push_back(std::move(cls));
    return out;
}

} // namespace detail

inline ControlState initial_state(const Network& net, const RunOptions& opts = {}) {
    if (net.bath_set().empty())
        throw ValidationError("analysis needs a nonempty bath set");
    ControlState st;
    st.w_cap = opts.w_cap;
    std::vector<std::string> order =
        opts.controller_order.empty() ? net.bath_set() : opts.controller_order;
    for (const auto& id : order) {
        if (!net.vertex(id).bath)
            throw ValidationError("initial controller '" + id + "' is not a bath vertex");
        if (st.k_contains(id))
            throw ValidationError("duplicate controller '" + id + "' in initial order");
        st.K.emplace_back(id, false);
        st.w_add({id});
        st.trace.push_back(TraceStep{Rule::InitBath, id, {}, {id}});
    }
    if (st.K.size() != net.bath_set().size())
        throw ValidationError("initial controller order must cover the bath set");
    return st;
}

/// One pass of the refinement algorithm for controller c: adds the target
/// classes T^c_i to W, closes W under A∩T, A\T, T\A against those classes
/// (including sets produced within this same step), then appends any new
/// singletons to K in ascending id order.
inline void refine_step(ControlState& st, const Network& net, std::string c) {
    // c is taken by value: callers routinely pass a reference into st.K,
    // which reallocates when new controllers are appended below.
    detail::require_anharmonic(net);
    const auto it = std::find_if(st.K.begin(), st.K.end(),
                                 [&](const auto& p) { return p.first == c; });
    if (it == st.K.end()) throw UnknownController("'" + c + "' is not in the controller list");
    if (it->second) throw UnknownController("controller '" + c + "' was already used");

    const TargetPartition part = target_classes(net, c);
    for (const auto& cls : part.classes)
        if (st.w_add(cls.members))
            st.trace.push_back(TraceStep{Rule::TargetClass, c, {}, cls.members});

    // Close against all of W, including sets appended during this loop;
    // restart until a full sweep adds nothing.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& cls : part.classes) {
            const VSet& t = cls.members;
            for (std::size_t i = 0; i < st.W.size(); ++i) {
                const VSet a = st.W[i]; // copy: w_add reallocates W
                const std::array<std::pair<Rule, VSet>, 3> produced{
                    std::make_pair(Rule::Intersect, vset_intersect(a, t)),
                    std::make_pair(Rule::DiffLeft, vset_difference(a, t)),
                    std::make_pair(Rule::DiffRight, vset_difference(t, a))};
                for (const auto& [rule, s] : produced)
                    if (st.w_add(s)) {
                        st.trace.push_back(TraceStep{rule, c, {a, t}, s});
                        changed = true;
                    }
            }
        }
    }

    it->second = true;

    VSet fresh;
    for (const auto& s : st.W)
        if (s.size() == 1 && !st.k_contains(s.front())) fresh.push_back(s.front());
    std::sort(fresh.begin(), fresh.end());
    for (const auto& id : fresh) {
        st.K.emplace_back(id, false);
        st.trace.push_back(TraceStep{Rule::NewController, c, {{id}}, {id}});
    }
}

/// The refinement algorithm: repeatedly apply refine_step to the first
/// unused controller. Controllable exactly when K reaches all of V.
inline RunResult run_algorithm(const Network& net, const RunOptions& opts = {}) {
    detail::require_anharmonic(net);
    ControlState st = initial_state(net, opts);
    while (true) {
        const auto it = std::find_if(st.K.begin(), st.K.end(),
                                     [](const auto& p) { return !p.second; });
        if (it == st.K.end()) break;
        refine_step(st, net, it->first);
    }

    RunResult res;
    for (const auto& [id, used] : st.K) res.verdict.controlled.push_back(id);
    std::sort(res.verdict.controlled.begin(), res.verdict.controlled.end());
    res.verdict.status = res.verdict.controlled.size() == net.vertices().size()
                             ? Status::Controllable
                             : Status::Inconclusive;
    res.verdict.method = Method::Algorithm;
    res.trace = std::move(st.trace);
    if (res.verdict.status == Status::Inconclusive)
        res.blocking = detail::blocking_classes(net, res.verdict.controlled);
    return res;
}

/// The recursion C_{k+1} = C_k ∪ {v ∈ N(C_k) alone in its C_k-equivalence
/// class}, started from the bath set and stopped at the fixpoint.
inline RunResult run_ck(const Network& net) {
    detail::require_anharmonic(net);
    if (net.bath_set().empty())
        throw ValidationError("analysis needs a nonempty bath set");

    RunResult res;
    res.verdict.method = Method::CkRecursion;
    VSet current;
    for (const auto& id : net.bath_set()) {
        res.trace.push_back(TraceStep{Rule::InitBath, id, {}, {id}});
        current.push_back(id);
    }
    std::sort(current.begin(), current.end());

    while (true) {
        VSet joiners;
        for (const auto& cls : c_equivalence_classes(net, current))
            if (cls.size() == 1) joiners.push_back(cls.front());
        if (joiners.empty()) break;
        for (const auto& id : joiners) {
            res.trace.push_back(TraceStep{Rule::CkSingleton, "", {current}, {id}});
        }
        current.insert(current.end(), joiners.begin(), joiners.end());
        std::sort(current.begin(), current.end());
    }

    res.verdict.controlled = current;
    res.verdict.status = current.size() == net.vertices().size() ? Status::Controllable
                                                                 : Status::Inconclusive;
    if (res.verdict.status == Status::Inconclusive)
        res.blocking = detail::blocking_classes(net, current);
    return res;
}

/// Strongest per-vertex condition: connected graph, nonempty bath set, and
/// at every vertex the incident interactions are pairwise inequivalent.
/// Implies controllability via the recursion.
inline bool singleton_criterion(const Network& net) {
    detail::require_anharmonic(net);
    if (net.bath_set().empty() || !net.connected()) return false;
    for (const auto& v : net.vertices()) {
        const auto part = target_classes(net, v.id);
        for (const auto& cls : part.classes)
            if (cls.members.size() >= 2) return false;
    }
    return true;
}

inline RunResult run_singleton(const Network& net) {
    RunResult res;
    res.verdict.method = Method::Singleton;
    if (singleton_criterion(net)) {
        res.verdict.status = Status::Controllable;
        for (const auto& v : net.vertices()) res.verdict.controlled.push_back(v.id);
        std::sort(res.verdict.controlled.begin(), res.verdict.controlled.end());
    } else {
        res.verdict.status = Status::Inconclusive;
        res.verdict.controlled = detail::sorted_bath(net);
        std::set<VSet> seen;
        for (const auto& v : net.vertices())
            for (const auto& cls : target_classes(net, v.id).classes)
                if (cls.members.size() >= 2 && seen.insert(cls.members).second)
                    res.blocking.push_back(cls.members);
        std::sort(res.blocking.begin(), res.blocking.end());
    }
    return res;
}

/// Draw ranges for randomized potentials, documented in the CLI help. Wide
/// enough that accidental key collisions are rare.
struct DrawRanges {
    std::int64_t num_bound = 999;
    std::int64_t den_bound = 99;
};

/// Fills the shape's potentials with random polynomials of the prescribed
/// degrees (leading coefficient redrawn while zero) and runs the refinement
/// algorithm. Deterministic given the seed.
inline RunResult genericity_trial(const Network& shape,
                                  const std::map<std::pair<std::string, std::string>, int>& degrees,
                                  std::uint64_t seed, const DrawRanges& ranges = {}) {
    if (shape.bath_set().empty())
        throw ValidationError("genericity trial needs a nonempty bath set");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (const auto& e : shape.edges()) {
        const auto it = degrees.count({e.u, e.v}) ? degrees.find({e.u, e.v})
                                                  : degrees.find({e.v, e.u});
        if (it == degrees.end() || it->second < 3)
            throw ValidationError("edge {" + e.u + "," + e.v + "} needs a prescribed degree >= 3");
        const int deg = it->second;
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = rng.rational(ranges.num_bound, ranges.den_bound);
        while (c.back() == 0) c.back() = rng.rational(ranges.num_bound, ranges.den_bound);
        edges.push_back(Edge{e.u, e.v, Poly(std::move(c))});
    }
    const Network filled(shape.vertices(), std::move(edges));
    return run_algorithm(filled);
}

inline nlohmann::ordered_json trace_to_json(const std::vector<TraceStep>& trace) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : trace) {
        nlohmann::ordered_json step;
        step["rule"] = rule_name(s.rule);
        step["controller"] = s.controller;
        step["operands"] = s.operands;
        step["produced"] = s.produced;
        steps.push_back(std::move(step));
    }
    return steps;
}

inline nlohmann::ordered_json report_to_json(const RunResult& res, bool include_trace) {
    nlohmann::ordered_json doc;
    doc["verdict"] = status_name(res.verdict.status);
    doc["method"] = method_name(res.verdict.method);
    doc["controlled"] = res.verdict.controlled;
    doc["blocking"] = res.blocking;
    if (include_trace) doc["trace"] = trace_to_json(res.trace);
    return doc;
}

} // namespace polynet
