#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polynet/errors.hpp"
#include "polynet/linalg.hpp"
#include "polynet/multipoly.hpp"
#include "polynet/network.hpp"
#include "polynet/prng.hpp"

namespace polynet {

/// Complete phase-space assignment in PhaseSpace coordinate order.
using PhasePoint = std::vector<Rational>;

/// The deterministic drift of the generator: on q_v the velocity p_v/m_v, on
/// p_v the force -U'_v(q_v) - d/dq_v sum_e V_e plus the friction -gamma_v p_v.
inline VectorField build_X0(const Network& net, const PhaseSpace& space) {
    const int n = space.dim();
    VectorField x0(n);
    for (const auto& v : net.vertices()) {
        const int qi = space.q_index(v.id);
        const int pi = space.p_index(v.id);
        MultiPoly vel = Rational(1) / v.mass * MultiPoly::variable(pi, n);
        x0.add(qi, vel);
        if (!v.pinning.is_zero())
            x0.add(pi, -compose(derivative(v.pinning), MultiPoly::variable(qi, n)));
        if (v.gamma != 0)
            x0.add(pi, -v.gamma * MultiPoly::variable(pi, n));
    }
    for (const auto& e : net.edges()) {
        const int qu = space.q_index(e.u);
        const int qv = space.q_index(e.v);
        const MultiPoly diff =
            MultiPoly::variable(qu, n) - MultiPoly::variable(qv, n);
        const MultiPoly force = compose(derivative(e.potential), diff);
        x0.add(space.p_index(e.u), -force);
        x0.add(space.p_index(e.v), force);
    }
    return x0;
}

/// The paper's workhorse bracket <<Y,Z>> = [[X0, Y], Z].
inline VectorField double_commutator(const VectorField& x0, const VectorField& y,
                                     const VectorField& z) {
    return lie_bracket(lie_bracket(x0, y), z);
}

struct SaturationBudget {
    int max_fields = 2000;
    int max_degree = 12;
    int max_generations = 6;
};

struct PointRank {
    PhasePoint point;
    int rank = 0;
};

struct CertStatus {
    bool certified = false;
    std::vector<PointRank> points;
    int fields_used = 0;
    int generations = 0;
    std::vector<std::vector<int>> rank_history; // per generation, per point
};

namespace detail {

/// Content-normalizes a field in place (integer coprime coefficients, first
/// coefficient positive) and returns its canonical text, the dedup key.
inline std::string normalize_field(VectorField& f) {
    BigInt num_gcd(0), den_lcm(1);
    bool first_negative = false, first_seen = false;
    for (const auto& [i, p] : f.comps)
        for (const auto& [m, c] : p.terms()) {
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
            if (!first_seen) {
                first_seen = true;
                first_negative = c < 0;
            }
        }
    if (first_seen) {
        Rational scale(den_lcm, num_gcd);
        if (first_negative) scale = -scale;
        f = scale * f;
    }
    std::string key;
    for (const auto& [i, p] : f.comps) {
        key += "#" + std::to_string(i) + ":";
        for (const auto& [m, c] : p.terms()) {
            for (const int e : m) key += std::to_string(e) + ",";
            key += "=" + rational_str(c) + ";";
        }
    }
    return key;
}

/// Diagonal in the paper's sense: components only along the p's, with
/// coefficients depending on positions alone.
inline bool is_diagonal(const VectorField& f, const PhaseSpace& space) {
    for (const auto& [i, p] : f.comps) {
        if (space.is_q(i)) return false;
        for (int v = space.particles(); v < space.dim(); ++v)
            if (p.depends_on(v)) return false;
    }
    return true;
}

} // namespace detail

/// Pointwise Hörmander certification by saturation. Seeds the bath
/// directions, then grows the family with brackets against X0, double
/// commutators of diagonal fields, products with edge-difference coordinates
/// and general pairwise brackets, in that priority. Certified is sound: the
/// generated fields all lie in the Lie algebra, so full rank at a point
/// proves the bracket condition there. Inconclusive proves nothing.
inline CertStatus saturate(const Network& net, const std::vector<PhasePoint>& points,
                           const SaturationBudget& budget = {}) {
    const Mode mode = net.mode();
    if (mode.kind == ModeKind::Unsupported) throw ModeError(mode.reason);
    if (points.empty()) throw ValidationError("saturation needs at least one sample point");

    const PhaseSpace space(net);
    const int dim = space.dim();
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != dim)
            throw ValidationError("sample point has wrong dimension");

    const VectorField x0 = build_X0(net, space);
    const int x0_deg = x0.max_degree();

    std::vector<VectorField> fields;
    std::set<std::string> seen;
    std::vector<RationalEchelon> echelons(points.size(), RationalEchelon(static_cast<std::size_t>(dim)));

    const auto certified_everywhere = [&] {
        return std::all_of(echelons.begin(), echelons.end(),
                           [](const RationalEchelon& e) { return e.full(); });
    };
    const auto budget_left = [&] {
        return static_cast<int>(fields.size()) < budget.max_fields && !certified_everywhere();
    };
    const auto try_add = [&](VectorField f) {
        if (!budget_left() || f.is_zero() || f.max_degree() > budget.max_degree) return;
        const std::string key = detail::normalize_field(f);
        if (!seen.insert(key).second) return;
        for (std::size_t i = 0; i < points.size(); ++i)
            echelons[i].insert(evaluate_at(f, points[i]));
        fields.push_back(std::move(f));
    };

    std::vector<std::string> bath = net.bath_set();
    std::sort(bath.begin(), bath.end());
    for (const auto& v : bath) try_add(VectorField::coordinate(space.p_index(v), dim));

    CertStatus cert;
    const auto snapshot_ranks = [&] {
        std::vector<int> ranks;
        for (const auto& e : echelons) ranks.push_back(e.rank());
        cert.rank_history.push_back(std::move(ranks));
    };
    snapshot_ranks();

    int gen = 0;
    std::size_t frontier_lo = 0; // fields added by the previous generation start here
    while (gen < budget.max_generations && budget_left()) {
        ++gen;
        const std::size_t prev_count = fields.size();
        const std::size_t front_lo = frontier_lo, front_hi = fields.size();

        // 1. brackets with the drift
        for (std::size_t i = front_lo; i < front_hi && budget_left(); ++i)
            if (fields[i].max_degree() + x0_deg - 1 <= budget.max_degree)
                try_add(lie_bracket(fields[i], x0));

        // 2. double commutators of diagonal fields
        for (std::size_t i = front_lo; i < front_hi && budget_left(); ++i) {
            if (!detail::is_diagonal(fields[i], space)) continue;
            const VectorField lift = lie_bracket(x0, fields[i]);
            for (std::size_t j = 0; j < front_hi && budget_left(); ++j) {
                if (!detail::is_diagonal(fields[j], space)) continue;
                if (lift.max_degree() + fields[j].max_degree() - 1 > budget.max_degree) continue;
                try_add(lie_bracket(lift, fields[j]));
            }
        }

        // 3. products with edge-difference coordinates
        for (const auto& e : net.edges()) {
            const MultiPoly xe = MultiPoly::variable(space.q_index(e.u), dim) -
                                 MultiPoly::variable(space.q_index(e.v), dim);
            for (std::size_t i = front_lo; i < front_hi && budget_left(); ++i)
                if (fields[i].max_degree() + 1 <= budget.max_degree)
                    try_add(scale_field(xe, fields[i]));
        }

        // 4. general pairwise brackets
        for (std::size_t i = front_lo; i < front_hi && budget_left(); ++i)
            for (std::size_t j = 0; j < front_hi && budget_left(); ++j) {
                if (j == i) continue;
                if (fields[i].max_degree() + fields[j].max_degree() - 1 > budget.max_degree)
                    continue;
                try_add(lie_bracket(fields[i], fields[j]));
            }

        snapshot_ranks();
        if (fields.size() == prev_count) break; // stagnated, more generations change nothing
        frontier_lo = prev_count;
    }

    cert.certified = certified_everywhere();
    for (std::size_t i = 0; i < points.size(); ++i)
        cert.points.push_back(PointRank{points[i], echelons[i].rank()});
    cert.fields_used = static_cast<int>(fields.size());
    cert.generations = gen;
    return cert;
}

/// Seeded sample points for certification: coordinates are rationals with
/// numerator in [-12, 12] and denominator in [1, 8].
inline std::vector<PhasePoint> sample_points(const Network& net, int count, std::uint64_t seed) {
    const PhaseSpace space(net);
    SplitMix64 rng(seed);
    std::vector<PhasePoint> pts;
    for (int i = 0; i < count; ++i) {
        PhasePoint p;
        for (int c = 0; c < space.dim(); ++c) p.push_back(rng.rational(12, 8));
        pts.push_back(std::move(p));
    }
    return pts;
}

struct KalmanResult {
    bool controllable = false;
    int rank = 0;
    int dim = 0;
};

/// Exact Kalman rank test for fully harmonic networks: A is the (constant)
/// Jacobian of X0, B has one p-column per bath vertex, and the network is
/// controllable iff [B, AB, ..., A^{2n-1}B] has full rank over the rationals.
inline KalmanResult kalman_check(const Network& net) {
    const Mode mode = net.mode();
    // Edgeless networks classify as Anharmonic (vacuously) yet their forces
    // are still linear when the pinnings are quadratic; accept those too.
    bool linear = mode.kind == ModeKind::Harmonic;
    if (!linear && net.edges().empty()) {
        linear = std::all_of(net.vertices().begin(), net.vertices().end(),
                             [](const Vertex& v) { return v.pinning.degree() <= 2; });
    }
    if (!linear)
        throw ModeError(mode.kind == ModeKind::Unsupported
                            ? mode.reason
                            : "Kalman check applies to harmonic networks only");

    const PhaseSpace space(net);
    const int n = space.dim();
    const VectorField x0 = build_X0(net, space);

    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (const auto& [i, comp] : x0.comps)
        for (int j = 0; j < n; ++j) {
            const MultiPoly d = comp.partial(j);
            if (d.is_zero()) continue;
            // Harmonic mode makes X0 affine, so every partial is constant.
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                d.terms().begin()->second;
        }

    std::vector<std::string> bath = net.bath_set();
    std::sort(bath.begin(), bath.end());
    std::vector<std::vector<Rational>> columns;
    for (const auto& v : bath) {
        std::vector<Rational> col(static_cast<std::size_t>(n), Rational(0));
        col[static_cast<std::size_t>(space.p_index(v))] = 1;
        columns.push_back(std::move(col));
    }

    RationalEchelon ech(static_cast<std::size_t>(n));
    for (const auto& col : columns) ech.insert(col);
    for (int power = 1; power < n && !ech.full(); ++power) {
        for (auto& col : columns) {
            std::vector<Rational> next(static_cast<std::size_t>(n), Rational(0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i)] +=
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        col[static_cast<std::size_t>(j)];
            col = std::move(next);
            ech.insert(col);
        }
    }

    KalmanResult res;
    res.dim = n;
    res.rank = ech.rank();
    res.controllable = ech.full();
    return res;
}

inline nlohmann::ordered_json point_to_json(const PhasePoint& pt, const PhaseSpace& space) {
    nlohmann::ordered_json q, p;
    const int n = space.particles();
    for (int i = 0; i < n; ++i) {
        q[space.ids()[static_cast<std::size_t>(i)]] = rational_str(pt[static_cast<std::size_t>(i)]);
        p[space.ids()[static_cast<std::size_t>(i)]] = rational_str(pt[static_cast<std::size_t>(i + n)]);
    }
    nlohmann::ordered_json out;
    out["q"] = std::move(q);
    out["p"] = std::move(p);
    return out;
}

inline PhasePoint point_from_json(const nlohmann::json& j, const PhaseSpace& space) {
    PhasePoint pt(static_cast<std::size_t>(space.dim()), Rational(0));
    const int n = space.particles();
    for (int i = 0; i < n; ++i) {
        const std::string& id = space.ids()[static_cast<std::size_t>(i)];
        pt[static_cast<std::size_t>(i)] = parse_rational(j.at("q").at(id).get<std::string>());
        pt[static_cast<std::size_t>(i + n)] = parse_rational(j.at("p").at(id).get<std::string>());
    }
    return pt;
}

/// Certificate document; carries everything needed to replay the run.
inline nlohmann::ordered_json certificate_to_json(const CertStatus& cert, const PhaseSpace& space,
                                                  std::uint64_t seed,
                                                  const SaturationBudget& budget) {
    nlohmann::ordered_json doc;
    doc["status"] = cert.certified ? "Certified" : "Inconclusive";
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& pr : cert.points) {
        auto jp = point_to_json(pr.point, space);
        jp["rank"] = pr.rank;
        doc["points"].push_back(std::move(jp));
    }
    doc["rank_history"] = cert.rank_history;
    doc["fields_used"] = cert.fields_used;
    doc["seed"] = seed;
    doc["budget"] = {{"max_fields", budget.max_fields},
                     {"max_degree", budget.max_degree},
                     {"max_generations", budget.max_generations}};
    return doc;
}

} // namespace polynet
