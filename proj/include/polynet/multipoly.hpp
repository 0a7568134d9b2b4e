#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polynet/errors.hpp"
#include "polynet/network.hpp"
#include "polynet/poly.hpp"
#include "polynet/rational.hpp"

namespace polynet {

/// Coordinate layout of phase space: q's first, then p's, each block in
/// ascending vertex id. All oracle vectors and matrices use this order.
class PhaseSpace {
public:
    explicit PhaseSpace(const Network& net) {
        for (const auto& v : net.vertices()) ids_.push_back(v.id);
        std::sort(ids_.begin(), ids_.end());
    }

    int particles() const { return static_cast<int>(ids_.size()); }
    int dim() const { return 2 * particles(); }

    int q_index(const std::string& id) const { return find(id); }
    int p_index(const std::string& id) const { return particles() + find(id); }
    bool is_q(int i) const { return i < particles(); }

    std::string coord_name(int i) const {
        return (is_q(i) ? "q:" : "p:") + ids_[static_cast<std::size_t>(i % particles())];
    }

    const std::vector<std::string>& ids() const { return ids_; }

private:
    int find(const std::string& id) const {
        const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) throw UnknownVertex("unknown vertex '" + id + "'");
        return static_cast<int>(it - ids_.begin());
    }

    std::vector<std::string> ids_;
};

/// Sparse multivariate polynomial over the phase coordinates: exponent
/// vector -> rational coefficient, zero coefficients never stored.
class MultiPoly {
public:
    using Monomial = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(const Rational& c, int nvars) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Monomial(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }

    static MultiPoly variable(int i, int nvars) {
        MultiPoly p(nvars);
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(i)] = 1;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (const int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    bool depends_on(int var) const {
        for (const auto& [m, c] : terms_)
            if (m[static_cast<std::size_t>(var)] > 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
        MultiPoly out(a.nvars_);
        if (s == 0) return out;
        for (const auto& [m, c] : a.terms_) out.terms_[m] = s * c;
        return out;
    }

    friend MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly partial(int var) const {
        MultiPoly out(nvars_);
        for (const auto& [m, c] : terms_) {
            const int e = m[static_cast<std::size_t>(var)];
            if (e == 0) continue;
            Monomial d = m;
            --d[static_cast<std::size_t>(var)];
            out.add_term(d, Rational(e) * c);
        }
        return out;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e) t *= x[i];
            acc += t;
        }
        return acc;
    }

    std::string str(const PhaseSpace& space) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rational_str(c);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                out += "*" + space.coord_name(static_cast<int>(i));
                if (m[i] > 1) out += "^" + std::to_string(m[i]);
            }
        }
        return out;
    }

private:
    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// Composition p(expr) of a univariate polynomial with a multivariate
/// argument, by Horner.
inline MultiPoly compose(const Poly& p, const MultiPoly& expr) {
    MultiPoly acc(expr.nvars());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * expr;
        acc += MultiPoly::constant(p.coeff(i), expr.nvars());
    }
    return acc;
}

/// Polynomial vector field on phase space: coordinate index -> component.
/// Zero components are never stored.
struct VectorField {
    int nvars = 0;
    std::map<int, MultiPoly> comps;

    explicit VectorField(int n = 0) : nvars(n) {}

    static VectorField coordinate(int i, int nvars) {
        VectorField f(nvars);
        f.comps.emplace(i, MultiPoly::constant(1, nvars));
        return f;
    }

    bool is_zero() const { return comps.empty(); }

    void set(int i, MultiPoly p) {
        if (p.is_zero())
            comps.erase(i);
        else
            comps.insert_or_assign(i, std::move(p));
    }

    void add(int i, const MultiPoly& p) {
        auto it = comps.find(i);
        if (it == comps.end()) {
            if (!p.is_zero()) comps.emplace(i, p);
            return;
        }
        it->second += p;
        if (it->second.is_zero()) comps.erase(it);
    }

    const MultiPoly& at(int i) const {
        static const MultiPoly kZero;
        const auto it = comps.find(i);
        return it == comps.end() ? kZero : it->second;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [i, p] : comps) d = std::max(d, p.total_degree());
        return d;
    }

    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        VectorField out = a;
        for (const auto& [i, p] : b.comps) out.add(i, p);
        return out;
    }

    friend VectorField operator-(const VectorField& a, const VectorField& b) {
        VectorField out = a;
        for (const auto& [i, p] : b.comps) out.add(i, -p);
        return out;
    }

    friend VectorField operator*(const Rational& s, const VectorField& a) {
        VectorField out(a.nvars);
        if (s == 0) return out;
        for (const auto& [i, p] : a.comps) out.comps.emplace(i, s * p);
        return out;
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.comps == b.comps;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }
};

/// Scalar function multiplication f*Z (closure of M under scalar products).
inline VectorField scale_field(const MultiPoly& f, const VectorField& z) {
    VectorField out(z.nvars);
    for (const auto& [i, p] : z.comps) out.set(i, f * p);
    return out;
}

/// Directional derivative Yf = sum_j Y_j d_j f.
inline MultiPoly apply_field(const VectorField& y, const MultiPoly& f) {
    MultiPoly out(y.nvars);
    for (const auto& [j, yj] : y.comps) out += yj * f.partial(j);
    return out;
}

/// Commutator of first-order operators: [Y,Z]_i = sum_j (Y_j d_j Z_i - Z_j d_j Y_i).
inline VectorField lie_bracket(const VectorField& y, const VectorField& z) {
    VectorField out(y.nvars ? y.nvars : z.nvars);
    for (const auto& [i, zi] : z.comps) out.add(i, apply_field(y, zi));
    for (const auto& [i, yi] : y.comps) out.add(i, -apply_field(z, yi));
    return out;
}

/// Exact evaluation in the fixed coordinate order; the result has one entry
/// per phase coordinate.
inline std::vector<Rational> evaluate_at(const VectorField& f, const std::vector<Rational>& x) {
    std::vector<Rational> out(x.size(), Rational(0));
    for (const auto& [i, p] : f.comps) out[static_cast<std::size_t>(i)] = p.evaluate(x);
    return out;
}

} // namespace polynet
