#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "polynet/errors.hpp"
#include "polynet/rational.hpp"

namespace polynet {

/// Univariate polynomial with exact rational coefficients, stored in the
/// monomial basis low-to-high. The zero polynomial has an empty coefficient
/// list; otherwise the last coefficient is nonzero and degree() == size-1.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * t^k
    static Poly monomial(int k, const Rational& c = Rational(1)) {
        if (c == 0) return Poly();
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// i-th monomial coefficient, 0 beyond the stored range.
    const Rational& coeff(int i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Rational> v = a.coeffs_;
        for (auto& c : v) c = -c;
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const Rational& s, const Poly& a) {
        if (s == 0) return Poly();
        std::vector<Rational> v = a.coeffs_;
        for (auto& c : v) c *= s;
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Rational& s) { return s * a; }

    friend Poly operator/(const Poly& a, const Rational& s) {
        return Rational(denominator(s), numerator(s)) * a;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeff(i);
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            const Rational mag = c > 0 ? c : Rational(-c);
            if (mag != 1 || i == 0) out += rational_str(mag);
            if (i > 0) {
                if (mag != 1) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Formal derivative. Degree drops by exactly one for nonconstant input.
inline Poly derivative(const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(p.degree()), Rational(0));
    for (int i = 1; i <= p.degree(); ++i)
        v[static_cast<std::size_t>(i) - 1] = Rational(i) * p.coeff(i);
    return Poly(std::move(v));
}

/// q(t) = p(t + d), computed by Horner with exact arithmetic.
inline Poly shift(const Poly& p, const Rational& d) {
    Poly acc;
    const Poly lin{d, Rational(1)}; // t + d
    for (int i = p.degree(); i >= 0; --i) acc = acc * lin + Poly{p.coeff(i)};
    return acc;
}

/// q(t) = p(-t).
inline Poly reflect(const Poly& p) {
    std::vector<Rational> v = p.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
}

struct AdjustedForm {
    Poly poly;      // the unique adjusted polynomial equivalent to the input
    Rational delta; // poly(t) == input(t + delta)
};

/// A degree-k polynomial is adjusted when its t^{k-1} coefficient vanishes.
/// Every polynomial of degree >= 1 has exactly one adjusted translate; it
/// shares the input's degree and leading coefficient.
inline AdjustedForm adjusted_representation(const Poly& p) {
    const int k = p.degree();
    if (k < 1) throw DegreeTooLow("adjusted representation needs degree >= 1, got " + p.str());
    const Rational delta = -p.coeff(k - 1) / (Rational(k) * p.coeff(k));
    return AdjustedForm{shift(p, delta), delta};
}

/// True iff f(.) == g(. + delta) for some rational delta, decided exactly by
/// comparing adjusted representations.
inline bool equivalent(const Poly& f, const Poly& g) {
    if (f.degree() < 1 || g.degree() < 1)
        throw DegreeTooLow("equivalence is defined for polynomials of degree >= 1");
    if (f.degree() != g.degree() || f.leading() != g.leading()) return false;
    return adjusted_representation(f).poly == adjusted_representation(g).poly;
}

} // namespace polynet
