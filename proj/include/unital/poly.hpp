#pragma once

// Dense univariate polynomials over Q(zeta_N), factored-form construction over
// Gamma_N^0 = {0} u {N-th roots of unity}, and exact root peeling.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unital/cyclotomic.hpp"
#include "unital/errors.hpp"

namespace unital {

// A point of Gamma_N^0: either the origin or the root zeta_N^r.
class Site {
public:
    static Site origin() { return Site(-1); }
    static Site root(int r) {
        if (r < 0) throw std::invalid_argument("Site::root: negative residue");
        return Site(r);
    }

    bool is_origin() const { return code_ < 0; }
    int root_index() const {
        if (is_origin()) throw std::logic_error("root_index of origin site");
        return code_;
    }

    // The point itself as a field element (0 or zeta^r).
    CycNum point(int order) const {
        return is_origin() ? CycNum::zero(order) : CycNum::root_of_unity(order, code_);
    }

    std::string label() const { return is_origin() ? "origin" : "root:" + std::to_string(code_); }

    friend auto operator<=>(const Site&, const Site&) = default;

private:
    explicit Site(int code) : code_(code) {}
    int code_;  // -1 = origin, else residue r in [0, N)
};

// Finite map from Gamma_N^0 to positive exponents.
struct RootSpec {
    int order = 1;
    std::map<Site, int> exps;

    int total_degree() const {
        int sum = 0;
        for (const auto& [site, e] : exps) sum += e;
        return sum;
    }

    friend bool operator==(const RootSpec& a, const RootSpec& b) {
        return a.order == b.order && a.exps == b.exps;
    }
};

class Poly {
public:
    explicit Poly(int order) : n_(order) {
        if (order < 1) throw std::invalid_argument("Poly: order must be >= 1");
    }

    static Poly zero(int order) { return Poly(order); }

    static Poly constant(CycNum c) {
        Poly p(c.order());
        if (!c.is_zero()) p.c_.push_back(std::move(c));
        return p;
    }

    static Poly one(int order) { return constant(CycNum::one(order)); }

    // x - mu, monic.
    static Poly linear_root(int order, const CycNum& mu) {
        Poly p(order);
        p.c_ = {-mu, CycNum::one(order)};
        return p;
    }

    static Poly from_coeffs(int order, std::vector<CycNum> coeffs) {
        Poly p(order);
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    int order() const { return n_; }
    bool is_zero() const { return c_.empty(); }

    // -1 is the degree sentinel for the zero polynomial (empty coefficients).
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    CycNum coeff(size_t i) const { return i < c_.size() ? c_[i] : CycNum::zero(n_); }

    const std::vector<CycNum>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_orders(a, b, "add");
        Poly r(a.n_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), CycNum::zero(a.n_));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        check_orders(a, b, "subtract");
        Poly r(a.n_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), CycNum::zero(a.n_));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_orders(a, b, "multiply");
        if (a.is_zero() || b.is_zero()) return zero(a.n_);
        Poly r(a.n_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, CycNum::zero(a.n_));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    Poly scaled(const CycNum& s) const {
        if (s.order() != n_) throw OrderMismatch("Poly::scaled: orders differ");
        if (s.is_zero()) return zero(n_);
        Poly r(n_);
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * s);
        return r;
    }

    CycNum evaluate(const CycNum& x) const {
        if (x.order() != n_) throw OrderMismatch("Poly::evaluate: orders differ");
        CycNum acc = CycNum::zero(n_);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Exact division by the monic linear factor (x - mu); remainder must vanish.
    Poly divide_linear(const CycNum& mu) const {
        if (is_zero()) throw ZeroPolynomial("divide_linear on zero polynomial");
        std::vector<CycNum> q(c_.size() - 1, CycNum::zero(n_));
        CycNum carry = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + mu * carry;
        }
        if (!carry.is_zero()) throw std::logic_error("divide_linear: nonzero remainder");
        return from_coeffs(n_, std::move(q));
    }

private:
    static void check_orders(const Poly& a, const Poly& b, const char* op) {
        if (a.n_ != b.n_) throw OrderMismatch(std::string("Poly ") + op + ": orders differ");
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int n_;
    std::vector<CycNum> c_;  // lowest degree first; empty = zero polynomial
};

// Monic product of (x - mu)^e over the spec; the empty spec yields 1.
inline Poly from_factored(const RootSpec& spec) {
    Poly acc = Poly::one(spec.order);
    for (const auto& [site, e] : spec.exps) {
        if (e < 1) throw std::invalid_argument("from_factored: exponents must be positive");
        const Poly factor = Poly::linear_root(spec.order, site.point(spec.order));
        for (int i = 0; i < e; ++i) acc = acc * factor;
    }
    return acc;
}

struct PeelResult {
    RootSpec spec;
    CycNum constant;
};

// Writes p as c * prod (x - mu)^e over Gamma_N^0 if possible.  Peels the
// origin first, then roots r = 0..N-1, for a deterministic procedure; the
// factorization itself is order-independent.  Returns nothing when the peeled
// quotient still has positive degree.
inline std::optional<PeelResult> peel_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("peel_roots on zero polynomial");
    const int n = p.order();
    Poly rest = p;
    RootSpec spec;
    spec.order = n;
    while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
        rest = rest.divide_linear(CycNum::zero(n));
        spec.exps[Site::origin()] += 1;
    }
    for (int r = 0; r < n && rest.degree() > 0; ++r) {
        const CycNum mu = CycNum::root_of_unity(n, r);
        while (rest.degree() > 0 && rest.evaluate(mu).is_zero()) {
            rest = rest.divide_linear(mu);
            spec.exps[Site::root(r)] += 1;
        }
    }
    if (rest.degree() != 0) return std::nullopt;
    return PeelResult{std::move(spec), rest.coeff(0)};
}

}  // namespace unital
