#pragma once

// The N-unital function type: a nonzero constant times a product of powers of
// x and (x - zeta_N^r), with integer exponents (positive = zero, negative =
// pole).  Carries the defining membership check (complement), the S3 sextet,
// scaling and Galois symmetries, evaluation at 0 and canonical rendering.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unital/cyclotomic.hpp"
#include "unital/errors.hpp"
#include "unital/poly.hpp"

namespace unital {

// An element of Q(zeta_N) u {infinity}; the value line P^1 where the
// evaluations at 0 live.
struct P1Value {
    bool infinite = false;
    CycNum value;  // meaningful only when finite

    static P1Value infinity(int order) { return P1Value{true, CycNum::zero(order)}; }
    static P1Value finite(CycNum v) { return P1Value{false, std::move(v)}; }

    int order() const { return value.order(); }

    friend bool operator==(const P1Value& a, const P1Value& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite ? a.value.order() == b.value.order() : a.value == b.value;
    }

    std::string key() const { return infinite ? "inf" : value.key(); }
    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

class UnitalFn {
public:
    UnitalFn(int order, CycNum constant, std::map<Site, int> exps)
        : n_(order), constant_(std::move(constant)), exps_(std::move(exps)) {
        if (constant_.order() != n_) throw OrderMismatch("UnitalFn: constant order differs");
        if (constant_.is_zero()) throw std::invalid_argument("UnitalFn: zero constant");
        for (auto it = exps_.begin(); it != exps_.end();) {
            if (it->second == 0)
                it = exps_.erase(it);
            else {
                if (!it->first.is_origin() && it->first.root_index() >= n_)
                    throw std::invalid_argument("UnitalFn: root site outside Gamma_N");
                ++it;
            }
        }
        if (exps_.empty()) throw std::invalid_argument("UnitalFn: constant function");
    }

    int order() const { return n_; }
    const CycNum& constant() const { return constant_; }
    const std::map<Site, int>& exps() const { return exps_; }

    friend bool operator==(const UnitalFn& a, const UnitalFn& b) {
        return a.n_ == b.n_ && a.constant_ == b.constant_ && a.exps_ == b.exps_;
    }

    // Numerator = constant * (positive part), denominator = (negated negative
    // part); coprime by construction since the supports are disjoint.
    std::pair<Poly, Poly> as_fraction() const {
        RootSpec pos{n_, {}}, neg{n_, {}};
        for (const auto& [site, e] : exps_) {
            if (e > 0)
                pos.exps[site] = e;
            else
                neg.exps[site] = -e;
        }
        return {from_factored(pos).scaled(constant_), from_factored(neg)};
    }

    UnitalFn reciprocal() const {
        std::map<Site, int> flipped;
        for (const auto& [site, e] : exps_) flipped[site] = -e;
        return UnitalFn(n_, constant_.inverse(), std::move(flipped));
    }

    // 1 - f, if it is again a product of linear factors over Gamma_N^0.
    // Failure of the peel is exactly "f is not N-unital".
    std::optional<UnitalFn> complement() const {
        auto [num, den] = as_fraction();
        const Poly diff = den - num;
        if (diff.is_zero()) throw std::logic_error("complement: 1 - f vanished for non-constant f");
        auto peeled = peel_roots(diff);
        if (!peeled) return std::nullopt;
        // diff and den share no root, so the exponent supports are disjoint.
        std::map<Site, int> exps;
        for (const auto& [site, e] : peeled->spec.exps) exps[site] = e;
        for (const auto& [site, e] : exps_)
            if (e < 0) exps[site] = e;
        return UnitalFn(n_, peeled->constant, std::move(exps));
    }

    // The S3 orbit {f, 1-f, 1/f, (f-1)/f, f/(f-1), 1/(1-f)}, built from
    // complement and reciprocal.  Empty when f is not N-unital.
    std::optional<std::vector<UnitalFn>> sextet() const {
        auto one_minus_f = complement();
        if (!one_minus_f) return std::nullopt;
        const UnitalFn inv = reciprocal();
        auto one_minus_inv = inv.complement();  // (f-1)/f
        if (!one_minus_inv) return std::nullopt;
        std::vector<UnitalFn> out;
        out.reserve(6);
        out.push_back(*this);
        out.push_back(*one_minus_f);
        out.push_back(inv);
        out.push_back(*one_minus_inv);
        out.push_back(one_minus_inv->reciprocal());   // f/(f-1)
        out.push_back(one_minus_f->reciprocal());     // 1/(1-f)
        return out;
    }

    // f(zeta^r x), renormalized so every factor stays monic in (x - mu): the
    // root keys shift by -r and the substitution units fold into the constant.
    UnitalFn scaled(long r) const {
        long rm = r % n_;
        if (rm < 0) rm += n_;
        long total = 0;
        std::map<Site, int> exps;
        for (const auto& [site, e] : exps_) {
            total += e;
            if (site.is_origin())
                exps[site] = e;
            else
                exps[Site::root(static_cast<int>(((site.root_index() - rm) % n_ + n_) % n_))] = e;
        }
        const CycNum unit = CycNum::root_of_unity(n_, rm * total);
        return UnitalFn(n_, constant_ * unit, std::move(exps));
    }

    // Coefficientwise sigma_k; root keys map by r -> k*r mod N.
    UnitalFn galois_image(long k) const {
        std::map<Site, int> exps;
        long km = k % n_;
        if (km < 0) km += n_;
        for (const auto& [site, e] : exps_) {
            if (site.is_origin())
                exps[site] = e;
            else
                exps[Site::root(static_cast<int>((km * site.root_index()) % n_))] = e;
        }
        if (exps.size() != exps_.size()) throw NotCoprime("galois_image: exponent not coprime to order");
        return UnitalFn(n_, constant_.galois(k), std::move(exps));
    }

    // Same function viewed in Q(zeta_M) for N | M.
    UnitalFn embedded(int m) const {
        if (m % n_ != 0) throw NotDivisible("UnitalFn::embedded: target order not a multiple");
        const int stride = m / n_;
        std::map<Site, int> exps;
        for (const auto& [site, e] : exps_) {
            if (site.is_origin())
                exps[site] = e;
            else
                exps[Site::root(site.root_index() * stride)] = e;
        }
        return UnitalFn(m, constant_.embedded(m), std::move(exps));
    }

    P1Value value_at_zero() const {
        auto it = exps_.find(Site::origin());
        if (it != exps_.end()) {
            if (it->second > 0) return P1Value::finite(CycNum::zero(n_));
            return P1Value::infinity(n_);
        }
        CycNum acc = constant_;
        for (const auto& [site, e] : exps_) {
            const CycNum at_zero = -site.point(n_);  // (0 - mu)
            CycNum power = CycNum::one(n_);
            const CycNum base = e > 0 ? at_zero : at_zero.inverse();
            for (int i = 0; i < (e > 0 ? e : -e); ++i) power = power * base;
            acc = acc * power;
        }
        return P1Value::finite(acc);
    }

    // Total-order-compatible injective rendering: order, then one exponent per
    // site of Gamma_N^0 in fixed order, then the constant's coefficients.
    std::string canonical_key() const {
        std::string out = "n=" + std::to_string(n_) + "|e=";
        auto exp_of = [&](const Site& s) {
            auto it = exps_.find(s);
            return it == exps_.end() ? 0 : it->second;
        };
        out += std::to_string(exp_of(Site::origin()));
        for (int r = 0; r < n_; ++r) out += "," + std::to_string(exp_of(Site::root(r)));
        out += "|c=" + constant_.key();
        return out;
    }

    // Human rendering, e.g. "(2)*x^1*(x-root:1)^-1".
    std::string to_text() const {
        std::string out = "(" + constant_.to_string() + ")";
        auto emit = [&](const Site& s, int e) {
            if (e == 0) return;
            if (s.is_origin())
                out += "*x^" + std::to_string(e);
            else
                out += "*(x-" + s.label() + ")^" + std::to_string(e);
        };
        auto it = exps_.find(Site::origin());
        if (it != exps_.end()) emit(it->first, it->second);
        for (int r = 0; r < n_; ++r) {
            auto rit = exps_.find(Site::root(r));
            if (rit != exps_.end()) emit(rit->first, rit->second);
        }
        return out;
    }

private:
    int n_;
    CycNum constant_;
    std::map<Site, int> exps_;
};

inline bool key_less(const UnitalFn& a, const UnitalFn& b) {
    return a.canonical_key() < b.canonical_key();
}

}  // namespace unital
