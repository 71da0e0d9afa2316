#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis {1, zeta, ..., zeta^(phi(N)-1)}
// reduced modulo the N-th cyclotomic polynomial Phi_N, so equality is plain
// componentwise comparison of canonical rationals.  Everything is exact; no
// floating point anywhere.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "unital/errors.hpp"
#include "unital/rational.hpp"

namespace unital {

inline long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Exact division of integer polynomials, quotient known to be integral.
// Coefficients lowest-degree first, divisor monic.
inline std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    const auto dn = static_cast<long>(num.size()) - 1;
    const auto dd = static_cast<long>(den.size()) - 1;
    std::vector<Int> quot(static_cast<size_t>(dn - dd + 1));
    for (long i = dn - dd; i >= 0; --i) {
        Int q = num[static_cast<size_t>(i + dd)];
        quot[static_cast<size_t>(i)] = q;
        for (long j = 0; j <= dd; ++j) num[static_cast<size_t>(i + j)] -= q * den[static_cast<size_t>(j)];
    }
    return quot;
}

}  // namespace detail

// Monic integer-coefficient Phi_N, computed by dividing x^N - 1 by Phi_d for
// all proper divisors d of N.  Lowest-degree coefficient first.
inline std::vector<Int> cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
    if (n == 1) return {Int(-1), Int(1)};
    std::vector<Int> num(static_cast<size_t>(n + 1), Int(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    std::vector<Int> acc{Int(1)};  // product of Phi_d over proper divisors d
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto phi_d = cyclotomic_poly(d);
        std::vector<Int> next(acc.size() + phi_d.size() - 1, Int(0));
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < phi_d.size(); ++j) next[i + j] += acc[i] * phi_d[j];
        acc = std::move(next);
    }
    return detail::exact_div(std::move(num), acc);
}

// Per-order context: Phi_N plus the reduction of every power zeta^m, m < N.
// Contexts are immutable once built and cached behind a mutex.
class CycField {
public:
    static const CycField& get(int n) {
        // hot path: a computation works at one order, so cache per thread
        thread_local const CycField* last = nullptr;
        if (last && last->n_ == n) return *last;
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CycField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
        last = it->second.get();
        return *last;
    }

    int order() const { return n_; }
    int degree() const { return phi_; }
    const std::vector<Int>& modulus() const { return phi_poly_; }

    // zeta^m in the power basis; m arbitrary (folded mod N).
    const std::vector<Rat>& zeta_power(long m) const {
        long r = m % n_;
        if (r < 0) r += n_;
        return pow_[static_cast<size_t>(r)];
    }

private:
    explicit CycField(int n) : n_(n), phi_(static_cast<int>(euler_phi(n))), phi_poly_(cyclotomic_poly(n)) {
        pow_.resize(static_cast<size_t>(n_));
        std::vector<Rat> cur(static_cast<size_t>(phi_), Rat(0));
        cur[0] = 1;
        pow_[0] = cur;
        for (long m = 1; m < n_; ++m) {
            // cur := x * cur mod Phi_N
            Rat lead = cur[static_cast<size_t>(phi_ - 1)];
            for (long j = phi_ - 1; j >= 1; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
            cur[0] = 0;
            if (lead != 0) {
                for (long j = 0; j < phi_; ++j)
                    cur[static_cast<size_t>(j)] -= lead * Rat(phi_poly_[static_cast<size_t>(j)]);
            }
            pow_[static_cast<size_t>(m)] = cur;
        }
    }

    int n_;
    int phi_;
    std::vector<Int> phi_poly_;
    std::vector<std::vector<Rat>> pow_;
};

struct Valuation {
    bool infinite = false;  // valuation of zero
    Rat value;              // v_p(Norm(a)) / phi(N), possibly half-integral

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
};

inline Valuation valuation_infinity() { return Valuation{true, Rat(0)}; }
inline Valuation valuation_of(Rat v) { return Valuation{false, std::move(v)}; }

class CycNum {
public:
    CycNum() : n_(1), c_(1, Rat(0)) {}

    static CycNum zero(int n) { return CycNum(n); }

    static CycNum one(int n) {
        CycNum r(n);
        r.c_[0] = 1;
        return r;
    }

    static CycNum from_rat(int n, const Rat& q) {
        CycNum r(n);
        r.c_[0] = q;
        return r;
    }

    static CycNum from_coeffs(int n, std::vector<Rat> coeffs) {
        CycNum r(n);
        if (coeffs.size() != r.c_.size())
            throw std::invalid_argument("from_coeffs: expected phi(N) coefficients");
        r.c_ = std::move(coeffs);
        return r;
    }

    // zeta_N^r, any integer r.
    static CycNum root_of_unity(int n, long r) {
        CycNum out(n);
        out.c_ = CycField::get(n).zeta_power(r);
        return out;
    }

    int order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const Rat& rational_value() const {
        if (!is_rational()) throw std::logic_error("rational_value: element not rational");
        return c_[0];
    }

    friend bool operator==(const CycNum& a, const CycNum& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        check_orders(a, b, "add");
        CycNum r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        check_orders(a, b, "subtract");
        CycNum r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }

    CycNum operator-() const {
        CycNum r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        check_orders(a, b, "multiply");
        const auto& field = CycField::get(a.n_);
        const size_t phi = a.c_.size();
        std::vector<Rat> conv(2 * phi - 1, Rat(0));
        for (size_t i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycNum r(a.n_);
        for (size_t i = 0; i < phi; ++i) r.c_[i] = conv[i];
        for (size_t m = phi; m < conv.size(); ++m) {
            if (conv[m] == 0) continue;
            const auto& red = field.zeta_power(static_cast<long>(m));
            for (size_t i = 0; i < phi; ++i) r.c_[i] += conv[m] * red[i];
        }
        return r;
    }

    friend CycNum operator*(const CycNum& a, const Rat& s) {
        CycNum r = a;
        for (auto& q : r.c_) q *= s;
        return r;
    }

    // Inversion by the extended Euclidean algorithm against Phi_N over Q[x].
    CycNum inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        if (is_rational()) return from_rat(n_, Rat(1) / c_[0]);
        const auto& field = CycField::get(n_);
        std::vector<Rat> r0(field.modulus().size());
        for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(field.modulus()[i]);
        std::vector<Rat> r1 = c_;
        trim(r1);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // Bezout coefficients of the element
        while (true) {
            // r0 = q * r1 + r2
            std::vector<Rat> rem = r0;
            std::vector<Rat> quot(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, Rat(0));
            while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
                size_t shift = rem.size() - r1.size();
                Rat factor = rem.back() / r1.back();
                quot[shift] += factor;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= factor * r1[i];
                trim(rem);
                if (rem.size() == 1 && rem[0] == 0) break;
            }
            std::vector<Rat> s2 = s0;  // s2 = s0 - q * s1
            if (s2.size() < quot.size() + s1.size() - 1) s2.resize(quot.size() + s1.size() - 1, Rat(0));
            for (size_t i = 0; i < quot.size(); ++i) {
                if (quot[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
            }
            trim(s2);
            if (rem.size() == 1 && rem[0] == 0) {
                // r1 is the gcd; it must be a nonzero constant.
                if (r1.size() != 1)
                    throw std::logic_error("inverse: element not invertible modulo Phi_N");
                CycNum out(n_);
                for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / r1[0];
                return out;
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    // The field automorphism zeta -> zeta^k, gcd(k, N) = 1.
    CycNum galois(long k) const {
        long km = k % n_;
        if (km < 0) km += n_;
        if (std::gcd(km == 0 ? static_cast<long>(n_) : km, static_cast<long>(n_)) != 1)
            throw NotCoprime("galois: exponent not coprime to order");
        const auto& field = CycField::get(n_);
        CycNum r(n_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& img = field.zeta_power(km * static_cast<long>(i));
            for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += c_[i] * img[j];
        }
        return r;
    }

    // Image under zeta_N -> zeta_M^(M/N) for N | M.
    CycNum embedded(int m) const {
        if (m % n_ != 0) throw NotDivisible("embedded: target order not a multiple");
        if (m == n_) return *this;
        const auto& field = CycField::get(m);
        const long stride = m / n_;
        CycNum r(m);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& img = field.zeta_power(stride * static_cast<long>(i));
            for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += c_[i] * img[j];
        }
        return r;
    }

    // Product of all Galois conjugates; always rational.
    Rat norm() const {
        if (is_zero()) return Rat(0);
        CycNum acc = one(n_);
        for (long k = 1; k <= n_; ++k) {
            if (std::gcd(k, static_cast<long>(n_)) != 1) continue;
            acc = acc * galois(k);
        }
        if (!acc.is_rational()) throw std::logic_error("norm: conjugate product not rational");
        return acc.c_[0];
    }

    // Norm-based p-adic valuation v_p(Norm(a)) / phi(N); +infinity at zero.
    Valuation ord(unsigned long p) const {
        if (p < 2) throw std::invalid_argument("ord: p must be a prime");
        if (is_zero()) return valuation_infinity();
        Rat v(rat_val_p(norm(), p), static_cast<unsigned long>(c_.size()));
        v.canonicalize();
        return valuation_of(v);
    }

    // Exact human rendering with z = zeta_N, e.g. "1+z", "-1/2*z^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat a = c_[i];
            if (out.empty()) {
                if (a < 0) out += "-";
            } else {
                out += (a < 0) ? "-" : "+";
            }
            Rat mag = a < 0 ? Rat(-a) : a;
            bool unit_coeff = (mag == 1) && i > 0;
            if (!unit_coeff) out += rat_to_string(mag);
            if (i > 0) {
                if (!unit_coeff) out += "*";
                out += "z";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    // Injective rendering of the coefficient vector, used by canonical keys.
    std::string key() const {
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += rat_to_string(c_[i]);
        }
        return out;
    }

private:
    explicit CycNum(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("CycNum: order must be >= 1");
        c_.assign(static_cast<size_t>(CycField::get(n).degree()), Rat(0));
    }

    static void check_orders(const CycNum& a, const CycNum& b, const char* op) {
        if (a.n_ != b.n_) throw OrderMismatch(std::string("CycNum ") + op + ": orders differ");
    }

    static void trim(std::vector<Rat>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }

    int n_;
    std::vector<Rat> c_;
};

}  // namespace unital
