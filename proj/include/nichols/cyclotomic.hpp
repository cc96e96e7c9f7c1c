// Exact arithmetic in the cyclotomic fields Q(zeta_N), N = 1 giving Q.
// Elements are dense coefficient vectors of length phi(N) over mpq,
// reduced modulo the N-th cyclotomic polynomial Phi_N.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nichols/common.hpp"

namespace nichols {

using Rational = mpq_class;

namespace detail {

// Monic integer polynomials, index = degree.
using ZPoly = std::vector<mpz_class>;

inline ZPoly zpoly_x_pow_minus_one(unsigned n) {
    ZPoly p(n + 1, mpz_class(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division by a monic divisor; remainder must come out zero.
inline ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    ZPoly quot(dn - dd + 1, mpz_class(0));
    for (std::size_t k = dn + 1; k-- > dd;) {
        mpz_class c = num[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw input_error("cyclotomic: non-exact polynomial division");
    return quot;
}

inline const ZPoly& cyclotomic_poly(unsigned n);

inline ZPoly compute_cyclotomic(unsigned n) {
    if (n == 1) return ZPoly{mpz_class(-1), mpz_class(1)};  // x - 1
    ZPoly num = zpoly_x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = zpoly_div_exact(std::move(num), cyclotomic_poly(d));
    return num;
}

inline const ZPoly& cyclotomic_poly(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    static std::recursive_mutex mtx;  // compute_cyclotomic recurses into divisors
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// Per-modulus context: Phi_N and the reduction table for overflow
// monomials x^(phi+k), k = 0..phi-2, produced by schoolbook products.
struct Field {
    unsigned modulus;
    std::size_t degree;
    ZPoly phi;
    std::vector<std::vector<Rational>> overflow;  // x^(degree+k) mod Phi

    explicit Field(unsigned n) : modulus(n), degree(euler_phi(n)), phi(cyclotomic_poly(n)) {
        if (degree >= 2) {
            overflow.resize(degree - 1);
            // x^degree = -(phi_0 + phi_1 x + ...)
            std::vector<Rational> cur(degree);
            for (std::size_t j = 0; j < degree; ++j) cur[j] = Rational(-phi[j]);
            overflow[0] = cur;
            for (std::size_t k = 1; k + 1 < degree; ++k) {
                std::vector<Rational> next(degree, Rational(0));
                for (std::size_t j = 0; j + 1 < degree; ++j) next[j + 1] = cur[j];
                Rational top = cur[degree - 1];
                if (top != 0)
                    for (std::size_t j = 0; j < degree; ++j) next[j] += top * overflow[0][j];
                overflow[k] = next;
                cur = std::move(next);
            }
        } else if (degree == 1) {
            // constants only; x reduces to -phi_0
        }
    }
};

inline const Field& field(unsigned n) {
    if (n == 0) throw input_error("cyclotomic: modulus must be positive");
    static std::map<unsigned, std::unique_ptr<Field>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Field>(n)).first;
    return *it->second;
}

}  // namespace detail

// An element of Q(zeta_N). Immutable moduli: operations on operands of
// different moduli throw; callers embed explicitly (embed_to / aligned).
class ExactScalar {
public:
    ExactScalar() : modulus_(1), coeffs_(1, Rational(0)) {}

    explicit ExactScalar(const Rational& value, unsigned modulus = 1)
        : modulus_(modulus), coeffs_(detail::field(modulus).degree, Rational(0)) {
        coeffs_[0] = value;
        canonicalize();
    }

    static ExactScalar zero(unsigned modulus = 1) { return ExactScalar(Rational(0), modulus); }
    static ExactScalar one(unsigned modulus = 1) { return ExactScalar(Rational(1), modulus); }

    static ExactScalar integer(long v) { return ExactScalar(Rational(v), 1); }

    static ExactScalar from_coeffs(std::vector<Rational> coeffs, unsigned modulus) {
        const auto& f = detail::field(modulus);
        if (coeffs.size() != f.degree) throw input_error("cyclotomic: wrong coefficient count");
        ExactScalar s;
        s.modulus_ = modulus;
        s.coeffs_ = std::move(coeffs);
        s.canonicalize();
        return s;
    }

    // zeta_N as an element of Q(zeta_N); for N <= 2 this is +-1.
    static ExactScalar zeta(unsigned modulus) {
        const auto& f = detail::field(modulus);
        ExactScalar s = zero(modulus);
        if (f.degree == 1) {
            s.coeffs_[0] = -Rational(f.phi[0]);  // x mod (x - phi_0-like linear)
        } else {
            s.coeffs_[1] = 1;
        }
        return s;
    }

    static ExactScalar root_of_unity(unsigned modulus, unsigned long power) {
        return zeta(modulus).pow(static_cast<long>(power % modulus));
    }

    unsigned modulus() const { return modulus_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (coeffs_[j] != 0) return false;
        return true;
    }

    // True when the value lies in Q (no zeta component).
    bool is_rational() const {
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (coeffs_[j] != 0) return false;
        return true;
    }
    const Rational& rational_part() const { return coeffs_[0]; }

    ExactScalar& operator+=(const ExactScalar& o) {
        require_same(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        require_same(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) {
        require_same(o);
        *this = *this * o;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }

    ExactScalar operator-() const {
        ExactScalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        a.require_same(b);
        const auto& f = detail::field(a.modulus_);
        std::size_t d = f.degree;
        if (d == 1) {
            ExactScalar r = zero(a.modulus_);
            r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
            return r;
        }
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        ExactScalar r = zero(a.modulus_);
        for (std::size_t j = 0; j < d; ++j) r.coeffs_[j] = std::move(conv[j]);
        for (std::size_t k = d; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& red = f.overflow[k - d];
            for (std::size_t j = 0; j < d; ++j)
                if (red[j] != 0) r.coeffs_[j] += conv[k] * red[j];
        }
        return r;
    }

    ExactScalar inverse() const {
        if (is_zero()) throw input_error("cyclotomic: division by zero");
        const auto& f = detail::field(modulus_);
        if (f.degree == 1) {
            ExactScalar r = zero(modulus_);
            r.coeffs_[0] = 1 / coeffs_[0];
            return r;
        }
        // extended Euclid in Q[x] against Phi_N (irreducible over Q)
        std::vector<Rational> r0(f.phi.size()), r1 = coeffs_;
        for (std::size_t j = 0; j < f.phi.size(); ++j) r0[j] = Rational(f.phi[j]);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        auto deg = [](const std::vector<Rational>& p) -> long {
            for (std::size_t j = p.size(); j-- > 0;)
                if (p[j] != 0) return static_cast<long>(j);
            return -1;
        };
        while (deg(r1) > 0) {
            // divide r0 by r1
            std::vector<Rational> rem = r0, q(r0.size(), Rational(0));
            long d1 = deg(r1);
            Rational lead = r1[static_cast<std::size_t>(d1)];
            for (long k = deg(rem); k >= d1; --k) {
                Rational c = rem[static_cast<std::size_t>(k)] / lead;
                if (c == 0) continue;
                q[static_cast<std::size_t>(k - d1)] = c;
                for (long j = 0; j <= d1; ++j)
                    rem[static_cast<std::size_t>(k - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
            }
            // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
            std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t j = 0; j < s0.size(); ++j) s2[j] = s0[j];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        long d1 = deg(r1);
        if (d1 != 0) throw input_error("cyclotomic: inverse failed (non-unit)");
        Rational g = r1[0];
        ExactScalar out = zero(modulus_);
        for (std::size_t j = 0; j < s1.size() && j < f.degree; ++j) out.coeffs_[j] = s1[j] / g;
        return out;
    }

    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

    ExactScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ExactScalar base = *this, acc = one(modulus_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    // Embedding Q(zeta_m) -> Q(zeta_M) for m | M, via zeta_m = zeta_M^(M/m).
    ExactScalar embed_to(unsigned target) const {
        if (target == modulus_) return *this;
        if (target % modulus_ != 0) throw input_error("cyclotomic: embedding requires divisible moduli");
        ExactScalar z = zeta(target).pow(static_cast<long>(target / modulus_));
        ExactScalar acc = zero(target), zp = one(target);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] != 0) {
                ExactScalar term = zp;
                for (auto& c : term.coeffs_) c *= coeffs_[j];
                acc += term;
            }
            if (j + 1 < coeffs_.size()) zp = zp * z;
        }
        return acc;
    }

    static std::pair<ExactScalar, ExactScalar> aligned(const ExactScalar& a, const ExactScalar& b) {
        unsigned l = std::lcm(a.modulus_, b.modulus_);
        return {a.embed_to(l), b.embed_to(l)};
    }

    // "c0 + c1*z + c2*z^2 (mod N)"; exact round-trip with parse().
    std::string to_string() const {
        std::ostringstream os;
        bool any = false;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            if (any) os << " + ";
            os << coeffs_[j].get_str();
            if (j == 1) os << "*z";
            else if (j > 1) os << "*z^" << j;
            any = true;
        }
        if (!any) os << "0";
        os << " (mod " << modulus_ << ")";
        return os.str();
    }

    static ExactScalar parse(const std::string& text) {
        auto pos = text.rfind(" (mod ");
        if (pos == std::string::npos || text.back() != ')')
            throw input_error("scalar parse: missing (mod N) suffix in '" + text + "'");
        unsigned modulus = 0;
        try {
            modulus = static_cast<unsigned>(std::stoul(text.substr(pos + 6, text.size() - pos - 7)));
        } catch (const std::exception&) {
            throw input_error("scalar parse: bad modulus in '" + text + "'");
        }
        const auto& f = detail::field(modulus);
        std::vector<Rational> coeffs(f.degree, Rational(0));
        std::string body = text.substr(0, pos);
        std::size_t at = 0;
        while (at < body.size()) {
            std::size_t end = body.find(" + ", at);
            std::string term = body.substr(at, end == std::string::npos ? std::string::npos : end - at);
            at = end == std::string::npos ? body.size() : end + 3;
            if (term.empty()) throw input_error("scalar parse: empty term in '" + text + "'");
            std::size_t star = term.find("*z");
            std::string coeff_str = star == std::string::npos ? term : term.substr(0, star);
            std::size_t power = 0;
            if (star != std::string::npos) {
                std::string rest = term.substr(star + 2);
                if (rest.empty()) power = 1;
                else if (rest[0] == '^') power = std::stoul(rest.substr(1));
                else throw input_error("scalar parse: bad power in '" + text + "'");
            }
            if (power >= f.degree)
                throw input_error("scalar parse: power out of range in '" + text + "'");
            Rational c;
            try {
                c = Rational(coeff_str);
                c.canonicalize();
            } catch (const std::exception&) {
                throw input_error("scalar parse: bad rational '" + coeff_str + "'");
            }
            coeffs[power] += c;
        }
        return from_coeffs(std::move(coeffs), modulus);
    }

private:
    void require_same(const ExactScalar& o) const {
        if (modulus_ != o.modulus_)
            throw input_error("cyclotomic: mixed moduli " + std::to_string(modulus_) + " vs " +
                              std::to_string(o.modulus_) + " (embed explicitly)");
    }
    void canonicalize() {
        for (auto& c : coeffs_) c.canonicalize();
    }

    unsigned modulus_;
    std::vector<Rational> coeffs_;
};

inline unsigned lcm_modulus(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace nichols
