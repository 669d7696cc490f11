#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_n): rational coefficient
// vectors reduced modulo the n-th cyclotomic polynomial, plus the embedding
// of abstract unit scalars as concrete roots of unity.

#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quasi/unit_scalar.hpp"

namespace quasi {

using Rational = mpq_class;

inline constexpr long long kMaxRootOrder = 100000;

namespace detail {

// Exact division of integer polynomials by a monic divisor; remainder must vanish.
inline std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num,
                                            const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = rem[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const mpz_class& c : rem)
        if (c != 0) throw std::logic_error("poly_divexact: inexact division");
    return quot;
}

inline const std::vector<mpz_class>& cyclotomic_poly_impl(
    long long n, std::map<long long, std::vector<mpz_class>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, mpz_class(0));
    p.front() = -1;
    p.back() = 1;
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(p, cyclotomic_poly_impl(d, cache));
    return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

/** Coefficients of the n-th cyclotomic polynomial, ascending degree, monic. */
inline const std::vector<mpz_class>& cyclotomic_polynomial(long long n) {
    if (n < 1 || n > kMaxRootOrder)
        throw std::invalid_argument("cyclotomic_polynomial: order out of range");
    static std::mutex mu;
    static std::map<long long, std::vector<mpz_class>> cache;
    std::lock_guard<std::mutex> lock(mu);
    return detail::cyclotomic_poly_impl(n, cache);
}

/** An element of Q(zeta_n), stored reduced modulo the n-th cyclotomic polynomial. */
class Cyclotomic {
public:
    static Cyclotomic zero(long long n) { return Cyclotomic(n, {}); }

    static Cyclotomic one(long long n) { return from_rational(n, 1); }

    static Cyclotomic from_rational(long long n, const Rational& r) {
        return Cyclotomic(n, {r});
    }

    /** zeta_n^k, any integer k. */
    static Cyclotomic root_power(long long n, long long k) {
        Cyclotomic out = zero(n);
        long long e = ((k % n) + n) % n;
        std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
        raw.back() = 1;
        out.coeffs_ = std::move(raw);
        out.reduce();
        return out;
    }

    Cyclotomic(long long n, std::vector<Rational> coeffs)
        : n_(n), coeffs_(std::move(coeffs)) {
        if (n < 1 || n > kMaxRootOrder)
            throw std::invalid_argument("Cyclotomic: root order out of range");
        degree_ = cyclotomic_polynomial(n).size() - 1;
        // GMP rational arithmetic assumes canonical operands.
        for (Rational& c : coeffs_) c.canonicalize();
        reduce();
    }

    long long root_order() const { return n_; }

    /** Reduced coefficients, length phi(n), ascending powers of zeta_n. */
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (coeffs_.empty() || coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same_field(o);
        for (std::size_t i = 0; i < degree_; ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same_field(o);
        for (std::size_t i = 0; i < degree_; ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        check_same_field(o);
        std::vector<Rational> prod(2 * degree_ > 0 ? 2 * degree_ - 1 : 1, Rational(0));
        for (std::size_t i = 0; i < degree_; ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < degree_; ++j) {
                if (o.coeffs_[j] == 0) continue;
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        coeffs_ = std::move(prod);
        reduce();
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (Rational& c : out.coeffs_) c = -c;
        return out;
    }

    Cyclotomic pow(unsigned long long k) const {
        Cyclotomic acc = one(n_);
        Cyclotomic base = *this;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /** True when the value has finite multiplicative order (a root of unity). */
    bool is_root_of_unity() const {
        // every root of unity in Q(zeta_n) has order dividing lcm(2, n)
        return pow(torsion_bound()).is_one();
    }

    /** Inverse of a root of unity; other elements are rejected. */
    Cyclotomic unit_inverse() const {
        if (!is_root_of_unity())
            throw std::domain_error("Cyclotomic: unit_inverse requires a root of unity");
        return pow(torsion_bound() - 1);
    }

    /** Numeric value with zeta_n mapped to exp(2*pi*i*root_choice/n). */
    std::complex<double> to_complex(long long root_choice = 1) const {
        long long r = ((root_choice % n_) + n_) % n_;
        if (std::gcd(r, n_) != 1)
            throw std::invalid_argument("Cyclotomic: root_choice must be coprime to the order");
        const double tau = 6.283185307179586476925286766559;
        std::complex<double> z = std::polar(1.0, tau * static_cast<double>(r) /
                                                     static_cast<double>(n_));
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * z + std::complex<double>(coeffs_[i].get_d(), 0.0);
        return acc;
    }

    bool operator==(const Cyclotomic& o) const {
        return n_ == o.n_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            Rational c = coeffs_[i];
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            Rational a = abs(c);
            std::string term;
            if (i == 0) {
                term = a.get_str();
            } else {
                if (a != 1) term = a.get_str() + "*";
                term += "z" + std::to_string(n_);
                if (i > 1) term += "^" + std::to_string(i);
            }
            s += term;
        }
        return s;
    }

private:
    void check_same_field(const Cyclotomic& o) const {
        if (n_ != o.n_)
            throw std::domain_error("Cyclotomic: operands lie in different cyclotomic fields");
    }

    unsigned long long torsion_bound() const { return static_cast<unsigned long long>(std::lcm(n_, 2ll)); }

    // Subtract multiples of the monic cyclotomic polynomial until deg < phi(n).
    void reduce() {
        const std::vector<mpz_class>& phi = cyclotomic_polynomial(n_);
        for (std::size_t i = coeffs_.size(); i-- > degree_;) {
            Rational c = coeffs_[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi.size(); ++j)
                coeffs_[i - degree_ + j] -= c * Rational(phi[j]);
        }
        coeffs_.resize(degree_, Rational(0));
    }

    long long n_;
    std::size_t degree_ = 0;
    std::vector<Rational> coeffs_;
};

/**
 * Evaluate a unit scalar in Q(zeta_n).  Free generators take their value from
 * the assignment; torsion generators default to the canonical root
 * zeta_d -> zeta_n^(n/d) when unassigned and d divides n.
 */
inline Cyclotomic embed_unit(const UnitScalar& u, long long n,
                             const std::map<std::string, Cyclotomic>& assignment = {}) {
    Cyclotomic out = Cyclotomic::one(n);
    for (const UnitFactor& f : u.support()) {
        auto it = assignment.find(f.name);
        Cyclotomic value = Cyclotomic::zero(n);
        if (it != assignment.end()) {
            value = it->second;
            if (value.root_order() != n)
                throw std::invalid_argument("embed_unit: assignment for '" + f.name +
                                            "' lies in the wrong cyclotomic field");
            if (f.order > 0 && !value.pow(static_cast<unsigned long long>(f.order)).is_one())
                throw std::domain_error("embed_unit: assignment for '" + f.name +
                                        "' is not a root of unity of order dividing " +
                                        std::to_string(f.order));
        } else if (f.order > 0 && n % f.order == 0) {
            value = Cyclotomic::root_power(n, n / f.order);
        } else {
            throw std::invalid_argument("embed_unit: no assignment for generator '" + f.name +
                                        "'");
        }
        if (f.exponent >= 0) {
            out *= value.pow(static_cast<unsigned long long>(f.exponent));
        } else {
            out *= value.unit_inverse().pow(static_cast<unsigned long long>(-f.exponent));
        }
    }
    return out;
}

}  // namespace quasi
