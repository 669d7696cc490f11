#pragma once
// Exact multiplicative scalars: monomials in named unit generators, some of
// finite order (torsion) and some free.  All coefficient arithmetic in the
// kernel happens in this group before any numeric embedding.

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasi {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("UnitScalar: exponent overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("UnitScalar: exponent overflow");
    return r;
}

/** A named unit generator; order 0 means free (infinite order). */
struct Generator {
    std::string name;
    long long order = 0;
};

/** An immutable, shared list of generators fixing one scalar coordinate system. */
class GeneratorSpec {
public:
    static std::shared_ptr<const GeneratorSpec> make(std::vector<Generator> gens) {
        return std::shared_ptr<const GeneratorSpec>(new GeneratorSpec(std::move(gens)));
    }

    /** The single torsion generator zeta_n of order n. */
    static std::shared_ptr<const GeneratorSpec> roots_of_unity(long long n) {
        if (n < 1) throw std::invalid_argument("GeneratorSpec: root order must be positive");
        return make({Generator{"zeta_" + std::to_string(n), n}});
    }

    std::size_t count() const { return gens_.size(); }
    const Generator& at(std::size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& all() const { return gens_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return std::nullopt;
    }

    bool same_content(const GeneratorSpec& o) const {
        if (gens_.size() != o.gens_.size()) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name != o.gens_[i].name || gens_[i].order != o.gens_[i].order)
                return false;
        return true;
    }

private:
    explicit GeneratorSpec(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (const Generator& g : gens_) {
            if (g.name.empty()) throw std::invalid_argument("GeneratorSpec: empty generator name");
            if (g.order < 0) throw std::invalid_argument("GeneratorSpec: negative generator order");
            for (char c : g.name)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw std::invalid_argument("GeneratorSpec: generator name must be alphanumeric");
            if (std::isdigit(static_cast<unsigned char>(g.name.front())))
                throw std::invalid_argument("GeneratorSpec: generator name must not start with a digit");
        }
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (std::size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[i].name == gens_[j].name)
                    throw std::invalid_argument("GeneratorSpec: duplicate generator name");
    }

    std::vector<Generator> gens_;
};

using GeneratorSpecPtr = std::shared_ptr<const GeneratorSpec>;

/** One entry of a scalar's support: a generator with a nonzero exponent. */
struct UnitFactor {
    std::string name;
    long long order;
    long long exponent;
};

/** A monomial in the generators of one GeneratorSpec; torsion exponents stay reduced. */
class UnitScalar {
public:
    explicit UnitScalar(GeneratorSpecPtr spec)
        : spec_(require(std::move(spec))), exps_(spec_->count(), 0) {}

    UnitScalar(GeneratorSpecPtr spec, std::vector<long long> exponents)
        : spec_(require(std::move(spec))), exps_(std::move(exponents)) {
        if (exps_.size() != spec_->count())
            throw std::invalid_argument("UnitScalar: exponent count does not match generators");
        normalize();
    }

    static UnitScalar one(GeneratorSpecPtr spec) { return UnitScalar(std::move(spec)); }

    /** zeta_n^k as a scalar over the single-generator spec roots_of_unity(n). */
    static UnitScalar root_of_unity(long long n, long long k) {
        return UnitScalar(GeneratorSpec::roots_of_unity(n), {k});
    }

    static UnitScalar generator_power(GeneratorSpecPtr spec, const std::string& name,
                                      long long k) {
        auto s = require(std::move(spec));
        auto idx = s->index_of(name);
        if (!idx) throw std::invalid_argument("UnitScalar: unknown generator '" + name + "'");
        std::vector<long long> e(s->count(), 0);
        e[*idx] = k;
        return UnitScalar(std::move(s), std::move(e));
    }

    const GeneratorSpecPtr& spec() const { return spec_; }
    const std::vector<long long>& exponents() const { return exps_; }

    bool is_one() const {
        for (long long e : exps_)
            if (e != 0) return false;
        return true;
    }

    /** The generators appearing with nonzero exponent, in spec order. */
    std::vector<UnitFactor> support() const {
        std::vector<UnitFactor> out;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0)
                out.push_back({spec_->at(i).name, spec_->at(i).order, exps_[i]});
        return out;
    }

    UnitScalar& operator*=(const UnitScalar& o) {
        check_same_spec(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] = checked_add(exps_[i], o.exps_[i]);
        normalize();
        return *this;
    }

    friend UnitScalar operator*(UnitScalar a, const UnitScalar& b) { return a *= b; }

    UnitScalar inverse() const {
        UnitScalar out(*this);
        for (long long& e : out.exps_) e = checked_mul(e, -1);
        out.normalize();
        return out;
    }

    friend UnitScalar operator/(const UnitScalar& a, const UnitScalar& b) {
        return a * b.inverse();
    }

    UnitScalar pow(long long k) const {
        UnitScalar out(*this);
        for (long long& e : out.exps_) e = checked_mul(e, k);
        out.normalize();
        return out;
    }

    // Equality compares supports, so scalars over different generator lists
    // agree exactly when they name the same product of generator powers.
    bool operator==(const UnitScalar& o) const {
        auto a = support();
        auto b = o.support();
        if (a.size() != b.size()) return false;
        auto by_name = [](const UnitFactor& l, const UnitFactor& r) { return l.name < r.name; };
        std::sort(a.begin(), a.end(), by_name);
        std::sort(b.begin(), b.end(), by_name);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].name != b[i].name || a[i].order != b[i].order ||
                a[i].exponent != b[i].exponent)
                return false;
        return true;
    }
    bool operator!=(const UnitScalar& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (const UnitFactor& f : support()) {
            if (!s.empty()) s += "*";
            if (f.name == "zeta_2" && f.exponent == 1) {
                s += "-1";
            } else {
                s += f.name;
                if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    static GeneratorSpecPtr require(GeneratorSpecPtr spec) {
        if (!spec) throw std::invalid_argument("UnitScalar: null generator spec");
        return spec;
    }

    void check_same_spec(const UnitScalar& o) const {
        if (spec_ == o.spec_) return;
        if (!spec_->same_content(*o.spec_))
            throw std::domain_error("UnitScalar: operands use different generator systems");
    }

    void normalize() {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            long long d = spec_->at(i).order;
            if (d > 0) exps_[i] = ((exps_[i] % d) + d) % d;
        }
    }

    GeneratorSpecPtr spec_;
    std::vector<long long> exps_;
};

/**
 * The exponent k with u = zeta_n^k when every generator in u's support is
 * torsion of order dividing n; empty otherwise.
 */
inline std::optional<long long> root_exponent(const UnitScalar& u, long long n) {
    if (n < 1) throw std::invalid_argument("root_exponent: root order must be positive");
    long long k = 0;
    for (const UnitFactor& f : u.support()) {
        if (f.order <= 0 || n % f.order != 0) return std::nullopt;
        k = checked_add(k, checked_mul(f.exponent, n / f.order));
    }
    return ((k % n) + n) % n;
}

}  // namespace quasi
