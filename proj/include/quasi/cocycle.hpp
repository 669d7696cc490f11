#pragma once
// Normalized 3-cocycle tables on finite abelian groups: the cocycle equation
// checker, coboundaries of 2-cochains, the standard families, and a suite of
// structural identities every genuine cocycle must satisfy.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasi/group.hpp"
#include "quasi/unit_scalar.hpp"

namespace quasi {

// Dense tables keep one scalar per argument tuple; this caps the group size.
inline constexpr std::size_t kMaxTableGroupSize = 64;

namespace detail {

inline GeneratorSpecPtr require_gens(GeneratorSpecPtr gens) {
    if (!gens) throw std::invalid_argument("table: null generator spec");
    return gens;
}

inline void check_table_group(const GroupSpec& g) {
    if (g.size() > kMaxTableGroupSize)
        throw std::invalid_argument("table: group size exceeds dense-table guard of " +
                                    std::to_string(kMaxTableGroupSize));
}

inline void check_value_spec(const GeneratorSpecPtr& gens, const UnitScalar& v) {
    if (v.spec() != gens && !v.spec()->same_content(*gens))
        throw std::invalid_argument("table: value uses a different generator system");
}

}  // namespace detail

/** A function G x G x G -> units, stored densely in lexicographic order. */
class CocycleTable {
public:
    CocycleTable(GroupSpec group, GeneratorSpecPtr gens)
        : group_(std::move(group)),
          gens_(detail::require_gens(std::move(gens))),
          entries_(group_.size() * group_.size() * group_.size(), UnitScalar(gens_)) {
        detail::check_table_group(group_);
    }

    const GroupSpec& group() const { return group_; }
    const GeneratorSpecPtr& generators() const { return gens_; }

    const UnitScalar& at(const GroupElem& x, const GroupElem& y, const GroupElem& z) const {
        return entries_[flat(x, y, z)];
    }

    void set(const GroupElem& x, const GroupElem& y, const GroupElem& z, const UnitScalar& v) {
        detail::check_value_spec(gens_, v);
        entries_[flat(x, y, z)] = v;
    }

    // Tables over different generator systems compare equal when all entries
    // name the same products of generator powers.
    bool operator==(const CocycleTable& o) const {
        if (group_ != o.group_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != o.entries_[i]) return false;
        return true;
    }
    bool operator!=(const CocycleTable& o) const { return !(*this == o); }

private:
    std::size_t flat(const GroupElem& x, const GroupElem& y, const GroupElem& z) const {
        std::size_t n = group_.size();
        return (elem_index(group_, x) * n + elem_index(group_, y)) * n + elem_index(group_, z);
    }

    GroupSpec group_;
    GeneratorSpecPtr gens_;
    std::vector<UnitScalar> entries_;
};

namespace detail {

template <typename Tag>
class PairTable {
public:
    PairTable(GroupSpec group, GeneratorSpecPtr gens)
        : group_(std::move(group)),
          gens_(require_gens(std::move(gens))),
          entries_(group_.size() * group_.size(), UnitScalar(gens_)) {
        check_table_group(group_);
    }

    const GroupSpec& group() const { return group_; }
    const GeneratorSpecPtr& generators() const { return gens_; }

    const UnitScalar& at(const GroupElem& x, const GroupElem& y) const {
        return entries_[flat(x, y)];
    }

    // Normalization is structural: slots with an identity argument stay 1.
    void set(const GroupElem& x, const GroupElem& y, const UnitScalar& v) {
        check_value_spec(gens_, v);
        if ((is_zero(x) || is_zero(y)) && !v.is_one())
            throw std::domain_error("table: identity slots of a normalized table are fixed to 1");
        entries_[flat(x, y)] = v;
    }

    bool operator==(const PairTable& o) const {
        if (group_ != o.group_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != o.entries_[i]) return false;
        return true;
    }
    bool operator!=(const PairTable& o) const { return !(*this == o); }

private:
    std::size_t flat(const GroupElem& x, const GroupElem& y) const {
        check_elem(group_, x);
        check_elem(group_, y);
        return elem_index(group_, x) * group_.size() + elem_index(group_, y);
    }

    GroupSpec group_;
    GeneratorSpecPtr gens_;
    std::vector<UnitScalar> entries_;
};

}  // namespace detail

/** A normalized 2-cochain F: G x G -> units with F(0,y) = F(x,0) = 1. */
using CochainTable = detail::PairTable<struct CochainTag>;

/** A quasibicharacter R: G x G -> units with R(0,y) = R(x,0) = 1. */
using BicharacterTable = detail::PairTable<struct BicharacterTag>;

/** The 3-coboundary of a 2-cochain: (dF)(x,y,z) = F(x,y)F(x+y,z) / F(y,z)F(x,y+z). */
inline CocycleTable coboundary(const CochainTable& f) {
    const GroupSpec& g = f.group();
    CocycleTable out(g, f.generators());
    std::vector<GroupElem> elems = elements(g);
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            for (const GroupElem& z : elems) {
                UnitScalar v = f.at(x, y) * f.at(add(g, x, y), z) /
                               (f.at(y, z) * f.at(x, add(g, y, z)));
                out.set(x, y, z, v);
            }
    return out;
}

/** Which argument of an identity slot was the group identity. */
enum class IdentitySlot { left, middle, right };

struct SlotViolation {
    IdentitySlot slot;
    GroupElem x, y;  // the two free arguments of the violated slot
    UnitScalar value;
};

struct EquationViolation {
    GroupElem x, y, z, w;
    UnitScalar lhs, rhs;
};

/** Outcome of the full cocycle check; violation lists cap at `kViolationCap`. */
struct CocycleReport {
    static constexpr std::size_t kViolationCap = 1000;

    std::size_t slot_violation_count = 0;
    std::size_t equation_violation_count = 0;
    std::vector<SlotViolation> slot_violations;
    std::vector<EquationViolation> equation_violations;

    bool pass() const { return slot_violation_count == 0 && equation_violation_count == 0; }

    std::string summary() const {
        if (pass()) return "cocycle conditions hold";
        return std::to_string(slot_violation_count) + " normalization violation(s), " +
               std::to_string(equation_violation_count) + " cocycle equation violation(s)";
    }
};

/**
 * Exhaustively test phi(x,e,y) = 1 (and the derived identity slots) plus the
 * pentagon equation phi(y,z,w) phi(x,y+z,w) phi(x,y,z) = phi(x,y,z+w) phi(x+y,z,w)
 * over all argument tuples.
 */
inline CocycleReport check_cocycle(const CocycleTable& t) {
    const GroupSpec& g = t.group();
    CocycleReport report;
    std::vector<GroupElem> elems = elements(g);
    const GroupElem e = zero(g);

    auto record_slot = [&](IdentitySlot slot, const GroupElem& x, const GroupElem& y,
                           const UnitScalar& v) {
        ++report.slot_violation_count;
        if (report.slot_violations.size() < CocycleReport::kViolationCap)
            report.slot_violations.push_back({slot, x, y, v});
    };

    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems) {
            if (const UnitScalar& v = t.at(e, x, y); !v.is_one())
                record_slot(IdentitySlot::left, x, y, v);
            if (const UnitScalar& v = t.at(x, e, y); !v.is_one())
                record_slot(IdentitySlot::middle, x, y, v);
            if (const UnitScalar& v = t.at(x, y, e); !v.is_one())
                record_slot(IdentitySlot::right, x, y, v);
        }

    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            for (const GroupElem& z : elems)
                for (const GroupElem& w : elems) {
                    UnitScalar lhs = t.at(y, z, w) * t.at(x, add(g, y, z), w) * t.at(x, y, z);
                    UnitScalar rhs = t.at(x, y, add(g, z, w)) * t.at(add(g, x, y), z, w);
                    if (lhs != rhs) {
                        ++report.equation_violation_count;
                        if (report.equation_violations.size() < CocycleReport::kViolationCap)
                            report.equation_violations.push_back({x, y, z, w, lhs, rhs});
                    }
                }
    return report;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

inline CocycleTable trivial_cocycle(const GroupSpec& g,
                                    GeneratorSpecPtr gens = GeneratorSpec::make({})) {
    return CocycleTable(g, std::move(gens));
}

/** phi(x,y,z) = q^(xyz) on Z_n, for q an n-th root of unity. */
inline CocycleTable qxyz_cocycle(int n, const UnitScalar& q) {
    if (n < 1) throw std::invalid_argument("qxyz_cocycle: n must be positive");
    if (!q.pow(n).is_one())
        throw std::invalid_argument("qxyz_cocycle: q must satisfy q^n = 1");
    GroupSpec g({n});
    CocycleTable out(g, q.spec());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                out.set({x}, {y}, {z},
                        q.pow(static_cast<long long>(x) * y * z));
    return out;
}

/** The eight-entry cocycle on Z_3 determined by alpha, beta and a cube root omega. */
inline CocycleTable z3_cocycle(const UnitScalar& alpha, const UnitScalar& beta,
                               const UnitScalar& omega) {
    if (!alpha.spec()->same_content(*beta.spec()) || !alpha.spec()->same_content(*omega.spec()))
        throw std::invalid_argument("z3_cocycle: parameters must share one generator system");
    if (!omega.pow(3).is_one())
        throw std::invalid_argument("z3_cocycle: omega must satisfy omega^3 = 1");
    GroupSpec g({3});
    CocycleTable out(g, alpha.spec());
    out.set({1}, {1}, {1}, alpha);
    out.set({1}, {1}, {2}, beta);
    out.set({1}, {2}, {1}, (omega * alpha).inverse());
    out.set({1}, {2}, {2}, omega / beta);
    out.set({2}, {1}, {1}, alpha / (beta * omega));
    out.set({2}, {1}, {2}, alpha * omega);
    out.set({2}, {2}, {1}, beta / (omega * alpha));
    out.set({2}, {2}, {2}, omega / alpha);
    return out;
}

struct Z3Parameters {
    UnitScalar alpha, beta, omega;
};

/** Read (alpha, beta, omega) back off a table on Z_3. */
inline Z3Parameters z3_parameters(const CocycleTable& t) {
    if (t.group().orders() != std::vector<int>{3})
        throw std::invalid_argument("z3_parameters: table must live on Z_3");
    return {t.at({1}, {1}, {1}), t.at({1}, {1}, {2}),
            t.at({1}, {1}, {1}) * t.at({2}, {2}, {2})};
}

/** A cocycle on Z_3 is a coboundary exactly when its omega parameter is 1. */
inline bool z3_is_coboundary(const CocycleTable& t) { return z3_parameters(t).omega.is_one(); }

/** The cochain F with F(2,1) = alpha, F(2,2) = beta whose coboundary has omega = 1. */
inline CochainTable z3_coboundary_witness(const UnitScalar& alpha, const UnitScalar& beta) {
    if (!alpha.spec()->same_content(*beta.spec()))
        throw std::invalid_argument("z3_coboundary_witness: parameters must share one generator system");
    CochainTable f(GroupSpec({3}), alpha.spec());
    f.set({2}, {1}, alpha);
    f.set({2}, {2}, beta);
    return f;
}

/** The class representative on Z_3: 1 when x = y = 1, omega^z otherwise (x,y,z != 0). */
inline CocycleTable z3_class_representative(const UnitScalar& omega) {
    if (!omega.pow(3).is_one())
        throw std::invalid_argument("z3_class_representative: omega must satisfy omega^3 = 1");
    GroupSpec g({3});
    CocycleTable out(g, omega.spec());
    for (int x = 1; x < 3; ++x)
        for (int y = 1; y < 3; ++y)
            for (int z = 1; z < 3; ++z)
                out.set({x}, {y}, {z},
                        (x == 1 && y == 1) ? UnitScalar::one(omega.spec()) : omega.pow(z));
    return out;
}

/** The symmetric representative on Z_3: omega^(xz - xy - yz) for x,y,z != 0. */
inline CocycleTable z3_symmetric_cocycle(const UnitScalar& omega) {
    if (!omega.pow(3).is_one())
        throw std::invalid_argument("z3_symmetric_cocycle: omega must satisfy omega^3 = 1");
    GroupSpec g({3});
    CocycleTable out(g, omega.spec());
    for (int x = 1; x < 3; ++x)
        for (int y = 1; y < 3; ++y)
            for (int z = 1; z < 3; ++z)
                out.set({x}, {y}, {z}, omega.pow(x * z - x * y - y * z));
    return out;
}

/** Single entry of the closed form (alpha^((-1)^z + x - xz) beta^(x-z))^((-1)^y) * tail. */
inline UnitScalar z3_closed_form_value(const UnitScalar& alpha, const UnitScalar& beta,
                                       const UnitScalar& omega, int x, int y, int z) {
    if (x < 1 || x > 2 || y < 1 || y > 2 || z < 1 || z > 2)
        throw std::invalid_argument("z3_closed_form_value: arguments must be nonzero mod 3");
    long long sy = (y % 2 == 0) ? 1 : -1;
    long long sz = (z % 2 == 0) ? 1 : -1;
    UnitScalar head = alpha.pow((sz + x - static_cast<long long>(x) * z) * sy) *
                      beta.pow((x - z) * sy);
    return (x == 1 && y == 1) ? head : head * omega.pow(z);
}

/** The twisting cochain of the octonion product on (Z_2)^3. */
inline CochainTable octonion_twist() {
    GroupSpec g({2, 2, 2});
    CochainTable f(g, GeneratorSpec::roots_of_unity(2));
    for (const GroupElem& x : elements(g))
        for (const GroupElem& y : elements(g)) {
            if (is_zero(x) || is_zero(y)) continue;
            int s = 0;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i; j < 3; ++j) s += x[i] * y[j];
            s += y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2];
            f.set(x, y, UnitScalar::root_of_unity(2, s));
        }
    return f;
}

/** phi(x,y,z) = (-1)^((x cross y) . z) on (Z_2)^3. */
inline CocycleTable octonion_cocycle() {
    GroupSpec g({2, 2, 2});
    CocycleTable out(g, GeneratorSpec::roots_of_unity(2));
    for (const GroupElem& x : elements(g))
        for (const GroupElem& y : elements(g))
            for (const GroupElem& z : elements(g))
                out.set(x, y, z, UnitScalar::root_of_unity(2, cross_dot(g, x, y, z)));
    return out;
}

/** R(x,y) = 1 when x = 0, y = 0 or x = y; -1 otherwise. */
inline BicharacterTable octonion_bicharacter() {
    GroupSpec g({2, 2, 2});
    BicharacterTable r(g, GeneratorSpec::roots_of_unity(2));
    for (const GroupElem& x : elements(g))
        for (const GroupElem& y : elements(g)) {
            int s = (is_zero(x) || is_zero(y) || x == y) ? 0 : 1;
            r.set(x, y, UnitScalar::root_of_unity(2, s));
        }
    return r;
}

/** phi(x,y,z) = q^(T(x,y,z)) on (Z_n)^m for a trilinear form T mod n. */
inline CocycleTable trilinear_cocycle(const GroupSpec& g, const TrilinearForm& t,
                                      const UnitScalar& q) {
    for (int n : g.orders())
        if (n != t.modulus())
            throw std::invalid_argument("trilinear_cocycle: every factor order must equal the form modulus");
    if (g.arity() != t.arity())
        throw std::invalid_argument("trilinear_cocycle: group arity must match the form");
    if (!q.pow(t.modulus()).is_one())
        throw std::invalid_argument("trilinear_cocycle: q must satisfy q^n = 1");
    CocycleTable out(g, q.spec());
    std::vector<GroupElem> elems = elements(g);
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            for (const GroupElem& z : elems)
                out.set(x, y, z, q.pow(t(x, y, z)));
    return out;
}

// ---------------------------------------------------------------------------
// Identity suite
// ---------------------------------------------------------------------------

struct IdentityCheck {
    std::string name;
    bool applicable = false;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const IdentityCheck& c : checks)
            if (!c.pass()) return false;
        return true;
    }

    const IdentityCheck& check(std::string_view name) const {
        for (const IdentityCheck& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("IdentityReport: no check named '" + std::string(name) + "'");
    }
};

/**
 * Structural identities satisfied by every cocycle: consequences of the
 * cocycle equation at two-torsion elements, at inverses, and on Z_3.  Checks
 * that do not apply to the table's group are marked inapplicable.
 */
inline IdentityReport identity_suite(const CocycleTable& t) {
    const GroupSpec& g = t.group();
    IdentityReport report;
    std::vector<GroupElem> elems = elements(g);

    auto mul2 = [&](const GroupElem& x) { return add(g, x, x); };

    std::vector<GroupElem> two_torsion;
    for (const GroupElem& x : elems)
        if (!is_zero(x) && is_zero(mul2(x))) two_torsion.push_back(x);

    {
        IdentityCheck c{"two_torsion_diagonal_sign", !two_torsion.empty(), {}};
        for (const GroupElem& x : two_torsion) {
            UnitScalar w = t.at(x, x, x);
            if (!(w * w).is_one())
                c.failures.push_back("x=" + elem_str(x) + ": phi(x,x,x)^2 = " + (w * w).str());
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"two_torsion_translation", !two_torsion.empty(), {}};
        for (const GroupElem& x : two_torsion) {
            UnitScalar w = t.at(x, x, x);
            for (const GroupElem& y : elems)
                if (t.at(x, x, y) != w * t.at(x, x, add(g, x, y)))
                    c.failures.push_back("x=" + elem_str(x) + ", y=" + elem_str(y));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"inverse_sandwich", true, {}};
        for (const GroupElem& x : elems) {
            GroupElem m = neg(g, x);
            if (!(t.at(m, x, m) * t.at(x, m, x)).is_one())
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"inverse_cube_ratio", true, {}};
        for (const GroupElem& x : elems) {
            GroupElem m = neg(g, x);
            if (!(t.at(m, x, x) * t.at(x, x, m) * t.at(m, mul2(x), m)).is_one())
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }

    bool z3 = g.orders() == std::vector<int>{3};
    auto z3_elems = z3 ? elems : std::vector<GroupElem>{};
    {
        IdentityCheck c{"z3_sandwich", z3, {}};
        for (const GroupElem& x : z3_elems) {
            GroupElem d = mul2(x);
            if (!(t.at(d, x, d) * t.at(x, d, x)).is_one())
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"z3_edge_ratio", z3, {}};
        for (const GroupElem& x : z3_elems) {
            GroupElem d = mul2(x);
            if (!(t.at(d, x, x) * t.at(x, x, d) * t.at(d, d, d)).is_one())
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"z3_diagonal_cube", z3, {}};
        for (const GroupElem& x : z3_elems) {
            GroupElem d = mul2(x);
            if (!(t.at(x, x, x) * t.at(d, d, d)).pow(3).is_one())
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"z3_exchange", z3, {}};
        for (const GroupElem& x : z3_elems) {
            GroupElem d = mul2(x);
            if (t.at(d, d, x) * t.at(d, x, d) != t.at(x, x, d))
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        IdentityCheck c{"z3_mixed_ratio", z3, {}};
        for (const GroupElem& x : z3_elems) {
            GroupElem d = mul2(x);
            if (t.at(x, x, x) * t.at(x, x, d) * t.at(x, d, d) != t.at(d, x, d))
                c.failures.push_back("x=" + elem_str(x));
        }
        report.checks.push_back(std::move(c));
    }
    {
        // a table on Z_3 with a trivial row at some x != 0 must be trivial outright
        IdentityCheck c{"z3_row_triviality", z3, {}};
        if (z3) {
            bool all_one = true;
            for (const GroupElem& x : elems)
                for (const GroupElem& y : elems)
                    for (const GroupElem& z : elems)
                        if (!t.at(x, y, z).is_one()) all_one = false;
            for (const GroupElem& x : elems) {
                if (is_zero(x)) continue;
                bool row_trivial = true;
                for (const GroupElem& y : elems)
                    for (const GroupElem& z : elems)
                        if (!t.at(x, y, z).is_one()) row_trivial = false;
                if (row_trivial && !all_one)
                    c.failures.push_back("x=" + elem_str(x) +
                                         ": trivial row on a nontrivial table");
            }
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace quasi
