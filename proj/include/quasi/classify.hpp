#pragma once
// Brute-force classification of cocycles with values in the N-th roots of
// unity: exhaustive enumeration, coboundary search with certificates, and
// the partition into cohomology classes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "quasi/cocycle.hpp"
#include "quasi/group.hpp"
#include "quasi/unit_scalar.hpp"

namespace quasi {

inline constexpr unsigned long long kDefaultSearchLimit = 10000000ULL;

/** Raised when an exhaustive search would exceed its candidate limit. */
class SearchLimitExceeded : public std::runtime_error {
public:
    SearchLimitExceeded(const std::string& what, mpz_class required)
        : std::runtime_error(what + " (requires a limit of at least " + required.get_str() + ")"),
          required_(std::move(required)) {}

    /** The limit that would let the search run. */
    const mpz_class& required() const { return required_; }

private:
    mpz_class required_;
};

/** Size of an exhaustive search: which slots are free and how many candidates exist. */
struct SearchSpace {
    GroupSpec group;
    long long value_order;
    std::size_t free_slots;
    mpz_class cardinality;
};

namespace detail {

inline mpz_class pow_mpz(long long base, std::size_t exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

inline SearchSpace make_search_space(const GroupSpec& g, long long n, std::size_t slot_power,
                                     unsigned long long limit, const char* what) {
    check_table_group(g);
    if (n < 1) throw std::invalid_argument("search: root order must be positive");
    std::size_t free_slots = 1;
    for (std::size_t i = 0; i < slot_power; ++i) free_slots *= g.size() - 1;
    SearchSpace space{g, n, free_slots, pow_mpz(n, free_slots)};
    if (space.cardinality > mpz_class(static_cast<unsigned long>(limit)))
        throw SearchLimitExceeded(std::string(what) + " over " + g.str() + " has " +
                                      space.cardinality.get_str() +
                                      " candidates, more than the limit of " +
                                      std::to_string(limit),
                                  space.cardinality);
    return space;
}

// Index bookkeeping shared by the exhaustive searches: all tables become
// integer exponent vectors mod n, indexed by flattened argument tuples.
struct ExponentContext {
    GroupSpec group;
    std::size_t m;                          // group size
    std::vector<std::vector<std::size_t>> addidx;
    std::vector<long long> slot_of;         // triple index -> free slot id, or -1
    std::vector<long long> pair_slot_of;    // pair index -> free slot id, or -1
    std::size_t triple_slots = 0;
    std::size_t pair_slots = 0;

    explicit ExponentContext(const GroupSpec& g) : group(g), m(g.size()) {
        std::vector<GroupElem> elems = elements(g);
        addidx.assign(m, std::vector<std::size_t>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                addidx[i][j] = elem_index(g, add(g, elems[i], elems[j]));
        slot_of.assign(m * m * m, -1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    if (i && j && k)  // index 0 is the identity element
                        slot_of[(i * m + j) * m + k] =
                            static_cast<long long>(triple_slots++);
        pair_slot_of.assign(m * m, -1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i && j) pair_slot_of[i * m + j] = static_cast<long long>(pair_slots++);
    }

    long long triple_slot(std::size_t i, std::size_t j, std::size_t k) const {
        return slot_of[(i * m + j) * m + k];
    }
};

// One instance of the cocycle equation as slot references: the first three
// entries enter positively, the last two negatively; -1 means a fixed slot.
using CocycleRelation = std::array<long long, 5>;

inline std::vector<CocycleRelation> cocycle_relations(const ExponentContext& ctx) {
    std::vector<CocycleRelation> rels;
    const std::size_t m = ctx.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                for (std::size_t w = 0; w < m; ++w) {
                    CocycleRelation r{ctx.triple_slot(y, z, w),
                                      ctx.triple_slot(x, ctx.addidx[y][z], w),
                                      ctx.triple_slot(x, y, z),
                                      ctx.triple_slot(x, y, ctx.addidx[z][w]),
                                      ctx.triple_slot(ctx.addidx[x][y], z, w)};
                    if (r[0] < 0 && r[1] < 0 && r[2] < 0 && r[3] < 0 && r[4] < 0) continue;
                    std::sort(r.begin(), r.begin() + 3);
                    std::sort(r.begin() + 3, r.end());
                    rels.push_back(r);
                }
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return rels;
}

inline bool advance_odometer(std::vector<int>& digits, long long n) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < n) return true;
        digits[i] = 0;
    }
    return false;
}

// Exponents of the coboundary of a cochain digit vector, per triple (x,y,z):
// e(x,y) + e(x+y,z) - e(y,z) - e(x,y+z).
struct CoboundaryTerm {
    std::array<long long, 4> slots;  // first two positive, last two negative
    long long target;                // required exponent mod n
};

inline std::vector<CoboundaryTerm> coboundary_terms(const ExponentContext& ctx,
                                                    const std::vector<long long>& target) {
    std::vector<CoboundaryTerm> terms;
    const std::size_t m = ctx.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) {
                CoboundaryTerm t{{ctx.pair_slot_of[x * m + y],
                                  ctx.pair_slot_of[ctx.addidx[x][y] * m + z],
                                  ctx.pair_slot_of[y * m + z],
                                  ctx.pair_slot_of[x * m + ctx.addidx[y][z]]},
                                 target[(x * m + y) * m + z]};
                bool fixed = t.slots[0] < 0 && t.slots[1] < 0 && t.slots[2] < 0 && t.slots[3] < 0;
                if (fixed) {
                    if (t.target != 0)
                        throw std::invalid_argument(
                            "coboundary search: table is not normalized at identity slots");
                    continue;
                }
                terms.push_back(t);
            }
    return terms;
}

// Core search: digits of a cochain whose coboundary matches the target
// exponents, scanning candidates in ascending odometer order.
inline std::optional<std::vector<int>> coboundary_digits(const ExponentContext& ctx, long long n,
                                                         const std::vector<long long>& target,
                                                         mpz_class& examined) {
    std::vector<CoboundaryTerm> terms = coboundary_terms(ctx, target);
    std::vector<int> digits(ctx.pair_slots, 0);
    examined = 0;
    while (true) {
        ++examined;
        bool ok = true;
        for (const CoboundaryTerm& t : terms) {
            long long acc = -t.target;
            if (t.slots[0] >= 0) acc += digits[static_cast<std::size_t>(t.slots[0])];
            if (t.slots[1] >= 0) acc += digits[static_cast<std::size_t>(t.slots[1])];
            if (t.slots[2] >= 0) acc -= digits[static_cast<std::size_t>(t.slots[2])];
            if (t.slots[3] >= 0) acc -= digits[static_cast<std::size_t>(t.slots[3])];
            if (acc % n != 0) {
                ok = false;
                break;
            }
        }
        if (ok) return digits;
        if (!advance_odometer(digits, n)) return std::nullopt;
    }
}

/** Exponent of each table entry in mu_n, indexed by flattened triples. */
inline std::vector<long long> table_exponents(const CocycleTable& t, long long n) {
    const GroupSpec& g = t.group();
    std::vector<GroupElem> elems = elements(g);
    std::vector<long long> out;
    out.reserve(g.size() * g.size() * g.size());
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            for (const GroupElem& z : elems) {
                std::optional<long long> e = root_exponent(t.at(x, y, z), n);
                if (!e)
                    throw std::invalid_argument(
                        "search: table values must lie in the chosen roots of unity");
                out.push_back(*e);
            }
    return out;
}

}  // namespace detail

inline SearchSpace cocycle_search_space(const GroupSpec& g, long long n,
                                        unsigned long long limit = kDefaultSearchLimit) {
    return detail::make_search_space(g, n, 3, limit, "cocycle enumeration");
}

inline SearchSpace cochain_search_space(const GroupSpec& g, long long n,
                                        unsigned long long limit = kDefaultSearchLimit) {
    return detail::make_search_space(g, n, 2, limit, "cochain search");
}

/**
 * All cocycles on g with values in the n-th roots of unity, in ascending
 * lexicographic order of their exponent tables (so the trivial cocycle is
 * first).  Throws SearchLimitExceeded when n^((|G|-1)^3) exceeds the limit.
 */
inline std::vector<CocycleTable> enumerate_cocycles(const GroupSpec& g, long long n,
                                                    unsigned long long limit = kDefaultSearchLimit) {
    cocycle_search_space(g, n, limit);
    detail::ExponentContext ctx(g);
    std::vector<detail::CocycleRelation> rels = detail::cocycle_relations(ctx);
    GeneratorSpecPtr gens = GeneratorSpec::roots_of_unity(n);
    std::vector<GroupElem> elems = elements(g);

    std::vector<CocycleTable> out;
    std::vector<int> digits(ctx.triple_slots, 0);
    auto value_at = [&](long long slot) { return slot < 0 ? 0 : digits[static_cast<std::size_t>(slot)]; };
    do {
        bool ok = true;
        for (const detail::CocycleRelation& r : rels) {
            long long acc = value_at(r[0]) + value_at(r[1]) + value_at(r[2]) - value_at(r[3]) -
                            value_at(r[4]);
            if (acc % n != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        CocycleTable t(g, gens);
        for (std::size_t i = 0; i < ctx.m; ++i)
            for (std::size_t j = 0; j < ctx.m; ++j)
                for (std::size_t k = 0; k < ctx.m; ++k) {
                    long long slot = ctx.triple_slot(i, j, k);
                    if (slot >= 0 && digits[static_cast<std::size_t>(slot)] != 0)
                        t.set(elems[i], elems[j], elems[k],
                              UnitScalar::root_of_unity(n, digits[static_cast<std::size_t>(slot)]));
                }
        // the fast integer filter and the reference checker must agree
        if (!check_cocycle(t).pass())
            throw std::logic_error("enumerate_cocycles: filter accepted a non-cocycle");
        out.push_back(std::move(t));
    } while (detail::advance_odometer(digits, n));
    return out;
}

/** Certificate of an exhaustive coboundary search. */
struct CoboundarySearchResult {
    std::optional<CochainTable> witness;
    mpz_class examined;      // candidates inspected before stopping
    mpz_class search_space;  // total number of normalized cochains

    bool found() const { return witness.has_value(); }
    /** True when the search proved no witness exists. */
    bool exhausted() const { return !witness && examined == search_space; }
};

/**
 * Search all normalized cochains with values in the n-th roots of unity for
 * one whose coboundary equals the table.  Either finds a witness or proves
 * there is none by exhausting the search space.
 */
inline CoboundarySearchResult coboundary_search(const CocycleTable& t, long long n,
                                                unsigned long long limit = kDefaultSearchLimit) {
    SearchSpace space = cochain_search_space(t.group(), n, limit);
    detail::ExponentContext ctx(t.group());
    std::vector<long long> target = detail::table_exponents(t, n);
    mpz_class examined;
    std::optional<std::vector<int>> digits = detail::coboundary_digits(ctx, n, target, examined);
    if (!digits) return {std::nullopt, space.cardinality, space.cardinality};

    std::vector<GroupElem> elems = elements(t.group());
    CochainTable f(t.group(), GeneratorSpec::roots_of_unity(n));
    for (std::size_t i = 0; i < ctx.m; ++i)
        for (std::size_t j = 0; j < ctx.m; ++j) {
            long long slot = ctx.pair_slot_of[i * ctx.m + j];
            if (slot >= 0 && (*digits)[static_cast<std::size_t>(slot)] != 0)
                f.set(elems[i], elems[j],
                      UnitScalar::root_of_unity(n, (*digits)[static_cast<std::size_t>(slot)]));
        }
    if (coboundary(f) != t)
        throw std::logic_error("coboundary_search: witness fails the reference coboundary");
    return {std::move(f), examined, space.cardinality};
}

/** A cohomology class among an input list of tables, by index. */
struct CohomologyClass {
    std::size_t representative;        // index of the first member found
    std::vector<std::size_t> members;  // ascending indices into the input
    std::size_t size() const { return members.size(); }
};

/**
 * Partition cocycles into classes where two tables are equivalent when their
 * ratio is a coboundary of a mu_n-valued cochain.  Input order is preserved:
 * classes appear by first member, members ascend.
 */
inline std::vector<CohomologyClass> cohomology_classes(const std::vector<CocycleTable>& tables,
                                                       long long n,
                                                       unsigned long long limit = kDefaultSearchLimit) {
    std::vector<CohomologyClass> classes;
    if (tables.empty()) return classes;
    const GroupSpec& g = tables.front().group();
    for (const CocycleTable& t : tables)
        if (t.group() != g)
            throw std::invalid_argument("cohomology_classes: tables live on different groups");
    cochain_search_space(g, n, limit);

    detail::ExponentContext ctx(g);
    std::vector<std::vector<long long>> exps;
    exps.reserve(tables.size());
    for (const CocycleTable& t : tables) exps.push_back(detail::table_exponents(t, n));

    for (std::size_t i = 0; i < tables.size(); ++i) {
        bool placed = false;
        for (CohomologyClass& c : classes) {
            std::vector<long long> quotient(exps[i].size());
            for (std::size_t k = 0; k < quotient.size(); ++k) {
                long long d = (exps[i][k] - exps[c.representative][k]) % n;
                quotient[k] = d < 0 ? d + n : d;
            }
            mpz_class examined;
            if (detail::coboundary_digits(ctx, n, quotient, examined)) {
                c.members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i, {i}});
    }
    return classes;
}

/** Outcome of checking the two-parameter-plus-omega description of Z_3 cocycles. */
struct Z3ParametrizationReport {
    std::size_t enumerated = 0;    // cocycles found by exhaustive search
    std::size_t parametrized = 0;  // distinct tables produced by the parameters
    bool pass = false;             // the two sets coincide
};

/**
 * Check, for values in the n-th roots of unity, that the exhaustive cocycle
 * enumeration on Z_3 produces exactly the tables generated by the
 * (alpha, beta, omega) parametrization with omega^3 = 1.
 */
inline Z3ParametrizationReport verify_z3_parametrization(long long n,
                                                         unsigned long long limit = kDefaultSearchLimit) {
    GroupSpec g({3});
    std::vector<CocycleTable> found = enumerate_cocycles(g, n, limit);
    std::vector<std::vector<long long>> found_exps;
    for (const CocycleTable& t : found) found_exps.push_back(detail::table_exponents(t, n));
    std::sort(found_exps.begin(), found_exps.end());

    long long cube = std::gcd(static_cast<long long>(3), n);
    std::vector<std::vector<long long>> made_exps;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long tw = 0; tw < cube; ++tw) {
                CocycleTable t = z3_cocycle(UnitScalar::root_of_unity(n, a),
                                            UnitScalar::root_of_unity(n, b),
                                            UnitScalar::root_of_unity(n, tw * (n / cube)));
                made_exps.push_back(detail::table_exponents(t, n));
            }
    std::sort(made_exps.begin(), made_exps.end());
    made_exps.erase(std::unique(made_exps.begin(), made_exps.end()), made_exps.end());

    Z3ParametrizationReport report;
    report.enumerated = found_exps.size();
    report.parametrized = made_exps.size();
    report.pass = found_exps == made_exps;
    return report;
}

}  // namespace quasi
