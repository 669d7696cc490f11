#pragma once
// Graded quasialgebras: finite graded bases with monomial products, checked
// against a 3-cocycle (quasiassociativity) and optionally a quasibicharacter
// (quasicommutativity).  Includes the twisted group algebra construction and
// the octonions.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quasi/cocycle.hpp"
#include "quasi/group.hpp"
#include "quasi/unit_scalar.hpp"

namespace quasi {

/** A graded basis vector. */
struct BasisElement {
    std::string label;
    GroupElem degree;
};

/** A nonzero monomial product: a basis index with a unit coefficient. */
struct Term {
    std::size_t index;
    UnitScalar coeff;
};

inline std::string elem_label(const GroupSpec& g, const GroupElem& x) {
    check_elem(g, x);
    bool compact = true;
    for (int n : g.orders())
        if (n > 10) compact = false;
    if (compact) {
        std::string s = "e";
        for (int c : x) s += std::to_string(c);
        return s;
    }
    std::string s = "e(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

/**
 * A G-graded algebra whose basis products are single terms (or zero), carried
 * together with the cocycle governing its associativity law.
 */
class QuasiAlgebra {
public:
    static constexpr std::size_t kMaxDimension = 4096;

    QuasiAlgebra(GroupSpec group, std::vector<BasisElement> basis,
                 std::vector<std::optional<Term>> products, CocycleTable phi,
                 std::optional<std::string> unit_label = std::nullopt,
                 std::optional<BicharacterTable> bicharacter = std::nullopt)
        : group_(std::move(group)),
          basis_(std::move(basis)),
          products_(std::move(products)),
          phi_(std::move(phi)),
          unit_label_(std::move(unit_label)),
          bicharacter_(std::move(bicharacter)) {
        if (basis_.empty() || basis_.size() > kMaxDimension)
            throw std::invalid_argument("QuasiAlgebra: basis size out of range");
        if (phi_.group() != group_)
            throw std::invalid_argument("QuasiAlgebra: phi lives on a different group");
        for (const BasisElement& b : basis_) {
            if (b.label.empty()) throw std::invalid_argument("QuasiAlgebra: empty basis label");
            check_elem(group_, b.degree);
        }
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j)
                if (basis_[i].label == basis_[j].label)
                    throw std::invalid_argument("QuasiAlgebra: duplicate basis label '" +
                                                basis_[i].label + "'");
        if (products_.size() != basis_.size() * basis_.size())
            throw std::invalid_argument("QuasiAlgebra: product table must have dim^2 entries");
        for (const std::optional<Term>& t : products_)
            if (t) {
                if (t->index >= basis_.size())
                    throw std::invalid_argument("QuasiAlgebra: product references a missing basis element");
                detail::check_value_spec(phi_.generators(), t->coeff);
            }
        if (!check_cocycle(phi_).pass())
            throw std::invalid_argument("QuasiAlgebra: phi fails the cocycle conditions");
        if (bicharacter_ && bicharacter_->group() != group_)
            throw std::invalid_argument("QuasiAlgebra: bicharacter lives on a different group");
        if (unit_label_) validate_unit();
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    const CocycleTable& phi() const { return phi_; }
    const std::optional<std::string>& unit_label() const { return unit_label_; }
    const std::optional<BicharacterTable>& bicharacter() const { return bicharacter_; }

    const std::optional<Term>& product(std::size_t i, std::size_t j) const {
        if (i >= dim() || j >= dim()) throw std::out_of_range("QuasiAlgebra: basis index out of range");
        return products_[i * dim() + j];
    }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].label == label) return i;
        throw std::invalid_argument("QuasiAlgebra: no basis element labeled '" + label + "'");
    }

private:
    void validate_unit() const {
        std::size_t u = index_of(*unit_label_);
        if (!is_zero(basis_[u].degree))
            throw std::invalid_argument("QuasiAlgebra: unit must have degree zero");
        for (std::size_t j = 0; j < dim(); ++j) {
            const std::optional<Term>& l = product(u, j);
            const std::optional<Term>& r = product(j, u);
            if (!l || l->index != j || !l->coeff.is_one() || !r || r->index != j ||
                !r->coeff.is_one())
                throw std::invalid_argument("QuasiAlgebra: declared unit is not a two-sided identity");
        }
    }

    GroupSpec group_;
    std::vector<BasisElement> basis_;
    std::vector<std::optional<Term>> products_;
    CocycleTable phi_;
    std::optional<std::string> unit_label_;
    std::optional<BicharacterTable> bicharacter_;
};

/** Outcome of one algebra law check; failure list caps at `kFailureCap`. */
struct AlgebraCheckReport {
    static constexpr std::size_t kFailureCap = 1000;

    std::string check;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;

    bool pass() const { return failure_count == 0; }

    void record(const std::string& where) {
        ++failure_count;
        if (failures.size() < kFailureCap) failures.push_back(where);
    }
};

namespace detail {

// t * e_k as a single term (empty = zero).
inline std::optional<Term> act_right(const QuasiAlgebra& a, const std::optional<Term>& t,
                                     std::size_t k) {
    if (!t) return std::nullopt;
    const std::optional<Term>& p = a.product(t->index, k);
    if (!p) return std::nullopt;
    return Term{p->index, t->coeff * p->coeff};
}

// e_i * t as a single term (empty = zero).
inline std::optional<Term> act_left(const QuasiAlgebra& a, std::size_t i,
                                    const std::optional<Term>& t) {
    if (!t) return std::nullopt;
    const std::optional<Term>& p = a.product(i, t->index);
    if (!p) return std::nullopt;
    return Term{p->index, t->coeff * p->coeff};
}

inline bool term_eq(const std::optional<Term>& a, const std::optional<Term>& b) {
    if (!a || !b) return !a && !b;
    return a->index == b->index && a->coeff == b->coeff;
}

}  // namespace detail

/** Every nonzero product e_i e_j must land in degree |e_i| + |e_j|. */
inline AlgebraCheckReport check_grading(const QuasiAlgebra& a) {
    AlgebraCheckReport report{"grading", 0, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::optional<Term>& t = a.product(i, j);
            if (!t) continue;
            GroupElem want = add(a.group(), a.basis()[i].degree, a.basis()[j].degree);
            if (a.basis()[t->index].degree != want)
                report.record(a.basis()[i].label + " * " + a.basis()[j].label +
                              ": degree " + elem_str(a.basis()[t->index].degree) +
                              ", expected " + elem_str(want));
        }
    return report;
}

/** (a b) c = a (b c) phi(|a|,|b|,|c|) over all basis triples. */
inline AlgebraCheckReport check_quasiassociativity(const QuasiAlgebra& a) {
    AlgebraCheckReport report{"quasiassociativity", 0, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::optional<Term>& ij = a.product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                std::optional<Term> lhs = detail::act_right(a, ij, k);
                std::optional<Term> rhs = detail::act_left(a, i, a.product(j, k));
                if (rhs)
                    rhs->coeff *= a.phi().at(a.basis()[i].degree, a.basis()[j].degree,
                                             a.basis()[k].degree);
                if (!detail::term_eq(lhs, rhs))
                    report.record("(" + a.basis()[i].label + ", " + a.basis()[j].label + ", " +
                                  a.basis()[k].label + ")");
            }
        }
    return report;
}

/** a b = (b a) R(|a|,|b|) over all basis pairs. */
inline AlgebraCheckReport check_quasicommutativity(const QuasiAlgebra& a,
                                                   const BicharacterTable& r) {
    if (r.group() != a.group())
        throw std::invalid_argument("check_quasicommutativity: bicharacter lives on a different group");
    AlgebraCheckReport report{"quasicommutativity", 0, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            std::optional<Term> lhs = a.product(i, j);
            std::optional<Term> rhs = a.product(j, i);
            if (rhs) rhs->coeff *= r.at(a.basis()[i].degree, a.basis()[j].degree);
            if (!detail::term_eq(lhs, rhs))
                report.record("(" + a.basis()[i].label + ", " + a.basis()[j].label + ")");
        }
    return report;
}

/**
 * The group algebra of G twisted by a normalized cochain:
 * e_x e_y = e_(x+y) F(x,y), which is quasiassociative for the coboundary of F.
 */
inline QuasiAlgebra twisted_group_algebra(const CochainTable& f,
                                          std::optional<BicharacterTable> bicharacter = std::nullopt) {
    const GroupSpec& g = f.group();
    std::vector<GroupElem> elems = elements(g);
    std::vector<BasisElement> basis;
    basis.reserve(elems.size());
    for (const GroupElem& x : elems) basis.push_back({elem_label(g, x), x});
    std::vector<std::optional<Term>> products;
    products.reserve(elems.size() * elems.size());
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            products.push_back(Term{elem_index(g, add(g, x, y)), f.at(x, y)});
    return QuasiAlgebra(g, std::move(basis), std::move(products), coboundary(f),
                        elem_label(g, zero(g)), std::move(bicharacter));
}

/** The octonions as the twisted group algebra of (Z_2)^3, with their braiding. */
inline QuasiAlgebra octonion_algebra() {
    return twisted_group_algebra(octonion_twist(), octonion_bicharacter());
}

/** Render the basis products as an aligned text grid. */
inline std::string multiplication_table(const QuasiAlgebra& a) {
    auto cell = [&](const std::optional<Term>& t) -> std::string {
        if (!t) return "0";
        std::string c = t->coeff.str();
        const std::string& label = a.basis()[t->index].label;
        if (c == "1") return label;
        if (c == "-1") return "-" + label;
        return c + "*" + label;
    };
    std::size_t n = a.dim();
    std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
    grid[0][0] = "*";
    for (std::size_t i = 0; i < n; ++i) {
        grid[0][i + 1] = a.basis()[i].label;
        grid[i + 1][0] = a.basis()[i].label;
        for (std::size_t j = 0; j < n; ++j) grid[i + 1][j + 1] = cell(a.product(i, j));
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c <= n; ++c) {
            if (c) out += "  ";
            out += row[c];
            out.append(width[c] - row[c].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

}  // namespace quasi
