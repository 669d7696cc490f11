#pragma once
// Quasimatrices over a cocycle on Z_n: the n^2-dimensional graded algebra on
// elementary matrices E_ij with deg E_ij = i - j, plus exact matrix products
// over cyclotomic fields with the cocycle-corrected multiplication rule.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasi/cocycle.hpp"
#include "quasi/cyclotomic.hpp"
#include "quasi/group.hpp"
#include "quasi/quasialgebra.hpp"
#include "quasi/unit_scalar.hpp"

namespace quasi {

namespace detail {

inline int require_cyclic(const CocycleTable& phi) {
    if (!phi.group().cyclic())
        throw std::invalid_argument("quasimatrix: the cocycle must live on a cyclic group Z_n");
    return phi.group().order(0);
}

inline GroupElem residue(const GroupSpec& g, long long v) { return reduce(g, {v}); }

}  // namespace detail

/**
 * Structure constant of E_ij E_jl = c(i,j,l) E_il:
 * c(i,j,l) = phi(i,-j,j-l) / phi(-j,j,-l).
 */
inline UnitScalar quasimatrix_coefficient(const CocycleTable& phi, long long i, long long j,
                                          long long l) {
    detail::require_cyclic(phi);
    const GroupSpec& g = phi.group();
    return phi.at(detail::residue(g, i), detail::residue(g, -j), detail::residue(g, j - l)) /
           phi.at(detail::residue(g, -j), detail::residue(g, j), detail::residue(g, -l));
}

/** All structure constants c(i,j,l), in lexicographic (i,j,l) order. */
inline std::vector<UnitScalar> quasimatrix_coefficients(const CocycleTable& phi) {
    int n = detail::require_cyclic(phi);
    std::vector<UnitScalar> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) out.push_back(quasimatrix_coefficient(phi, i, j, l));
    return out;
}

inline std::string quasimatrix_label(int n, int i, int j) {
    if (n <= 10) return "E" + std::to_string(i) + std::to_string(j);
    return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/**
 * The quasimatrix algebra of a cocycle on Z_n: basis E_ij of degree i - j,
 * products E_ij E_kl = delta_jk c(i,j,l) E_il.  Quasiassociative for phi.
 */
inline QuasiAlgebra quasimatrix_algebra(const CocycleTable& phi) {
    int n = detail::require_cyclic(phi);
    const GroupSpec& g = phi.group();
    std::vector<BasisElement> basis;
    basis.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis.push_back({quasimatrix_label(n, i, j),
                             detail::residue(g, static_cast<long long>(i) - j)});
    std::vector<std::optional<Term>> products(basis.size() * basis.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::size_t row = static_cast<std::size_t>(i) * n + j;
                    std::size_t col = static_cast<std::size_t>(k) * n + l;
                    if (j == k)
                        products[row * basis.size() + col] =
                            Term{static_cast<std::size_t>(i) * n + l,
                                 quasimatrix_coefficient(phi, i, j, l)};
                }
    return QuasiAlgebra(g, std::move(basis), std::move(products), phi);
}

/**
 * Left and right defects of the candidate unit sum E_00 + ... + E_(n-1)(n-1):
 * the sum is a left unit iff every c(i,i,l) = 1 and a right unit iff every
 * c(i,l,l) = 1.  Reports the defects; asserts nothing.
 */
struct QuasimatrixUnitDiagnostic {
    std::vector<UnitScalar> left_defect;   // c(i,i,l), lex (i,l)
    std::vector<UnitScalar> right_defect;  // c(i,l,l), lex (i,l)
    bool left_unit = false;
    bool right_unit = false;
};

inline QuasimatrixUnitDiagnostic quasimatrix_unit_diagnostic(const CocycleTable& phi) {
    int n = detail::require_cyclic(phi);
    QuasimatrixUnitDiagnostic d;
    d.left_unit = d.right_unit = true;
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            d.left_defect.push_back(quasimatrix_coefficient(phi, i, i, l));
            d.right_defect.push_back(quasimatrix_coefficient(phi, i, l, l));
            if (!d.left_defect.back().is_one()) d.left_unit = false;
            if (!d.right_defect.back().is_one()) d.right_unit = false;
        }
    return d;
}

/** A square matrix over the cyclotomic field Q(zeta_N). */
class CycloMatrix {
public:
    static constexpr std::size_t kMaxSize = 256;

    CycloMatrix(std::size_t size, long long root_order)
        : size_(size), root_order_(root_order),
          entries_(size * size, Cyclotomic::zero(root_order)) {
        if (size == 0 || size > kMaxSize)
            throw std::invalid_argument("CycloMatrix: size out of range");
    }

    std::size_t size() const { return size_; }
    long long root_order() const { return root_order_; }

    const Cyclotomic& at(std::size_t i, std::size_t j) const {
        if (i >= size_ || j >= size_) throw std::out_of_range("CycloMatrix: index out of range");
        return entries_[i * size_ + j];
    }

    void set(std::size_t i, std::size_t j, const Cyclotomic& v) {
        if (i >= size_ || j >= size_) throw std::out_of_range("CycloMatrix: index out of range");
        if (v.root_order() != root_order_)
            throw std::invalid_argument("CycloMatrix: entry lies in the wrong cyclotomic field");
        entries_[i * size_ + j] = v;
    }

    bool operator==(const CycloMatrix& o) const {
        return size_ == o.size_ && root_order_ == o.root_order_ && entries_ == o.entries_;
    }
    bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

    std::string str() const {
        std::vector<std::string> cells(size_ * size_);
        std::vector<std::size_t> width(size_, 0);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j) {
                cells[i * size_ + j] = at(i, j).str();
                width[j] = std::max(width[j], cells[i * size_ + j].size());
            }
        std::string out;
        for (std::size_t i = 0; i < size_; ++i) {
            out += "[ ";
            for (std::size_t j = 0; j < size_; ++j) {
                if (j) out += "  ";
                const std::string& c = cells[i * size_ + j];
                out.append(width[j] - c.size(), ' ');
                out += c;
            }
            out += " ]\n";
        }
        return out;
    }

private:
    std::size_t size_;
    long long root_order_;
    std::vector<Cyclotomic> entries_;
};

/** The structure constants c(i,j,l) embedded into Q(zeta_N), lex (i,j,l). */
inline std::vector<Cyclotomic> quasimatrix_coefficients_embedded(
    const CocycleTable& phi, long long root_order,
    const std::map<std::string, Cyclotomic>& assignment = {}) {
    std::vector<Cyclotomic> out;
    for (const UnitScalar& c : quasimatrix_coefficients(phi))
        out.push_back(embed_unit(c, root_order, assignment));
    return out;
}

/**
 * The quasimatrix product: (a.b)(i,l) = sum_j a(i,j) b(j,l) c(i,j,l) with the
 * cocycle's structure constants embedded into the matrices' cyclotomic field.
 */
inline CycloMatrix quasimatrix_product(const CycloMatrix& a, const CycloMatrix& b,
                                       const CocycleTable& phi,
                                       const std::map<std::string, Cyclotomic>& assignment = {}) {
    if (a.size() != b.size())
        throw std::invalid_argument("quasimatrix_product: matrix sizes differ");
    if (a.root_order() != b.root_order())
        throw std::invalid_argument("quasimatrix_product: matrices lie in different cyclotomic fields");
    int n = detail::require_cyclic(phi);
    if (static_cast<std::size_t>(n) != a.size())
        throw std::invalid_argument("quasimatrix_product: cocycle group order must match the matrix size");

    std::vector<Cyclotomic> coeffs = quasimatrix_coefficients_embedded(phi, a.root_order(), assignment);
    CycloMatrix out(a.size(), a.root_order());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < a.size(); ++l) {
            Cyclotomic acc = Cyclotomic::zero(a.root_order());
            for (std::size_t j = 0; j < a.size(); ++j)
                acc += a.at(i, j) * b.at(j, l) * coeffs[(i * a.size() + j) * a.size() + l];
            out.set(i, l, acc);
        }
    return out;
}

}  // namespace quasi
