#pragma once
// Finite abelian groups presented as explicit products of cyclic factors,
// with lexicographic element enumeration and the trilinear gadgets used by
// the cocycle families.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasi {

/** An element of a product of cyclic groups: one reduced component per factor. */
using GroupElem = std::vector<int>;

/** Shape of a finite abelian group Z_{n1} x ... x Z_{nm}. */
class GroupSpec {
public:
    // Cap on the number of elements; enumeration beyond this is a usage error.
    static constexpr std::size_t kDefaultSizeGuard = 4096;

    explicit GroupSpec(std::vector<int> orders, std::size_t size_guard = kDefaultSizeGuard)
        : orders_(std::move(orders)) {
        if (orders_.empty()) throw std::invalid_argument("GroupSpec: no cyclic factors");
        std::size_t size = 1;
        for (int n : orders_) {
            if (n < 1) throw std::invalid_argument("GroupSpec: factor order must be positive");
            if (size > size_guard / static_cast<std::size_t>(n))
                throw std::invalid_argument("GroupSpec: group size exceeds guard of " +
                                            std::to_string(size_guard));
            size *= static_cast<std::size_t>(n);
        }
        size_ = size;
    }

    std::size_t arity() const { return orders_.size(); }
    int order(std::size_t i) const { return orders_.at(i); }
    const std::vector<int>& orders() const { return orders_; }
    std::size_t size() const { return size_; }
    bool cyclic() const { return orders_.size() == 1; }

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += " x ";
            s += "Z_" + std::to_string(orders_[i]);
        }
        return s;
    }

private:
    std::vector<int> orders_;
    std::size_t size_;
};

inline void check_elem(const GroupSpec& g, const GroupElem& a) {
    if (a.size() != g.arity())
        throw std::invalid_argument("GroupElem: component count does not match the group");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= g.order(i))
            throw std::invalid_argument("GroupElem: component out of range");
}

inline GroupElem zero(const GroupSpec& g) { return GroupElem(g.arity(), 0); }

inline bool is_zero(const GroupElem& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

/** Reduce arbitrary integer components into canonical range. */
inline GroupElem reduce(const GroupSpec& g, const std::vector<long long>& raw) {
    if (raw.size() != g.arity())
        throw std::invalid_argument("GroupElem: component count does not match the group");
    GroupElem out(g.arity());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        long long n = g.order(i);
        out[i] = static_cast<int>(((raw[i] % n) + n) % n);
    }
    return out;
}

inline GroupElem add(const GroupSpec& g, const GroupElem& a, const GroupElem& b) {
    check_elem(g, a);
    check_elem(g, b);
    GroupElem out(g.arity());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % g.order(i);
    return out;
}

inline GroupElem neg(const GroupSpec& g, const GroupElem& a) {
    check_elem(g, a);
    GroupElem out(g.arity());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (g.order(i) - a[i]) % g.order(i);
    return out;
}

/** Index of an element in lexicographic order (last component fastest). */
inline std::size_t elem_index(const GroupSpec& g, const GroupElem& a) {
    check_elem(g, a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx = idx * g.order(i) + static_cast<std::size_t>(a[i]);
    return idx;
}

inline GroupElem elem_at(const GroupSpec& g, std::size_t idx) {
    if (idx >= g.size()) throw std::out_of_range("GroupSpec: element index out of range");
    GroupElem out(g.arity());
    for (std::size_t i = g.arity(); i-- > 0;) {
        out[i] = static_cast<int>(idx % g.order(i));
        idx /= g.order(i);
    }
    return out;
}

/** All elements in lexicographic order. */
inline std::vector<GroupElem> elements(const GroupSpec& g) {
    std::vector<GroupElem> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(elem_at(g, i));
    return out;
}

inline std::string elem_str(const GroupElem& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

/** (x cross y) . z over Z_2, for three-component vectors over (Z_2)^3. */
inline int cross_dot(const GroupSpec& g, const GroupElem& x, const GroupElem& y,
                     const GroupElem& z) {
    if (g.orders() != std::vector<int>{2, 2, 2})
        throw std::invalid_argument("cross_dot: group must be Z_2 x Z_2 x Z_2");
    check_elem(g, x);
    check_elem(g, y);
    check_elem(g, z);
    int c0 = x[1] * y[2] + x[2] * y[1];
    int c1 = x[2] * y[0] + x[0] * y[2];
    int c2 = x[0] * y[1] + x[1] * y[0];
    return (c0 * z[0] + c1 * z[1] + c2 * z[2]) % 2;
}

/** A trilinear form on (Z_n)^m given by an m x m x m coefficient tensor. */
class TrilinearForm {
public:
    TrilinearForm(int modulus, std::size_t arity, std::vector<int> coeffs)
        : modulus_(modulus), arity_(arity), coeffs_(std::move(coeffs)) {
        if (modulus_ < 1) throw std::invalid_argument("TrilinearForm: modulus must be positive");
        if (arity_ == 0 || coeffs_.size() != arity_ * arity_ * arity_)
            throw std::invalid_argument("TrilinearForm: coefficient tensor must have arity^3 entries");
        for (int& c : coeffs_) c = ((c % modulus_) + modulus_) % modulus_;
    }

    /** The Levi-Civita tensor on (Z_2)^3; evaluates to (x cross y) . z. */
    static TrilinearForm cross_product_form() {
        std::vector<int> t(27, 0);
        // |eps_abc| = 1 exactly on permutations of (0,1,2); signs vanish mod 2
        t[0 * 9 + 1 * 3 + 2] = 1;
        t[1 * 9 + 2 * 3 + 0] = 1;
        t[2 * 9 + 0 * 3 + 1] = 1;
        t[0 * 9 + 2 * 3 + 1] = 1;
        t[2 * 9 + 1 * 3 + 0] = 1;
        t[1 * 9 + 0 * 3 + 2] = 1;
        return TrilinearForm(2, 3, std::move(t));
    }

    int modulus() const { return modulus_; }
    std::size_t arity() const { return arity_; }
    int coeff(std::size_t a, std::size_t b, std::size_t c) const {
        if (a >= arity_ || b >= arity_ || c >= arity_)
            throw std::out_of_range("TrilinearForm: index out of range");
        return coeffs_[(a * arity_ + b) * arity_ + c];
    }

    /** Sum T_abc x_a y_b z_c mod n. */
    int operator()(const GroupElem& x, const GroupElem& y, const GroupElem& z) const {
        if (x.size() != arity_ || y.size() != arity_ || z.size() != arity_)
            throw std::invalid_argument("TrilinearForm: element arity mismatch");
        long long acc = 0;
        for (std::size_t a = 0; a < arity_; ++a)
            for (std::size_t b = 0; b < arity_; ++b)
                for (std::size_t c = 0; c < arity_; ++c)
                    acc += static_cast<long long>(coeff(a, b, c)) * x[a] * y[b] * z[c];
        return static_cast<int>(((acc % modulus_) + modulus_) % modulus_);
    }

private:
    int modulus_;
    std::size_t arity_;
    std::vector<int> coeffs_;
};

}  // namespace quasi
