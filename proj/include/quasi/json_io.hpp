#pragma once
// JSON serialization for every kernel value with a pinned schema.  Output is
// deterministic: object keys are emitted in a fixed order and table entries
// in lexicographic argument order, so repeated runs are byte-identical.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasi/classify.hpp"
#include "quasi/cocycle.hpp"
#include "quasi/cyclotomic.hpp"
#include "quasi/group.hpp"
#include "quasi/quasialgebra.hpp"
#include "quasi/quasimatrix.hpp"
#include "quasi/unit_scalar.hpp"

namespace quasi {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Groups and elements
// ---------------------------------------------------------------------------

inline Json group_to_json(const GroupSpec& g) { return Json{{"orders", g.orders()}}; }

inline GroupSpec group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("orders") || !j["orders"].is_array())
        throw std::invalid_argument("group: expected {\"orders\": [n1, ...]}");
    std::vector<int> orders;
    for (const Json& o : j["orders"]) {
        if (!o.is_number_integer())
            throw std::invalid_argument("group: factor orders must be integers");
        orders.push_back(o.get<int>());
    }
    return GroupSpec(orders);
}

inline Json elem_to_json(const GroupElem& x) { return Json(x); }

inline GroupElem elem_from_json(const Json& j, const GroupSpec& g) {
    if (!j.is_array()) throw std::invalid_argument("element: expected an integer array");
    GroupElem x;
    for (const Json& c : j) {
        if (!c.is_number_integer())
            throw std::invalid_argument("element: components must be integers");
        x.push_back(c.get<int>());
    }
    check_elem(g, x);
    return x;
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Json generators_to_json(const GeneratorSpec& s) {
    Json out = Json::array();
    for (const Generator& g : s.all()) out.push_back(Json{{"name", g.name}, {"order", g.order}});
    return out;
}

inline GeneratorSpecPtr generators_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("generators: expected an array");
    std::vector<Generator> gens;
    for (const Json& g : j) {
        if (!g.is_object() || !g.contains("name") || !g.contains("order"))
            throw std::invalid_argument("generators: expected {\"name\":..., \"order\":...}");
        gens.push_back({g["name"].get<std::string>(), g["order"].get<long long>()});
    }
    return GeneratorSpec::make(std::move(gens));
}

/** Scalars serialize as {generator name: exponent}, keys sorted by name. */
inline Json unit_to_json(const UnitScalar& u) {
    std::vector<UnitFactor> factors = u.support();
    std::sort(factors.begin(), factors.end(),
              [](const UnitFactor& a, const UnitFactor& b) { return a.name < b.name; });
    Json out = Json::object();
    for (const UnitFactor& f : factors) out[f.name] = f.exponent;
    return out;
}

inline UnitScalar unit_from_json(const Json& j, const GeneratorSpecPtr& gens) {
    if (!j.is_object()) throw std::invalid_argument("scalar: expected {generator: exponent}");
    UnitScalar out = UnitScalar::one(gens);
    for (const auto& [name, exp] : j.items()) {
        if (!exp.is_number_integer())
            throw std::invalid_argument("scalar: exponents must be integers");
        out *= UnitScalar::generator_power(gens, name, exp.get<long long>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic numbers and matrices
// ---------------------------------------------------------------------------

inline Json cyclotomic_to_json(const Cyclotomic& v) {
    Json coeffs = Json::array();
    for (const Rational& c : v.coeffs())
        coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return Json{{"n", v.root_order()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("cyclotomic: expected {\"n\": N, \"coeffs\": [[p, q], ...]}");
    long long n = j["n"].get<long long>();
    std::vector<Rational> coeffs;
    for (const Json& pair : j["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw std::invalid_argument("cyclotomic: coefficients must be [\"p\", \"q\"] string pairs");
        mpz_class num, den;
        try {
            num = mpz_class(pair[0].get<std::string>());
            den = mpz_class(pair[1].get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cyclotomic: malformed integer string");
        }
        if (den == 0) throw std::invalid_argument("cyclotomic: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        coeffs.push_back(r);
    }
    return Cyclotomic(n, std::move(coeffs));
}

inline Json matrix_to_json(const CycloMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(cyclotomic_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.size()}, {"root_order", m.root_order()}, {"rows", rows}};
}

inline CycloMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("root_order") || !j.contains("rows") ||
        !j["rows"].is_array())
        throw std::invalid_argument(
            "matrix: expected {\"n\": size, \"root_order\": N, \"rows\": [[...], ...]}");
    std::size_t n = j["n"].get<std::size_t>();
    long long root_order = j["root_order"].get<long long>();
    if (j["rows"].size() != n) throw std::invalid_argument("matrix: row count must equal n");
    CycloMatrix out(n, root_order);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = j["rows"][i];
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix: each row must have n entries");
        for (std::size_t k = 0; k < n; ++k) {
            Cyclotomic v = cyclotomic_from_json(row[k]);
            if (v.root_order() != root_order)
                throw std::invalid_argument("matrix: entry root order differs from root_order");
            out.set(i, k, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cocycle tables
// ---------------------------------------------------------------------------

/**
 * Tables serialize with all all-nonzero argument triples in lexicographic
 * order, plus any identity slots violating normalization.  Identity-slot
 * entries may be omitted on input; they default to 1.
 */
inline Json table_to_json(const CocycleTable& t) {
    const GroupSpec& g = t.group();
    Json entries = Json::array();
    std::vector<GroupElem> elems = elements(g);
    for (const GroupElem& x : elems)
        for (const GroupElem& y : elems)
            for (const GroupElem& z : elems) {
                bool interior = !is_zero(x) && !is_zero(y) && !is_zero(z);
                const UnitScalar& v = t.at(x, y, z);
                if (!interior && v.is_one()) continue;
                entries.push_back(Json{{"x", elem_to_json(x)},
                                       {"y", elem_to_json(y)},
                                       {"z", elem_to_json(z)},
                                       {"value", unit_to_json(v)}});
            }
    return Json{{"group", group_to_json(g)},
                {"generators", generators_to_json(*t.generators())},
                {"entries", entries}};
}

namespace detail {

// When no generator list is given, infer one from the names used in the
// entries: zeta_N names are torsion of order N, anything else is free.
inline GeneratorSpecPtr infer_generators(const Json& entries) {
    std::vector<Generator> gens;
    auto seen = [&](const std::string& name) {
        for (const Generator& g : gens)
            if (g.name == name) return true;
        return false;
    };
    for (const Json& e : entries) {
        if (!e.is_object() || !e.contains("value") || !e["value"].is_object()) continue;
        for (const auto& [name, exp] : e["value"].items()) {
            (void)exp;
            if (seen(name)) continue;
            long long order = 0;
            if (name.rfind("zeta_", 0) == 0) {
                try {
                    order = std::stoll(name.substr(5));
                } catch (...) {
                    order = 0;
                }
                if (order < 1) order = 0;
            }
            gens.push_back({name, order});
        }
    }
    std::sort(gens.begin(), gens.end(),
              [](const Generator& a, const Generator& b) { return a.name < b.name; });
    return GeneratorSpec::make(std::move(gens));
}

}  // namespace detail

inline CocycleTable table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("entries") ||
        !j["entries"].is_array())
        throw std::invalid_argument("table: expected {\"group\":..., \"entries\": [...]}");
    GroupSpec g = group_from_json(j["group"]);
    GeneratorSpecPtr gens = j.contains("generators") ? generators_from_json(j["generators"])
                                                     : detail::infer_generators(j["entries"]);
    CocycleTable out(g, gens);
    for (const Json& e : j["entries"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("z") ||
            !e.contains("value"))
            throw std::invalid_argument("table: entries need x, y, z and value");
        out.set(elem_from_json(e["x"], g), elem_from_json(e["y"], g), elem_from_json(e["z"], g),
                unit_from_json(e["value"], gens));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Algebras
// ---------------------------------------------------------------------------

inline Json algebra_to_json(const QuasiAlgebra& a) {
    const GroupSpec& g = a.group();
    Json basis = Json::array();
    for (const BasisElement& b : a.basis())
        basis.push_back(Json{{"label", b.label}, {"degree", elem_to_json(b.degree)}});
    Json products = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::optional<Term>& t = a.product(i, j);
            Json p{{"left", a.basis()[i].label}, {"right", a.basis()[j].label}};
            if (t) {
                p["result"] = a.basis()[t->index].label;
                p["coeff"] = unit_to_json(t->coeff);
            } else {
                p["result"] = nullptr;
            }
            products.push_back(std::move(p));
        }
    Json out{{"group", group_to_json(g)},
             {"basis", basis},
             {"products", products},
             {"phi", table_to_json(a.phi())}};
    if (a.unit_label()) out["unit"] = *a.unit_label();
    if (a.bicharacter()) {
        Json entries = Json::array();
        std::vector<GroupElem> elems = elements(g);
        for (const GroupElem& x : elems)
            for (const GroupElem& y : elems) {
                bool interior = !is_zero(x) && !is_zero(y);
                const UnitScalar& v = a.bicharacter()->at(x, y);
                if (!interior && v.is_one()) continue;
                entries.push_back(Json{{"x", elem_to_json(x)},
                                       {"y", elem_to_json(y)},
                                       {"value", unit_to_json(v)}});
            }
        out["bicharacter"] = Json{{"entries", entries}};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification reports
// ---------------------------------------------------------------------------

inline Json classification_to_json(const GroupSpec& g, long long n,
                                   const std::vector<CocycleTable>& tables,
                                   const std::vector<CohomologyClass>& classes) {
    Json cls = Json::array();
    for (const CohomologyClass& c : classes)
        cls.push_back(Json{{"representative", c.representative},
                           {"size", c.size()},
                           {"members", c.members}});
    Json tbl = Json::array();
    for (const CocycleTable& t : tables) tbl.push_back(table_to_json(t));
    return Json{{"group", group_to_json(g)},
                {"value_group", n},
                {"cocycle_count", tables.size()},
                {"classes", cls},
                {"tables", tbl}};
}

}  // namespace quasi
