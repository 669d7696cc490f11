#include "quasi/quasialgebra.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <oracle/frozen_values.hpp>

using namespace quasi;

namespace {

// The free twisting cochain on Z_3 used across these tests.
CochainTable sample_cochain(GeneratorSpecPtr gens) {
    UnitScalar a = UnitScalar::generator_power(gens, "a", 1);
    UnitScalar b = UnitScalar::generator_power(gens, "b", 1);
    CochainTable f(GroupSpec({3}), gens);
    f.set({1}, {1}, a);
    f.set({1}, {2}, a * b);
    f.set({2}, {1}, b.pow(2));
    f.set({2}, {2}, a.inverse());
    return f;
}

}  // namespace

TEST_CASE("basis labels are digit strings for small orders", "[quasialgebra]") {
    GroupSpec g({2, 3});
    REQUIRE(elem_label(g, {1, 2}) == "e12");
    REQUIRE(elem_label(GroupSpec({12}), {11}) == "e(11)");
    REQUIRE(elem_label(GroupSpec({12, 2}), {3, 1}) == "e(3,1)");
    REQUIRE_THROWS_AS(elem_label(g, {2, 0}), std::invalid_argument);
}

TEST_CASE("twisted group algebras multiply by the cochain", "[quasialgebra]") {
    auto gens = GeneratorSpec::make({{"a", 0}, {"b", 0}});
    CochainTable f = sample_cochain(gens);
    QuasiAlgebra alg = twisted_group_algebra(f);

    REQUIRE(alg.dim() == 3);
    REQUIRE(alg.group() == GroupSpec({3}));
    REQUIRE(alg.unit_label() == "e0");
    REQUIRE(alg.phi() == coboundary(f));
    REQUIRE_FALSE(alg.bicharacter().has_value());
    REQUIRE(alg.index_of("e2") == 2);
    REQUIRE_THROWS_AS(alg.index_of("e9"), std::invalid_argument);
    REQUIRE_THROWS_AS(alg.product(3, 0), std::out_of_range);

    // e1 e2 = F(1,2) e0 and e2 e2 = F(2,2) e1.
    const std::optional<Term>& p12 = alg.product(1, 2);
    REQUIRE(p12.has_value());
    REQUIRE(p12->index == 0);
    REQUIRE(p12->coeff == f.at({1}, {2}));
    REQUIRE(alg.product(2, 2)->index == 1);
    REQUIRE(alg.product(2, 2)->coeff == f.at({2}, {2}));

    REQUIRE(check_grading(alg).pass());
    REQUIRE(check_quasiassociativity(alg).pass());
}

TEST_CASE("constructor validation rejects malformed algebras", "[quasialgebra]") {
    GroupSpec g({2});
    auto gens = GeneratorSpec::roots_of_unity(2);
    CocycleTable phi = trivial_cocycle(g, gens);
    UnitScalar one = UnitScalar::one(gens);
    std::vector<BasisElement> basis{{"e0", {0}}, {"e1", {1}}};
    std::vector<std::optional<Term>> products{Term{0, one}, Term{1, one}, Term{1, one},
                                              Term{0, one}};

    REQUIRE_NOTHROW(QuasiAlgebra(g, basis, products, phi, "e0"));
    REQUIRE_THROWS_AS(QuasiAlgebra(g, {}, {}, phi), std::invalid_argument);
    REQUIRE_THROWS_AS(QuasiAlgebra(g, {{"e0", {0}}, {"e0", {1}}}, products, phi),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(QuasiAlgebra(g, {{"", {0}}, {"e1", {1}}}, products, phi),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(QuasiAlgebra(g, {{"e0", {0}}, {"e1", {0, 1}}}, products, phi),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, {Term{0, one}, Term{1, one}}, phi),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        QuasiAlgebra(g, basis, {Term{0, one}, Term{2, one}, Term{1, one}, Term{0, one}}, phi),
        std::invalid_argument);
    REQUIRE_THROWS_AS(QuasiAlgebra(GroupSpec({3}), basis, products, phi),
                      std::invalid_argument);

    SECTION("phi must satisfy the cocycle conditions") {
        CocycleTable bad = trivial_cocycle(g, gens);
        bad.set({1}, {0}, {1}, UnitScalar::root_of_unity(2, 1));
        REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, products, bad), std::invalid_argument);
    }

    SECTION("the declared unit must be a genuine two-sided identity of degree zero") {
        REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, products, phi, "e1"),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, products, phi, "missing"),
                          std::invalid_argument);
        std::vector<std::optional<Term>> skew{Term{0, one}, Term{1, one},
                                              Term{1, UnitScalar::root_of_unity(2, 1)},
                                              Term{0, one}};
        REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, skew, phi, "e0"), std::invalid_argument);
    }

    SECTION("product coefficients must share phi's generator system") {
        auto other = GeneratorSpec::make({{"q", 0}});
        std::vector<std::optional<Term>> foreign{
            Term{0, one}, Term{1, one}, Term{1, one},
            Term{0, UnitScalar::generator_power(other, "q", 1)}};
        REQUIRE_THROWS_AS(QuasiAlgebra(g, basis, foreign, phi), std::invalid_argument);
    }
}

TEST_CASE("law checks detect graded, associative, and commutative defects",
          "[quasialgebra]") {
    GroupSpec g({3});
    auto gens = GeneratorSpec::make({{"a", 0}, {"b", 0}});
    CochainTable f = sample_cochain(gens);

    SECTION("a product landing in the wrong degree fails check_grading") {
        std::vector<BasisElement> basis;
        for (const GroupElem& x : elements(g)) basis.push_back({elem_label(g, x), x});
        std::vector<std::optional<Term>> products(9);
        // e_x e_y = e_x: degree x instead of x + y.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                products[i * 3 + j] = Term{i, UnitScalar::one(gens)};
        QuasiAlgebra alg(g, basis, products, trivial_cocycle(g, gens));
        AlgebraCheckReport r = check_grading(alg);
        REQUIRE_FALSE(r.pass());
        REQUIRE(r.check == "grading");
        REQUIRE(r.failure_count == 6);  // all pairs with y != 0
        REQUIRE_FALSE(r.failures.empty());
    }

    SECTION("the twisted product is not associative against the wrong cocycle") {
        std::vector<BasisElement> basis;
        std::vector<std::optional<Term>> products;
        for (const GroupElem& x : elements(g)) basis.push_back({elem_label(g, x), x});
        for (const GroupElem& x : elements(g))
            for (const GroupElem& y : elements(g))
                products.push_back(Term{elem_index(g, add(g, x, y)), f.at(x, y)});
        QuasiAlgebra wrong(g, basis, products, trivial_cocycle(g, gens), "e0");
        AlgebraCheckReport r = check_quasiassociativity(wrong);
        REQUIRE_FALSE(r.pass());
        REQUIRE(check_quasiassociativity(twisted_group_algebra(f)).pass());
    }

    SECTION("quasicommutativity needs the right bicharacter on the right group") {
        QuasiAlgebra oct = octonion_algebra();
        REQUIRE(check_quasicommutativity(oct, octonion_bicharacter()).pass());
        BicharacterTable allone(oct.group(), oct.phi().generators());
        REQUIRE_FALSE(check_quasicommutativity(oct, allone).pass());
        BicharacterTable elsewhere(GroupSpec({2}), oct.phi().generators());
        REQUIRE_THROWS_AS(check_quasicommutativity(oct, elsewhere), std::invalid_argument);
    }
}

TEST_CASE("the octonion algebra reproduces the signed multiplication table",
          "[quasialgebra][octonion]") {
    QuasiAlgebra oct = octonion_algebra();
    GroupSpec g = oct.group();
    std::vector<GroupElem> elems = elements(g);

    REQUIRE(oct.dim() == 8);
    REQUIRE(oct.unit_label() == "e000");
    REQUIRE(check_grading(oct).pass());
    REQUIRE(check_quasiassociativity(oct).pass());
    REQUIRE(oct.bicharacter().has_value());

    SECTION("every product is the group sum with the frozen sign") {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const std::optional<Term>& t = oct.product(i, j);
                REQUIRE(t.has_value());
                REQUIRE(t->index == elem_index(g, add(g, elems[i], elems[j])));
                REQUIRE(t->coeff ==
                        UnitScalar::root_of_unity(2, oracle::kOctonionSignExponents[i][j]));
            }
    }

    SECTION("the familiar antisymmetric pair e100 e010 = -e010 e100") {
        std::size_t i = oct.index_of("e100");
        std::size_t j = oct.index_of("e010");
        std::size_t k = oct.index_of("e110");
        REQUIRE(oct.product(i, j)->index == k);
        REQUIRE(oct.product(i, j)->coeff == UnitScalar::root_of_unity(2, 1));
        REQUIRE(oct.product(j, i)->index == k);
        REQUIRE(oct.product(j, i)->coeff.is_one());
    }

    SECTION("imaginary units square to minus one") {
        for (std::size_t i = 1; i < 8; ++i) {
            REQUIRE(oct.product(i, i)->index == 0);
            REQUIRE(oct.product(i, i)->coeff == UnitScalar::root_of_unity(2, 1));
        }
    }
}

TEST_CASE("multiplication tables render as aligned grids", "[quasialgebra]") {
    SECTION("the plain group algebra of Z_2") {
        CochainTable f(GroupSpec({2}), GeneratorSpec::roots_of_unity(2));
        std::string grid = multiplication_table(twisted_group_algebra(f));
        REQUIRE(grid ==
                "*   e0  e1\n"
                "e0  e0  e1\n"
                "e1  e1  e0\n");
    }

    SECTION("octonion cells carry signs") {
        std::string grid = multiplication_table(octonion_algebra());
        REQUIRE(grid.find("-e110") != std::string::npos);
        REQUIRE(grid.find("-e000") != std::string::npos);
        std::size_t lines = 0;
        for (char c : grid)
            if (c == '\n') ++lines;
        REQUIRE(lines == 9);
    }
}
