#include "quasi/classify.hpp"
#include "quasi/json_io.hpp"
#include "quasi/quasimatrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace quasi;

namespace {

// One fixed seed keeps every run of this suite identical.
constexpr unsigned kSeed = 20240817;

CochainTable random_cochain(const GroupSpec& g, long long n, std::mt19937& rng) {
    auto gens = GeneratorSpec::roots_of_unity(n);
    std::uniform_int_distribution<long long> digit(0, n - 1);
    CochainTable f(g, gens);
    for (const GroupElem& x : elements(g))
        for (const GroupElem& y : elements(g)) {
            if (is_zero(x) || is_zero(y)) continue;
            f.set(x, y, UnitScalar::root_of_unity(n, digit(rng)));
        }
    return f;
}

Cyclotomic random_cyclotomic(long long n, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < cyclotomic_polynomial(n).size() - 1; ++i)
        coeffs.emplace_back(num(rng), den(rng));
    return Cyclotomic(n, coeffs);
}

}  // namespace

TEST_CASE("coboundaries of random cochains always satisfy the cocycle laws", "[props]") {
    std::mt19937 rng(kSeed);
    for (const GroupSpec& g : {GroupSpec({3}), GroupSpec({4}), GroupSpec({2, 2})}) {
        for (int trial = 0; trial < 8; ++trial) {
            CochainTable f = random_cochain(g, 12, rng);
            CocycleTable d = coboundary(f);
            REQUIRE(check_cocycle(d).pass());
            REQUIRE(identity_suite(d).all_pass());
        }
    }
}

TEST_CASE("the coboundary map is multiplicative in the cochain", "[props]") {
    std::mt19937 rng(kSeed + 1);
    GroupSpec g({3});
    for (int trial = 0; trial < 10; ++trial) {
        CochainTable f = random_cochain(g, 6, rng);
        CochainTable h = random_cochain(g, 6, rng);
        CochainTable fh(g, f.generators());
        for (const GroupElem& x : elements(g))
            for (const GroupElem& y : elements(g)) {
                if (is_zero(x) || is_zero(y)) continue;
                fh.set(x, y, f.at(x, y) * h.at(x, y));
            }
        CocycleTable left = coboundary(fh);
        CocycleTable df = coboundary(f);
        CocycleTable dh = coboundary(h);
        for (const GroupElem& x : elements(g))
            for (const GroupElem& y : elements(g))
                for (const GroupElem& z : elements(g))
                    REQUIRE(left.at(x, y, z) == df.at(x, y, z) * dh.at(x, y, z));
    }
}

TEST_CASE("unit scalars form an abelian group", "[props]") {
    std::mt19937 rng(kSeed + 2);
    auto gens = GeneratorSpec::make({{"q", 0}, {"zeta_4", 4}, {"zeta_6", 6}});
    std::uniform_int_distribution<long long> e(-6, 6);
    auto random_unit = [&] {
        return UnitScalar::generator_power(gens, "q", e(rng)) *
               UnitScalar::generator_power(gens, "zeta_4", e(rng)) *
               UnitScalar::generator_power(gens, "zeta_6", e(rng));
    };
    for (int trial = 0; trial < 25; ++trial) {
        UnitScalar u = random_unit(), v = random_unit(), w = random_unit();
        REQUIRE((u * v) * w == u * (v * w));
        REQUIRE(u * v == v * u);
        REQUIRE(u * u.inverse() == UnitScalar::one(gens));
        REQUIRE((u * v).inverse() == u.inverse() * v.inverse());
        long long a = e(rng), b = e(rng);
        REQUIRE(u.pow(a) * u.pow(b) == u.pow(a + b));
        REQUIRE((u * v).pow(a) == u.pow(a) * v.pow(a));
    }
}

TEST_CASE("cyclotomic arithmetic satisfies the ring laws and tracks the numerics",
          "[props]") {
    std::mt19937 rng(kSeed + 3);
    for (int trial = 0; trial < 12; ++trial) {
        Cyclotomic a = random_cyclotomic(12, rng);
        Cyclotomic b = random_cyclotomic(12, rng);
        Cyclotomic c = random_cyclotomic(12, rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a - a == Cyclotomic::zero(12));
        REQUIRE(a * Cyclotomic::one(12) == a);

        std::complex<double> za = a.to_complex(), zb = b.to_complex();
        REQUIRE(std::abs((a * b).to_complex() - za * zb) < 1e-6);
        REQUIRE(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
    }
}

TEST_CASE("embedding unit scalars into a cyclotomic field is a homomorphism", "[props]") {
    std::mt19937 rng(kSeed + 4);
    auto gens = GeneratorSpec::make({{"q", 0}, {"zeta_2", 2}, {"zeta_3", 3}});
    std::map<std::string, Cyclotomic> assign{{"q", Cyclotomic::root_power(6, 5)}};
    std::uniform_int_distribution<long long> e(-5, 5);
    auto random_unit = [&] {
        return UnitScalar::generator_power(gens, "q", e(rng)) *
               UnitScalar::generator_power(gens, "zeta_2", e(rng)) *
               UnitScalar::generator_power(gens, "zeta_3", e(rng));
    };
    for (int trial = 0; trial < 25; ++trial) {
        UnitScalar u = random_unit(), v = random_unit();
        REQUIRE(embed_unit(u * v, 6, assign) ==
                embed_unit(u, 6, assign) * embed_unit(v, 6, assign));
        REQUIRE(embed_unit(u.inverse(), 6, assign) ==
                embed_unit(u, 6, assign).unit_inverse());
    }
}

TEST_CASE("homogeneous quasimatrices associate up to the cocycle value", "[props]") {
    std::mt19937 rng(kSeed + 5);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);

    auto homogeneous = [&](int d) {
        // Nonzero entries only where i - j = d mod 3, so the matrix has degree d.
        CycloMatrix m(3, 3);
        for (long long i = 0; i < 3; ++i) {
            long long j = ((i - d) % 3 + 3) % 3;
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                  Cyclotomic::from_rational(3, entry(rng)));
        }
        return m;
    };

    UnitScalar z = UnitScalar::root_of_unity(3, 1);
    for (int w = 0; w < 3; ++w) {
        CocycleTable phi = z3_cocycle(z, z.pow(2), z.pow(w));
        for (int trial = 0; trial < 6; ++trial) {
            int da = deg(rng), db = deg(rng), dc = deg(rng);
            CycloMatrix a = homogeneous(da), b = homogeneous(db), c = homogeneous(dc);
            CycloMatrix lhs = quasimatrix_product(quasimatrix_product(a, b, phi), c, phi);
            CycloMatrix rhs = quasimatrix_product(a, quasimatrix_product(b, c, phi), phi);
            Cyclotomic factor = embed_unit(phi.at({da}, {db}, {dc}), 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t l = 0; l < 3; ++l)
                    REQUIRE(lhs.at(i, l) == factor * rhs.at(i, l));
        }
    }
}

TEST_CASE("serialization round trips preserve random objects exactly", "[props]") {
    std::mt19937 rng(kSeed + 6);

    SECTION("cocycle tables") {
        std::vector<CocycleTable> ts = enumerate_cocycles(GroupSpec({3}), 6);
        std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            const CocycleTable& t = ts[pick(rng)];
            REQUIRE(table_from_json(table_to_json(t)) == t);
        }
    }

    SECTION("matrices") {
        for (int trial = 0; trial < 10; ++trial) {
            CycloMatrix m(3, 12);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) m.set(i, j, random_cyclotomic(12, rng));
            REQUIRE(matrix_from_json(matrix_to_json(m)) == m);
        }
    }

    SECTION("unit scalars inside tables keep free and torsion parts apart") {
        auto gens = GeneratorSpec::make({{"q", 0}, {"zeta_6", 6}});
        std::uniform_int_distribution<long long> e(-4, 4);
        for (int trial = 0; trial < 10; ++trial) {
            UnitScalar u = UnitScalar::generator_power(gens, "q", e(rng)) *
                           UnitScalar::generator_power(gens, "zeta_6", e(rng));
            REQUIRE(unit_from_json(unit_to_json(u), gens) == u);
        }
    }
}
