#include <doctest.h>

#include <map>
#include <set>

#include "invgen/errors.hpp"
#include "invgen/ffmc/sampling.hpp"

using namespace invgen;
using namespace invgen::ffmc;

namespace {

// Counts obtained before the sampler existed, by a separate enumeration that classifies
// through the discriminant and the number of roots of the characteristic polynomial.
const std::map<std::string, std::uint64_t> kGl32Oracle{{"3", 48}, {"2,1", 56}, {"1,1,1", 0}};
constexpr std::uint64_t kGl32RegularSemisimple = 104;
const std::map<std::string, std::uint64_t> kSl25Oracle{{"2", 40}, {"1,1", 30}};
constexpr std::uint64_t kSl25RegularSemisimple = 70;

Poly poly(std::initializer_list<std::uint64_t> c) { return Poly(c); }

std::uint64_t eval(const PrimeField& F, const Poly& f, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

// Monic polynomials of the given degree, coefficients below the leading one enumerated in order.
std::vector<Poly> monic_of_degree(std::uint64_t p, int d) {
    std::vector<Poly> out;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t k = 0; k < total; ++k) {
        Poly f(d + 1, 0);
        std::uint64_t v = k;
        for (int i = 0; i < d; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[d] = 1;
        out.push_back(f);
    }
    return out;
}

// Factor degrees by trial division with every monic polynomial of lower degree.
std::multiset<int> trial_division_degrees(const PrimeField& F, Poly f) {
    std::multiset<int> out;
    for (int d = 1; degree(f) > 0 && d <= degree(f); ++d) {
        for (const auto& g : monic_of_degree(F.p(), d)) {
            while (degree(f) >= d) {
                auto [quo, rem] = divmod(F, f, g);
                if (!rem.empty()) break;
                out.insert(d);
                f = quo;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(3, 6) == 1);
    CHECK(F.reduce(-1) == 6);
    CHECK(F.neg(0) == 0);
    CHECK_THROWS_AS(F.inv(0), ContractError);
    CHECK_THROWS_AS(PrimeField(9), RangeError);
    CHECK_THROWS_AS(PrimeField(4, 2), RangeError);
    CHECK_THROWS_AS(PrimeField(2147483659ULL), RangeError);
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("polynomial basics") {
    PrimeField F(5);
    Poly f = poly({1, 0, 1});  // x^2 + 1 = (x - 2)(x - 3)
    auto [q, r] = divmod(F, f, poly({3, 1}));
    CHECK(r.empty());
    CHECK(q == poly({2, 1}));
    CHECK(gcd(F, f, poly({2, 1})) == poly({2, 1}));
    CHECK(derivative(F, poly({1, 2, 3})) == poly({2, 1}));
    CHECK(mul(F, poly({3, 1}), poly({2, 1})) == f);
    CHECK(to_string(poly({1, 0, 1})) == "x^2 + 1");
    CHECK_THROWS_AS(divmod(F, f, Poly{}), ContractError);
}

TEST_CASE("squarefree detection in characteristic p") {
    PrimeField F2(2);
    CHECK_FALSE(is_squarefree(F2, poly({1, 0, 1})));        // (x+1)^2
    CHECK_FALSE(is_squarefree(F2, poly({1, 0, 1, 0, 1})));  // (x^2+x+1)^2
    CHECK(is_squarefree(F2, poly({1, 1, 0, 1})));
    PrimeField F3(3);
    CHECK_FALSE(is_squarefree(F3, poly({1, 0, 0, 1})));  // x^3 + 1 = (x+1)^3
    auto dec = squarefree_decomposition(F3, poly({1, 0, 0, 1}));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].second == 3);
}

TEST_CASE("factor degrees agree with trial division") {
    for (std::uint64_t p : {2, 3}) {
        PrimeField F(p);
        for (int d = 1; d <= (p == 2 ? 6 : 4); ++d)
            for (const auto& f : monic_of_degree(p, d)) {
                auto expected = trial_division_degrees(F, f);
                auto got = factor_degrees(F, f);
                INFO(to_string(f) << " over F_" << p);
                CHECK(std::multiset<int>(got.parts().begin(), got.parts().end()) == expected);
                if (is_squarefree(F, f)) {
                    int total = 0;
                    for (auto [deg, cnt] : distinct_degree_counts(F, f)) total += deg * cnt;
                    CHECK(total == d);
                }
            }
    }
}

TEST_CASE("characteristic polynomial") {
    PrimeField F5(5);
    auto id = char_poly_analysis(F5, identity_matrix(2));
    CHECK(id.poly == poly({1, 3, 1}));  // (x - 1)^2
    CHECK_FALSE(id.squarefree);
    CHECK(id.degree_partition.str() == "1,1");

    Matrix d(2);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    auto da = char_poly_analysis(F5, d);
    CHECK(da.squarefree);
    CHECK(da.degree_partition.str() == "1,1");

    PrimeField F2(2);
    auto ca = char_poly_analysis(F2, companion_matrix(F2, poly({1, 1, 0, 1})));
    CHECK(ca.poly == poly({1, 1, 0, 1}));
    CHECK(ca.squarefree);
    CHECK(ca.degree_partition.str() == "3");

    // det(aI - M) == chi(a) at every field element
    PrimeField F11(11);
    Rng rng(5);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Matrix m = random_gl(n, F11, rng);
            Poly chi = char_poly(F11, m);
            CHECK(degree(chi) == n);
            for (std::uint64_t a = 0; a < 11; ++a) {
                Matrix s(n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) s.at(i, j) = F11.sub(i == j ? a : 0, m.at(i, j));
                CHECK(determinant(F11, s) == eval(F11, chi, a));
            }
        }
}

TEST_CASE("random matrices") {
    PrimeField F2(2);
    Rng rng(1);
    Matrix one = random_gl(1, F2, rng);
    CHECK(one.at(0, 0) == 1);

    Rng a(99), b(99);
    for (int i = 0; i < 20; ++i) CHECK(random_gl(2, F2, a) == random_gl(2, F2, b));

    PrimeField F5(5);
    Rng r(3);
    std::uint64_t rejections = 0;
    for (int i = 0; i < 200; ++i) CHECK(determinant(F5, random_sl(3, F5, r, &rejections)) == 1);
    CHECK(rejections > 0);

    // SL_2(2) has 6 elements; 6000 draws, each within 5 sigma of 1000
    std::map<std::vector<std::uint64_t>, int> seen;
    Rng s(11);
    for (int i = 0; i < 6000; ++i) seen[random_sl(2, F2, s).a]++;
    CHECK(seen.size() == 6);
    for (const auto& [m, c] : seen) CHECK(std::abs(c - 1000) < 5 * 29);
    CHECK_THROWS_AS(random_gl(9, F2, s), RangeError);
}

TEST_CASE("exhaustive GL3(2) reproduces the oracle") {
    auto r = exhaustive_statistics(MatrixGroup::GL, 3, 2);
    CHECK(r.samples == 168);
    CHECK(r.regular_semisimple == kGl32RegularSemisimple);
    for (const auto& [p, c] : r.counts) CHECK(c == kGl32Oracle.at(p.str()));
    CHECK(group_order(MatrixGroup::GL, 3, 2) == 168);

    auto t = compare_to_weyl(r);
    CHECK_FALSE(t.any_flagged);
    std::map<std::string, Rational> dev;
    for (const auto& row : t.rows) dev[row.partition.str()] = row.deviation;
    CHECK(dev["3"] == Rational(2, 7) - Rational(1, 3));
    CHECK(dev["2,1"] == Rational(1, 3) - Rational(1, 2));
    CHECK(dev["1,1,1"] == Rational(-1, 6));
    CHECK(t.non_regular_semisimple == Rational(64, 168));
}

TEST_CASE("exhaustive SL2(5) reproduces the oracle") {
    auto r = exhaustive_statistics(MatrixGroup::SL, 2, 5);
    CHECK(r.samples == 120);
    CHECK(r.regular_semisimple == kSl25RegularSemisimple);
    for (const auto& [p, c] : r.counts) CHECK(c == kSl25Oracle.at(p.str()));
    CHECK(group_order(MatrixGroup::SL, 2, 5) == 120);
    CHECK_THROWS_AS(exhaustive_statistics(MatrixGroup::GL, 4, 5), RangeError);
}

TEST_CASE("sampling reports") {
    auto a = torus_statistics(MatrixGroup::GL, 3, 7, 2000, 42, 1);
    auto b = torus_statistics(MatrixGroup::GL, 3, 7, 2000, 42, 1);
    CHECK(a.counts == b.counts);
    std::uint64_t total = 0;
    for (const auto& [p, c] : a.counts) total += c;
    CHECK(total == a.regular_semisimple);
    CHECK(a.regular_semisimple <= a.samples);
    CHECK(a.counts.size() == 3);

    auto m1 = torus_statistics(MatrixGroup::SL, 2, 11, 3001, 5, 4);
    auto m2 = torus_statistics(MatrixGroup::SL, 2, 11, 3001, 5, 4);
    CHECK(m1.counts == m2.counts);
    CHECK(m1.samples == 3001);

    ffmc::SampleReport empty;
    empty.n = 2;
    empty.q = 5;
    CHECK_THROWS_AS(compare_to_weyl(empty), ContractError);
    CHECK_THROWS_AS(torus_statistics(MatrixGroup::GL, 2, 6, 10, 1), RangeError);
    CHECK_THROWS_AS(torus_statistics(MatrixGroup::GL, 2, 5, 0, 1), RangeError);
    CHECK_THROWS(parse_group("Sp"));
}
