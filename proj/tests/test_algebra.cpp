#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coxalg/cyclotomic.hpp"
#include "coxalg/intmatrix.hpp"
#include "coxalg/matrix.hpp"
#include "coxalg/poly.hpp"

using namespace coxalg;

namespace {
const CyclotomicField& F12 = CyclotomicField::get(12);

CycNum z(long k) { return CycNum::root_power(F12, k); }
CycNum q(long num, long den = 1) { return CycNum::rational(F12, BigRat(num, den)); }

std::mt19937 rng(20240811);

CycNum random_cyc() {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<BigRat> c(4);
    for (auto& x : c) x = BigRat(d(rng), 1 + std::abs(d(rng)));
    return CycNum::from_coeffs(F12, c);
}
}  // namespace

TEST_CASE("cyclotomic polynomial values") {
    auto p12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    CHECK(p12 == std::vector<BigRat>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(1) == std::vector<BigRat>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<BigRat>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<BigRat>{1, 1, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("normalization examples") {
    // zeta_12^12 = 1
    CHECK(z(12) == q(1));
    // zeta_12^4 = z^2 - 1
    CycNum expect = CycNum::from_coeffs(F12, {BigRat(-1), BigRat(0), BigRat(1)});
    CHECK(z(4) == expect);
    // zero vector
    CHECK(CycNum::from_coeffs(F12, {}).is_zero());
}

TEST_CASE("inverse examples") {
    CHECK(q(1).inverse() == q(1));
    CHECK(q(2).inverse() == q(1, 2));
    CHECK(z(1).inverse() == z(11));
    CHECK_THROWS_AS(CycNum(F12).inverse(), error);
}

TEST_CASE("field axioms on random inputs") {
    for (int it = 0; it < 200; ++it) {
        CycNum a = random_cyc(), b = random_cyc(), c = random_cyc();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == q(1));
    }
}

TEST_CASE("smith normal form") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IntMatrix::identity(3));
        CHECK(s.d == IntMatrix::identity(3));
    }
    SUBCASE("diag(2,2)") {
        auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 2}}));
        CHECK(s.invariant_factors == std::vector<BigInt>{2, 2});
    }
    SUBCASE("[[2,4],[0,6]] -> diag(2,6)") {
        IntMatrix a = IntMatrix::from_rows({{2, 4}, {0, 6}});
        auto s = smith_normal_form(a);
        CHECK(s.invariant_factors == std::vector<BigInt>{2, 6});
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs(s.u.det()) == 1);
        CHECK(abs(s.v.det()) == 1);
    }
    SUBCASE("random UAV = D, divisibility, |det| = prod d_i") {
        std::uniform_int_distribution<int> d(-6, 6);
        for (int it = 0; it < 50; ++it) {
            std::size_t n = 3;
            IntMatrix a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) = d(rng);
            auto s = smith_normal_form(a);
            CHECK(s.u * a * s.v == s.d);
            CHECK(abs(s.u.det()) == 1);
            CHECK(abs(s.v.det()) == 1);
            for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
                CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
            BigInt prod = 1;
            for (const auto& f : s.invariant_factors) prod *= f;
            if (s.invariant_factors.size() == n) CHECK(abs(a.det()) == prod);
            else CHECK(a.det() == 0);
        }
    }
}

TEST_CASE("polynomial ring arithmetic") {
    auto R = PolyRing::make(F12, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Poly f = x * x - y * y;
    Poly g = (x - y) * (x + y);
    CHECK(f == g);
    CHECK((f - g).is_zero());
    CHECK(f.degree() == 2);
    CHECK(f.pow(3) == f * f * f);

    std::uniform_int_distribution<int> d(-3, 3);
    auto rand_poly = [&]() {
        Poly p(R);
        for (int t = 0; t < 4; ++t) {
            Monomial m(std::vector<int>{std::abs(d(rng)), std::abs(d(rng))});
            p = p + Poly::term(R, m, q(d(rng)));
        }
        return p;
    };
    for (int it = 0; it < 100; ++it) {
        Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("diagonalize finite order") {
    SUBCASE("identity r=1") {
        auto d = diagonalize_finite_order(FieldMatrix::identity(F12, 3), 1);
        CHECK(d.exponents == std::vector<int>{0, 0, 0});
        CHECK(d.p.is_identity());
    }
    SUBCASE("S3 swap matrix") {
        FieldMatrix t(F12, 4, 4);
        t.at(0, 1) = q(1); t.at(1, 0) = q(1); t.at(2, 3) = q(1); t.at(3, 2) = q(1);
        auto d = diagonalize_finite_order(t, 2);
        std::vector<int> exps = d.exponents;
        std::sort(exps.begin(), exps.end());
        CHECK(exps == std::vector<int>{0, 0, 1, 1});
        // reassembly P * D * P^-1 == t
        FieldMatrix dm(F12, 4, 4);
        for (int i = 0; i < 4; ++i) dm.at(i, i) = z(d.exponents[i] * 6);
        CHECK(d.p * dm * d.p_inv == t);
    }
    SUBCASE("errors") {
        FieldMatrix t(F12, 2, 2);
        t.at(0, 0) = q(2); t.at(1, 1) = q(1);
        CHECK_THROWS_AS(diagonalize_finite_order(t, 2), error);
        CHECK_THROWS_AS(diagonalize_finite_order(FieldMatrix::identity(F12, 2), 5), error);
    }
}

TEST_CASE("linear substitute") {
    auto R = PolyRing::make(F12, {"x1", "y1", "x2", "y2"});
    Poly x1 = Poly::variable(R, 0), y1 = Poly::variable(R, 1);
    Poly x2 = Poly::variable(R, 2), y2 = Poly::variable(R, 3);
    SUBCASE("identity and constants") {
        FieldMatrix id = FieldMatrix::identity(F12, 4);
        CHECK(linear_substitute(x1, id) == x1);
        Poly c = Poly::rational_constant(R, 7);
        CHECK(linear_substitute(c, id) == c);
    }
    SUBCASE("S3 eigenbasis change") {
        // u = x - y, v = x + y: substitute x1 = u1 + v1 ... with P columns eigenvectors
        // Here directly: x1 -> (u1+v1), y1 -> (-u1+v1) realized by matrix rows
        FieldMatrix p(F12, 4, 4);
        p.at(0, 0) = q(1); p.at(0, 2) = q(1);
        p.at(1, 0) = q(-1); p.at(1, 2) = q(1);
        p.at(2, 1) = q(1); p.at(2, 3) = q(1);
        p.at(3, 1) = q(-1); p.at(3, 3) = q(1);
        Poly f = x1 * y2 - x2 * y1;
        Poly g = linear_substitute(f, p);
        // expect 2*u1*v2 - 2*u2*v1 in new coordinates (x1<->u1, y1<->u2, x2<->v1, y2<->v2)
        Poly expect = (x1 * y2 - y1 * x2) * q(2);
        CHECK(g == expect);
    }
    SUBCASE("hom property and inverse round trip") {
        FieldMatrix p(F12, 4, 4);
        std::uniform_int_distribution<int> d(-2, 2);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) p.at(i, j) = q(d(rng));
        } while (p.det().is_zero());
        Poly f = x1 * x2 + y1 * q(3);
        Poly g = y2 * y2 - x1;
        CHECK(linear_substitute(f * g, p) == linear_substitute(f, p) * linear_substitute(g, p));
        CHECK(linear_substitute(linear_substitute(f, p), p.inverse()) == f);
    }
    SUBCASE("singular matrix rejected") {
        FieldMatrix p(F12, 4, 4);
        CHECK_THROWS_AS(linear_substitute(x1, p), error);
    }
}

TEST_CASE("poly printing round basics") {
    auto R = PolyRing::make(F12, {"x1", "y2"});
    Poly f = Poly::term(R, Monomial(std::vector<int>{2, 1}), q(3, 2) * z(2));
    CHECK(f.str() == "3/2*z^2*x1^2*y2");
    Poly g = Poly::term(R, Monomial(std::vector<int>{1, 0}), z(2) - q(1));
    CHECK(g.str() == "(-1 + z^2)*x1");
}
