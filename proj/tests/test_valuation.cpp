#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coxalg/cases.hpp"
#include "coxalg/valuation.hpp"
#include "coxalg/groebner.hpp"

using namespace coxalg;

namespace {
const CyclotomicField& F12 = CyclotomicField::get(12);
CycNum q(long n, long d = 1) { return CycNum::rational(F12, BigRat(n, d)); }
std::mt19937 rng(31337);

Poly random_nonzero(const RingPtr& R) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
    Poly p(R);
    while (p.is_zero()) {
        for (int t = 0; t < 4; ++t) {
            std::vector<int> exps(R->nvars());
            for (auto& x : exps) x = e(rng);
            p = p + Poly::term(R, Monomial(exps), q(c(rng)));
        }
    }
    return p;
}
}  // namespace

TEST_CASE("identity valuation is zero") {
    auto nu = monomial_valuation(FieldMatrix::identity(F12, 3));
    CHECK(nu.order_r == 1);
    auto R = PolyRing::make(F12, {"a", "b", "c"});
    CHECK(nu_eval(nu, random_nonzero(R)) == 0);
    CHECK_THROWS_AS(nu_eval(nu, Poly::zero(R)), error);
}

TEST_CASE("S3 valuation values") {
    auto d = cases::s3();
    auto nu = monomial_valuation(d.class_reps[0]);
    CHECK(nu.order_r == 2);
    std::vector<int> w = nu.weights;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{0, 0, 1, 1});
    // table pattern: 0 on eigenvalue-1 entries, 1 on eigenvalue -1 entries
    for (const auto& e : d.table) {
        long v = nu_eval(nu, e.poly);
        CHECK(v == e.char_exps[0]);
    }
}

TEST_CASE("additivity nu(fg) = nu(f) + nu(g)") {
    for (const char* name : {"s3", "g4"}) {
        auto d = cases::study(name);
        auto nu = monomial_valuation(d.class_reps[0]);
        for (int it = 0; it < 50; ++it) {
            Poly f = random_nonzero(d.ring), g = random_nonzero(d.ring);
            CHECK(nu_eval(nu, f * g) == nu_eval(nu, f) + nu_eval(nu, g));
            Poly s = f + g;
            if (!s.is_zero())
                CHECK(nu_eval(nu, s) >= std::min(nu_eval(nu, f), nu_eval(nu, g)));
        }
    }
}

TEST_CASE("valuation is insensitive to the eigenbasis choice") {
    auto d = cases::s3();
    auto nu = monomial_valuation(d.class_reps[0]);
    // scramble the eigenbasis inside eigenspaces: mix the two weight-1 columns
    MonomialValuation nu2 = nu;
    FieldMatrix p = nu.p;
    // find two columns with equal weight and mix them
    int c1 = -1, c2 = -1;
    for (std::size_t j = 0; j < nu.weights.size() && c2 < 0; ++j) {
        if (nu.weights[j] != 1) continue;
        if (c1 < 0) c1 = static_cast<int>(j);
        else c2 = static_cast<int>(j);
    }
    REQUIRE(c2 >= 0);
    for (std::size_t i = 0; i < p.rows(); ++i) {
        CycNum a = p.at(i, c1), b = p.at(i, c2);
        p.at(i, c1) = a + b * q(3);
        p.at(i, c2) = a - b;
    }
    nu2.p = p;
    nu2.p_inv = p.inverse();
    for (int it = 0; it < 30; ++it) {
        Poly f = random_nonzero(d.ring);
        CHECK(nu_eval(nu, f) == nu_eval(nu2, f));
    }
}

TEST_CASE("valuations vs ideal powers (order-2 classes)") {
    auto d = cases::s3();
    auto nu = monomial_valuation(d.class_reps[0]);
    auto R = d.ring;
    Poly x1 = Poly::variable(R, 0), y1 = Poly::variable(R, 1);
    Poly x2 = Poly::variable(R, 2), y2 = Poly::variable(R, 3);
    Ideal K(R, {x1 - y1, x2 - y2});  // printed fixed-space ideal of T
    for (int it = 0; it < 40; ++it) {
        Poly f = random_nonzero(R);
        long v = nu_eval(nu, f);
        for (long dd = 1; dd <= 4; ++dd) {
            bool in_power = ideal_contains(ideal_power(K, dd), f);
            CHECK(in_power == (v >= dd));
        }
    }
}

TEST_CASE("lifted valuation = table character exponents") {
    for (const char* name : {"s3", "d8-wreath", "g4"}) {
        auto d = cases::study(name);
        std::vector<GradedGenerator> gens;
        for (const auto& e : d.table) {
            GradedGenerator gg;
            gg.poly = e.poly;
            gg.name = e.wname;
            gens.push_back(gg);
        }
        auto a = lifted_valuation(d.class_reps, d.class_orders, gens,
                                  ActionConvention::Substitute);
        for (std::size_t i = 0; i < d.class_reps.size(); ++i)
            for (std::size_t j = 0; j < d.table.size(); ++j)
                CHECK(a[i][j] == d.table[j].char_exps[i]);
        // nu(phi_j) congruent to a_ij mod r_i and nu >= a
        for (std::size_t i = 0; i < d.class_reps.size(); ++i) {
            auto nu = monomial_valuation(d.class_reps[i]);
            for (std::size_t j = 0; j < d.table.size(); ++j) {
                long v = nu_eval(nu, d.table[j].poly);
                CHECK(v % d.class_orders[i] == a[i][j]);
                CHECK(v >= a[i][j]);
            }
        }
    }
}

TEST_CASE("intersection numbers") {
    SUBCASE("S3: nu = 1, r = 2, Cartan (-2)") {
        CartanData c;
        c.matrix = IntMatrix::from_rows({{-2}});
        c.class_orders = {2};
        c.class_reps = {cases::s3().class_reps[0]};
        CHECK(intersection_numbers({1}, c) == std::vector<long>{1});
        CHECK(intersection_numbers({0}, c) == std::vector<long>{0});
        CHECK(c.is_sum_of_a_type_blocks());
    }
    SUBCASE("D8: (1,1) against diag(-2,-2)") {
        auto d = cases::d8();
        CartanData c;
        c.matrix = IntMatrix::from_rows(d.cartan);
        c.class_orders = d.class_orders;
        c.class_reps = d.class_reps;
        CHECK(intersection_numbers({1, 1}, c) == std::vector<long>{1, 1});
        CHECK(c.is_sum_of_a_type_blocks());
    }
    SUBCASE("G4: A2 Cartan") {
        auto d = cases::g4();
        CartanData c;
        c.matrix = IntMatrix::from_rows(d.cartan);
        c.class_orders = d.class_orders;
        c.class_reps = d.class_reps;
        CHECK(intersection_numbers({1, 2}, c) == std::vector<long>{0, 1});
        CHECK(intersection_numbers({2, 1}, c) == std::vector<long>{1, 0});
        CHECK(intersection_numbers({0, 0}, c) == std::vector<long>{0, 0});
        CHECK(c.is_sum_of_a_type_blocks());
        CHECK(c.det() == 3);
        // non-integral input rejected
        CHECK_THROWS_AS(intersection_numbers({1, 0}, c), error);
    }
}

TEST_CASE("cartan auto-assembly") {
    SUBCASE("s3: single A1 block") {
        auto g = FiniteMatrixGroup::closure(cases::s3().group_generators);
        auto c = cartan_from_reflections(g);
        CHECK(c.size() == 1);
        CHECK(c.matrix.at(0, 0) == -2);
        CHECK(c.class_orders == std::vector<long>{2});
    }
    SUBCASE("d8: two A1 blocks") {
        auto g = FiniteMatrixGroup::closure(cases::d8().group_generators);
        auto c = cartan_from_reflections(g);
        CHECK(c.size() == 2);
        CHECK(c.matrix == IntMatrix::from_rows({{-2, 0}, {0, -2}}));
    }
    SUBCASE("g4: one A2 block") {
        auto g = FiniteMatrixGroup::closure(cases::g4().group_generators);
        auto c = cartan_from_reflections(g);
        CHECK(c.size() == 2);
        CHECK(c.matrix == IntMatrix::from_rows({{-2, 1}, {1, -2}}));
        CHECK(c.class_orders == std::vector<long>{3, 3});
        // block indices are powers of one generator: rep2 = rep1^2
        CHECK(c.class_reps[1] == c.class_reps[0] * c.class_reps[0]);
    }
}

TEST_CASE("g4 valuations match the conjectured exponents") {
    auto d = cases::g4();
    CartanData c;
    c.matrix = IntMatrix::from_rows(d.cartan);
    c.class_orders = d.class_orders;
    c.class_reps = d.class_reps;
    auto nu1 = monomial_valuation(d.class_reps[0]);
    auto nu2 = monomial_valuation(d.class_reps[1]);
    for (std::size_t j = 0; j < d.table.size(); ++j) {
        long v1 = nu_eval(nu1, d.table[j].poly);
        long v2 = nu_eval(nu2, d.table[j].poly);
        auto t = intersection_numbers({v1, v2}, c);
        if (j < 8) CHECK(t == std::vector<long>{0, 0});
        else if (j < 13) CHECK(t == std::vector<long>{0, 1});
        else CHECK(t == std::vector<long>{1, 0});
    }
}
