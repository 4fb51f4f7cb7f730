#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coxalg/cases.hpp"
#include "coxalg/invariants.hpp"

using namespace coxalg;

namespace {
const CyclotomicField& F12 = CyclotomicField::get(12);
CycNum q(long n, long d = 1) { return CycNum::rational(F12, BigRat(n, d)); }
std::mt19937 rng(5150);

Poly random_poly(const RingPtr& R, int deg) {
    std::uniform_int_distribution<int> c(-3, 3);
    Poly p(R);
    for (const auto& m : monomials_of_degree(R, deg))
        if (rng() % 3 == 0) p = p + Poly::term(R, m, q(c(rng)));
    return p;
}
}  // namespace

TEST_CASE("reynolds operator") {
    auto d = cases::s3();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    auto h = commutator_subgroup(g);
    auto R = d.ring;
    SUBCASE("idempotence on random inputs") {
        for (int it = 0; it < 30; ++it) {
            Poly f = random_poly(R, 1 + static_cast<int>(rng() % 4));
            Poly r = reynolds(f, h);
            CHECK(reynolds(r, h) == r);
            for (const auto& e : h.elements())
                CHECK(group_act(e.matrix, r, ActionConvention::Substitute) == r);
        }
    }
    SUBCASE("invariant fixed, x1 y1 is an example") {
        Poly f = d.table[0].poly;
        CHECK(reynolds(f, h) == f);
    }
    SUBCASE("odd monomial under {+-id} averages to zero") {
        FieldMatrix mid = -FieldMatrix::identity(F12, 4);
        auto pm = FiniteMatrixGroup::closure({mid});
        Poly x1 = Poly::variable(R, 0);
        CHECK(reynolds(x1, pm).is_zero());
    }
}

TEST_CASE("molien series") {
    SUBCASE("trivial group in 2 variables: 1, 2, 3, ...") {
        auto R2 = PolyRing::make(F12, {"x", "y"});
        auto triv = FiniteMatrixGroup::closure({FieldMatrix::identity(F12, 2)});
        auto m = molien_series(triv, 5);
        CHECK(m == std::vector<long>{1, 2, 3, 4, 5, 6});
    }
    SUBCASE("{+-id} in dim 4: degree-2 coefficient 10") {
        auto pm = FiniteMatrixGroup::closure({-FieldMatrix::identity(F12, 4)});
        auto m = molien_series(pm, 4);
        CHECK(m[0] == 1);
        CHECK(m[1] == 0);
        CHECK(m[2] == 10);
        CHECK(m[3] == 0);
    }
    SUBCASE("<eps> in the S3 rep: degree-2 coefficient 4") {
        auto d = cases::s3();
        auto h = FiniteMatrixGroup::closure({d.group_generators[0]});
        auto m = molien_series(h, 3);
        CHECK(m[2] == 4);
    }
}

TEST_CASE("invariant generators") {
    SUBCASE("trivial group: the variables") {
        auto triv = FiniteMatrixGroup::closure({FieldMatrix::identity(F12, 2)});
        auto gens = invariant_generators(triv, 2);
        REQUIRE(gens.size() == 2);
        CHECK(gens[0].degree() == 1);
        CHECK(gens[1].degree() == 1);
    }
    SUBCASE("{+-id} in dim 4: ten quadrics") {
        auto pm = FiniteMatrixGroup::closure({-FieldMatrix::identity(F12, 4)});
        auto gens = invariant_generators(pm, 4);
        CHECK(gens.size() == 10);
        for (const auto& g : gens) CHECK(g.degree() == 2);
    }
}

TEST_CASE("split eigenvectors: S3 block sizes") {
    auto d = cases::s3();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    auto h = commutator_subgroup(g);
    auto gens = invariant_generators(h, 3, d.ring);
    auto split = split_eigenvectors(gens, d.class_reps, ActionConvention::Substitute);
    CHECK(split.size() == gens.size());
    int plus = 0, minus = 0;
    for (const auto& gg : split) {
        REQUIRE(gg.character.size() == 1);
        if (gg.character[0] == q(1)) ++plus;
        else if (gg.character[0] == q(-1)) ++minus;
    }
    CHECK(plus == 7);
    CHECK(minus == 5);
    SUBCASE("all-invariant input has trivial characters") {
        std::vector<Poly> inv = {d.table[0].poly, d.table[1].poly};
        for (const auto& gg : split_eigenvectors(inv, d.class_reps, ActionConvention::Substitute))
            CHECK(gg.character[0] == q(1));
    }
}

TEST_CASE("split eigenvectors preserves graded span dimension") {
    auto d = cases::d8();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    auto h = commutator_subgroup(g);
    auto gens = invariant_generators(h, 2, d.ring);
    auto split = split_eigenvectors(gens, d.class_reps, ActionConvention::Substitute);
    CHECK(split.size() == gens.size());
    // D8 character (-1,-1) block is 1-dimensional (phi_02)
    int mm = 0;
    for (const auto& gg : split)
        if (gg.character[0] == q(-1) && gg.character[1] == q(-1)) ++mm;
    CHECK(mm == 1);
}

TEST_CASE("verify_generating_table") {
    SUBCASE("Table 1 (S3) with bound 6") {
        auto d = cases::s3();
        auto g = FiniteMatrixGroup::closure(d.group_generators);
        auto h = commutator_subgroup(g);
        std::vector<GradedGenerator> table;
        for (const auto& e : d.table) {
            GradedGenerator gg;
            gg.name = e.wname;
            gg.poly = e.poly;
            gg.degree = e.poly.degree();
            for (std::size_t c = 0; c < d.class_reps.size(); ++c)
                gg.character.push_back(CycNum::root_power(F12, e.char_exps[c] * 6));
            table.push_back(gg);
        }
        auto check = verify_generating_table(table, h, d.class_reps, 6,
                                             ActionConvention::Substitute);
        for (const auto& f : check.failures) MESSAGE(f);
        CHECK(check.pass);
        SUBCASE("dropping phi_4 fails at degree 3 with a witness") {
            std::vector<GradedGenerator> broken;
            for (const auto& e : table)
                if (e.name != "w4") broken.push_back(e);
            auto bad = verify_generating_table(broken, h, d.class_reps, 6,
                                               ActionConvention::Substitute);
            CHECK_FALSE(bad.pass);
            bool degree3 = false;
            for (const auto& f : bad.failures)
                if (f.find("degree 3") != std::string::npos &&
                    f.find("monomial") != std::string::npos)
                    degree3 = true;
            CHECK(degree3);
        }
    }
}
