#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "coxalg/cases.hpp"
#include "coxalg/matgroup.hpp"

using namespace coxalg;

namespace {
const CyclotomicField& F12 = CyclotomicField::get(12);
CycNum q(long n, long d = 1) { return CycNum::rational(F12, BigRat(n, d)); }

std::map<long, int> order_profile(const FiniteMatrixGroup& g) {
    std::map<long, int> prof;
    for (const auto& e : g.elements()) prof[e.order]++;
    return prof;
}
}  // namespace

TEST_CASE("trivial group") {
    FieldMatrix id = FieldMatrix::identity(F12, 2);
    auto g = FiniteMatrixGroup::closure({id});
    CHECK(g.size() == 1);
    CHECK(conjugacy_classes(g).size() == 1);
    CHECK(commutator_subgroup(g).size() == 1);
    CHECK(abelianization(g).invariant_factors.empty());
}

TEST_CASE("S3 representation facts") {
    auto d = cases::s3();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    CHECK(g.size() == 6);
    auto h = commutator_subgroup(g);
    CHECK(h.size() == 3);
    CHECK(order_profile(h) == std::map<long, int>{{1, 1}, {3, 2}});  // cyclic of order 3
    auto ab = abelianization(g);
    CHECK(ab.invariant_factors == std::vector<long>{2});
    auto refl = symplectic_reflections(g);
    REQUIRE(refl.size() == 1);
    CHECK(refl[0].members.size() == 3);
    CHECK(refl[0].order == 2);
    CHECK_FALSE(reflections_in_commutator(g));
    auto habs = conjugacy_classes(h);
    CHECK(habs.size() == 3);
    for (const auto& c : habs) CHECK(c.size() == 1);
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
        CHECK(g.size() % c.size() == 0);
        total += c.size();
    }
    CHECK(total == g.size());
}

TEST_CASE("D8 wreath representation facts") {
    auto d = cases::d8();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    CHECK(g.size() == 8);
    auto h = commutator_subgroup(g);
    CHECK(h.size() == 2);  // {+-id}
    FieldMatrix mid = -FieldMatrix::identity(F12, 4);
    CHECK(h.contains(mid));
    auto ab = abelianization(g);
    CHECK(ab.invariant_factors == std::vector<long>{2, 2});
    auto refl = symplectic_reflections(g);
    REQUIRE(refl.size() == 2);
    for (const auto& rc : refl) {
        CHECK(rc.members.size() == 2);
        CHECK(rc.order == 2);
    }
    const FieldMatrix& t0 = d.group_generators[0];
    const FieldMatrix& t2 = d.group_generators[1];
    for (const auto& rc : refl) {
        const FieldMatrix& rep = g.elements()[rc.representative].matrix;
        bool cls0 = (rep == t0 || rep == -t0);
        bool cls2 = (rep == t2 || rep == -t2);
        CHECK((cls0 || cls2));
        for (int m : rc.members) {
            const FieldMatrix& mm = g.elements()[m].matrix;
            if (cls0) CHECK((mm == t0 || mm == -t0));
            if (cls2) CHECK((mm == t2 || mm == -t2));
        }
    }
    CHECK_FALSE(reflections_in_commutator(g));
    SUBCASE("{+-id} has no symplectic reflections") {
        auto pm = FiniteMatrixGroup::closure({mid});
        CHECK(symplectic_reflections(pm).empty());
    }
}

TEST_CASE("G4 representation facts") {
    auto d = cases::g4();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    CHECK(g.size() == 24);
    auto h = commutator_subgroup(g);
    CHECK(h.size() == 8);
    CHECK(order_profile(h) == std::map<long, int>{{1, 1}, {2, 1}, {4, 6}});
    auto ab = abelianization(g);
    CHECK(ab.invariant_factors == std::vector<long>{3});
    auto refl = symplectic_reflections(g);
    REQUIRE(refl.size() == 2);
    for (const auto& rc : refl) {
        CHECK(rc.members.size() == 4);
        CHECK(rc.order == 3);
    }
    CHECK_FALSE(reflections_in_commutator(g));
    int tau_idx = g.index_of(d.group_generators[1]);
    REQUIRE(tau_idx >= 0);
    auto ab_tau = ab.projection[static_cast<std::size_t>(tau_idx)];
    CHECK(ab_tau != std::vector<long>{0});
}

TEST_CASE("commutator subgroup is normal, |Ab| * |[G,G]| = |G|") {
    for (const char* name : {"s3", "d8-wreath", "g4"}) {
        auto d = cases::study(name);
        auto g = FiniteMatrixGroup::closure(d.group_generators);
        auto h = commutator_subgroup(g);
        for (const auto& ge : g.elements())
            for (const auto& he : h.elements())
                CHECK(h.contains(ge.matrix * he.matrix * ge.matrix.inverse()));
        CHECK(abelianization(g).order() * h.size() == g.size());
        for (const auto& rc : symplectic_reflections(g))
            for (int m : rc.members)
                CHECK(g.elements()[m].matrix.det() == q(1));
    }
}

TEST_CASE("character_of against the S3 table") {
    auto d = cases::s3();
    auto g = FiniteMatrixGroup::closure(d.group_generators);
    const FieldMatrix& t = d.class_reps[0];
    auto h = commutator_subgroup(g);
    for (const auto& entry : d.table) {
        CycNum lam = character_of(t, entry.poly, ActionConvention::Substitute);
        CycNum expect = CycNum::root_power(F12, entry.char_exps[0] * 6);  // zeta_2 = z^6
        CHECK(lam == expect);
        for (const auto& he : h.elements())
            CHECK(group_act(he.matrix, entry.poly, ActionConvention::Substitute) == entry.poly);
    }
    SUBCASE("invariant f has character 1 for any g") {
        Poly f = d.table[0].poly;  // x1 y1
        auto eg = FiniteMatrixGroup::closure({d.group_generators[0]});
        for (const auto& e : eg.elements())
            CHECK(character_of(e.matrix, f, ActionConvention::Substitute) == q(1));
    }
    SUBCASE("non-eigenvector is rejected") {
        Poly f = d.table[0].poly + d.table[7].poly;
        CHECK_THROWS_AS(character_of(t, f, ActionConvention::Substitute), error);
    }
}

TEST_CASE("character_of against the D8 and G4 tables") {
    SUBCASE("d8") {
        auto d = cases::d8();
        for (const auto& entry : d.table)
            for (std::size_t c = 0; c < 2; ++c) {
                CycNum lam = character_of(d.class_reps[c], entry.poly, ActionConvention::Substitute);
                CHECK(lam == CycNum::root_power(F12, entry.char_exps[c] * 6));
            }
    }
    SUBCASE("g4") {
        auto d = cases::g4();
        for (const auto& entry : d.table)
            for (std::size_t c = 0; c < 2; ++c) {
                CycNum lam = character_of(d.class_reps[c], entry.poly, ActionConvention::Substitute);
                CHECK(lam == CycNum::root_power(F12, entry.char_exps[c] * 4));  // zeta_3 = z^4
            }
    }
}
