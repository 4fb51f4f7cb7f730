#include "coxalg/cases.hpp"

namespace coxalg::cases {

namespace {

const CyclotomicField& F12 = CyclotomicField::get(12);

CycNum q(long n, long d = 1) { return CycNum::rational(F12, BigRat(n, d)); }
CycNum zp(long k) { return CycNum::root_power(F12, k); }

FieldMatrix mat4(const std::vector<std::vector<CycNum>>& rows) {
    return FieldMatrix::from_rows(F12, rows);
}

struct TermSpec {
    CycNum c;
    std::vector<int> e;
};

Poly build(const RingPtr& r, const std::vector<TermSpec>& ts) {
    std::vector<Term> terms;
    for (const auto& t : ts) terms.push_back({Monomial(t.e), t.c});
    return Poly::from_terms(r, std::move(terms));
}

const CycNum O = CycNum(F12);  // zero

}  // namespace

RingPtr StudyData::w_ring() const {
    return PolyRing::make(ring->field(), w_names());
}

std::vector<std::string> StudyData::w_names() const {
    std::vector<std::string> names;
    for (const auto& e : table) names.push_back(e.wname);
    for (const auto& u : u_names) names.push_back(u);
    return names;
}

StudyData s3() {
    StudyData d;
    d.name = "s3";
    d.ring = PolyRing::make(F12, {"x1", "y1", "x2", "y2"});
    CycNum e = zp(4), e2 = zp(8), one = q(1);
    FieldMatrix eps = mat4({{e, O, O, O}, {O, e2, O, O}, {O, O, e, O}, {O, O, O, e2}});
    FieldMatrix t = mat4({{O, one, O, O}, {one, O, O, O}, {O, O, O, one}, {O, O, one, O}});
    d.group_generators = {eps, t};
    d.class_reps = {t};
    d.class_orders = {2};
    d.cartan = {{-2}};
    auto R = d.ring;
    auto P = [&](const std::vector<TermSpec>& ts) { return build(R, ts); };
    d.table = {
        {"w1", P({{q(1), {1, 1, 0, 0}}}), {0}},
        {"w2", P({{q(1), {0, 0, 1, 1}}}), {0}},
        {"w3", P({{q(1), {1, 0, 0, 1}}, {q(1), {0, 1, 1, 0}}}), {0}},
        {"w4", P({{q(1), {3, 0, 0, 0}}, {q(1), {0, 3, 0, 0}}}), {0}},
        {"w5", P({{q(1), {0, 0, 3, 0}}, {q(1), {0, 0, 0, 3}}}), {0}},
        {"w6", P({{q(1), {2, 0, 1, 0}}, {q(1), {0, 2, 0, 1}}}), {0}},
        {"w7", P({{q(1), {1, 0, 2, 0}}, {q(1), {0, 1, 0, 2}}}), {0}},
        {"w8", P({{q(1), {1, 0, 0, 1}}, {q(-1), {0, 1, 1, 0}}}), {1}},
        {"w9", P({{q(1), {3, 0, 0, 0}}, {q(-1), {0, 3, 0, 0}}}), {1}},
        {"w10", P({{q(1), {0, 0, 3, 0}}, {q(-1), {0, 0, 0, 3}}}), {1}},
        {"w11", P({{q(1), {2, 0, 1, 0}}, {q(-1), {0, 2, 0, 1}}}), {1}},
        {"w12", P({{q(1), {1, 0, 2, 0}}, {q(-1), {0, 1, 0, 2}}}), {1}},
    };
    d.u_names = {"u"};
    d.t_names = {"t"};
    return d;
}

StudyData d8() {
    StudyData d;
    d.name = "d8-wreath";
    d.ring = PolyRing::make(F12, {"x1", "x2", "x3", "x4"});
    CycNum one = q(1), m = q(-1);
    FieldMatrix t0 = mat4({{one, O, O, O}, {O, m, O, O}, {O, O, one, O}, {O, O, O, m}});
    FieldMatrix t2 = mat4({{O, one, O, O}, {one, O, O, O}, {O, O, O, one}, {O, O, one, O}});
    d.group_generators = {t0, t2};
    // class-0 representative is -T0: the printed fixed-space ideals
    // K0=(x1,x3), K0'=(x2,x4) hold for it (see Proposition 5.1 vs section 5.2)
    d.class_reps = {-t0, t2};
    d.class_orders = {2, 2};
    d.cartan = {{-2, 0}, {0, -2}};
    auto R = d.ring;
    auto P = [&](const std::vector<TermSpec>& ts) { return build(R, ts); };
    CycNum i = zp(3), i2 = zp(3) * q(2), m2 = q(-2), p2 = q(2);
    d.table = {
        {"w01", P({{m2, {1, 0, 0, 1}}, {m2, {0, 1, 1, 0}}}), {1, 0}},
        // sign chosen so that ker Psi reproduces the printed embedding ideal;
        // the table's eigenvector normalization is free and every table check
        // is insensitive to it
        {"w02", P({{-i2, {1, 0, 0, 1}}, {i2, {0, 1, 1, 0}}}), {1, 1}},
        {"w03", P({{i2, {1, 1, 0, 0}}, {i2, {0, 0, 1, 1}}}), {1, 0}},
        {"w04", P({{m2, {1, 1, 0, 0}}, {p2, {0, 0, 1, 1}}}), {1, 0}},
        {"w12", P({{p2, {1, 0, 1, 0}}, {m2, {0, 1, 0, 1}}}), {0, 1}},
        {"w13", P({{m, {2, 0, 0, 0}}, {m, {0, 2, 0, 0}}, {one, {0, 0, 2, 0}}, {one, {0, 0, 0, 2}}}),
         {0, 0}},
        {"w14", P({{i, {2, 0, 0, 0}}, {i, {0, 2, 0, 0}}, {i, {0, 0, 2, 0}}, {i, {0, 0, 0, 2}}}),
         {0, 0}},
        {"w23", P({{-i, {2, 0, 0, 0}}, {i, {0, 2, 0, 0}}, {-i, {0, 0, 2, 0}}, {i, {0, 0, 0, 2}}}),
         {0, 1}},
        {"w24", P({{one, {2, 0, 0, 0}}, {m, {0, 2, 0, 0}}, {m, {0, 0, 2, 0}}, {one, {0, 0, 0, 2}}}),
         {0, 1}},
        {"w34", P({{p2, {1, 0, 1, 0}}, {p2, {0, 1, 0, 1}}}), {0, 0}},
    };
    d.u_names = {"u0", "u2"};
    d.t_names = {"t0", "t2"};
    return d;
}

StudyData g4() {
    StudyData d;
    d.name = "g4";
    d.ring = PolyRing::make(F12, {"x1", "y1", "x2", "y2"});
    // i = z^3, eps = z^4, a = z^5 (a^2 = -eps); these choices reproduce the
    // printed eigenvalue blocks and valuations
    CycNum i = zp(3), e = zp(4), e2 = zp(8), one = q(1);
    CycNum mh = q(-1, 2);
    CycNum op = one + i, om = q(-1) + i, opm = one - i;
    FieldMatrix iota = mat4({{i, O, O, O}, {O, -i, O, O}, {O, O, i, O}, {O, O, O, -i}});
    FieldMatrix tau = mat4({{mh * op * e, mh * om * e, O, O},
                            {mh * op * e, mh * opm * e, O, O},
                            {O, O, mh * op * e2, mh * om * e2},
                            {O, O, mh * op * e2, mh * opm * e2}});
    d.group_generators = {iota, tau};
    d.class_reps = {tau, tau * tau};
    d.class_orders = {3, 3};
    d.cartan = {{-2, 1}, {1, -2}};
    auto R = d.ring;
    auto P = [&](const std::vector<TermSpec>& ts) { return build(R, ts); };
    CycNum a2 = zp(10);
    auto ra = [&](long p, long q_, long r, long s) {  // p/q + (r/s) a^2
        return CycNum::rational(F12, BigRat(p, q_)) + CycNum::rational(F12, BigRat(r, s)) * a2;
    };
    d.table = {
        {"w1", P({{one, {0, 1, 1, 0}}, {q(-1), {1, 0, 0, 1}}}), {0, 0}},
        {"w2", P({{one, {0, 0, 5, 1}}, {q(-1), {0, 0, 1, 5}}}), {0, 0}},
        {"w3", P({{one, {5, 1, 0, 0}}, {q(-1), {1, 5, 0, 0}}}), {0, 0}},
        {"w4", P({{one, {4, 0, 0, 0}}, {ra(2, 1, -4, 1), {2, 2, 0, 0}}, {one, {0, 4, 0, 0}}}),
         {0, 0}},
        {"w5", P({{one, {0, 0, 4, 0}}, {ra(-2, 1, 4, 1), {0, 0, 2, 2}}, {one, {0, 0, 0, 4}}}),
         {0, 0}},
        {"w6", P({{one, {1, 0, 3, 0}},
                  {ra(1, 1, -2, 1), {0, 1, 2, 1}},
                  {ra(1, 1, -2, 1), {1, 0, 1, 2}},
                  {one, {0, 1, 0, 3}}}),
         {0, 0}},
        {"w7", P({{one, {3, 0, 1, 0}},
                  {ra(-1, 1, 2, 1), {1, 2, 1, 0}},
                  {ra(-1, 1, 2, 1), {2, 1, 0, 1}},
                  {one, {0, 3, 0, 1}}}),
         {0, 0}},
        {"w8", P({{ra(-2, 1, 2, 1), {2, 1, 3, 0}},
                  {ra(-2, 1, 2, 1), {3, 0, 2, 1}},
                  {ra(2, 1, -2, 1), {0, 3, 1, 2}},
                  {ra(2, 1, -2, 1), {1, 2, 0, 3}}}),
         {0, 0}},
        {"w9", P({{-a2, {2, 0, 2, 0}},
                  {ra(2, 3, -1, 3), {0, 2, 2, 0}},
                  {ra(8, 3, -4, 3), {1, 1, 1, 1}},
                  {ra(2, 3, -1, 3), {2, 0, 0, 2}},
                  {-a2, {0, 2, 0, 2}}}),
         {1, 2}},
        {"w10", P({{one, {0, 0, 4, 0}}, {ra(2, 1, -4, 1), {0, 0, 2, 2}}, {one, {0, 0, 0, 4}}}),
         {1, 2}},
        {"w11", P({{one, {3, 0, 1, 0}},
                   {ra(1, 1, -2, 1), {1, 2, 1, 0}},
                   {ra(1, 1, -2, 1), {2, 1, 0, 1}},
                   {one, {0, 3, 0, 1}}}),
         {1, 2}},
        {"w12", P({{q(-10), {4, 1, 1, 0}},
                   {q(2), {0, 5, 1, 0}},
                   {q(-2), {5, 0, 0, 1}},
                   {q(10), {1, 4, 0, 1}}}),
         {1, 2}},
        {"w13", P({{q(2), {1, 1, 4, 0}},
                   {q(4), {2, 0, 3, 1}},
                   {q(-4), {0, 2, 1, 3}},
                   {q(-2), {1, 1, 0, 4}}}),
         {1, 2}},
        {"w14", P({{a2 - one, {2, 0, 2, 0}},
                   {ra(1, 3, 1, 3), {0, 2, 2, 0}},
                   {ra(4, 3, 4, 3), {1, 1, 1, 1}},
                   {ra(1, 3, 1, 3), {2, 0, 0, 2}},
                   {a2 - one, {0, 2, 0, 2}}}),
         {2, 1}},
        {"w15", P({{one, {4, 0, 0, 0}}, {ra(-2, 1, 4, 1), {2, 2, 0, 0}}, {one, {0, 4, 0, 0}}}),
         {2, 1}},
        {"w16", P({{one, {1, 0, 3, 0}},
                   {ra(-1, 1, 2, 1), {0, 1, 2, 1}},
                   {ra(-1, 1, 2, 1), {1, 0, 1, 2}},
                   {one, {0, 1, 0, 3}}}),
         {2, 1}},
        {"w17", P({{q(2), {0, 1, 5, 0}},
                   {q(10), {1, 0, 4, 1}},
                   {q(-10), {0, 1, 1, 4}},
                   {q(-2), {1, 0, 0, 5}}}),
         {2, 1}},
        {"w18", P({{q(-4), {3, 1, 2, 0}},
                   {q(-2), {4, 0, 1, 1}},
                   {q(2), {0, 4, 1, 1}},
                   {q(4), {1, 3, 0, 2}}}),
         {2, 1}},
    };
    d.u_names = {"u1", "u2"};
    d.t_names = {"t1", "t2"};
    return d;
}

const StudyData& study(const std::string& name) {
    static const StudyData s3d = s3();
    static const StudyData d8d = d8();
    static const StudyData g4d = g4();
    if (name == "s3") return s3d;
    if (name == "d8-wreath" || name == "d8") return d8d;
    if (name == "g4") return g4d;
    throw error("unknown case: " + name);
}

// ---------------------------------------------------------------- D8 data ----

namespace {

// w-ring variable indices in the order w01,w02,w03,w04,w12,w13,w14,w23,w24,w34,u0,u2
Poly wv(const RingPtr& r, const char* name) {
    int i = r->var_index(name);
    if (i < 0) throw error(std::string("missing variable ") + name);
    return Poly::variable(r, static_cast<std::size_t>(i));
}

}  // namespace

std::vector<Poly> d8_kernel_generators(const RingPtr& w) {
    Poly w01 = wv(w, "w01"), w02 = wv(w, "w02"), w03 = wv(w, "w03"), w04 = wv(w, "w04");
    Poly w12 = wv(w, "w12"), w13 = wv(w, "w13"), w14 = wv(w, "w14"), w23 = wv(w, "w23");
    Poly w24 = wv(w, "w24"), w34 = wv(w, "w34"), u0 = wv(w, "u0"), u2 = wv(w, "u2");
    return {
        w14 * w23 + w13 * w24 - w12 * w34,
        w04 * w23 - w03 * w24 - w02 * w34,
        w04 * w13 + w03 * w14 - w01 * w34,
        w04 * w12 - w02 * w14 - w01 * w24,
        w03 * w12 + w02 * w13 - w01 * w23,
        w02 * w12 * u2 - w03 * w13 + w04 * w14,
        w01 * w14 - w02 * w24 * u2 + w03 * w34,
        w01 * w13 + w02 * w23 * u2 + w04 * w34,
        w01 * w12 + w03 * w23 + w04 * w24,
        w03 * w04 * u0 - w13 * w14 + w23 * w24 * u2,
        w02 * w04 * u0 + w12 * w14 + w23 * w34,
        w01 * w04 * u0 + w12 * w24 * u2 + w13 * w34,
        w02 * w03 * u0 - w12 * w13 - w24 * w34,
        w01 * w03 * u0 + w12 * w23 * u2 + w14 * w34,
        w01 * w02 * u0 + w13 * w23 - w14 * w24,
        w02 * w02 * u0 + w12 * w12 + w23 * w23 + w24 * w24,
        w03 * w03 * u0 + w13 * w13 + w23 * w23 * u2 + w34 * w34,
        w01 * w01 + w02 * w02 * u2 + w03 * w03 + w04 * w04,
        w04 * w04 * u0 + w14 * w14 + w24 * w24 * u2 + w34 * w34,
        w01 * w01 * u0 + w12 * w12 * u2 + w13 * w13 + w14 * w14,
    };
}

std::vector<Ideal> d8_central_components(const RingPtr& w) {
    Poly w01 = wv(w, "w01"), w02 = wv(w, "w02"), w03 = wv(w, "w03"), w04 = wv(w, "w04");
    Poly w12 = wv(w, "w12"), w13 = wv(w, "w13"), w14 = wv(w, "w14"), w23 = wv(w, "w23");
    Poly w24 = wv(w, "w24"), w34 = wv(w, "w34"), u0 = wv(w, "u0"), u2 = wv(w, "u2");
    Ideal wu(w, {w01, w02, w03, w04, w12, w13, w14, w23, w24, w34});
    Ideal w02c(w, {w01 * w23 - w03 * w12, w01 * w01 + w03 * w03 + w04 * w04,
                   w03 * w24 - w04 * w23, w12 * w12 + w23 * w23 + w24 * w24,
                   w04 * w12 - w01 * w24, w01 * w12 + w03 * w23 + w04 * w24,
                   w13, w14, w34, u0, u2});
    Ideal w0(w, {w01, w03, w04, w13, w14, w34, u2,
                 w02 * w02 * u0 + w12 * w12 + w23 * w23 + w24 * w24});
    Ideal w2(w, {w12, w23, w24, w13, w14, w34, u0,
                 w02 * w02 * u2 + w01 * w01 + w03 * w03 + w04 * w04});
    return {wu, w02c, w0, w2};
}

std::vector<std::vector<long>> d8_torus_weights() {
    // order: w01,w02,w03,w04,w12,w13,w14,w23,w24,w34,u0,u2
    return {{1, 0}, {1, 1}, {1, 0}, {1, 0}, {0, 1}, {0, 0},
            {0, 0}, {0, 1}, {0, 1}, {0, 0}, {-2, 0}, {0, -2}};
}

std::vector<long> d8_chi() { return {2, 1}; }

std::vector<std::vector<long>> d8_sigma_rays() {
    return {{0, 1, 1, -1}, {0, 1, 2, -1}, {0, 0, 0, 1}, {0, 1, 0, 1}, {1, -1, -1, 1}};
}

std::vector<std::vector<long>> d8_quotient_projection() {
    return {{0, -1, 1, 0}, {0, 2, 0, 1}};
}

std::vector<std::vector<long>> d8_printed_fan_rays() {
    return {{1, 1}, {1, 0}, {-1, 3}, {-1, 0}};
}

std::vector<std::string> d8_w02_coordinates() {
    return {"w02", "w01", "w03", "w04", "w12", "w23", "w24"};
}

std::vector<Poly> d8_w02_binomials(const RingPtr& r) {
    Poly w01 = wv(r, "w01"), w03 = wv(r, "w03"), w04 = wv(r, "w04");
    Poly w12 = wv(r, "w12"), w23 = wv(r, "w23"), w24 = wv(r, "w24");
    return {w01 * w23 - w03 * w12, w03 * w24 - w04 * w23, w04 * w12 - w01 * w24,
            w01 * w12 - w03 * w24, w01 * w01 - w03 * w04, w12 * w12 - w23 * w24};
}

std::vector<Ideal> d8_w02_removed_orbits(const RingPtr& r) {
    Poly w01 = wv(r, "w01"), w02 = wv(r, "w02"), w03 = wv(r, "w03"), w04 = wv(r, "w04");
    Poly w12 = wv(r, "w12"), w23 = wv(r, "w23"), w24 = wv(r, "w24");
    Ideal y1(r, {w01, w03, w04, w12 * w12 - w23 * w24});
    Ideal y2(r, {w02, w12, w23, w24, w01 * w01 - w03 * w04});
    return {y1, y2};
}

std::vector<Poly> d8_intersection_generators(const RingPtr& x, int cls) {
    Poly x1 = wv(x, "x1"), x2 = wv(x, "x2"), x3 = wv(x, "x3"), x4 = wv(x, "x4");
    if (cls == 0) return {x1 * x2, x1 * x4, x2 * x3, x3 * x4};
    if (cls == 1)
        return {(x1 - x2) * (x1 + x2), (x3 - x4) * (x3 + x4), (x1 - x2) * (x3 + x4),
                (x3 - x4) * (x1 + x2)};
    throw error("d8 class index must be 0 or 1");
}

std::vector<Poly> s3_intersection_generators(const RingPtr& x) {
    Poly x1 = wv(x, "x1"), y1 = wv(x, "y1"), x2 = wv(x, "x2"), y2 = wv(x, "y2");
    return {y1 * x2 - x1 * y2, x2.pow(3) - y2.pow(3), x1 * x2 * x2 - y1 * y2 * y2,
            x1 * x1 * x2 - y1 * y1 * y2, x1.pow(3) - y1.pow(3)};
}

}  // namespace coxalg::cases
