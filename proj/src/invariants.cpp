#include "coxalg/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace coxalg {

Poly reynolds(const Poly& f, const FiniteMatrixGroup& h) {
    Poly acc(f.ring());
    for (const auto& e : h.elements()) acc = acc + group_act(e.matrix, f, ActionConvention::Substitute);
    CycNum inv = CycNum::rational(h.field(), BigRat(1, static_cast<long>(h.size())));
    return acc * inv;
}

namespace {

// dense univariate polynomial over the field, for Molien determinants
using UPoly = std::vector<CycNum>;

UPoly umul(const UPoly& a, const UPoly& b, const CyclotomicField& f, std::size_t cap) {
    UPoly r(std::min(cap + 1, a.size() + b.size() - 1), CycNum(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// det(I - t*M) by expansion along the first column, exact and small (n <= 8)
UPoly char_like_det(const FieldMatrix& m, const CyclotomicField& f, std::size_t cap) {
    std::size_t n = m.rows();
    // polynomial entries: P[i][j] = delta_ij - t*m[i][j]
    std::vector<std::vector<UPoly>> p(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UPoly e(2, CycNum(f));
            if (i == j) e[0] = CycNum::rational(f, 1);
            e[1] = -m.at(i, j);
            p[i][j] = e;
        }
    // recursive Laplace with row selection
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    std::function<UPoly(std::size_t, std::vector<std::size_t>)> det =
        [&](std::size_t row, std::vector<std::size_t> cs) -> UPoly {
        if (cs.size() == 1) return p[row][cs[0]];
        UPoly acc(1, CycNum(f));
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const UPoly& head = p[row][cs[k]];
            bool zero = true;
            for (const auto& c : head)
                if (!c.is_zero()) zero = false;
            if (zero) continue;
            std::vector<std::size_t> rest;
            for (std::size_t l = 0; l < cs.size(); ++l)
                if (l != k) rest.push_back(cs[l]);
            UPoly sub = det(row + 1, rest);
            UPoly prod = umul(head, sub, f, cap);
            if (k % 2 == 1)
                for (auto& c : prod) c = -c;
            if (acc.size() < prod.size()) acc.resize(prod.size(), CycNum(f));
            for (std::size_t l = 0; l < prod.size(); ++l) acc[l] += prod[l];
        }
        return acc;
    };
    return det(0, cols);
}

}  // namespace

std::vector<long> molien_series(const FiniteMatrixGroup& h, long degree_bound) {
    const CyclotomicField& f = h.field();
    std::size_t cap = static_cast<std::size_t>(degree_bound);
    std::vector<CycNum> total(cap + 1, CycNum(f));
    for (const auto& e : h.elements()) {
        UPoly den = char_like_det(e.matrix, f, cap);
        den.resize(cap + 1, CycNum(f));
        // invert the power series: den[0] = 1 always (det(I) = 1)
        if (!den[0].is_one()) throw error("molien: determinant normalization failed");
        std::vector<CycNum> inv(cap + 1, CycNum(f));
        inv[0] = CycNum::rational(f, 1);
        for (std::size_t k = 1; k <= cap; ++k) {
            CycNum s(f);
            for (std::size_t j = 1; j <= k; ++j) s += den[j] * inv[k - j];
            inv[k] = -s;
        }
        for (std::size_t k = 0; k <= cap; ++k) total[k] += inv[k];
    }
    CycNum scale = CycNum::rational(f, BigRat(1, static_cast<long>(h.size())));
    std::vector<long> out;
    for (std::size_t k = 0; k <= cap; ++k) {
        CycNum v = total[k] * scale;
        if (!v.is_rational()) throw error("molien: non-rational coefficient");
        BigRat r = v.rational_value();
        if (r.get_den() != 1 || r < 0) throw error("molien: coefficient not a nonnegative integer");
        out.push_back(static_cast<long>(r.get_num().get_si()));
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, long d) {
    std::size_t n = ring->nvars();
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, long)> walk = [&](std::size_t pos, long left) {
        if (pos + 1 == n) {
            e[pos] = static_cast<int>(left);
            out.push_back(Monomial(e));
            return;
        }
        for (long k = left; k >= 0; --k) {
            e[pos] = static_cast<int>(k);
            walk(pos + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    walk(0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
    return out;
}

std::vector<CycNum> poly_to_vector(const Poly& f, const std::vector<Monomial>& basis) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
    std::vector<CycNum> v(basis.size(), CycNum(f.ring()->field()));
    for (const auto& t : f.terms()) {
        auto it = index.find(t.m.exponents());
        if (it == index.end()) throw error("poly_to_vector: monomial outside basis");
        v[it->second] = t.c;
    }
    return v;
}

Poly vector_to_poly(const RingPtr& ring, const std::vector<CycNum>& v,
                    const std::vector<Monomial>& basis) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) terms.push_back({basis[i], v[i]});
    return Poly::from_terms(ring, std::move(terms));
}

void RowSpace::reduce(std::vector<CycNum>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const CycNum& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        CycNum f = c;  // rows are pivot-normalized
        for (std::size_t j = 0; j < width_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
}

bool RowSpace::add(std::vector<CycNum> v) {
    if (v.size() != width_) throw error("row width mismatch");
    reduce(v);
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv == width_) return false;
    CycNum inv = v[piv].inverse();
    for (auto& c : v) c *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        CycNum f = rows_[r][piv];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), piv);
    return true;
}

bool RowSpace::contains(std::vector<CycNum> v) const {
    if (v.size() != width_) throw error("row width mismatch");
    reduce(v);
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

// all sums of generator degrees equal to d, as multisets of indices
void degree_products(const std::vector<Poly>& gens, long d, std::size_t from,
                     Poly current, std::vector<Poly>& out) {
    long dc = current.is_zero() ? 0 : current.degree();
    if (dc == d) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
        if (gens[i].degree() > d - dc) continue;
        degree_products(gens, d, i, current * gens[i], out);
    }
}

std::vector<Poly> products_of_degree(const std::vector<Poly>& gens, long d, const RingPtr& ring) {
    std::vector<Poly> out;
    degree_products(gens, d, 0, Poly::rational_constant(ring, 1), out);
    return out;
}

}  // namespace

std::vector<Poly> invariant_generators(const FiniteMatrixGroup& h, long degree_bound,
                                       RingPtr ring) {
    if (!ring) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < h.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
        ring = PolyRing::make(h.field(), names);
    }
    if (ring->nvars() != h.dim()) throw error("invariant_generators: ring dimension mismatch");
    std::vector<long> mol = molien_series(h, degree_bound);
    std::vector<Poly> kept;
    for (long d = 1; d <= degree_bound; ++d) {
        if (mol[static_cast<std::size_t>(d)] == 0) continue;
        std::vector<Monomial> basis = monomials_of_degree(ring, d);
        RowSpace inv_space(basis.size());
        std::vector<std::vector<CycNum>> inv_vectors;
        for (const auto& m : basis) {
            Poly r = reynolds(Poly::term(ring, m, CycNum::rational(h.field(), 1)), h);
            if (r.is_zero()) continue;
            std::vector<CycNum> v = poly_to_vector(r, basis);
            if (inv_space.add(v)) inv_vectors.push_back(std::move(v));
        }
        if (static_cast<long>(inv_space.dim()) != mol[static_cast<std::size_t>(d)])
            throw error("invariant space dimension disagrees with Molien series");
        RowSpace prod_space(basis.size());
        for (const auto& p : products_of_degree(kept, d, ring))
            prod_space.add(poly_to_vector(p, basis));
        for (const auto& v : inv_vectors) {
            if (prod_space.contains(v)) continue;
            prod_space.add(v);
            kept.push_back(vector_to_poly(ring, v, basis));
        }
    }
    return kept;
}

std::vector<GradedGenerator> split_eigenvectors(const std::vector<Poly>& gens,
                                                const std::vector<FieldMatrix>& reps,
                                                ActionConvention conv) {
    if (gens.empty()) return {};
    const RingPtr ring = gens[0].ring();
    const CyclotomicField& f = ring->field();
    // abelian subgroup generated by the representative actions on polynomials
    std::vector<long> orders;
    for (const auto& r : reps) orders.push_back(r.multiplicative_order());
    std::map<long, std::vector<Poly>> by_degree;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        by_degree[g.degree()].push_back(g);
    }
    std::vector<GradedGenerator> out;
    for (auto& [d, polys] : by_degree) {
        std::vector<Monomial> basis = monomials_of_degree(ring, d);
        RowSpace span(basis.size());
        for (const auto& p : polys) span.add(poly_to_vector(p, basis));
        // stability of the span under every rep
        for (const auto& r : reps)
            for (const auto& p : polys)
                if (!span.contains(poly_to_vector(group_act(r, p, conv), basis)))
                    throw error("split_eigenvectors: span is not stable under the action");
        // character projections over the group generated by the reps
        std::vector<std::vector<long>> char_tuples;
        {
            std::vector<long> t(reps.size(), 0);
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == reps.size()) {
                    char_tuples.push_back(t);
                    return;
                }
                for (long k = 0; k < orders[i]; ++k) {
                    t[i] = k;
                    walk(i + 1);
                }
            };
            walk(0);
        }
        long group_order = 1;
        for (long o : orders) group_order *= o;
        for (const auto& chi : char_tuples) {
            RowSpace piece(basis.size());
            std::vector<std::vector<CycNum>> kept_vecs;
            for (const auto& srow : span.rows()) {
                Poly p = vector_to_poly(ring, srow, basis);
                // P_chi p = (1/|A|) sum over tuples a of chi(a)^{-1} (a . p)
                Poly acc(ring);
                std::vector<long> a(reps.size(), 0);
                std::function<void(std::size_t, Poly)> apply = [&](std::size_t i, Poly cur) {
                    if (i == reps.size()) {
                        long phase = 0;
                        for (std::size_t k = 0; k < reps.size(); ++k)
                            phase += -a[k] * chi[k] * (f.order() / orders[k]);
                        acc = acc + cur * CycNum::root_power(f, phase);
                        return;
                    }
                    Poly next = cur;
                    for (long k = 0; k < orders[i]; ++k) {
                        a[i] = k;
                        apply(i + 1, next);
                        next = group_act(reps[i], next, conv);
                    }
                };
                apply(0, p);
                acc = acc * CycNum::rational(f, BigRat(1, group_order));
                if (acc.is_zero()) continue;
                std::vector<CycNum> v = poly_to_vector(acc, basis);
                if (piece.add(v)) kept_vecs.push_back(v);
            }
            for (const auto& row : piece.rows()) {
                GradedGenerator gg;
                gg.poly = vector_to_poly(ring, row, basis);
                gg.degree = d;
                for (std::size_t k = 0; k < reps.size(); ++k)
                    gg.character.push_back(
                        CycNum::root_power(f, chi[k] * (f.order() / orders[k])));
                out.push_back(std::move(gg));
            }
        }
    }
    return out;
}

TableCheck verify_generating_table(const std::vector<GradedGenerator>& table,
                                   const FiniteMatrixGroup& h,
                                   const std::vector<FieldMatrix>& reps, long bound,
                                   ActionConvention conv) {
    TableCheck rep;
    if (table.empty()) {
        rep.pass = false;
        rep.failures.push_back("empty table");
        return rep;
    }
    const RingPtr ring = table[0].poly.ring();
    rep.molien = molien_series(h, bound);
    // (a) invariance and stated characters
    for (const auto& e : table) {
        for (const auto& he : h.elements()) {
            if (group_act(he.matrix, e.poly, conv) != e.poly) {
                rep.pass = false;
                rep.failures.push_back(e.name + ": not invariant under the subgroup");
                break;
            }
        }
        for (std::size_t c = 0; c < reps.size(); ++c) {
            CycNum lam;
            try {
                lam = character_of(reps[c], e.poly, conv);
            } catch (const error&) {
                rep.pass = false;
                rep.failures.push_back(e.name + ": not an eigenvector of representative " +
                                       std::to_string(c));
                continue;
            }
            if (c < e.character.size() && lam != e.character[c]) {
                rep.pass = false;
                rep.failures.push_back(e.name + ": stated eigenvalue differs on representative " +
                                       std::to_string(c));
            }
        }
    }
    // (b) + (c) per degree
    std::vector<Poly> gens;
    for (const auto& e : table) gens.push_back(e.poly);
    rep.subalgebra_dims.assign(static_cast<std::size_t>(bound) + 1, 0);
    rep.subalgebra_dims[0] = 1;
    for (long d = 1; d <= bound; ++d) {
        std::vector<Monomial> basis = monomials_of_degree(ring, d);
        RowSpace prod_space(basis.size());
        for (const auto& p : products_of_degree(gens, d, ring))
            prod_space.add(poly_to_vector(p, basis));
        rep.subalgebra_dims[static_cast<std::size_t>(d)] = static_cast<long>(prod_space.dim());
        for (const auto& m : basis) {
            Poly r = reynolds(Poly::term(ring, m, CycNum::rational(h.field(), 1)), h);
            if (r.is_zero()) continue;
            if (!prod_space.contains(poly_to_vector(r, basis))) {
                rep.pass = false;
                Poly witness = Poly::term(ring, m, CycNum::rational(h.field(), 1));
                rep.failures.push_back("degree " + std::to_string(d) +
                                       ": Reynolds image of monomial " + witness.str() +
                                       " lies outside the table subalgebra");
            }
        }
        if (rep.subalgebra_dims[static_cast<std::size_t>(d)] !=
            rep.molien[static_cast<std::size_t>(d)]) {
            rep.pass = false;
            rep.failures.push_back("degree " + std::to_string(d) +
                                   ": subalgebra dimension differs from the Molien series");
        }
    }
    return rep;
}

}  // namespace coxalg
