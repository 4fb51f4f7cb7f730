#include "coxalg/gitfan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "coxalg/intmatrix.hpp"

namespace coxalg {

// ------------------------------------------------ exact rational helpers ----

namespace {

using QVec = std::vector<BigRat>;
using QMat = std::vector<QVec>;

QMat rref_q(QMat a, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        BigRat d = a[r][c];
        for (auto& x : a[r]) x /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            BigRat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

// basis of {x : A x = 0}
std::vector<QVec> kernel_q(const QMat& a, std::size_t ncols) {
    std::vector<std::size_t> piv;
    QMat red = rref_q(a, &piv);
    std::vector<bool> is_piv(ncols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_piv[free]) continue;
        QVec v(ncols, BigRat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<long> to_primitive(const QVec& v) {
    BigInt lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, BigInt(x.get_den()));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt val = BigInt(x.get_num()) * (lcm_den / BigInt(x.get_den()));
        ints.push_back(val);
        g = gcd(g, val);
    }
    std::vector<long> out;
    for (auto& val : ints) out.push_back(g == 0 ? 0 : BigInt(val / g).get_si());
    return out;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<long> primitive(std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// ------------------------------------------------------------ GIT weights ----

bool in_rational_cone(const std::vector<std::vector<long>>& gens, const std::vector<long>& point) {
    // Fourier-Motzkin on {sum_i l_i g_i = p, l_i >= 0}
    // constraint rows: (c_0 | c_1..c_k) meaning c_0 + sum c_i l_i >= 0
    std::size_t k = gens.size();
    if (k == 0) {
        for (long x : point)
            if (x != 0) return false;
        return true;
    }
    std::size_t n = point.size();
    std::vector<QVec> cons;
    for (std::size_t j = 0; j < n; ++j) {
        QVec eq(k + 1, BigRat(0));
        eq[0] = -point[j];
        for (std::size_t i = 0; i < k; ++i) eq[i + 1] = gens[i][j];
        cons.push_back(eq);
        QVec neg = eq;
        for (auto& x : neg) x = -x;
        cons.push_back(neg);
    }
    for (std::size_t i = 0; i < k; ++i) {
        QVec pos(k + 1, BigRat(0));
        pos[i + 1] = 1;
        cons.push_back(pos);
    }
    for (std::size_t var = 1; var <= k; ++var) {
        std::vector<QVec> zero, plus, minus;
        for (auto& c : cons) {
            if (c[var] == 0) zero.push_back(c);
            else if (c[var] > 0) plus.push_back(c);
            else minus.push_back(c);
        }
        std::set<QVec> next(zero.begin(), zero.end());
        for (const auto& p : plus)
            for (const auto& m : minus) {
                // eliminate: p scaled by -m[var] plus m scaled by p[var]
                QVec comb(k + 1, BigRat(0));
                for (std::size_t j = 0; j <= k; ++j)
                    comb[j] = p[j] * (-m[var]) + m[j] * p[var];
                // normalize to keep the set small
                BigRat scale(0);
                for (const auto& x : comb)
                    if (x != 0) { scale = abs(x); break; }
                if (scale != 0)
                    for (auto& x : comb) x /= scale;
                next.insert(comb);
            }
        cons.assign(next.begin(), next.end());
    }
    for (const auto& c : cons)
        if (c[0] < 0) return false;
    return true;
}

std::vector<std::vector<int>> semistable_supports(const WeightSystem& ws) {
    bool chi_zero = true;
    for (long x : ws.chi)
        if (x != 0) chi_zero = false;
    if (chi_zero) throw error("semistable_supports: chi must be nonzero");
    std::size_t n = ws.vars.size();
    std::size_t rank = ws.chi.size();
    std::vector<std::vector<int>> minimal;
    auto is_superset = [&](const std::vector<int>& s) {
        for (const auto& m : minimal)
            if (std::includes(s.begin(), s.end(), m.begin(), m.end())) return true;
        return false;
    };
    // Caratheodory: minimal supports have size <= rank
    std::vector<int> idx;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t from, std::size_t want) {
        if (idx.size() == want) {
            if (is_superset(idx)) return;
            std::vector<std::vector<long>> gens;
            for (int i : idx) gens.push_back(ws.weights[i]);
            if (in_rational_cone(gens, ws.chi)) minimal.push_back(idx);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            idx.push_back(static_cast<int>(i));
            walk(i + 1, want);
            idx.pop_back();
        }
    };
    for (std::size_t size = 1; size <= rank; ++size) walk(0, size);
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

SupportMatch supports_match_on_variety(const std::vector<std::vector<int>>& ambient,
                                       const std::vector<std::vector<int>>& printed,
                                       const Ideal& relations) {
    const RingPtr ring = relations.ring();
    auto support_monomial = [&](const std::vector<int>& s) {
        Poly prod = Poly::rational_constant(ring, 1);
        for (int v : s) prod = prod * Poly::variable(ring, static_cast<std::size_t>(v));
        return prod;
    };
    auto name_of = [&](const std::vector<int>& s) {
        std::string n = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            n += (i ? "," : "") + ring->var_name(static_cast<std::size_t>(s[i]));
        return n + "}";
    };
    SupportMatch r;
    for (const auto& p : printed) {
        if (std::find(ambient.begin(), ambient.end(), p) == ambient.end()) {
            r.pass = false;
            r.notes.push_back(name_of(p) + " is not an ambient minimal support");
        }
        if (radical_membership(support_monomial(p), relations)) {
            r.pass = false;
            r.notes.push_back(name_of(p) + " chart misses the variety");
        }
    }
    std::vector<Poly> covered = relations.gens();
    for (const auto& p : printed) covered.push_back(support_monomial(p));
    Ideal cover_ideal(ring, covered);
    for (const auto& a : ambient) {
        if (std::find(printed.begin(), printed.end(), a) != printed.end()) continue;
        if (!radical_membership(support_monomial(a), cover_ideal)) {
            r.pass = false;
            r.notes.push_back(name_of(a) + " chart is not covered by the printed family");
        } else {
            r.notes.push_back(name_of(a) +
                              " is an ambient-only support; its chart is covered on the variety");
        }
    }
    return r;
}

bool isotropy_trivial(const WeightSystem& ws, const std::vector<int>& support) {
    std::size_t rank = ws.chi.size();
    IntMatrix m(support.size(), rank);
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = ws.weights[support[i]][j];
    SmithForm s = smith_normal_form(m);
    if (s.invariant_factors.size() != rank) return false;
    for (const auto& d : s.invariant_factors)
        if (d != 1) return false;
    return true;
}

// -------------------------------------------------------- monomial minors ----

namespace {

bool is_monomial(const Poly& p) { return p.term_count() == 1; }

Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) {
    std::size_t n = m.size();
    std::function<Poly(std::size_t, std::vector<std::size_t>)> det =
        [&](std::size_t row, std::vector<std::size_t> cols) -> Poly {
        if (cols.size() == 1) return m[row][cols[0]];
        Poly acc(ring);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Poly& head = m[row][cols[k]];
            if (head.is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t l = 0; l < cols.size(); ++l)
                if (l != k) rest.push_back(cols[l]);
            Poly sub = det(row + 1, rest);
            if (sub.is_zero()) continue;
            Poly term = head * sub;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    return det(0, cols);
}

}  // namespace

std::vector<MinorHit> monomial_minor_search(const std::vector<Poly>& gens,
                                            const std::vector<int>& rows, std::size_t size,
                                            const MinorSearchOptions& opt) {
    if (gens.empty()) return {};
    const RingPtr ring = gens[0].ring();
    std::size_t nv = ring->nvars();
    // substitute the zeroed variables, then differentiate
    std::vector<Poly> work = gens;
    if (!opt.zeroed_vars.empty()) {
        std::vector<Poly> images;
        std::vector<bool> zeroed(nv, false);
        for (int v : opt.zeroed_vars) zeroed[static_cast<std::size_t>(v)] = true;
        for (std::size_t i = 0; i < nv; ++i)
            images.push_back(zeroed[i] ? Poly::zero(ring) : Poly::variable(ring, i));
        for (auto& g : work) g = g.substitute(images, ring);
    }
    // Jacobian block restricted to the requested rows
    std::vector<std::vector<Poly>> jac(rows.size(), std::vector<Poly>(work.size(), Poly(ring)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j)
            jac[i][j] = work[j].derivative(static_cast<std::size_t>(rows[i]));
    if (size != rows.size()) throw error("monomial_minor_search: size must equal row count");

    std::vector<MinorHit> hits;
    std::set<std::vector<int>> tried;
    auto try_cols = [&](const std::vector<int>& cols) {
        if (hits.size() >= opt.max_hits) return;
        if (!tried.insert(cols).second) return;
        std::vector<std::vector<Poly>> sub(size, std::vector<Poly>(size, Poly(ring)));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) sub[i][j] = jac[i][static_cast<std::size_t>(cols[j])];
        Poly d = poly_det(sub, ring);
        if (d.is_zero() || !is_monomial(d)) return;
        MinorHit hit;
        hit.rows = rows;
        hit.cols = cols;
        hit.det = d;
        const Monomial& m = d.leading_term().m;
        for (std::size_t v = 0; v < nv; ++v)
            if (m[v] > 0) hit.support.push_back(static_cast<int>(v));
        if (!opt.support_filter.empty()) {
            for (int v : hit.support)
                if (std::find(opt.support_filter.begin(), opt.support_filter.end(), v) ==
                    opt.support_filter.end())
                    return;
        }
        hits.push_back(std::move(hit));
    };
    for (const auto& seed : opt.seed_columns)
        if (seed.size() == size) try_cols(seed);
    if (opt.exhaustive && hits.size() < opt.max_hits) {
        std::vector<int> cols;
        std::function<void(std::size_t)> walk = [&](std::size_t from) {
            if (hits.size() >= opt.max_hits) return;
            if (cols.size() == size) {
                try_cols(cols);
                return;
            }
            for (std::size_t j = from; j + (size - cols.size()) <= work.size(); ++j) {
                cols.push_back(static_cast<int>(j));
                walk(j + 1);
                cols.pop_back();
            }
        };
        walk(0);
    }
    return hits;
}

// ------------------------------------------------------------- toric part ----

Cone Cone::from_rays(int rank, std::vector<std::vector<long>> rays) {
    Cone c;
    c.rank = rank;
    std::set<std::vector<long>> seen;
    for (auto& r : rays) {
        if (static_cast<int>(r.size()) != rank) throw error("ray dimension mismatch");
        std::vector<long> p = primitive(std::move(r));
        bool zero = std::all_of(p.begin(), p.end(), [](long x) { return x == 0; });
        if (!zero && seen.insert(p).second) c.rays.push_back(p);
    }
    // facets = rays of the dual description (includes +- pairs of the span's
    // orthogonal complement, so containment tests equalities too)
    Cone tmp = c;
    c.facets = dual_cone(tmp).rays;
    return c;
}

bool Cone::contains(const std::vector<long>& x) const {
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::is_strongly_convex() const {
    // x and -x both in the cone for some nonzero x iff some ray's negative is
    // in the cone (lineality is spanned by rays for a ray-generated cone)
    for (const auto& r : rays) {
        std::vector<long> neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        if (contains(neg)) return false;
    }
    return true;
}

Cone dual_cone(const Cone& c) {
    int n = c.rank;
    if (n > 8) throw error("dual_cone: rank limit exceeded");
    Cone d;
    d.rank = n;
    std::set<std::vector<long>> out;
    // lineality of the dual: orthogonal complement of span(rays)
    QMat raymat;
    for (const auto& r : c.rays) {
        QVec row;
        for (long x : r) row.emplace_back(x);
        raymat.push_back(row);
    }
    std::vector<QVec> span_perp =
        c.rays.empty() ? [&] {
            std::vector<QVec> full;
            for (int i = 0; i < n; ++i) {
                QVec e(n, BigRat(0));
                e[i] = 1;
                full.push_back(e);
            }
            return full;
        }()
                       : kernel_q(raymat, static_cast<std::size_t>(n));
    for (const auto& v : span_perp) {
        std::vector<long> p = primitive(to_primitive(v));
        std::vector<long> neg(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
        out.insert(p);
        out.insert(neg);
    }
    // pointed part: candidates from (s-1)-subsets of rays, solved inside the span
    // span basis
    std::vector<QVec> span_basis;
    {
        std::vector<std::size_t> piv;
        QMat red = rref_q(raymat, &piv);
        for (std::size_t i = 0; i < piv.size(); ++i) span_basis.push_back(red[i]);
    }
    std::size_t s = span_basis.size();
    std::vector<std::size_t> subset;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        if (subset.size() == (s == 0 ? 0 : s - 1)) {
            // m = sum mu_i b_i with <m, r> = 0 for r in subset
            QMat sys;
            for (std::size_t ri : subset) {
                QVec row(s, BigRat(0));
                for (std::size_t b = 0; b < s; ++b) {
                    BigRat acc(0);
                    for (int j = 0; j < n; ++j) acc += span_basis[b][j] * BigRat(c.rays[ri][j]);
                    row[b] = acc;
                }
                sys.push_back(row);
            }
            auto mu_basis = kernel_q(sys.empty() ? QMat{QVec(s, BigRat(0))} : sys, s);
            if (mu_basis.size() == 1 || (subset.empty() && s == 1)) {
                const QVec& mu = mu_basis[0];
                QVec m(n, BigRat(0));
                for (std::size_t b = 0; b < s; ++b)
                    for (int j = 0; j < n; ++j) m[j] += mu[b] * span_basis[b][j];
                std::vector<long> cand = primitive(to_primitive(m));
                bool zero = std::all_of(cand.begin(), cand.end(), [](long x) { return x == 0; });
                if (!zero) {
                    bool pos_ok = true, neg_ok = true;
                    for (const auto& r : c.rays) {
                        long v = dot(cand, r);
                        if (v < 0) pos_ok = false;
                        if (v > 0) neg_ok = false;
                    }
                    if (pos_ok && !neg_ok) out.insert(cand);
                    if (neg_ok && !pos_ok) {
                        for (auto& x : cand) x = -x;
                        out.insert(cand);
                    }
                    // both signs valid would be dual lineality, already added
                }
            }
            return;
        }
        for (std::size_t i = from; i < c.rays.size(); ++i) {
            subset.push_back(i);
            walk(i + 1);
            subset.pop_back();
        }
    };
    if (s > 0) walk(0);
    d.rays.assign(out.begin(), out.end());
    // facets of the dual are the original rays (plus span equalities of d)
    Cone dd;
    dd.rank = n;
    for (const auto& r : c.rays) dd.rays.push_back(r);
    // complete the facet list with the orthogonal complement of span(d.rays)
    {
        QMat dm;
        for (const auto& r : d.rays) {
            QVec row;
            for (long x : r) row.emplace_back(x);
            dm.push_back(row);
        }
        std::vector<QVec> perp =
            d.rays.empty() ? std::vector<QVec>{} : kernel_q(dm, static_cast<std::size_t>(n));
        d.facets = c.rays;
        for (const auto& v : perp) {
            std::vector<long> p = primitive(to_primitive(v));
            std::vector<long> neg(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
            d.facets.push_back(p);
            d.facets.push_back(neg);
        }
        if (d.rays.empty()) {
            for (int i = 0; i < n; ++i) {
                std::vector<long> e(n, 0);
                e[i] = 1;
                d.facets.push_back(e);
                e[i] = -1;
                d.facets.push_back(e);
            }
        }
    }
    return d;
}

std::vector<std::vector<long>> hilbert_basis(const Cone& c) {
    if (c.rank > 4) throw error("hilbert_basis: rank limit exceeded");
    if (!c.is_strongly_convex()) throw error("hilbert_basis: cone is not strongly convex");
    if (c.rays.empty()) return {};
    int n = c.rank;
    // interior grading: sum of the facet normals
    std::vector<long> ell(n, 0);
    for (const auto& f : c.facets)
        for (int j = 0; j < n; ++j) ell[j] += f[j];
    for (const auto& r : c.rays)
        if (dot(ell, r) <= 0) throw error("hilbert_basis: grading failed");
    long dmax = 0;
    for (const auto& r : c.rays) dmax += dot(ell, r);
    // coordinate bounds from lambda_i <= dmax / ell(rho_i)
    std::vector<long> bound(n, 0);
    for (int j = 0; j < n; ++j) {
        BigRat b(0);
        for (const auto& r : c.rays) {
            BigRat lam(dmax, dot(ell, r));
            lam.canonicalize();
            b += lam * BigRat(std::abs(r[j]));
        }
        BigInt floor_b = b.get_num() / b.get_den();
        bound[j] = floor_b.get_si() + 1;
    }
    std::vector<std::vector<long>> pts;
    std::vector<long> x(n, 0);
    std::function<void(int)> walk = [&](int pos) {
        if (pos == n) {
            long deg = dot(ell, x);
            if (deg < 1 || deg > dmax) return;
            if (c.contains(x)) pts.push_back(x);
            return;
        }
        for (long v = -bound[pos]; v <= bound[pos]; ++v) {
            x[pos] = v;
            walk(pos + 1);
        }
        x[pos] = 0;
    };
    walk(0);
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        long da = dot(ell, a), db = dot(ell, b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<std::vector<long>> hb;
    for (const auto& p : pts) {
        bool reducible = false;
        long dp = dot(ell, p);
        for (const auto& q : pts) {
            if (dot(ell, q) >= dp) break;
            std::vector<long> rest(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) rest[i] = p[i] - q[i];
            if (c.contains(rest)) { reducible = true; break; }
        }
        if (!reducible) hb.push_back(p);
    }
    return hb;
}

Ideal toric_ideal(const std::vector<std::vector<long>>& points,
                  const std::vector<std::string>& varnames, const CyclotomicField& field) {
    if (points.empty()) throw error("toric_ideal: no points");
    if (varnames.size() != points.size()) throw error("toric_ideal: name count mismatch");
    std::size_t rank = points[0].size();
    std::vector<std::string> tnames;
    for (std::size_t i = 0; i < rank; ++i) tnames.push_back("@x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < rank; ++i) tnames.push_back("@xb" + std::to_string(i + 1));
    RingPtr target = PolyRing::make(field, tnames);
    RingPtr source = PolyRing::make(field, varnames);
    std::vector<Poly> images;
    for (const auto& p : points) {
        Poly m = Poly::rational_constant(target, 1);
        for (std::size_t j = 0; j < rank; ++j) {
            if (p[j] > 0) m = m * Poly::variable(target, j).pow(p[j]);
            if (p[j] < 0) m = m * Poly::variable(target, rank + j).pow(-p[j]);
        }
        images.push_back(m);
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 0; j < rank; ++j)
        pairs.push_back({static_cast<int>(j), static_cast<int>(rank + j)});
    RingMap phi(source, target, std::move(images), std::move(pairs));
    return phi.kernel();
}

std::vector<std::vector<int>> cone_faces(const Cone& c) {
    std::set<std::vector<int>> faces;
    std::size_t nf = c.facets.size();
    // faces = common zero sets of facet subsets; enumeration is fine at desk scale
    if (nf > 20) throw error("cone_faces: too many facets");
    for (std::size_t mask = 0; mask < (1u << nf); ++mask) {
        std::vector<int> rayset;
        for (std::size_t i = 0; i < c.rays.size(); ++i) {
            bool on_all = true;
            for (std::size_t f = 0; f < nf && on_all; ++f)
                if (mask & (1u << f))
                    if (dot(c.facets[f], c.rays[i]) != 0) on_all = false;
            if (on_all) rayset.push_back(static_cast<int>(i));
        }
        faces.insert(rayset);
    }
    return {faces.begin(), faces.end()};
}

std::vector<int> orbit_face(const AffineToricData& td, const Ideal& subvariety) {
    Ideal toric = toric_ideal(td.hb, td.ring->var_names(), td.ring->field());
    Ideal claimed = ideal_sum(subvariety, toric);
    for (const auto& face : cone_faces(td.sigma)) {
        // coordinates vanishing on the orbit closure: m_j not orthogonal to the face
        std::vector<Poly> vanishing;
        for (std::size_t j = 0; j < td.hb.size(); ++j) {
            bool perp = true;
            for (int ri : face)
                if (dot(td.hb[j], td.sigma.rays[static_cast<std::size_t>(ri)]) != 0) perp = false;
            if (!perp) vanishing.push_back(Poly::variable(td.ring, j));
        }
        Ideal orbit_ideal = ideal_sum(Ideal(td.ring, vanishing), toric);
        if (ideal_equal(claimed, orbit_ideal)) return face;
    }
    throw error("orbit_face: ideal is not a torus-orbit closure");
}

// --------------------------------------------------------------- fans -------

namespace {

int half_of(const std::vector<long>& v) {
    // 0 for upper half (y>0, or y=0 and x>0), 1 for lower
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
}

long cross(const std::vector<long>& a, const std::vector<long>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

bool angle_less(const std::vector<long>& a, const std::vector<long>& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    long c = cross(a, b);
    if (c != 0) return c > 0;
    return a < b;
}

}  // namespace

Fan quotient_fan(const Cone& c, const std::vector<std::vector<int>>& removed_faces,
                 const std::vector<std::vector<long>>& projection) {
    if (projection.size() != 2) throw error("quotient_fan: projection must map to rank 2");
    for (const auto& row : projection)
        if (static_cast<int>(row.size()) != c.rank) throw error("quotient_fan: projection width");
    {
        QMat pm;
        for (const auto& row : projection) {
            QVec q;
            for (long x : row) q.emplace_back(x);
            pm.push_back(q);
        }
        std::vector<std::size_t> piv;
        rref_q(pm, &piv);
        if (piv.size() != 2) throw error("quotient_fan: projection rank");
    }
    auto project = [&](const std::vector<long>& v) {
        return std::vector<long>{dot(projection[0], v), dot(projection[1], v)};
    };
    auto contains_face = [&](const std::vector<int>& face, const std::vector<int>& sub) {
        return std::includes(face.begin(), face.end(), sub.begin(), sub.end());
    };
    std::set<std::vector<long>> ray_set;
    std::set<std::pair<std::vector<long>, std::vector<long>>> cone_set;
    for (const auto& face : cone_faces(c)) {
        bool removed = false;
        for (const auto& r : removed_faces)
            if (contains_face(face, r)) removed = true;
        if (removed || face.empty()) continue;
        std::vector<std::vector<long>> imgs;
        for (int ri : face) {
            std::vector<long> p = primitive(project(c.rays[static_cast<std::size_t>(ri)]));
            if (p[0] != 0 || p[1] != 0) imgs.push_back(p);
        }
        if (imgs.empty()) continue;
        std::sort(imgs.begin(), imgs.end(), angle_less);
        imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
        // the image cone is spanned by the angular extremes; find the pair
        // with every other image inside
        std::vector<long> lo = imgs.front(), hi = imgs.back();
        if (imgs.size() > 1) {
            // check pointedness: no pair may be opposite or spread >= 180
            bool ok = false;
            for (std::size_t a = 0; a < imgs.size() && !ok; ++a)
                for (std::size_t b = 0; b < imgs.size() && !ok; ++b) {
                    if (a == b) continue;
                    if (cross(imgs[a], imgs[b]) < 0) continue;
                    bool all_in = true;
                    for (const auto& m : imgs) {
                        if (cross(imgs[a], m) < 0 || cross(m, imgs[b]) < 0) all_in = false;
                        if (cross(imgs[a], imgs[b]) == 0) {
                            // colinear set: same direction required
                            if (cross(imgs[a], m) != 0 || dot(imgs[a], m) < 0) all_in = false;
                        }
                    }
                    if (all_in) {
                        lo = imgs[a];
                        hi = imgs[b];
                        ok = true;
                    }
                }
            if (!ok) throw error("quotient_fan: face image is not a pointed cone");
        }
        ray_set.insert(lo);
        ray_set.insert(hi);
        if (lo != hi) cone_set.insert({lo, hi});
    }
    Fan fan;
    fan.rays.assign(ray_set.begin(), ray_set.end());
    std::sort(fan.rays.begin(), fan.rays.end(), angle_less);
    auto ray_index = [&](const std::vector<long>& v) {
        auto it = std::find(fan.rays.begin(), fan.rays.end(), v);
        return static_cast<int>(it - fan.rays.begin());
    };
    for (const auto& [lo, hi] : cone_set) {
        // reject overlapping cones: no other ray strictly inside
        for (const auto& r : fan.rays) {
            if (r == lo || r == hi) continue;
            if (cross(lo, r) > 0 && cross(r, hi) > 0 && cross(lo, hi) > 0)
                throw error("quotient_fan: image cones overlap");
        }
        fan.cones2d.push_back({ray_index(lo), ray_index(hi)});
    }
    std::sort(fan.cones2d.begin(), fan.cones2d.end());
    fan.cones2d.erase(std::unique(fan.cones2d.begin(), fan.cones2d.end()), fan.cones2d.end());
    // completeness: consecutive rays (cyclically) all spanned by a 2d cone
    std::size_t nr = fan.rays.size();
    fan.complete = nr >= 3;
    for (std::size_t i = 0; i < nr && fan.complete; ++i) {
        const auto& a = fan.rays[i];
        const auto& b = fan.rays[(i + 1) % nr];
        bool found = false;
        for (const auto& c2 : fan.cones2d)
            if ((fan.rays[c2[0]] == a && fan.rays[c2[1]] == b) ||
                (fan.rays[c2[0]] == b && fan.rays[c2[1]] == a))
                found = true;
        // the pair must also positively span (angle < pi)
        if (!found) fan.complete = false;
        if (i + 1 == nr) {
            // wraparound handled by angular sort; cross of last->first is
            // checked through the cone presence above
        }
    }
    if (fan.complete) {
        fan.smooth = true;
        for (std::size_t i = 0; i < nr; ++i) {
            const auto& a = fan.rays[i];
            const auto& b = fan.rays[(i + 1) % nr];
            long d = cross(a, b);
            if (d != 1 && d != -1) fan.smooth = false;
        }
    }
    if (fan.complete && fan.smooth && nr == 4) {
        // wall relations v_{i-1} + v_{i+1} = c_i v_i; Hirzebruch pattern {0,0,a,-a}
        std::vector<long> cs;
        bool good = true;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& prev = fan.rays[(i + 3) % 4];
            const auto& cur = fan.rays[i];
            const auto& next = fan.rays[(i + 1) % 4];
            std::vector<long> s{prev[0] + next[0], prev[1] + next[1]};
            if (cross(s, cur) != 0) { good = false; break; }
            // s = c * cur
            long c2 = 0;
            if (cur[0] != 0) c2 = s[0] / cur[0];
            else c2 = s[1] / cur[1];
            if (s[0] != c2 * cur[0] || s[1] != c2 * cur[1]) { good = false; break; }
            cs.push_back(c2);
        }
        if (good) {
            std::vector<long> sorted = cs;
            std::sort(sorted.begin(), sorted.end());
            long a = std::max(std::abs(sorted.front()), std::abs(sorted.back()));
            std::vector<long> expect{-a, 0, 0, a};
            std::sort(expect.begin(), expect.end());
            if (sorted == expect) fan.hirzebruch_a = a;
        }
    }
    return fan;
}

// ------------------------------------------------------- central fiber ------

namespace {

// particular solution of A c = b over the field (free variables zero)
std::optional<std::vector<CycNum>> solve_rectangular(const FieldMatrix& a,
                                                     const std::vector<CycNum>& b) {
    const CyclotomicField& f = a.field();
    FieldMatrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    FieldMatrix red = aug.rref(&piv);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<CycNum> x(a.cols(), CycNum(f));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red.at(r, a.cols());
    return x;
}

// G-invariant psi written in the w,u-ring: torus-balanced w-monomials with
// the balancing u-powers attached
Poly pullback_invariant(const CaseSpec& cs, const std::vector<CoxGenerator>& synth,
                        const Poly& psi) {
    const RingPtr wring = cs.w_ring;
    const RingPtr xring = cs.data.ring;
    long deg = psi.degree();
    std::size_t ngen = cs.table.size();
    std::size_t m = cs.cartan.size();
    // torus weight of w_j = t-exponents of the synthesized generator
    std::vector<std::vector<long>> wt(ngen);
    std::vector<int> windex(ngen);
    for (std::size_t j = 0; j < ngen; ++j) {
        for (const auto& g : synth)
            if (g.name == cs.table[j].name) wt[j] = g.t_exponents;
        windex[j] = wring->var_index(cs.table[j].name);
    }
    std::vector<int> uindex(m);
    for (std::size_t i = 0; i < m; ++i) uindex[i] = wring->var_index(cs.data.u_names[i]);
    // enumerate w-monomials with matching x-degree and even torus weight
    std::vector<std::vector<int>> cand;  // exponent per table generator
    std::vector<int> e(ngen, 0);
    std::function<void(std::size_t, long)> walk = [&](std::size_t pos, long left) {
        if (pos == ngen) {
            if (left != 0) return;
            std::vector<long> weight(m, 0);
            for (std::size_t j = 0; j < ngen; ++j)
                for (std::size_t i = 0; i < m; ++i) weight[i] += e[j] * wt[j][i];
            for (std::size_t i = 0; i < m; ++i)
                if (weight[i] % 2 != 0) return;
            cand.push_back(e);
            return;
        }
        long d = cs.table[pos].poly.degree();
        for (int k = 0; k * d <= left; ++k) {
            e[pos] = k;
            walk(pos + 1, left - k * d);
        }
        e[pos] = 0;
    };
    walk(0, deg);
    if (cand.empty()) throw error("pullback: no balanced monomials at degree " + std::to_string(deg));
    // linear system over the x-monomial basis
    std::vector<Monomial> basis = monomials_of_degree(xring, deg);
    FieldMatrix a(xring->field(), basis.size(), cand.size());
    for (std::size_t cidx = 0; cidx < cand.size(); ++cidx) {
        Poly img = Poly::rational_constant(xring, 1);
        for (std::size_t j = 0; j < ngen; ++j)
            if (cand[cidx][j] > 0) img = img * cs.table[j].poly.pow(cand[cidx][j]);
        auto v = poly_to_vector(img, basis);
        for (std::size_t r = 0; r < basis.size(); ++r) a.at(r, cidx) = v[r];
    }
    auto rhs = poly_to_vector(psi, basis);
    auto sol = solve_rectangular(a, rhs);
    if (!sol) throw error("pullback: invariant is not in the table subalgebra");
    Poly out(wring);
    for (std::size_t cidx = 0; cidx < cand.size(); ++cidx) {
        if ((*sol)[cidx].is_zero()) continue;
        std::vector<int> exps(wring->nvars(), 0);
        std::vector<long> weight(m, 0);
        for (std::size_t j = 0; j < ngen; ++j) {
            exps[static_cast<std::size_t>(windex[j])] = cand[cidx][j];
            for (std::size_t i = 0; i < m; ++i) weight[i] += cand[cidx][j] * wt[j][i];
        }
        for (std::size_t i = 0; i < m; ++i)
            exps[static_cast<std::size_t>(uindex[i])] = static_cast<int>(weight[i] / 2);
        out = out + Poly::term(wring, Monomial(exps), (*sol)[cidx]);
    }
    return out;
}

}  // namespace

CentralFiberReport central_fiber_verify(const CaseSpec& cs, const Ideal& embedding,
                                        const std::vector<Ideal>& claimed,
                                        const WeightSystem& ws,
                                        const std::vector<int>& expected_dims,
                                        const std::vector<bool>& expected_stable,
                                        long invariant_degree_bound) {
    CentralFiberReport rep;
    auto item = [&](const std::string& id, bool ok, const std::string& detail) {
        rep.items.push_back({id, ok ? "PASS" : "FAIL", detail});
        if (!ok) rep.pass = false;
    };
    const RingPtr wring = cs.w_ring;
    // central-fiber ideal: embedding relations + pullbacks of a generating set
    // of the full invariant ring (the positive-degree torus invariants)
    auto synth = synthesize_cox_generators(cs);
    std::vector<Poly> ginv = invariant_generators(cs.group, invariant_degree_bound, cs.data.ring);
    std::vector<Poly> central = embedding.gens();
    for (const auto& psi : ginv) central.push_back(pullback_invariant(cs, synth, psi));
    Ideal c(wring, central);
    // (i) every component lies inside the fiber
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        bool ok = true;
        std::string witness;
        for (const auto& g : c.gens())
            if (!radical_membership(g, claimed[i])) {
                ok = false;
                witness = g.str();
                break;
            }
        item("component-" + std::to_string(i) + "-inside-fiber", ok,
             ok ? "all central generators vanish on it" : ("fails on " + witness));
    }
    // (ii) the union covers the fiber: intersection of claimed ⊆ radical of C
    {
        Ideal inter = ideal_intersect(claimed);
        bool ok = true;
        std::string witness;
        for (const auto& g : inter.gens())
            if (!radical_membership(g, c)) {
                ok = false;
                witness = g.str();
                break;
            }
        item("components-cover-fiber", ok,
             ok ? "each intersection generator is in the radical"
                : ("intersection generator outside the radical: " + witness));
    }
    // (iii) dimensions
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        int d = krull_dimension(claimed[i]);
        rep.claimed_dims.push_back(d);
        item("component-" + std::to_string(i) + "-dimension",
             d == expected_dims[i],
             "dim = " + std::to_string(d) + ", expected " + std::to_string(expected_dims[i]));
    }
    // (iv) semistable components
    auto supports = semistable_supports(ws);
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        bool has_stable = false;
        for (const auto& s : supports) {
            Poly prod = Poly::rational_constant(wring, 1);
            for (int v : s) prod = prod * Poly::variable(wring, static_cast<std::size_t>(v));
            if (!radical_membership(prod, claimed[i])) {
                has_stable = true;
                break;
            }
        }
        rep.stable_component.push_back(has_stable);
        item("component-" + std::to_string(i) + "-stability",
             has_stable == expected_stable[i],
             has_stable ? "carries semistable points" : "no semistable points");
    }
    return rep;
}

}  // namespace coxalg
