#include "coxalg/valuation.hpp"

#include <algorithm>
#include <map>

namespace coxalg {

MonomialValuation monomial_valuation(const FieldMatrix& t, ActionConvention conv) {
    MonomialValuation nu;
    nu.source = t;
    nu.order_r = t.multiplicative_order();
    FieldMatrix m = (conv == ActionConvention::Substitute) ? t : t.inverse();
    Diagonalization d = diagonalize_finite_order(m, nu.order_r);
    nu.p = d.p;
    nu.p_inv = d.p_inv;
    nu.weights = d.exponents;
    return nu;
}

long nu_eval(const MonomialValuation& nu, const Poly& f) {
    if (f.is_zero()) throw error("nu_eval: valuation of the zero polynomial");
    Poly g = linear_substitute(f, nu.p);
    bool first = true;
    long best = 0;
    for (const auto& t : g.terms()) {
        long w = t.m.weighted_degree(nu.weights);
        if (first || w < best) best = w;
        first = false;
    }
    return best;
}

bool CartanData::is_sum_of_a_type_blocks() const {
    std::size_t m = size();
    if (matrix.rows() != m || matrix.cols() != m) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (matrix.at(i, i) != -2) return false;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (matrix.at(i, j) != matrix.at(j, i)) return false;
            if (matrix.at(i, j) != 0 && matrix.at(i, j) != 1) return false;
        }
    }
    // off-diagonal 1s must form disjoint paths (A-type Dynkin diagrams)
    std::vector<int> deg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && matrix.at(i, j) == 1) ++deg[i];
    for (std::size_t i = 0; i < m; ++i)
        if (deg[i] > 2) return false;
    // no cycles: each connected component has #edges = #vertices - 1
    std::vector<int> comp(m, -1);
    int nc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < m; ++j)
                if (j != v && matrix.at(v, j) == 1 && comp[j] < 0) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<int> verts(nc, 0), edges(nc, 0);
    for (std::size_t i = 0; i < m; ++i) {
        ++verts[comp[i]];
        for (std::size_t j = i + 1; j < m; ++j)
            if (matrix.at(i, j) == 1 && comp[i] == comp[j]) ++edges[comp[i]];
    }
    for (int c = 0; c < nc; ++c)
        if (edges[c] != verts[c] - 1) return false;
    return det() != 0;
}

namespace {

// canonical form of the row space of a matrix (fixed-subspace comparison)
std::string subspace_key(const FieldMatrix& rows) {
    FieldMatrix r = rows.rref();
    Fnv1a h;
    r.hash_into(h);
    return hex64(h.h);
}

FieldMatrix fixed_space_rows(const FieldMatrix& g) {
    const CyclotomicField& f = g.field();
    std::size_t n = g.rows();
    FieldMatrix shifted = g + (-FieldMatrix::identity(f, n));
    auto basis = shifted.kernel_basis();
    FieldMatrix rows(f, basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = basis[i][j];
    return rows;
}

}  // namespace

CartanData cartan_from_reflections(const FiniteMatrixGroup& g) {
    auto classes = symplectic_reflections(g);
    if (classes.empty()) throw error("cartan_from_reflections: no symplectic reflections");
    // orbit key of each class's fixed subspace
    std::vector<std::string> orbit_key(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const FieldMatrix& rep = g.elements()[classes[c].representative].matrix;
        FieldMatrix fs = fixed_space_rows(rep);
        // minimal key over the G-orbit makes the bundle id deterministic
        std::string best;
        for (const auto& e : g.elements()) {
            FieldMatrix moved(g.field(), fs.rows(), fs.cols());
            // rows are vectors in V: move by e.matrix (acting on column vectors)
            for (std::size_t i = 0; i < fs.rows(); ++i)
                for (std::size_t j = 0; j < fs.cols(); ++j) {
                    CycNum acc(g.field());
                    for (std::size_t k = 0; k < fs.cols(); ++k)
                        acc += e.matrix.at(j, k) * fs.at(i, k);
                    moved.at(i, j) = acc;
                }
            std::string key = subspace_key(moved);
            if (best.empty() || key < best) best = key;
        }
        orbit_key[c] = best;
    }
    // bundles in order of first appearance
    std::vector<std::vector<std::size_t>> bundles;
    std::map<std::string, std::size_t> seen;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto it = seen.find(orbit_key[c]);
        if (it == seen.end()) {
            seen[orbit_key[c]] = bundles.size();
            bundles.push_back({c});
        } else {
            bundles[it->second].push_back(c);
        }
    }
    CartanData data;
    std::vector<std::vector<long>> rows;
    for (const auto& bundle : bundles) {
        std::size_t k = bundle.size();
        // generator of the cyclic isotropy: a reflection of order k+1 fixing
        // the representative subspace of the first class in the bundle
        const FieldMatrix& rep0 = g.elements()[classes[bundle[0]].representative].matrix;
        FieldMatrix fs = fixed_space_rows(rep0);
        std::string fs_key = subspace_key(fs);
        FieldMatrix gen = rep0;
        bool found = false;
        for (std::size_t c : bundle)
            for (int m : classes[c].members) {
                const FieldMatrix& cand = g.elements()[m].matrix;
                if (g.elements()[m].order == static_cast<long>(k + 1) &&
                    subspace_key(fixed_space_rows(cand)) == fs_key) {
                    gen = cand;
                    found = true;
                    break;
                }
            }
        if (!found) throw error("cartan_from_reflections: no cyclic generator found");
        // divisor i inside the block corresponds to the class of gen^i
        std::size_t base = data.class_reps.size();
        FieldMatrix p = gen;
        for (std::size_t i = 1; i <= k; ++i) {
            data.class_reps.push_back(p);
            data.class_orders.push_back(p.multiplicative_order());
            p = p * gen;
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<long> row(base + k, 0);  // resized at the end
            row.resize(classes.size(), 0);
            rows.push_back(row);
        }
        (void)base;
    }
    std::size_t m = data.class_reps.size();
    data.matrix = IntMatrix(m, m);
    std::size_t off = 0;
    for (const auto& bundle : bundles) {
        std::size_t k = bundle.size();
        for (std::size_t i = 0; i < k; ++i) {
            data.matrix.at(off + i, off + i) = -2;
            if (i + 1 < k) {
                data.matrix.at(off + i, off + i + 1) = 1;
                data.matrix.at(off + i + 1, off + i) = 1;
            }
        }
        off += k;
    }
    if (!data.is_sum_of_a_type_blocks())
        throw error("cartan_from_reflections: assembled matrix is not A-type");
    return data;
}

long root_dlog(const CycNum& lam, long r) {
    const CyclotomicField* f = lam.field();
    if (!f) throw error("root_dlog: zero value");
    if (f->order() % r != 0) throw error("root_dlog: r does not divide the field order");
    for (long k = 0; k < r; ++k)
        if (lam == CycNum::root_power(*f, k * (f->order() / r))) return k;
    throw error("root_dlog: value is not an r-th root of unity");
}

std::vector<std::vector<long>> lifted_valuation(const std::vector<FieldMatrix>& class_reps,
                                                const std::vector<long>& class_orders,
                                                const std::vector<GradedGenerator>& gens,
                                                ActionConvention conv) {
    std::vector<std::vector<long>> a(class_reps.size());
    for (std::size_t i = 0; i < class_reps.size(); ++i) {
        for (const auto& gg : gens) {
            CycNum lam = character_of(class_reps[i], gg.poly, conv);
            a[i].push_back(root_dlog(lam, class_orders[i]));
        }
    }
    return a;
}

std::vector<long> intersection_numbers(const std::vector<long>& nu_values,
                                       const CartanData& cartan) {
    std::size_t m = cartan.size();
    if (nu_values.size() != m) throw error("intersection_numbers: dimension mismatch");
    std::vector<long> out(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        BigRat acc(0);
        for (std::size_t i = 0; i < m; ++i) {
            BigRat term(nu_values[i], cartan.class_orders[i]);
            term.canonicalize();
            acc -= term * BigRat(cartan.matrix.at(i, j));
        }
        if (acc.get_den() != 1)
            throw error("intersection_numbers: non-integral entry (inconsistent grading)");
        out[j] = static_cast<long>(acc.get_num().get_si());
    }
    return out;
}

}  // namespace coxalg
