#include "coxalg/matgroup.hpp"

#include <algorithm>
#include <map>

#include "coxalg/intmatrix.hpp"

namespace coxalg {

namespace {
std::uint64_t matrix_hash(const FieldMatrix& m) {
    Fnv1a h;
    m.hash_into(h);
    return h.h;
}
}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<FieldMatrix>& gens,
                                             std::size_t bound) {
    if (gens.empty()) throw error("group closure needs at least one generator");
    FiniteMatrixGroup g;
    g.field_ = &gens[0].field();
    g.dim_ = gens[0].rows();
    g.gens_ = gens;
    for (const auto& m : gens) {
        if (m.rows() != g.dim_ || m.cols() != g.dim_) throw error("generator dimension mismatch");
        if (m.det().is_zero()) throw error("generator is singular");
    }
    FieldMatrix id = FieldMatrix::identity(*g.field_, g.dim_);
    auto push = [&](const FieldMatrix& m) -> bool {
        if (g.find_hash(m) >= 0) return false;
        if (g.elems_.size() >= bound)
            throw resource_limit_error("group closure exceeded bound " + std::to_string(bound));
        g.hashes_.push_back(matrix_hash(m));
        g.elems_.push_back({m, 0});
        return true;
    };
    push(id);
    std::size_t head = 0;
    while (head < g.elems_.size()) {
        FieldMatrix cur = g.elems_[head].matrix;
        ++head;
        for (const auto& s : gens) push(cur * s);
    }
    for (auto& e : g.elems_) e.order = e.matrix.multiplicative_order(static_cast<long>(bound));
    return g;
}

int FiniteMatrixGroup::find_hash(const FieldMatrix& m) const {
    std::uint64_t h = matrix_hash(m);
    for (std::size_t i = 0; i < hashes_.size(); ++i)
        if (hashes_[i] == h && elems_[i].matrix == m) return static_cast<int>(i);
    return -1;
}

int FiniteMatrixGroup::index_of(const FieldMatrix& m) const { return find_hash(m); }

const GroupElement& FiniteMatrixGroup::identity() const {
    return elems_[0];  // BFS seeds with the identity
}

int FiniteMatrixGroup::inverse_index(int i) const {
    const FieldMatrix& m = elems_[i].matrix;
    return index_of(m.pow(elems_[i].order - 1));
}

int FiniteMatrixGroup::product_index(int i, int j) const {
    return index_of(elems_[i].matrix * elems_[j].matrix);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& g) {
    std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cls;
        for (std::size_t h = 0; h < n; ++h) {
            const FieldMatrix& hm = g.elements()[h].matrix;
            FieldMatrix conj = hm * g.elements()[i].matrix * hm.inverse();
            int idx = g.index_of(conj);
            if (idx < 0) throw error("group not closed under conjugation");
            if (!seen[idx]) {
                seen[idx] = true;
                cls.push_back(idx);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return classes;
}

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g) {
    std::vector<FieldMatrix> comms;
    std::map<std::uint64_t, bool> seen;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            const FieldMatrix& a = g.elements()[i].matrix;
            const FieldMatrix& b = g.elements()[j].matrix;
            FieldMatrix c = a * b * a.inverse() * b.inverse();
            std::uint64_t h = matrix_hash(c);
            if (!seen.count(h)) {
                seen[h] = true;
                comms.push_back(c);
            }
        }
    return FiniteMatrixGroup::closure(comms, g.size() + 1);
}

std::size_t Abelianization::order() const {
    std::size_t o = 1;
    for (long d : invariant_factors) o *= static_cast<std::size_t>(d);
    return o;
}

Abelianization abelianization(const FiniteMatrixGroup& g) {
    FiniteMatrixGroup h = commutator_subgroup(g);
    // cosets of H in G
    std::size_t n = g.size();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (std::size_t i = 0; i < n; ++i) {
        if (coset_of[i] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
        const FieldMatrix& gi = g.elements()[i].matrix;
        for (const auto& he : h.elements()) {
            int idx = g.index_of(gi * he.matrix);
            if (idx < 0) throw error("commutator subgroup not inside group");
            coset_of[idx] = c;
        }
    }
    std::size_t s = reps.size();
    // multiplication table on cosets
    auto coset_mul = [&](int a, int b) {
        int idx = g.product_index(reps[a], reps[b]);
        return coset_of[idx];
    };
    // presentation: generators = all cosets, relations e_a + e_b - e_{ab}, e_id
    std::vector<std::vector<long>> rel_rows;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            std::vector<long> row(s, 0);
            row[a] += 1;
            row[b] += 1;
            row[static_cast<std::size_t>(coset_mul(static_cast<int>(a), static_cast<int>(b)))] -= 1;
            rel_rows.push_back(std::move(row));
        }
    {
        std::vector<long> row(s, 0);
        row[static_cast<std::size_t>(coset_of[0])] += 1;  // identity coset is trivial
        rel_rows.push_back(std::move(row));
    }
    IntMatrix rel(rel_rows.size(), s);
    for (std::size_t i = 0; i < rel_rows.size(); ++i)
        for (std::size_t j = 0; j < s; ++j) rel.at(i, j) = rel_rows[i][j];
    SmithForm sf = smith_normal_form(rel);
    // column transform V maps e_j to new coordinates; quotient by diag(D)
    Abelianization ab;
    std::vector<std::size_t> kept_cols;
    std::vector<long> mods;
    std::size_t rank = sf.invariant_factors.size();
    for (std::size_t k = 0; k < rank; ++k) {
        long d = sf.invariant_factors[k].get_si();
        if (d != 1) {
            kept_cols.push_back(k);
            mods.push_back(d);
        }
    }
    // columns beyond rank would be free Z factors; impossible for a finite group
    if (rank < s) throw error("abelianization: unexpected free part");
    ab.invariant_factors = mods;
    ab.coset_representatives = reps;
    ab.projection.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> tup;
        std::size_t c = static_cast<std::size_t>(coset_of[i]);
        for (std::size_t k = 0; k < kept_cols.size(); ++k) {
            BigInt v = sf.v.at(c, kept_cols[k]);
            BigInt m = mods[k];
            BigInt r = v % m;
            if (r < 0) r += m;
            tup.push_back(r.get_si());
        }
        ab.projection[i] = std::move(tup);
    }
    return ab;
}

std::vector<ReflectionClass> symplectic_reflections(const FiniteMatrixGroup& g) {
    std::size_t dim = g.dim();
    std::vector<bool> is_refl(g.size(), false);
    FieldMatrix id = FieldMatrix::identity(g.field(), dim);
    for (std::size_t i = 1; i < g.size(); ++i) {
        FieldMatrix d = g.elements()[i].matrix + (-id);
        if (d.rank() == 2) is_refl[i] = true;  // fixed space has codimension 2
    }
    std::vector<ReflectionClass> out;
    for (const auto& cls : conjugacy_classes(g)) {
        if (!is_refl[cls[0]]) continue;
        ReflectionClass rc;
        rc.members = cls;
        rc.representative = cls[0];
        rc.order = g.elements()[cls[0]].order;
        out.push_back(std::move(rc));
    }
    return out;
}

bool reflections_in_commutator(const FiniteMatrixGroup& g) {
    FiniteMatrixGroup h = commutator_subgroup(g);
    FieldMatrix id = FieldMatrix::identity(g.field(), g.dim());
    for (std::size_t i = 1; i < h.size(); ++i) {
        FieldMatrix d = h.elements()[i].matrix + (-id);
        if (d.rank() == 2) return true;
    }
    return false;
}

Poly group_act(const FieldMatrix& g, const Poly& f, ActionConvention conv) {
    switch (conv) {
        case ActionConvention::Substitute:
            return linear_substitute(f, g);
        case ActionConvention::InverseSubstitute:
            return linear_substitute(f, g.inverse());
    }
    throw error("unknown action convention");
}

CycNum character_of(const FieldMatrix& g, const Poly& f, ActionConvention conv) {
    if (f.is_zero()) throw error("character of the zero polynomial");
    Poly gf = group_act(g, f, conv);
    if (gf.term_count() != f.term_count()) throw error("not an eigenvector");
    const Term& lt = f.leading_term();
    CycNum lam = gf.coefficient_of(lt.m) * lt.c.inverse();
    if (gf != f * lam) throw error("not an eigenvector");
    return lam;
}

}  // namespace coxalg
