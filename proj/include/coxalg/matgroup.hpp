#ifndef COXALG_MATGROUP_HPP
#define COXALG_MATGROUP_HPP

#include <optional>

#include "coxalg/matrix.hpp"
#include "coxalg/poly.hpp"

namespace coxalg {

// How a group element acts on polynomials.
//   Substitute:        (g.f)(x) = f(g x)
//   InverseSubstitute: (g.f)(x) = f(g^{-1} x)
// The paper's tables fix Substitute; both are kept selectable.
enum class ActionConvention { Substitute, InverseSubstitute };

struct GroupElement {
    FieldMatrix matrix;
    long order = 0;
};

class FiniteMatrixGroup {
public:
    FiniteMatrixGroup() = default;

    // breadth-first closure; throws resource_limit_error past `bound` elements
    static FiniteMatrixGroup closure(const std::vector<FieldMatrix>& gens, std::size_t bound = 512);

    std::size_t size() const { return elems_.size(); }
    std::size_t dim() const { return dim_; }
    const CyclotomicField& field() const { return *field_; }
    const std::vector<GroupElement>& elements() const { return elems_; }
    const std::vector<FieldMatrix>& generators() const { return gens_; }
    const GroupElement& identity() const;

    int index_of(const FieldMatrix& m) const;  // -1 when absent
    bool contains(const FieldMatrix& m) const { return index_of(m) >= 0; }
    int inverse_index(int i) const;
    int product_index(int i, int j) const;

private:
    const CyclotomicField* field_ = nullptr;
    std::size_t dim_ = 0;
    std::vector<FieldMatrix> gens_;
    std::vector<GroupElement> elems_;
    std::vector<std::uint64_t> hashes_;
    int find_hash(const FieldMatrix& m) const;
};

// orbits of the conjugation action, each sorted, classes sorted by least member
std::vector<std::vector<int>> conjugacy_classes(const FiniteMatrixGroup& g);

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g);

// Ab(G) = G/[G,G] with structure from the Smith form of the multiplication
// relations. projection[element index] = character-index tuple, one entry per
// invariant factor.
struct Abelianization {
    std::vector<long> invariant_factors;           // nontrivial ones, d1 | d2 | ...
    std::vector<std::vector<long>> projection;     // per group element
    std::vector<int> coset_representatives;        // element index per coset, deterministic
    std::size_t order() const;
};
Abelianization abelianization(const FiniteMatrixGroup& g);

// non-identity elements whose 1-eigenspace has dimension dim-2, grouped by
// conjugacy class; per class a representative (least index) and its order
struct ReflectionClass {
    std::vector<int> members;
    int representative;
    long order;
};
std::vector<ReflectionClass> symplectic_reflections(const FiniteMatrixGroup& g);

bool reflections_in_commutator(const FiniteMatrixGroup& g);

// g acting on f by the chosen convention
Poly group_act(const FieldMatrix& g, const Poly& f, ActionConvention conv);

// eigenvalue of g on f; throws when g.f is not proportional to f
CycNum character_of(const FieldMatrix& g, const Poly& f, ActionConvention conv);

}  // namespace coxalg

#endif
