#ifndef COXALG_POLY_HPP
#define COXALG_POLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxalg/cyclotomic.hpp"
#include "coxalg/matrix.hpp"
#include "coxalg/monomial.hpp"

namespace coxalg {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
    static RingPtr make(const CyclotomicField& field, std::vector<std::string> vars);
    // same field, vars = this->vars + extra
    RingPtr extended(const std::vector<std::string>& extra) const;

    const CyclotomicField& field() const { return *field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    int var_index(const std::string& name) const;  // -1 when absent

    bool same_as(const PolyRing& o) const;

private:
    PolyRing(const CyclotomicField& f, std::vector<std::string> vars);
    const CyclotomicField* field_;
    std::vector<std::string> vars_;
};

// canonical storage order: grevlex, natural variable priority
int canonical_cmp(const Monomial& a, const Monomial& b);

struct Term {
    Monomial m;
    CycNum c;
};

// Immutable-style multivariate polynomial; terms sorted descending in the
// canonical order, no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const CycNum& c);
    static Poly rational_constant(RingPtr ring, const BigRat& q);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly term(RingPtr ring, Monomial m, CycNum c);
    static Poly from_terms(RingPtr ring, std::vector<Term> unsorted);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    long degree() const { return t_.empty() ? -1 : degree_computed(); }

    const Term& leading_term() const;   // canonical order
    CycNum coefficient_of(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const CycNum& c) const;
    Poly pow(long k) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // divide by the canonical leading coefficient
    Poly monic() const;
    Poly derivative(std::size_t var) const;

    // ring homomorphism: variable i |-> images[i]; all images share one ring
    Poly substitute(const std::vector<Poly>& images, RingPtr target) const;
    // same ring, variables renumbered: new index[i] = position of old var i
    Poly map_variables(const std::vector<int>& new_index, RingPtr target) const;

    // split into (weight-vector)-homogeneous parts, sorted by weight for
    // determinism; weight of a term = sum_i w[i]*e_i
    std::vector<std::pair<long, Poly>> weighted_components(const std::vector<int>& w) const;
    bool is_homogeneous_weighted(const std::vector<int>& w) const;
    long total_degree_min() const;  // min total degree over terms; -1 when zero

    std::string str() const;
    void hash_into(Fnv1a& h) const;

private:
    RingPtr ring_;
    std::vector<Term> t_;
    long degree_computed() const;
};

// f with the variable vector x replaced by P*x; P invertible, dim = nvars.
Poly linear_substitute(const Poly& f, const FieldMatrix& p);

inline Poly operator*(const CycNum& c, const Poly& f) { return f * c; }

}  // namespace coxalg

#endif
