#ifndef COXALG_GROEBNER_HPP
#define COXALG_GROEBNER_HPP

#include <memory>
#include <optional>
#include <vector>

#include "coxalg/poly.hpp"

namespace coxalg {

struct GBLimits {
    std::size_t max_pairs = 4'000'000;  // pairs processed before giving up
    std::size_t max_basis = 100'000;
    long max_degree = 0;  // 0 = unbounded; otherwise cap on S-pair lcm degree
};

// Process-wide Groebner configuration: default limits and the basis cache.
// The cache allows concurrent readers; writers are serialized.
namespace gb_cache {
void set_default_limits(const GBLimits& l);
GBLimits default_limits();
void set_directory(const std::string& dir);  // "" disables the disk layer
std::string directory();
void clear_memory();
}  // namespace gb_cache

// A reduced Groebner basis, fixed order, monic, sorted ascending by leading
// monomial. Unique per (ideal, order).
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Poly> reduced);
    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Poly>& polys() const { return polys_; }
    bool is_unit_ideal() const;

    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

private:
    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Poly> polys_;  // terms sorted descending w.r.t. ord_
};

using GBPtr = std::shared_ptr<const GroebnerBasis>;

// Buchberger with Gebauer-Moeller pair pruning and sugar selection.
// Throws resource_limit_error when limits are exceeded.
GBPtr buchberger(RingPtr ring, const std::vector<Poly>& gens, const MonomialOrder& ord,
                 std::optional<GBLimits> limits = std::nullopt);

// Finitely generated ideal with a cached reduced basis per order.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero_ideal() const;

    const GroebnerBasis& gb(const MonomialOrder& ord = MonomialOrder::grevlex(),
                            std::optional<GBLimits> limits = std::nullopt) const;

    std::string key() const;  // content hash (ring + sorted generators)

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
};

Poly normal_form(const Poly& f, const Ideal& i,
                 const MonomialOrder& ord = MonomialOrder::grevlex());
bool ideal_contains(const Ideal& i, const Poly& f);
bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, long d);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const std::vector<Ideal>& ideals);

// I ∩ k[vars not in `vars`], as an ideal of the same ring
Ideal eliminate(const Ideal& i, const std::vector<int>& vars);

// true iff f^k ∈ I for some k (Rabinowitsch trick)
bool radical_membership(const Poly& f, const Ideal& i);

// dimension of ring/I; throws when 1 ∈ I
int krull_dimension(const Ideal& i);

// If f lies in the subalgebra generated by gens, returns g with g(gens) = f,
// in a fresh ring with the given tag names (default: s1..sk).
std::optional<Poly> subalgebra_membership(const Poly& f, const std::vector<Poly>& gens,
                                          std::vector<std::string> tag_names = {});

}  // namespace coxalg

#endif
