#ifndef COXALG_RINGMAP_HPP
#define COXALG_RINGMAP_HPP

#include "coxalg/groebner.hpp"

namespace coxalg {

// Ring homomorphism source -> target, one image polynomial per source
// variable. Targets declared invertible are handled through shadow variables
// and v*vbar - 1 relations: each pair (var, shadow) names two target-ring
// variables that are inverse to one another.
class RingMap {
public:
    RingMap(RingPtr source, RingPtr target, std::vector<Poly> images,
            std::vector<std::pair<int, int>> inverse_pairs = {});

    const RingPtr& source() const { return src_; }
    const RingPtr& target() const { return dst_; }
    const std::vector<Poly>& images() const { return images_; }
    const std::vector<std::pair<int, int>>& inverse_pairs() const { return inv_; }

    // substitution; the result is reduced modulo the inverse relations, so it
    // is the canonical representative in the Laurent quotient
    Poly apply(const Poly& f) const;

    Ideal kernel(std::optional<GBLimits> limits = std::nullopt) const;
    Ideal preimage(const Ideal& j, std::optional<GBLimits> limits = std::nullopt) const;

private:
    RingPtr src_, dst_;
    std::vector<Poly> images_;
    std::vector<std::pair<int, int>> inv_;
    Ideal inverse_relations() const;  // in the target ring
    Ideal graph_plus(const std::vector<Poly>& extra_target_gens,
                     std::optional<GBLimits> limits) const;
};

}  // namespace coxalg

#endif
