#include "coxalg/ringmap.hpp"

namespace coxalg {

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Poly> images,
                 std::vector<std::pair<int, int>> inverse_pairs)
    : src_(std::move(source)), dst_(std::move(target)), images_(std::move(images)),
      inv_(std::move(inverse_pairs)) {
    if (images_.size() != src_->nvars()) throw error("ring map: one image per source variable");
    for (const auto& g : images_)
        if (!g.ring()->same_as(*dst_)) throw error("ring map: image in wrong ring");
    for (auto [v, s] : inv_) {
        if (v < 0 || s < 0 || static_cast<std::size_t>(v) >= dst_->nvars() ||
            static_cast<std::size_t>(s) >= dst_->nvars() || v == s)
            throw error("ring map: bad inverse pair");
    }
}

Ideal RingMap::inverse_relations() const {
    std::vector<Poly> rel;
    for (auto [v, s] : inv_)
        rel.push_back(Poly::variable(dst_, v) * Poly::variable(dst_, s) -
                      Poly::rational_constant(dst_, 1));
    return Ideal(dst_, std::move(rel));
}

Poly RingMap::apply(const Poly& f) const {
    if (!f.ring()->same_as(*src_)) throw error("ring map: argument from wrong ring");
    Poly img = f.substitute(images_, dst_);
    if (inv_.empty() || img.is_zero()) return img;
    return normal_form(img, inverse_relations());
}

Ideal RingMap::graph_plus(const std::vector<Poly>& extra_target_gens,
                          std::optional<GBLimits> limits) const {
    std::size_t nd = dst_->nvars(), ns = src_->nvars();
    RingPtr big = dst_->extended(src_->var_names());
    std::vector<int> dst_up(nd), src_up(ns);
    for (std::size_t k = 0; k < nd; ++k) dst_up[k] = static_cast<int>(k);
    for (std::size_t k = 0; k < ns; ++k) src_up[k] = static_cast<int>(nd + k);
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < ns; ++k)
        gens.push_back(Poly::variable(big, nd + k) - images_[k].map_variables(dst_up, big));
    for (auto [v, s] : inv_)
        gens.push_back(Poly::variable(big, v) * Poly::variable(big, s) -
                       Poly::rational_constant(big, 1));
    for (const auto& g : extra_target_gens) gens.push_back(g.map_variables(dst_up, big));
    Ideal graph(big, std::move(gens));
    std::vector<int> elim(nd);
    for (std::size_t k = 0; k < nd; ++k) elim[k] = static_cast<int>(k);
    MonomialOrder ord = MonomialOrder::block_eliminating(elim, big->nvars());
    const GroebnerBasis& g = graph.gb(ord, limits);
    std::vector<int> down(big->nvars(), -1);
    for (std::size_t k = 0; k < ns; ++k) down[nd + k] = static_cast<int>(k);
    std::vector<Poly> out;
    for (const auto& p : g.polys()) {
        bool clean = true;
        for (const auto& t : p.terms()) {
            for (std::size_t v = 0; v < nd && clean; ++v)
                if (t.m[v] > 0) clean = false;
            if (!clean) break;
        }
        if (clean) out.push_back(p.map_variables(down, src_));
    }
    return Ideal(src_, std::move(out));
}

Ideal RingMap::kernel(std::optional<GBLimits> limits) const { return graph_plus({}, limits); }

Ideal RingMap::preimage(const Ideal& j, std::optional<GBLimits> limits) const {
    if (!j.ring()->same_as(*dst_)) throw error("preimage: ideal from wrong ring");
    return graph_plus(j.gens(), limits);
}

}  // namespace coxalg
