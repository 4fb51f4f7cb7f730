#ifndef COXALG_MONOMIAL_HPP
#define COXALG_MONOMIAL_HPP

#include <vector>

#include "coxalg/numeric.hpp"

namespace coxalg {

// Exponent vector of a fixed-width monomial; width = ambient variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_) {
            if (x < 0) throw error("negative exponent");
            deg_ += x;
        }
    }

    std::size_t nvars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    long degree() const { return deg_; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }
    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // requires divides(o) in the o/this direction: returns o / this caller-side;
    // here: *this / o, requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw error("monomial division not exact");
        }
        r.deg_ -= o.deg_;
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }
    Monomial raised_by(std::size_t var, int amount) const {
        Monomial r(*this);
        r.e_[var] += amount;
        if (r.e_[var] < 0) throw error("negative exponent");
        r.deg_ += amount;
        return r;
    }
    // weighted degree sum_i w[i]*e[i]
    long weighted_degree(const std::vector<int>& w) const {
        long s = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) s += static_cast<long>(w[i]) * e_[i];
        return s;
    }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    void hash_into(Fnv1a& h) const {
        for (int x : e_) h.feed(static_cast<std::int64_t>(x));
    }

private:
    std::vector<int> e_;
    long deg_ = 0;
};

// Total orders on monomials of one ring.
struct MonomialOrder {
    enum class Kind { GrevLex, Lex, Block };
    Kind kind = Kind::GrevLex;
    // variable priority, a permutation of 0..n-1 (most significant first);
    // empty means the natural order
    std::vector<int> priority;
    // Block: the first `block_size` entries of the (effective) priority are the
    // eliminated block, compared grevlex first; ties fall through to grevlex on
    // the rest.
    std::size_t block_size = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, {}, 0}; }
    // eliminate the given variables (block order: [vars | remaining])
    static MonomialOrder block_eliminating(const std::vector<int>& vars, std::size_t nvars);

    // negative if a < b, 0 if equal, positive if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string str() const;
    void hash_into(Fnv1a& h) const;
    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && priority == o.priority && block_size == o.block_size;
    }
};

}  // namespace coxalg

#endif
