#include "coxalg/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coxalg {

PolyRing::PolyRing(const CyclotomicField& f, std::vector<std::string> vars)
    : field_(&f), vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw error("duplicate variable name " + vars_[i]);
}

RingPtr PolyRing::make(const CyclotomicField& field, std::vector<std::string> vars) {
    return RingPtr(new PolyRing(field, std::move(vars)));
}

RingPtr PolyRing::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make(*field_, std::move(vars));
}

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
}

int canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        int ea = a[i], eb = b[i];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b) throw error("polynomial without ring");
    if (a.get() != b.get() && !a->same_as(*b)) throw error("ring mismatch");
}

}  // namespace

Poly Poly::constant(RingPtr ring, const CycNum& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.t_.push_back({Monomial(p.ring_->nvars()), c});
    return p;
}

Poly Poly::rational_constant(RingPtr ring, const BigRat& q) {
    const CyclotomicField& f = ring->field();
    return constant(std::move(ring), CycNum::rational(f, q));
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw error("variable index out of range");
    Poly p(ring);
    p.t_.push_back({Monomial(ring->nvars()).raised_by(i, 1), CycNum::rational(ring->field(), 1)});
    return p;
}

Poly Poly::term(RingPtr ring, Monomial m, CycNum c) {
    if (m.nvars() != ring->nvars()) throw error("monomial width mismatch");
    Poly p(std::move(ring));
    if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> unsorted) {
    std::sort(unsorted.begin(), unsorted.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.m, b.m) > 0; });
    Poly p(std::move(ring));
    for (auto& t : unsorted) {
        if (t.m.nvars() != p.ring_->nvars()) throw error("monomial width mismatch");
        if (!p.t_.empty() && p.t_.back().m == t.m)
            p.t_.back().c += t.c;
        else
            p.t_.push_back(std::move(t));
        if (!p.t_.empty() && p.t_.back().c.is_zero()) p.t_.pop_back();
    }
    return p;
}

const Term& Poly::leading_term() const {
    if (t_.empty()) throw error("leading term of zero polynomial");
    return t_[0];
}

CycNum Poly::coefficient_of(const Monomial& m) const {
    // binary search in descending order
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& mm) {
        return canonical_cmp(t.m, mm) > 0;
    });
    if (it != t_.end() && it->m == m) return it->c;
    return CycNum(ring_->field());
}

long Poly::degree_computed() const {
    long d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.degree());
    return d;
}

long Poly::total_degree_min() const {
    if (t_.empty()) return -1;
    long d = t_[0].m.degree();
    for (const auto& t : t_) d = std::min(d, t.m.degree());
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = canonical_cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            CycNum s = t_[i].c + o.t_[j].c;
            if (!s.is_zero()) r.t_.push_back({t_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < t_.size()) r.t_.push_back(t_[i++]);
    while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (t_.empty() || o.t_.empty()) return Poly(ring_);
    std::map<Monomial, CycNum, bool (*)(const Monomial&, const Monomial&)> acc(
        [](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
    for (const auto& ta : t_)
        for (const auto& tb : o.t_) {
            Monomial m = ta.m * tb.m;
            CycNum prod = ta.c * tb.c;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    Poly r(ring_);
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc) r.t_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const CycNum& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
}

Poly Poly::pow(long k) const {
    if (k < 0) throw error("negative power of polynomial");
    Poly r = rational_constant(ring_, 1);
    Poly b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    CycNum inv = t_[0].c.inverse();
    return *this * inv;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& t : t_) {
        int e = t.m[var];
        if (e == 0) continue;
        r.t_.push_back({t.m.raised_by(var, -1), t.c * CycNum::integer(ring_->field(), e)});
    }
    // canonical order is preserved by dividing all terms by the same variable
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.m, b.m) > 0; });
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images, RingPtr target) const {
    if (images.size() != ring_->nvars()) throw error("substitute: wrong image count");
    for (const auto& g : images) require_same_ring(g.ring(), target);
    // cache powers of each image
    std::vector<std::vector<Poly>> powers(images.size());
    auto image_power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::rational_constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Poly acc(target);
    for (const auto& t : t_) {
        Poly prod = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            int e = t.m[i];
            if (e > 0) prod = prod * image_power(i, e);
        }
        acc = acc + prod;
    }
    return acc;
}

Poly Poly::map_variables(const std::vector<int>& new_index, RingPtr target) const {
    if (new_index.size() != ring_->nvars()) throw error("map_variables: wrong index count");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t i = 0; i < new_index.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (new_index[i] < 0) throw error("map_variables: variable has no image");
            e[new_index[i]] += t.m[i];
        }
        out.push_back({Monomial(std::move(e)), t.c});
    }
    return from_terms(target, std::move(out));
}

std::vector<std::pair<long, Poly>> Poly::weighted_components(const std::vector<int>& w) const {
    std::map<long, std::vector<Term>> byw;
    for (const auto& t : t_) byw[t.m.weighted_degree(w)].push_back(t);
    std::vector<std::pair<long, Poly>> out;
    for (auto& [wt, terms] : byw) out.emplace_back(wt, from_terms(ring_, std::move(terms)));
    return out;
}

bool Poly::is_homogeneous_weighted(const std::vector<int>& w) const {
    if (t_.size() <= 1) return true;
    long w0 = t_[0].m.weighted_degree(w);
    for (const auto& t : t_)
        if (t.m.weighted_degree(w) != w0) return false;
    return true;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        std::string cs = t.c.str();
        bool negated = false;
        if (t.c.is_rational() && t.c.rational_value() < 0) {
            cs = (-t.c).str();
            negated = true;
        }
        os << (first ? (negated ? "-" : "") : (negated ? " - " : " + "));
        first = false;
        bool coeff_simple = t.c.is_rational() || t.c.coeffs().size() < 2;
        bool has_vars = !t.m.is_one();
        std::string body = negated ? cs : t.c.str();
        // count summands in the coefficient
        int nz = 0;
        for (const auto& x : t.c.coeffs())
            if (x != 0) ++nz;
        bool need_paren = has_vars && nz > 1;
        if (!has_vars) {
            os << body;
        } else {
            bool unit = (nz == 1 && ((negated ? -t.c : t.c).is_one()));
            if (!unit) {
                if (need_paren) os << "(" << body << ")";
                else os << body;
                os << "*";
            }
            bool fv = true;
            for (std::size_t i = 0; i < t.m.nvars(); ++i) {
                if (t.m[i] == 0) continue;
                if (!fv) os << "*";
                fv = false;
                os << ring_->var_name(i);
                if (t.m[i] > 1) os << "^" << t.m[i];
            }
        }
        (void)coeff_simple;
    }
    return os.str();
}

void Poly::hash_into(Fnv1a& h) const {
    h.feed(static_cast<std::int64_t>(t_.size()));
    for (const auto& t : t_) {
        t.m.hash_into(h);
        t.c.hash_into(h);
    }
}

Poly linear_substitute(const Poly& f, const FieldMatrix& p) {
    const RingPtr& ring = f.ring();
    std::size_t n = ring->nvars();
    if (p.rows() != n || p.cols() != n) throw error("linear_substitute: dimension mismatch");
    // singular check up front, the inverse is the natural witness
    (void)p.inverse();
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly img(ring);
        for (std::size_t j = 0; j < n; ++j) {
            if (p.at(i, j).is_zero()) continue;
            img = img + Poly::term(ring, Monomial(n).raised_by(j, 1), p.at(i, j));
        }
        images.push_back(std::move(img));
    }
    return f.substitute(images, ring);
}

}  // namespace coxalg
