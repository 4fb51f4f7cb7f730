#include "coxalg/groebner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace coxalg {

namespace {

// ---------------------------------------------------------------- engine ----

struct OrdLess {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->cmp(a, b) < 0; }
};
using TermMap = std::map<Monomial, CycNum, OrdLess>;

struct GPoly {
    std::vector<Term> t;  // sorted descending w.r.t. the active order
    long sugar = 0;
    bool minimal = true;  // false once its lead is divisible by a newer lead
    const Monomial& lm() const { return t[0].m; }
};

std::vector<Term> sort_terms(const Poly& p, const MonomialOrder& ord) {
    std::vector<Term> t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return t;
}

Poly to_poly(const RingPtr& ring, const std::vector<Term>& t) {
    return Poly::from_terms(ring, t);
}

class Engine {
public:
    Engine(RingPtr ring, const MonomialOrder& ord, const GBLimits& limits)
        : ring_(std::move(ring)), ord_(ord), limits_(limits) {}

    std::vector<Poly> run(const std::vector<Poly>& gens) {
        for (const Poly& g : gens) {
            if (g.is_zero()) continue;
            add_generator(sort_terms(g, ord_), g.degree());
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++processed > limits_.max_pairs)
                throw resource_limit_error("groebner: pair limit exceeded");
            if (limits_.max_degree > 0 && pr.lcm.degree() > limits_.max_degree)
                throw resource_limit_error("groebner: degree limit exceeded");
            std::vector<Term> s = spoly(pr);
            long sug = pr.sugar;
            std::vector<Term> r = reduce_full(std::move(s), &sug);
            if (!r.empty()) add_generator(std::move(r), sug);
        }
        return reduced_basis();
    }

private:
    struct Pair {
        long sugar;
        Monomial lcm;
        int i, j;
    };
    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            int c = ord->cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    RingPtr ring_;
    MonomialOrder ord_;
    GBLimits limits_;
    std::vector<GPoly> basis_;
    std::set<Pair, PairLess> pairs_{PairLess{&ord_}};

    std::vector<Term> spoly(const Pair& pr) {
        const GPoly& f = basis_[pr.i];
        const GPoly& g = basis_[pr.j];
        Monomial mf = pr.lcm / f.lm();
        Monomial mg = pr.lcm / g.lm();
        // both monic: s = mf*f - mg*g, leads cancel
        TermMap acc{OrdLess{&ord_}};
        auto add = [&](const Monomial& mult, const std::vector<Term>& t, bool negate) {
            for (std::size_t k = 1; k < t.size(); ++k) {
                Monomial m = t[k].m * mult;
                CycNum c = negate ? -t[k].c : t[k].c;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        };
        add(mf, f.t, false);
        add(mg, g.t, true);
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) out.push_back({it->first, it->second});
        return out;
    }

    // full reduction against the current basis; result monic-ized by caller
    std::vector<Term> reduce_full(std::vector<Term> f, long* sugar) {
        TermMap work{OrdLess{&ord_}};
        for (auto& t : f) work.emplace(std::move(t.m), std::move(t.c));
        std::vector<Term> out;
        while (!work.empty()) {
            auto lead_it = std::prev(work.end());
            const Monomial& m = lead_it->first;
            int red = find_reducer(m);
            if (red < 0) {
                out.push_back({lead_it->first, lead_it->second});
                work.erase(lead_it);
                continue;
            }
            const GPoly& g = basis_[red];
            Monomial mult = m / g.lm();
            CycNum coef = lead_it->second;  // g is monic
            if (sugar) *sugar = std::max(*sugar, g.sugar + mult.degree());
            work.erase(lead_it);
            for (std::size_t k = 1; k < g.t.size(); ++k) {
                Monomial mm = g.t[k].m * mult;
                CycNum cc = coef * g.t[k].c;
                auto it = work.find(mm);
                if (it == work.end()) {
                    work.emplace(std::move(mm), -cc);
                } else {
                    it->second -= cc;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
        }
        return out;
    }

    int find_reducer(const Monomial& m) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].lm().divides(m)) return static_cast<int>(i);
        return -1;
    }

    void add_generator(std::vector<Term> t, long sugar) {
        if (t.empty()) return;
        if (basis_.size() >= limits_.max_basis)
            throw resource_limit_error("groebner: basis size limit exceeded");
        GPoly gp;
        CycNum inv = t[0].c.inverse();
        for (auto& term : t) term.c *= inv;
        gp.t = std::move(t);
        gp.sugar = sugar;
        int h = static_cast<int>(basis_.size());
        update_pairs(h, gp);
        for (auto& b : basis_)
            if (b.minimal && gp.lm().divides(b.lm())) b.minimal = false;
        basis_.push_back(std::move(gp));
    }

    // Gebauer-Moeller criteria
    void update_pairs(int h, const GPoly& gh) {
        struct Cand { Monomial lcm; int g; bool coprime; };
        std::vector<Cand> c;
        for (int g = 0; g < h; ++g)
            c.push_back({basis_[g].lm().lcm(gh.lm()), g, basis_[g].lm().coprime(gh.lm())});
        std::vector<Cand> d;
        for (std::size_t i = 0; i < c.size(); ++i) {
            bool keep = c[i].coprime;
            if (!keep) {
                bool dominated = false;
                for (std::size_t j = i + 1; j < c.size() && !dominated; ++j)
                    if (c[j].lcm.divides(c[i].lcm) && c[j].lcm != c[i].lcm) dominated = true;
                for (std::size_t j = 0; j < d.size() && !dominated; ++j)
                    if (d[j].lcm.divides(c[i].lcm)) dominated = true;
                // equal lcms later in c also dominate (keep only the last)
                for (std::size_t j = i + 1; j < c.size() && !dominated; ++j)
                    if (c[j].lcm == c[i].lcm) dominated = true;
                keep = !dominated;
            }
            if (keep) d.push_back(c[i]);
        }
        // drop old pairs strictly dominated by the new lead
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& p = *it;
            if (gh.lm().divides(p.lcm) && basis_[p.i].lm().lcm(gh.lm()) != p.lcm &&
                basis_[p.j].lm().lcm(gh.lm()) != p.lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }
        for (const auto& cand : d) {
            if (cand.coprime) continue;  // product criterion
            const GPoly& g = basis_[cand.g];
            long sug = std::max(g.sugar + (cand.lcm / g.lm()).degree(),
                                gh.sugar + (cand.lcm / gh.lm()).degree());
            pairs_.insert({sug, cand.lcm, cand.g, h});
        }
    }

    std::vector<Poly> reduced_basis() {
        // collect minimal elements, ascending by lead
        std::vector<int> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].minimal) keep.push_back(static_cast<int>(i));
        std::sort(keep.begin(), keep.end(), [&](int a, int b) {
            return ord_.cmp(basis_[a].lm(), basis_[b].lm()) < 0;
        });
        // drop duplicates of the same lead (can appear transiently)
        std::vector<int> mins;
        for (int i : keep) {
            bool dup = false;
            for (int j : mins)
                if (basis_[j].lm().divides(basis_[i].lm())) { dup = true; break; }
            if (!dup) mins.push_back(i);
        }
        // tail-reduce each against the others
        std::vector<GPoly> final_set;
        for (std::size_t k = 0; k < mins.size(); ++k) final_set.push_back(basis_[mins[k]]);
        std::vector<Poly> out;
        for (std::size_t k = 0; k < final_set.size(); ++k) {
            // reduce the tail of final_set[k] by all final_set (lead can't reduce)
            TermMap work{OrdLess{&ord_}};
            const auto& t = final_set[k].t;
            for (std::size_t i = 1; i < t.size(); ++i) work.emplace(t[i].m, t[i].c);
            std::vector<Term> tail_out;
            while (!work.empty()) {
                auto lead_it = std::prev(work.end());
                int red = -1;
                for (std::size_t j = 0; j < final_set.size(); ++j)
                    if (final_set[j].lm().divides(lead_it->first)) { red = static_cast<int>(j); break; }
                if (red < 0) {
                    tail_out.push_back({lead_it->first, lead_it->second});
                    work.erase(lead_it);
                    continue;
                }
                const GPoly& g = final_set[red];
                Monomial mult = lead_it->first / g.lm();
                CycNum coef = lead_it->second;
                work.erase(std::prev(work.end()));
                for (std::size_t i = 1; i < g.t.size(); ++i) {
                    Monomial mm = g.t[i].m * mult;
                    CycNum cc = coef * g.t[i].c;
                    auto it = work.find(mm);
                    if (it == work.end()) work.emplace(std::move(mm), -cc);
                    else {
                        it->second -= cc;
                        if (it->second.is_zero()) work.erase(it);
                    }
                }
            }
            std::vector<Term> full;
            full.push_back(t[0]);
            for (auto& term : tail_out) full.push_back(term);
            out.push_back(to_poly(ring_, full));
        }
        return out;
    }
};

}  // namespace

// ------------------------------------------------------------------ cache ----

namespace gb_cache {

namespace {
std::shared_mutex mtx;
GBLimits g_limits;
std::string g_dir;
std::unordered_map<std::string, GBPtr> g_mem;
}  // namespace

void set_default_limits(const GBLimits& l) {
    std::unique_lock lock(mtx);
    g_limits = l;
}
GBLimits default_limits() {
    std::shared_lock lock(mtx);
    return g_limits;
}
void set_directory(const std::string& dir) {
    std::unique_lock lock(mtx);
    g_dir = dir;
}
std::string directory() {
    std::shared_lock lock(mtx);
    return g_dir;
}
void clear_memory() {
    std::unique_lock lock(mtx);
    g_mem.clear();
}

namespace detail {

GBPtr lookup(const std::string& key) {
    std::shared_lock lock(mtx);
    auto it = g_mem.find(key);
    return it == g_mem.end() ? nullptr : it->second;
}

void store(const std::string& key, const GBPtr& gb) {
    std::unique_lock lock(mtx);
    g_mem[key] = gb;
}

// compact, exact text form: one poly per line, terms as e1,..,en:c0,..,ck;
std::string serialize_poly(const Poly& p) {
    std::ostringstream os;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < t.m.nvars(); ++i) os << (i ? "," : "") << t.m[i];
        os << ":";
        const auto& c = t.c.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
        os << ";";
    }
    return os.str();
}

Poly deserialize_poly(const RingPtr& ring, const std::string& line) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    const CyclotomicField& f = ring->field();
    while (pos < line.size()) {
        std::size_t colon = line.find(':', pos);
        std::size_t semi = line.find(';', colon);
        if (colon == std::string::npos || semi == std::string::npos)
            throw error("corrupt cache entry");
        std::vector<int> e;
        {
            std::istringstream es(line.substr(pos, colon - pos));
            std::string tok;
            while (std::getline(es, tok, ',')) e.push_back(std::stoi(tok));
        }
        std::vector<BigRat> c;
        {
            std::istringstream cs(line.substr(colon + 1, semi - colon - 1));
            std::string tok;
            while (std::getline(cs, tok, ',')) c.emplace_back(tok);
        }
        terms.push_back({Monomial(std::move(e)), CycNum::from_coeffs(f, c)});
        pos = semi + 1;
    }
    return Poly::from_terms(ring, std::move(terms));
}

GBPtr disk_load(const std::string& key, const RingPtr& ring, const MonomialOrder& ord) {
    std::string dir = directory();
    if (dir.empty()) return nullptr;
    std::filesystem::path p = std::filesystem::path(dir) / (key + ".gb");
    std::ifstream in(p);
    if (!in) return nullptr;
    std::vector<Poly> polys;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) polys.push_back(deserialize_poly(ring, line));
    return std::make_shared<GroebnerBasis>(ring, ord, std::move(polys));
}

void disk_store(const std::string& key, const GroebnerBasis& gb) {
    std::string dir = directory();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path p = std::filesystem::path(dir) / (key + ".gb");
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        for (const auto& g : gb.polys()) out << serialize_poly(g) << "\n";
    }
    std::filesystem::rename(tmp, p, ec);
}

}  // namespace detail

}  // namespace gb_cache

// ---------------------------------------------------------- GroebnerBasis ----

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<Poly> reduced)
    : ring_(std::move(ring)), ord_(std::move(ord)), polys_(std::move(reduced)) {}

bool GroebnerBasis::is_unit_ideal() const {
    return polys_.size() == 1 && polys_[0].is_constant() && !polys_[0].is_zero();
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
    if (f.is_zero() || polys_.empty()) return f;
    OrdLess less{&ord_};
    TermMap work{less};
    for (const auto& t : f.terms()) {
        auto it = work.find(t.m);
        if (it == work.end()) work.emplace(t.m, t.c);
        else it->second += t.c;
    }
    // leads/tails per basis element, presorted
    std::vector<std::vector<Term>> bs;
    bs.reserve(polys_.size());
    for (const auto& g : polys_) bs.push_back(sort_terms(g, ord_));
    std::vector<Term> out;
    while (!work.empty()) {
        auto lead_it = std::prev(work.end());
        if (lead_it->second.is_zero()) { work.erase(lead_it); continue; }
        int red = -1;
        for (std::size_t j = 0; j < bs.size(); ++j)
            if (bs[j][0].m.divides(lead_it->first)) { red = static_cast<int>(j); break; }
        if (red < 0) {
            out.push_back({lead_it->first, lead_it->second});
            work.erase(lead_it);
            continue;
        }
        const auto& g = bs[red];
        Monomial mult = lead_it->first / g[0].m;
        CycNum coef = lead_it->second * g[0].c.inverse();
        work.erase(lead_it);
        for (std::size_t i = 1; i < g.size(); ++i) {
            Monomial mm = g[i].m * mult;
            CycNum cc = coef * g[i].c;
            auto it = work.find(mm);
            if (it == work.end()) work.emplace(std::move(mm), -cc);
            else {
                it->second -= cc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return Poly::from_terms(ring_, std::move(out));
}

GBPtr buchberger(RingPtr ring, const std::vector<Poly>& gens, const MonomialOrder& ord,
                 std::optional<GBLimits> limits) {
    GBLimits lim = limits ? *limits : gb_cache::default_limits();
    Engine e(ring, ord, lim);
    std::vector<Poly> reduced = e.run(gens);
    return std::make_shared<GroebnerBasis>(std::move(ring), ord, std::move(reduced));
}

// -------------------------------------------------------------------- Ideal --

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (!g.ring()->same_as(*ring_)) throw error("generator from wrong ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

std::string Ideal::key() const {
    Fnv1a h;
    h.feed(static_cast<std::int64_t>(ring_->field().order()));
    for (const auto& v : ring_->var_names()) { h.feed(v); h.feed("|"); }
    std::vector<std::string> ser;
    for (const auto& g : gens_) ser.push_back(gb_cache::detail::serialize_poly(g.monic()));
    std::sort(ser.begin(), ser.end());
    for (const auto& s : ser) { h.feed(s); h.feed("#"); }
    return hex64(h.h);
}

const GroebnerBasis& Ideal::gb(const MonomialOrder& ord, std::optional<GBLimits> limits) const {
    if (!ring_) throw error("ideal without ring");
    Fnv1a h;
    h.feed(key());
    ord.hash_into(h);
    std::string k = hex64(h.h);
    if (GBPtr hit = gb_cache::detail::lookup(k)) return *hit;
    if (GBPtr disk = gb_cache::detail::disk_load(k, ring_, ord)) {
        gb_cache::detail::store(k, disk);
        return *gb_cache::detail::lookup(k);
    }
    GBPtr computed = buchberger(ring_, gens_, ord, limits);
    gb_cache::detail::store(k, computed);
    gb_cache::detail::disk_store(k, *computed);
    return *gb_cache::detail::lookup(k);
}

// ---------------------------------------------------------------- ideal ops --

Poly normal_form(const Poly& f, const Ideal& i, const MonomialOrder& ord) {
    return i.gb(ord).normal_form(f);
}

bool ideal_contains(const Ideal& i, const Poly& f) { return i.gb().contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw error("ideal_equal: ring mismatch");
    const GroebnerBasis& ga = a.gb();
    const GroebnerBasis& gb_ = b.gb();
    for (const auto& f : b.gens())
        if (!ga.contains(f)) return false;
    for (const auto& f : a.gens())
        if (!gb_.contains(f)) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw error("ideal_sum: ring mismatch");
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw error("ideal_product: ring mismatch");
    std::vector<Poly> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, long d) {
    if (d < 1) throw error("ideal_power: exponent must be >= 1");
    // all d-fold products of generators (multisets)
    std::vector<Poly> gens;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::size_t n = a.gens().size();
    if (n == 0) return a;
    while (true) {
        Poly p = a.gens()[idx[0]];
        for (long k = 1; k < d; ++k) p = p * a.gens()[idx[k]];
        gens.push_back(std::move(p));
        long pos = d - 1;
        while (pos >= 0 && idx[pos] == n - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (long k = pos + 1; k < d; ++k) idx[k] = idx[pos];  // nondecreasing: multisets
    }
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// restrict generators not involving `vars` from a GB of i under the block order
std::vector<Poly> elimination_generators(const Ideal& i, const std::vector<int>& vars) {
    MonomialOrder ord = MonomialOrder::block_eliminating(vars, i.ring()->nvars());
    const GroebnerBasis& g = i.gb(ord);
    std::vector<bool> banned(i.ring()->nvars(), false);
    for (int v : vars) banned[v] = true;
    std::vector<Poly> out;
    for (const auto& p : g.polys()) {
        bool clean = true;
        for (const auto& t : p.terms()) {
            for (std::size_t v = 0; v < banned.size() && clean; ++v)
                if (banned[v] && t.m[v] > 0) clean = false;
            if (!clean) break;
        }
        if (clean) out.push_back(p);
    }
    return out;
}

}  // namespace

Ideal eliminate(const Ideal& i, const std::vector<int>& vars) {
    if (vars.empty()) return i;
    return Ideal(i.ring(), elimination_generators(i, vars));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_as(*b.ring())) throw error("ideal_intersect: ring mismatch");
    // eliminate t from t*A + (1-t)*B
    RingPtr big = a.ring()->extended({"@t"});
    std::size_t n = a.ring()->nvars();
    std::vector<int> old_to_big(n);
    for (std::size_t k = 0; k < n; ++k) old_to_big[k] = static_cast<int>(k);
    Poly t = Poly::variable(big, n);
    Poly one = Poly::rational_constant(big, 1);
    std::vector<Poly> gens;
    for (const auto& f : a.gens()) gens.push_back(t * f.map_variables(old_to_big, big));
    for (const auto& g : b.gens()) gens.push_back((one - t) * g.map_variables(old_to_big, big));
    Ideal j(big, std::move(gens));
    std::vector<Poly> res = elimination_generators(j, {static_cast<int>(n)});
    std::vector<int> big_to_old(n + 1, -1);
    for (std::size_t k = 0; k < n; ++k) big_to_old[k] = static_cast<int>(k);
    std::vector<Poly> out;
    for (const auto& p : res) out.push_back(p.map_variables(big_to_old, a.ring()));
    return Ideal(a.ring(), std::move(out));
}

Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw error("ideal_intersect: empty list");
    Ideal acc = ideals[0];
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersect(acc, ideals[k]);
    return acc;
}

bool radical_membership(const Poly& f, const Ideal& i) {
    if (f.is_zero()) return true;
    RingPtr big = i.ring()->extended({"@y"});
    std::size_t n = i.ring()->nvars();
    std::vector<int> up(n);
    for (std::size_t k = 0; k < n; ++k) up[k] = static_cast<int>(k);
    std::vector<Poly> gens;
    for (const auto& g : i.gens()) gens.push_back(g.map_variables(up, big));
    Poly y = Poly::variable(big, n);
    gens.push_back(Poly::rational_constant(big, 1) - y * f.map_variables(up, big));
    Ideal j(big, std::move(gens));
    return j.gb().is_unit_ideal();
}

int krull_dimension(const Ideal& i) {
    const GroebnerBasis& g = i.gb();
    if (g.is_unit_ideal()) throw error("krull_dimension: unit ideal");
    std::size_t n = i.ring()->nvars();
    // supports of the leading monomials
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& p : g.polys()) {
        std::vector<std::size_t> s;
        const Monomial& m = p.leading_term().m;
        for (std::size_t v = 0; v < n; ++v)
            if (m[v] > 0) s.push_back(v);
        supports.push_back(std::move(s));
    }
    // max independent subset: no support contained in it; branch and bound
    int best = 0;
    std::vector<char> banned(n, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t from, int banned_count) {
        int size_now = static_cast<int>(n) - banned_count;
        if (size_now <= best) return;
        // find first violated support (all vars unbanned)
        const std::vector<std::size_t>* viol = nullptr;
        for (const auto& s : supports) {
            bool all_in = true;
            for (std::size_t v : s)
                if (banned[v]) { all_in = false; break; }
            if (all_in) { viol = &s; break; }
        }
        (void)from;
        if (!viol) {
            best = std::max(best, size_now);
            return;
        }
        for (std::size_t v : *viol) {
            banned[v] = 1;
            walk(v, banned_count + 1);
            banned[v] = 0;
        }
    };
    walk(0, 0);
    return best;
}

std::optional<Poly> subalgebra_membership(const Poly& f, const std::vector<Poly>& gens,
                                          std::vector<std::string> tag_names) {
    if (gens.empty()) {
        if (f.is_constant()) {
            RingPtr tag_ring = PolyRing::make(f.ring()->field(), {});
            return f.map_variables({}, tag_ring);
        }
        return std::nullopt;
    }
    RingPtr base = gens[0].ring();
    if (!f.ring()->same_as(*base)) throw error("subalgebra_membership: ring mismatch");
    if (tag_names.empty())
        for (std::size_t k = 0; k < gens.size(); ++k) tag_names.push_back("s" + std::to_string(k + 1));
    if (tag_names.size() != gens.size()) throw error("subalgebra_membership: bad tag names");
    std::size_t n = base->nvars();
    RingPtr big = base->extended(tag_names);
    std::vector<int> up(n);
    for (std::size_t k = 0; k < n; ++k) up[k] = static_cast<int>(k);
    std::vector<Poly> graph;
    for (std::size_t k = 0; k < gens.size(); ++k)
        graph.push_back(Poly::variable(big, n + k) - gens[k].map_variables(up, big));
    Ideal j(big, std::move(graph));
    std::vector<int> elim(n);
    for (std::size_t k = 0; k < n; ++k) elim[k] = static_cast<int>(k);
    MonomialOrder ord = MonomialOrder::block_eliminating(elim, big->nvars());
    Poly nf = j.gb(ord).normal_form(f.map_variables(up, big));
    for (const auto& t : nf.terms())
        for (std::size_t v = 0; v < n; ++v)
            if (t.m[v] > 0) return std::nullopt;
    RingPtr tag_ring = PolyRing::make(base->field(), tag_names);
    std::vector<int> down(big->nvars(), -1);
    for (std::size_t k = 0; k < gens.size(); ++k) down[n + k] = static_cast<int>(k);
    return nf.map_variables(down, tag_ring);
}

}  // namespace coxalg
