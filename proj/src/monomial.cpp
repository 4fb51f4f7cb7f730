#include "coxalg/monomial.hpp"

#include <sstream>

namespace coxalg {

namespace {

// grevlex: higher total degree wins; on ties the last differing position,
// with the smaller exponent, wins. Natural variable order, no allocation.
int grevlex_nat(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        int ea = a[i], eb = b[i];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

// grevlex restricted to priority[lo..hi)
int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& idx,
                  std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) { da += a[idx[k]]; db += b[idx[k]]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k-- > lo;) {
        int ea = a[idx[k]], eb = b[idx[k]];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

int lex_nat(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int ea = a[i], eb = b[i];
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, const std::vector<int>& idx) {
    for (int i : idx) {
        int ea = a[i], eb = b[i];
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

}  // namespace

MonomialOrder MonomialOrder::block_eliminating(const std::vector<int>& vars, std::size_t nvars) {
    MonomialOrder o;
    o.kind = Kind::Block;
    o.block_size = vars.size();
    o.priority = vars;
    std::vector<bool> in(nvars, false);
    for (int v : vars) {
        if (v < 0 || static_cast<std::size_t>(v) >= nvars) throw error("bad elimination variable index");
        if (in[v]) throw error("duplicate elimination variable");
        in[v] = true;
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (!in[i]) o.priority.push_back(static_cast<int>(i));
    return o;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::GrevLex:
            return priority.empty() ? grevlex_nat(a, b)
                                    : grevlex_range(a, b, priority, 0, priority.size());
        case Kind::Lex:
            return priority.empty() ? lex_nat(a, b) : lex_range(a, b, priority);
        case Kind::Block: {
            int c = grevlex_range(a, b, priority, 0, block_size);
            if (c != 0) return c;
            return grevlex_range(a, b, priority, block_size, priority.size());
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::GrevLex: os << "grevlex"; break;
        case Kind::Lex: os << "lex"; break;
        case Kind::Block: os << "block" << block_size; break;
    }
    if (!priority.empty()) {
        os << "[";
        for (std::size_t i = 0; i < priority.size(); ++i) os << (i ? "," : "") << priority[i];
        os << "]";
    }
    return os.str();
}

void MonomialOrder::hash_into(Fnv1a& h) const {
    h.feed(static_cast<std::int64_t>(kind));
    h.feed(static_cast<std::int64_t>(block_size));
    for (int p : priority) h.feed(static_cast<std::int64_t>(p));
}

}  // namespace coxalg
