#include "coxalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace coxalg {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// divide a by b in Q[x], both monic-friendly dense vectors; returns quotient,
// a becomes the remainder
std::vector<BigRat> poly_divmod(std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    auto deg = [](const std::vector<BigRat>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d] == 0) --d;
        return d;
    };
    int db = deg(b);
    std::vector<BigRat> q;
    int da = deg(a);
    if (da < db) return q;
    q.assign(da - db + 1, BigRat(0));
    for (int k = da; k >= db; --k) {
        if (a[k] == 0) continue;
        BigRat f = a[k] / b[db];
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
    }
    return q;
}

}  // namespace

std::vector<BigRat> cyclotomic_polynomial(int n) {
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<BigRat> num(n + 1, BigRat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<BigRat> phd = cyclotomic_polynomial(d);
        std::vector<BigRat> rem = num;
        num = poly_divmod(rem, phd);
        for (const auto& r : rem)
            if (r != 0) throw error("cyclotomic polynomial division not exact");
    }
    int deg = static_cast<int>(num.size()) - 1;
    while (deg >= 0 && num[deg] == 0) --deg;
    num.resize(deg + 1);
    return num;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
    if (order < 1) throw error("cyclotomic order must be positive");
    minpoly_ = cyclotomic_polynomial(order);
    degree_ = static_cast<int>(minpoly_.size()) - 1;
    // powers_[k] = z^k mod Phi for 0 <= k <= 2*degree-2
    int top = degree_ > 0 ? 2 * degree_ - 2 : 0;
    powers_.resize(top + 1);
    std::vector<BigRat> cur(degree_, BigRat(0));
    for (int k = 0; k <= top; ++k) {
        if (k < degree_) {
            cur.assign(degree_, BigRat(0));
            cur[k] = 1;
        } else {
            // multiply previous by z and reduce
            std::vector<BigRat> nxt(degree_, BigRat(0));
            const auto& prev = powers_[k - 1];
            BigRat carry = prev.empty() ? BigRat(0) : prev[degree_ - 1];
            for (int i = degree_ - 1; i >= 1; --i) nxt[i] = prev[i - 1];
            nxt[0] = 0;
            if (carry != 0)
                for (int i = 0; i < degree_; ++i) nxt[i] -= carry * minpoly_[i];
            cur = nxt;
        }
        powers_[k] = cur;
    }
}

const CyclotomicField& CyclotomicField::get(int order) {
    static std::mutex mtx;
    static std::map<int, const CyclotomicField*> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(order);
    if (it == registry.end())
        it = registry.emplace(order, new CyclotomicField(order)).first;
    return *it->second;
}

void CycNum::adopt(const CycNum& o) {
    if (field_ == nullptr && o.field_ != nullptr) {
        field_ = o.field_;
        c_.assign(field_->degree(), BigRat(0));
    }
}

void CycNum::require_compatible(const CycNum& o) const {
    if (field_ && o.field_ && field_ != o.field_)
        throw error("cyclotomic elements from different fields");
}

CycNum CycNum::rational(const CyclotomicField& f, const BigRat& q) {
    CycNum r(f);
    BigRat v = q;
    v.canonicalize();  // two-argument mpq_class constructions may be unreduced
    if (f.degree() > 0) r.c_[0] = v;
    else if (v != 0) throw error("degenerate cyclotomic field");
    return r;
}

CycNum CycNum::root_power(const CyclotomicField& f, long k) {
    long n = f.order();
    k %= n;
    if (k < 0) k += n;
    std::vector<BigRat> raw(static_cast<std::size_t>(k) + 1, BigRat(0));
    raw[static_cast<std::size_t>(k)] = 1;
    return from_coeffs(f, raw);
}

CycNum CycNum::from_coeffs(const CyclotomicField& f, const std::vector<BigRat>& raw) {
    // fold z^k for k >= order via z^order = 1, then reduce mod Phi
    int n = f.order();
    int d = f.degree();
    std::vector<BigRat> folded(n, BigRat(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        BigRat v = raw[k];
        v.canonicalize();
        if (v != 0) folded[k % n] += v;
    }
    CycNum r(f);
    const auto& phi = f.minpoly();
    // reduce degrees n-1 .. d by long division
    for (int k = n - 1; k >= d; --k) {
        BigRat v = folded[k];
        if (v == 0) continue;
        folded[k] = 0;
        for (int j = 0; j < d; ++j) folded[k - d + j] -= v * phi[j];
    }
    for (int j = 0; j < d; ++j) r.c_[j] = folded[j];
    return r;
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    if (c_.empty()) return false;
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

BigRat CycNum::rational_value() const {
    if (!is_rational()) throw error("cyclotomic element is not rational");
    return c_.empty() ? BigRat(0) : c_[0];
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    require_compatible(o);
    adopt(o);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    require_compatible(o);
    adopt(o);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    a.require_compatible(b);
    if (a.field_ == nullptr) return a;  // zero
    if (b.field_ == nullptr) return b;
    const CyclotomicField& f = *a.field_;
    int d = f.degree();
    std::vector<BigRat> raw(2 * d - 1, BigRat(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNum r(f);
    const auto& phi = f.minpoly();
    for (int k = 2 * d - 2; k >= d; --k) {
        BigRat v = raw[k];
        if (v == 0) continue;
        raw[k] = 0;
        for (int j = 0; j < d; ++j) raw[k - d + j] -= v * phi[j];
    }
    for (int j = 0; j < d; ++j) r.c_[j] = raw[j];
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw error("division by zero in Q(zeta)");
    const CyclotomicField& f = *field_;
    int d = f.degree();
    if (is_rational()) {
        CycNum r(f);
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // extended Euclid in Q[x]: u*this + v*Phi = 1
    std::vector<BigRat> r0 = f.minpoly();
    std::vector<BigRat> r1 = c_;
    std::vector<BigRat> s0(1, BigRat(0)), s1(1, BigRat(1));  // coefficients on `this`
    auto deg = [](const std::vector<BigRat>& v) {
        int k = static_cast<int>(v.size()) - 1;
        while (k >= 0 && v[k] == 0) --k;
        return k;
    };
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw error("inverse: element not invertible (unexpected)");
        if (d1 == 0) break;
        std::vector<BigRat> rem = r0;
        std::vector<BigRat> q = poly_divmod(rem, r1);
        // s_new = s0 - q*s1
        std::vector<BigRat> snew(std::max(s0.size(), q.size() + s1.size()), BigRat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = snew;
    }
    BigRat lead = r1[0];
    std::vector<BigRat> inv_raw(s1.size(), BigRat(0));
    for (std::size_t i = 0; i < s1.size(); ++i) inv_raw[i] = s1[i] / lead;
    // s1 may exceed degree d-1; reduce
    CycNum result = from_coeffs(f, inv_raw);
    return result;
}

bool CycNum::operator==(const CycNum& o) const {
    require_compatible(o);
    if (field_ == nullptr) return o.is_zero();
    if (o.field_ == nullptr) return is_zero();
    return c_ == o.c_;
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigRat v = c_[k];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (k == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

void CycNum::hash_into(Fnv1a& h) const {
    h.feed(static_cast<std::int64_t>(field_ ? field_->order() : 0));
    for (const auto& x : c_) {
        std::string s = x.get_str();
        h.feed(s);
        h.feed("|");
    }
}

}  // namespace coxalg
