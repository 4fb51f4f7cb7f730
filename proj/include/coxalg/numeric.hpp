#ifndef COXALG_NUMERIC_HPP
#define COXALG_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coxalg {

using BigInt = mpz_class;
using BigRat = mpq_class;

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class resource_limit_error : public error {
public:
    explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// FNV-1a, used for content-addressed caching and hash containers.
struct Fnv1a {
    std::uint64_t h = 1469598103934665603ULL;
    void feed(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
    void feed(const std::string& s) { feed(s.data(), s.size()); }
    void feed(std::int64_t v) { feed(&v, sizeof v); }
};

inline std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace coxalg

#endif
