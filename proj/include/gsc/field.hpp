#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gsc {

// Error with a stable machine-readable code plus a human message.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct FieldSpec {
    enum class Kind { prime, rational };
    Kind kind = Kind::prime;
    std::uint32_t p = 32003;

    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && (kind == Kind::rational || p == o.p); }
    std::string str() const { return kind == Kind::rational ? "Q" : "GF(" + std::to_string(p) + ")"; }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
        throw Error("INPUT", "field modulus must be a prime in [2, 2^31): " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
}

// GF(p), runtime modulus. Elements are canonical representatives in [0, p).
class Fp {
  public:
    using Elem = std::uint32_t;

    Fp() : p_(2) {}
    explicit Fp(std::uint32_t p) : p_(p) {
        if (!is_prime_u32(p) || p >= (1u << 31)) throw Error("INPUT", "not a prime modulus: " + std::to_string(p));
    }
    explicit Fp(const FieldSpec& fs) : Fp(fs.p) {
        if (fs.kind != FieldSpec::Kind::prime) throw Error("INPUT", "Fp constructed from non-prime FieldSpec");
    }

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p_}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;  // p < 2^31 so no overflow
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return b > a ? a + p_ - b : a - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return Elem((std::uint64_t(a) * b) % p_); }

    Elem inv(Elem a) const {
        if (a == 0) throw Error("INPUT", "inverse of zero");
        // extended euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long m = v % (long long)p_;
        if (m < 0) m += p_;
        return Elem(m);
    }
    Elem from_string(const std::string& s) const { return from_int(std::stoll(s)); }
    std::string str(Elem a) const { return std::to_string(a); }

  private:
    std::uint32_t p_;
};

// Exact rationals via GMP. Canonical: mpq_class keeps reduced form, positive denominator.
class Rat {
  public:
    using Elem = mpq_class;

    FieldSpec spec() const { return FieldSpec::rational(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw Error("INPUT", "inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const { return Elem((long)v); }
    Elem from_string(const std::string& s) const {
        Elem e(s);
        e.canonicalize();
        return e;
    }
    std::string str(const Elem& a) const { return a.get_str(); }
};

}  // namespace gsc
