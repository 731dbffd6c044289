#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tnp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct field_error : std::runtime_error {
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

enum class FieldKind { rational, prime };

/// Ground field descriptor: the rationals, or GF(p) for an odd prime p.
struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;

    bool operator==(const FieldDescriptor&) const = default;

    std::uint64_t characteristic() const { return kind == FieldKind::prime ? p : 0; }

    std::string str() const {
        return kind == FieldKind::rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
    }
};

inline FieldDescriptor rational_field() { return {FieldKind::rational, 0}; }

inline FieldDescriptor prime_field(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p))
        throw field_error("modulus must be an odd prime, got " + std::to_string(p));
    if (p > (std::uint64_t(1) << 31))
        throw field_error("prime modulus too large: " + std::to_string(p));
    return {FieldKind::prime, p};
}

/// Exact field element: arbitrary-precision rational or residue in GF(p).
/// Rationals are kept in lowest terms with positive denominator; residues in [0, p).
/// Arithmetic between scalars of different fields throws field_error.
class Scalar {
public:
    Scalar() : fd_(rational_field()), q_(0), r_(0) {}

    static Scalar from_rational(BigRational q) {
        Scalar s;
        s.fd_ = rational_field();
        s.q_ = std::move(q);
        return s;
    }

    static Scalar from_residue(std::uint64_t r, const FieldDescriptor& fd) {
        Scalar s;
        s.fd_ = fd;
        s.r_ = r % fd.p;
        return s;
    }

    static Scalar zero(const FieldDescriptor& fd) { return from_int(0, fd); }
    static Scalar one(const FieldDescriptor& fd) { return from_int(1, fd); }

    static Scalar from_int(long long v, const FieldDescriptor& fd) {
        Scalar s;
        s.fd_ = fd;
        if (fd.kind == FieldKind::rational) {
            s.q_ = BigRational(v);
        } else {
            long long m = v % static_cast<long long>(fd.p);
            if (m < 0) m += static_cast<long long>(fd.p);
            s.r_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    const FieldDescriptor& field() const { return fd_; }

    bool is_zero() const { return fd_.kind == FieldKind::rational ? q_ == 0 : r_ == 0; }
    bool is_one() const { return fd_.kind == FieldKind::rational ? q_ == 1 : r_ == 1; }

    const BigRational& rational_value() const {
        require_kind(FieldKind::rational);
        return q_;
    }

    std::uint64_t residue_value() const {
        require_kind(FieldKind::prime);
        return r_;
    }

    Scalar operator+(const Scalar& o) const {
        require_same(o);
        Scalar s(*this);
        if (fd_.kind == FieldKind::rational) s.q_ += o.q_;
        else s.r_ = (r_ + o.r_) % fd_.p;
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        require_same(o);
        Scalar s(*this);
        if (fd_.kind == FieldKind::rational) s.q_ -= o.q_;
        else s.r_ = (r_ + fd_.p - o.r_) % fd_.p;
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        require_same(o);
        Scalar s(*this);
        if (fd_.kind == FieldKind::rational) s.q_ *= o.q_;
        else s.r_ = mul_mod(r_, o.r_, fd_.p);
        return s;
    }

    Scalar operator/(const Scalar& o) const {
        require_same(o);
        if (o.is_zero()) throw field_error("division by zero");
        Scalar s(*this);
        if (fd_.kind == FieldKind::rational) s.q_ /= o.q_;
        else s.r_ = mul_mod(r_, inv_mod(o.r_, fd_.p), fd_.p);
        return s;
    }

    Scalar operator-() const {
        Scalar s(*this);
        if (fd_.kind == FieldKind::rational) s.q_ = -q_;
        else if (r_ != 0) s.r_ = fd_.p - r_;
        return s;
    }

    Scalar inv() const { return one(fd_) / *this; }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        if (fd_ != o.fd_) return false;
        return fd_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used for deterministic witness/solution ordering.
    bool operator<(const Scalar& o) const {
        require_same(o);
        return fd_.kind == FieldKind::rational ? q_ < o.q_ : r_ < o.r_;
    }

    /// Canonical string form: "a" or "a/b" for rationals, decimal residue for GF(p).
    std::string str() const {
        if (fd_.kind == FieldKind::prime) return std::to_string(r_);
        const BigInt num = boost::multiprecision::numerator(q_);
        const BigInt den = boost::multiprecision::denominator(q_);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    static Scalar parse(std::string_view text, const FieldDescriptor& fd) {
        if (text.empty()) throw parse_error("empty scalar literal");
        std::size_t pos = 0;
        bool neg = false;
        if (text[pos] == '-') {
            neg = true;
            ++pos;
        }
        auto digits = [&](std::size_t& at) -> BigInt {
            std::size_t start = at;
            while (at < text.size() && text[at] >= '0' && text[at] <= '9') ++at;
            if (at == start) throw parse_error("malformed scalar literal: " + std::string(text));
            return BigInt(std::string(text.substr(start, at - start)));
        };
        BigInt num = digits(pos);
        BigInt den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = digits(pos);
        }
        if (pos != text.size()) throw parse_error("malformed scalar literal: " + std::string(text));
        if (neg) num = -num;
        if (fd.kind == FieldKind::rational) {
            if (den == 0) throw parse_error("zero denominator in scalar literal");
            return from_rational(BigRational(num, den));
        }
        const BigInt p(fd.p);
        BigInt n = num % p;
        if (n < 0) n += p;
        if (den == 1) {
            if (neg || num >= p)
                throw parse_error("prime-field literal must be a residue in [0, p): " + std::string(text));
            return from_residue(n.convert_to<std::uint64_t>(), fd);
        }
        throw parse_error("prime-field scalar cannot carry a denominator: " + std::string(text));
    }

    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }

    static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
        std::uint64_t acc = 1 % p;
        base %= p;
        while (e) {
            if (e & 1) acc = mul_mod(acc, base, p);
            base = mul_mod(base, base, p);
            e >>= 1;
        }
        return acc;
    }

    static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
        if (a == 0) throw field_error("division by zero");
        return pow_mod(a, p - 2, p);
    }

private:
    void require_kind(FieldKind k) const {
        if (fd_.kind != k) throw field_error("scalar is not of the requested field kind");
    }
    void require_same(const Scalar& o) const {
        if (fd_ != o.fd_)
            throw field_error("field mismatch: " + fd_.str() + " vs " + o.fd_.str());
    }

    FieldDescriptor fd_;
    BigRational q_;
    std::uint64_t r_ = 0;
};

enum class ArithOp { add, sub, mul, div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::logic_error("unreachable");
}

/// C(n, k) mod p via the Lucas decomposition; 0 whenever k < 0 or k > n.
inline Scalar binomial_mod_p(std::uint64_t n, std::int64_t k, const FieldDescriptor& fd) {
    if (fd.kind != FieldKind::prime) throw field_error("binomial_mod_p needs a prime field");
    const std::uint64_t p = fd.p;
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return Scalar::zero(fd);
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t acc = 1;
    while (n > 0 || kk > 0) {
        const std::uint64_t nd = n % p, kd = kk % p;
        if (kd > nd) return Scalar::zero(fd);
        // C(nd, kd) mod p by the falling-factorial form; digits are < p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t t = 0; t < kd; ++t) {
            num = Scalar::mul_mod(num, nd - t, p);
            den = Scalar::mul_mod(den, t + 1, p);
        }
        acc = Scalar::mul_mod(acc, Scalar::mul_mod(num, Scalar::inv_mod(den, p), p), p);
        n /= p;
        kk /= p;
    }
    return Scalar::from_residue(acc, fd);
}

}  // namespace tnp
