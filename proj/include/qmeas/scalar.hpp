#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qmeas {

/**
 * Exact rational number. Always kept in lowest terms with a positive
 * denominator; no floating point anywhere.
 *
 * Serialized form is "p" for integers and "p/q" otherwise.
 */
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Scalar(long num, long den);

    // Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Rejects
    // anything else, including floating-point syntax.
    static Scalar parse(std::string_view text);

    std::string str() const;

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    Scalar abs() const;

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }
    friend Scalar operator-(const Scalar& a) { Scalar r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

} // namespace qmeas
