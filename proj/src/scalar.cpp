#include "qmeas/scalar.hpp"

#include "qmeas/error.hpp"

#include <cctype>

namespace qmeas {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw Error("denominator must be nonzero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::abs() const {
    Scalar r;
    r.v_ = ::abs(v_);
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
        throw Error("invalid rational literal \"" + std::string(text) + "\"");

    Scalar r;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("denominator must be nonzero");
    r.v_ = mpq_class(n) / mpq_class(d);
    return r;
}

std::string Scalar::str() const {
    return v_.get_str();
}

} // namespace qmeas
