#include "gradecheck/scalar.hpp"

namespace gradecheck {

static bool valid_decimal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    // no redundant leading zeros, no "-0"
    size_t start = (s[0] == '-') ? 1 : 0;
    if (s.size() - start > 1 && s[start] == '0') return false;
    if (s == "-0") return false;
    return true;
}

Int Int::parse(const std::string& s) {
    if (!valid_decimal(s)) throw std::invalid_argument("malformed integer: '" + s + "'");
    return Int(mpz_class(s, 10));
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int::parse(s), Int(1));
    return Rat(Int::parse(s.substr(0, slash)), Int::parse(s.substr(slash + 1)));
}

Rat Rat::parse_strict(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Int n = Int::parse(s);
        return Rat(n, Int(1));
    }
    Int n = Int::parse(s.substr(0, slash));
    Int d = Int::parse(s.substr(slash + 1));
    if (d.sign() <= 0) throw std::invalid_argument("fraction denominator must be positive: '" + s + "'");
    if (d.is_one()) throw std::invalid_argument("integer written as fraction: '" + s + "'");
    if (!Int::gcd(n, d).is_one()) throw std::invalid_argument("unreduced fraction: '" + s + "'");
    return Rat(n, d);
}

std::string Scalar::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + "*i";
    return re_.str() + (im_.sign() > 0 ? "+" : "") + im_.str() + "*i";
}

}  // namespace gradecheck
