#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace gradecheck {

// Arbitrary-precision integer with an int64 fast path. The value lives in
// `s_` unless `big_` is set; results are demoted back to the fast path
// whenever they fit. LLONG_MIN is excluded from the small domain so that
// negation and abs never overflow.
class Int {
public:
    Int() = default;
    Int(long long v) : s_(v) { if (v == INT64_MIN) promote(); }
    explicit Int(const mpz_class& z) { big_ = std::make_unique<mpz_class>(z); demote(); }

    Int(const Int& o) : s_(o.s_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) { s_ = o.s_; big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr; }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool is_zero() const { return big_ ? mpz_sgn(big_->get_mpz_t()) == 0 : s_ == 0; }
    bool is_one() const { return big_ ? mpz_cmp_si(big_->get_mpz_t(), 1) == 0 : s_ == 1; }
    int sign() const { return big_ ? mpz_sgn(big_->get_mpz_t()) : (s_ > 0) - (s_ < 0); }

    // Value when small; only valid if is_small().
    long long small() const { return s_; }
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(s_)); }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_add_overflow(a.s_, b.s_, &r) && r != INT64_MIN) return Int(r);
        }
        return Int(mpz_class(a.to_mpz() + b.to_mpz()));
    }
    friend Int operator-(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_sub_overflow(a.s_, b.s_, &r) && r != INT64_MIN) return Int(r);
        }
        return Int(mpz_class(a.to_mpz() - b.to_mpz()));
    }
    friend Int operator*(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_mul_overflow(a.s_, b.s_, &r) && r != INT64_MIN) return Int(r);
        }
        return Int(mpz_class(a.to_mpz() * b.to_mpz()));
    }
    Int operator-() const {
        if (is_small()) return Int(-s_);
        return Int(mpz_class(-*big_));
    }
    Int& operator+=(const Int& b) { *this = *this + b; return *this; }
    Int& operator-=(const Int& b) { *this = *this - b; return *this; }
    Int& operator*=(const Int& b) { *this = *this * b; return *this; }

    Int abs() const { return sign() < 0 ? -*this : *this; }

    // Exact quotient; b must divide a.
    static Int divexact(const Int& a, const Int& b) {
        if (b.is_zero()) throw std::domain_error("Int::divexact by zero");
        if (a.is_small() && b.is_small()) return Int(a.s_ / b.s_);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        return Int(q);
    }

    // Floored division: a = q*b + r with 0 <= r < |b|.
    static void fdiv_qr(const Int& a, const Int& b, Int& q, Int& r) {
        if (b.is_zero()) throw std::domain_error("Int::fdiv_qr by zero");
        if (a.is_small() && b.is_small()) {
            long long qq = a.s_ / b.s_, rr = a.s_ % b.s_;
            if (rr != 0 && ((rr < 0) != (b.s_ < 0))) { qq -= 1; rr += b.s_; }
            if (rr < 0) rr = rr + (b.s_ < 0 ? -b.s_ : b.s_);
            q = Int(qq);
            r = Int(a.s_ - qq * b.s_);
            return;
        }
        mpz_class Q, R;
        mpz_fdiv_qr(Q.get_mpz_t(), R.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        q = Int(Q); r = Int(R);
    }

    static Int gcd(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            unsigned long long x = a.s_ < 0 ? -(unsigned long long)a.s_ : a.s_;
            unsigned long long y = b.s_ < 0 ? -(unsigned long long)b.s_ : b.s_;
            while (y) { unsigned long long t = x % y; x = y; y = t; }
            return Int((long long)x);
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
        return Int(g);
    }

    friend bool operator==(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) return a.s_ == b.s_;
        return mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) == 0;
    }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) return a.s_ < b.s_;
        return mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) < 0;
    }
    friend bool operator<=(const Int& a, const Int& b) { return a < b || a == b; }
    friend bool operator>(const Int& a, const Int& b) { return b < a; }
    friend bool operator>=(const Int& a, const Int& b) { return b <= a; }

    std::string str() const {
        if (is_small()) return std::to_string(s_);
        return big_->get_str();
    }
    // Parses an optionally signed decimal integer; throws on malformed input.
    static Int parse(const std::string& s);

    // Residue in [0, m) for m > 1; throws if m divides a denominator context
    // handled by callers.
    unsigned long long mod_u64(unsigned long long m) const {
        if (is_small()) {
            long long r = s_ % (long long)m;
            if (r < 0) r += (long long)m;
            return (unsigned long long)r;
        }
        mpz_class r;
        mpz_class mm;
        mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        mpz_fdiv_r(r.get_mpz_t(), big_->get_mpz_t(), mm.get_mpz_t());
        return mpz_get_ui(r.get_mpz_t());
    }

private:
    long long s_ = 0;
    std::unique_ptr<mpz_class> big_;

    void promote() {
        if (!big_) { big_ = std::make_unique<mpz_class>(static_cast<long>(s_)); }
    }
    void demote() {
        if (big_ && big_->fits_slong_p()) {
            long v = big_->get_si();
            if (v != INT64_MIN) { s_ = v; big_.reset(); }
        }
    }
};

// Reduced fraction: den > 0 and gcd(num, den) = 1 always hold.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n, Int d) { assign(std::move(n), std::move(d)); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }
    // Accepts "p" or "p/q"; normalizes. Throws on malformed input.
    static Rat parse(const std::string& s);
    // Accepts only reduced form with positive denominator (rejects "2/4",
    // "1/-2", "-0"); used by the file formats.
    static Rat parse_strict(const std::string& s);

private:
    Int num_, den_;
    void assign(Int n, Int d) {
        if (d.is_zero()) throw std::domain_error("Rat: zero denominator");
        if (d.sign() < 0) { n = -n; d = -d; }
        Int g = Int::gcd(n, d);
        if (!g.is_one() && !g.is_zero()) { n = Int::divexact(n, g); d = Int::divexact(d, g); }
        if (n.is_zero()) d = Int(1);
        num_ = std::move(n); den_ = std::move(d);
    }
};

// Element of Q(i): re + im*i with exact rational parts. This is the base
// field of the whole library.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : re_(v) {}
    Scalar(Rat re) : re_(std::move(re)) {}
    Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar of(long long num, long long den) { return Scalar(Rat(Int(num), Int(den))); }
    static Scalar i() { return Scalar(Rat(0), Rat(1)); }
    // i^k for any integer k.
    static Scalar i_pow(long long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return Scalar(1);
            case 1: return i();
            case 2: return Scalar(-1);
            default: return Scalar(Rat(0), Rat(-1));
        }
    }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (b.im_.is_zero()) return Scalar(a.re_ / b.re_, a.im_ / b.re_);
        Rat n = b.re_ * b.re_ + b.im_ * b.im_;
        return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& b) { re_ += b.re_; im_ += b.im_; return *this; }
    Scalar& operator-=(const Scalar& b) { re_ -= b.re_; im_ -= b.im_; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inv() const { return Scalar(1) / *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    Rat re_, im_;
};

}  // namespace gradecheck
