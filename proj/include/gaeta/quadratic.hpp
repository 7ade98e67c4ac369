#pragma once

#include <cmath>
#include <string>

#include "gaeta/rational.hpp"

namespace gaeta {

/// Number of the form a + b*sqrt(c) with rational a, b and square-free
/// integer c >= 1. Sign determination and comparison against another radicand
/// work by isolation and squaring, so every comparison is exact. Endpoint and
/// controlling-bundle tests pit sqrt(2*D+5/4) values with different radicands
/// against one another, which rules out floating point.
class Quadratic {
public:
    Quadratic() : a_(0), b_(0), c_(1) {}
    Quadratic(Rational r) : a_(std::move(r)), b_(0), c_(1) {}

    static Quadratic make(Rational a, Rational b, unsigned long long c) {
        Quadratic q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.c_ = c;
        q.normalize();
        return q;
    }

    /// Exact square root of a non-negative rational.
    static Quadratic sqrt_of(const Rational& r) {
        require(r.signum() >= 0, errc::no_real_intersection, "negative radicand");
        if (r.is_zero()) return Quadratic(Rational(0));
        // sqrt(p/q) = sqrt(p*q)/q; pull the square part out of p*q.
        BigInt pq = r.num() * r.den();
        require(pq.fits_uint64(), errc::out_of_range, "radicand too large for factoring");
        unsigned long long m = pq.to_uint64();
        unsigned long long square = 1, rest = m;
        for (unsigned long long d = 2; d * d <= rest; ++d) {
            while (rest % (d * d) == 0) {
                rest /= d * d;
                square *= d;
            }
        }
        return make(Rational(0), Rational(BigInt(static_cast<long long>(square)), r.den()), rest);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    unsigned long long radicand() const { return c_; }
    bool is_rational() const { return b_.is_zero(); }

    friend Quadratic operator+(const Quadratic& x, const Rational& r) {
        return make(x.a_ + r, x.b_, x.c_);
    }
    friend Quadratic operator-(const Quadratic& x, const Rational& r) {
        return make(x.a_ - r, x.b_, x.c_);
    }
    friend Quadratic operator-(const Quadratic& x) { return make(-x.a_, -x.b_, x.c_); }
    friend Quadratic operator*(const Rational& r, const Quadratic& x) {
        return make(r * x.a_, r * x.b_, x.c_);
    }

    /// Adds another quadratic with the same radicand (or a rational one).
    friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
        if (y.is_rational()) return x + y.a_;
        if (x.is_rational()) return y + x.a_;
        require(x.c_ == y.c_, errc::internal_inconsistency, "mixed radicands in addition");
        return make(x.a_ + y.a_, x.b_ + y.b_, x.c_);
    }

    int signum() const { return sign2(a_, b_, c_); }

    /// Exact three-way comparison, radicands may differ.
    int compare(const Quadratic& o) const {
        // sign of (a - o.a) + b sqrt(c) - o.b sqrt(o.c)
        if (c_ == o.c_ || b_.is_zero() || o.b_.is_zero()) {
            if (o.b_.is_zero()) return sign2(a_ - o.a_, b_, c_);
            if (b_.is_zero()) return -sign2(o.a_ - a_, o.b_, o.c_);
            return sign2(a_ - o.a_, b_ - o.b_, c_);
        }
        return sign3(a_ - o.a_, b_, c_, -o.b_, o.c_);
    }
    friend bool operator==(const Quadratic& x, const Quadratic& y) { return x.compare(y) == 0; }
    friend bool operator<(const Quadratic& x, const Quadratic& y) { return x.compare(y) < 0; }
    friend bool operator<=(const Quadratic& x, const Quadratic& y) { return x.compare(y) <= 0; }
    friend bool operator>(const Quadratic& x, const Quadratic& y) { return x.compare(y) > 0; }
    friend bool operator>=(const Quadratic& x, const Quadratic& y) { return x.compare(y) >= 0; }

    int compare(const Rational& r) const { return compare(Quadratic(r)); }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(c_));
    }

    long long floor() const {
        long long k = static_cast<long long>(std::floor(to_double()));
        // fix up the float estimate exactly
        while (compare(Rational(k)) < 0) --k;
        while (compare(Rational(k + 1)) >= 0) ++k;
        return k;
    }

    std::string to_string() const {
        if (is_rational()) return a_.to_string();
        std::string s;
        if (!a_.is_zero()) s = a_.to_string() + (b_.signum() > 0 ? " + " : " - ");
        else if (b_.signum() < 0) s = "-";
        Rational babs = b_.abs();
        if (!(babs == Rational(1))) s += babs.to_string() + "*";
        s += "sqrt(" + std::to_string(c_) + ")";
        return s;
    }

private:
    Rational a_, b_;
    unsigned long long c_;

    void normalize() {
        if (b_.is_zero()) {
            c_ = 1;
        } else if (c_ == 1) {
            a_ += b_;
            b_ = Rational(0);
        } else if (c_ == 0) {
            b_ = Rational(0);
            c_ = 1;
        }
    }

    // sign of a + b*sqrt(c), c square-free
    static int sign2(const Rational& a, const Rational& b, unsigned long long c) {
        if (b.is_zero() || c == 0) return a.signum();
        if (c == 1) return (a + b).signum();
        if (a.is_zero()) return b.signum();
        if (a.signum() == b.signum()) return a.signum();
        // opposite signs: compare a^2 against b^2 c
        Rational lhs = a.squared();
        Rational rhs = b.squared() * Rational(static_cast<long long>(c));
        if (lhs == rhs) return 0; // cannot happen for square-free c > 1
        return (lhs > rhs) ? a.signum() : b.signum();
    }

    // sign of a + b*sqrt(c) + e*sqrt(f), with c != f both square-free > 1
    static int sign3(const Rational& a, const Rational& b, unsigned long long c,
                     const Rational& e, unsigned long long f) {
        if (e.is_zero()) return sign2(a, b, c);
        if (b.is_zero()) return sign2(a, e, f);
        int sL = sign2(a, b, c);
        int sT = e.signum();
        if (sL == 0) return sT;
        if (sL == sT) return sL;
        // |L|^2 = a^2 + b^2 c + 2ab sqrt(c); |T|^2 = e^2 f
        Rational d0 = a.squared() + b.squared() * Rational(static_cast<long long>(c)) -
                      e.squared() * Rational(static_cast<long long>(f));
        Rational d1 = Rational(2) * a * b;
        int sD = sign2(d0, d1, c);
        if (sD == 0) return 0;
        return sD > 0 ? sL : sT;
    }
};

} // namespace gaeta
