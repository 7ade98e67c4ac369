#pragma once

#include <string>

#include "gaeta/quadratic.hpp"

namespace gaeta {

/// Chern character (r, ch1, ch2) of a class in the Grothendieck group of the
/// plane. Euler characteristics and the bilinear pairing are linear in these
/// coordinates, so all additive bookkeeping happens here; the log form is a
/// view for positive rank.
struct ChernCharacter {
    Rational r, c1, ch2;

    friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
        return {a.r + b.r, a.c1 + b.c1, a.ch2 + b.ch2};
    }
    friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
        return {a.r - b.r, a.c1 - b.c1, a.ch2 - b.ch2};
    }
    friend ChernCharacter operator-(const ChernCharacter& a) { return {-a.r, -a.c1, -a.ch2}; }
    friend ChernCharacter operator*(const Rational& s, const ChernCharacter& a) {
        return {s * a.r, s * a.c1, s * a.ch2};
    }
    friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
        return a.r == b.r && a.c1 == b.c1 && a.ch2 == b.ch2;
    }

    bool is_zero() const { return r.is_zero() && c1.is_zero() && ch2.is_zero(); }

    /// Multiplication in K-theory (ch is a ring homomorphism).
    ChernCharacter tensor(const ChernCharacter& o) const {
        return {r * o.r, r * o.c1 + c1 * o.r, r * o.ch2 + c1 * o.c1 + ch2 * o.r};
    }
    ChernCharacter dual() const { return {r, -c1, ch2}; }
    ChernCharacter twist(long long d) const {
        Rational dd(d);
        return {r, c1 + dd * r, ch2 + dd * c1 + half(1) * dd * dd * r};
    }
    ChernCharacter serre_twist() const { return dual().twist(-3); }

    std::string to_string() const {
        return "(" + r.to_string() + ", " + c1.to_string() + ", " + ch2.to_string() + ")";
    }
};

inline ChernCharacter line_bundle_char(long long d) {
    return ChernCharacter{Rational(1), Rational(0), Rational(0)}.twist(d);
}

/// ch of the twisted tangent bundle T(m): rank 2, c1 = 2m+3, ch2 = m^2+3m+3/2.
inline ChernCharacter tangent_char(long long m) {
    return ChernCharacter{Rational(2), Rational(3), half(3)}.twist(m);
}

inline ChernCharacter ideal_points_char(long long n) {
    return {Rational(1), Rational(0), Rational(-n)};
}

/// Riemann-Roch: chi = r + (3/2) c1 + ch2.
inline Rational euler(const ChernCharacter& x) { return x.r + half(3) * x.c1 + x.ch2; }

/// chi(xi tensor zeta) = chi(xi^*, zeta); bilinear and symmetric.
inline Rational pairing(const ChernCharacter& xi, const ChernCharacter& zeta) {
    return euler(xi.tensor(zeta));
}

/// Relative Euler characteristic chi(A, B) on characters.
inline Rational chi_hom(const ChernCharacter& a, const ChernCharacter& b) {
    return euler(a.dual().tensor(b));
}

/// Log Chern character (r, mu, Delta) of a positive-rank class. Slope and
/// discriminant are additive under tensor and Delta is twist- and
/// dual-invariant, which makes this the right chart for cone geometry.
struct LogChern {
    Rational r, mu, delta;

    friend bool operator==(const LogChern& a, const LogChern& b) {
        return a.r == b.r && a.mu == b.mu && a.delta == b.delta;
    }

    LogChern twist(long long d) const { return {r, mu + Rational(d), delta}; }
    LogChern dual() const { return {r, -mu, delta}; }
    LogChern serre_dual() const { return {r, -mu - Rational(3), delta}; }

    std::string to_string() const {
        return "(" + r.to_string() + ", " + mu.to_string() + ", " + delta.to_string() + ")";
    }
};

inline LogChern to_log(const ChernCharacter& c) {
    require(c.r.signum() > 0, errc::non_positive_rank,
            "log form needs positive rank, got " + c.r.to_string());
    Rational mu = c.c1 / c.r;
    return {c.r, mu, half(1) * mu * mu - c.ch2 / c.r};
}

inline ChernCharacter from_log(const LogChern& l) {
    return {l.r, l.mu * l.r, (half(1) * l.mu * l.mu - l.delta) * l.r};
}

inline LogChern log_of(Rational r, Rational mu, Rational delta) {
    return {std::move(r), std::move(mu), std::move(delta)};
}

inline Rational euler(const LogChern& x) {
    return x.r * (half(1) * (x.mu + Rational(1)) * (x.mu + Rational(2)) - x.delta);
}

/// chi(U, V) = rk(U) rk(V) ((1/2)(mu_V - mu_U + 1)(mu_V - mu_U + 2) - D_U - D_V).
inline Rational rel_euler(const LogChern& u, const LogChern& v) {
    Rational m = v.mu - u.mu;
    return u.r * v.r *
           (half(1) * (m + Rational(1)) * (m + Rational(2)) - u.delta - v.delta);
}

inline LogChern ideal_points_log(long long n) {
    return {Rational(1), Rational(0), Rational(n)};
}

enum class Branch { larger, smaller };

/// Exact slope of the intersection of xi-perp with the line Delta = 1/2:
/// -mu - 3/2 +- sqrt(2 Delta + 5/4).
inline Quadratic orthogonal_slope_at_half(const LogChern& xi, Branch branch) {
    Rational radicand = Rational(2) * xi.delta + Rational(5, 4);
    require(radicand.signum() >= 0, errc::no_real_intersection,
            "xi-perp misses Delta = 1/2 at " + xi.to_string());
    Quadratic root = Quadratic::sqrt_of(radicand);
    Quadratic base(-xi.mu - Rational(3, 2));
    return branch == Branch::larger ? base + root : base + (-root);
}

} // namespace gaeta
