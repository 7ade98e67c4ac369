#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "gaeta/chern.hpp"

namespace gaeta {

/// Dyadic number p / 2^q in lowest terms (p odd unless q = 0). Addresses of
/// exceptional slopes under the slope bijection.
struct Dyadic {
    BigInt p;
    unsigned q = 0;

    Dyadic() = default;
    Dyadic(BigInt pp, unsigned qq) : p(std::move(pp)), q(qq) { normalize(); }
    Dyadic(long long n) : p(n), q(0) {}

    static Dyadic from_rational(const Rational& r) {
        BigInt den = r.den();
        unsigned q = 0;
        if (!den.is_one()) {
            q = den.two_adic_valuation();
            require(den == BigInt::pow2(q), errc::parse_error,
                    "not a dyadic rational: " + r.to_string());
        }
        return Dyadic(r.num(), q);
    }

    Rational value() const { return Rational(p, BigInt::pow2(q)); }
    bool is_integer() const { return q == 0; }

    Dyadic shifted(long long n) const { return Dyadic(p + BigInt(n) * BigInt::pow2(q), q); }
    Dyadic negated() const { return Dyadic(-p, q); }

    /// Parents in the dyadic tree: p/2^q has parents (p-1)/2^q and (p+1)/2^q
    /// (which live one level up). Integers get the convention (n-1, n+1).
    std::pair<Dyadic, Dyadic> parents() const {
        if (q == 0) return {Dyadic(p - BigInt(1), 0), Dyadic(p + BigInt(1), 0)};
        return {Dyadic(p - BigInt(1), q), Dyadic(p + BigInt(1), q)};
    }

    /// Midpoint of two addresses (the child generated by an adjacent pair).
    static Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
        unsigned q = std::max(a.q, b.q);
        BigInt pa = a.p * BigInt::pow2(q - a.q);
        BigInt pb = b.p * BigInt::pow2(q - b.q);
        return Dyadic(pa + pb, q + 1);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        return a.p * BigInt::pow2(b.q) < b.p * BigInt::pow2(a.q);
    }

    std::string to_string() const { return value().to_string(); }

private:
    void normalize() {
        if (p.is_zero()) {
            q = 0;
            return;
        }
        while (q > 0 && (p % BigInt(2)).is_zero()) {
            p = p / BigInt(2);
            --q;
        }
    }
};

/// Numerical data of an exceptional bundle: slope, rank, discriminant and the
/// dyadic address of the slope. Delta = (1/2)(1 - 1/rank^2) and
/// chi(E, E) = 1 hold by construction and are re-checked on creation.
struct ExceptionalSlope {
    Rational slope;
    BigInt rank;
    Rational discriminant;
    Dyadic address;

    LogChern log() const { return {Rational(rank), slope, discriminant}; }
    ChernCharacter ch() const { return from_log(log()); }
    LogChern log_twisted(long long d) const { return log().twist(d); }
    LogChern log_dual_twisted(long long d) const { return log().dual().twist(d); }
};

namespace detail {

inline Rational exceptional_discriminant(const BigInt& rank) {
    Rational r2(rank * rank);
    return half(1) * (Rational(1) - Rational(1) / r2);
}

/// alpha . beta = (alpha + beta)/2 + (D_beta - D_alpha)/(3 + alpha - beta).
inline Rational dot_slope(const Rational& a, const Rational& da, const Rational& b,
                          const Rational& db) {
    return half(1) * (a + b) + (db - da) / (Rational(3) + a - b);
}

} // namespace detail

/// The slope bijection from dyadic numbers to exceptional slopes. Memoized
/// (append-only cache, idempotent writes) because the controlling search and
/// enumeration revisit low addresses constantly.
inline ExceptionalSlope epsilon(const Dyadic& a) {
    static std::map<std::pair<std::string, unsigned>, ExceptionalSlope> cache;
    static std::mutex mutex;
    auto key = std::make_pair(a.p.to_string(), a.q);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ExceptionalSlope result;
    result.address = a;
    if (a.is_integer()) {
        result.slope = Rational(a.p);
        result.rank = BigInt(1);
        result.discriminant = Rational(0);
    } else {
        auto [pa, pb] = a.parents();
        ExceptionalSlope ea = epsilon(pa);
        ExceptionalSlope eb = epsilon(pb);
        result.slope =
            detail::dot_slope(ea.slope, ea.discriminant, eb.slope, eb.discriminant);
        // rank is the reduced denominator of the slope; Delta follows from
        // chi(E, E) = 1
        result.rank = result.slope.den();
        result.discriminant = detail::exceptional_discriminant(result.rank);
        require(rel_euler(result.log(), result.log()) == Rational(1),
                errc::internal_inconsistency,
                "slope recursion produced chi(E,E) != 1 at " + a.to_string());
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::move(key), result);
    return result;
}

inline ExceptionalSlope epsilon(long long n) { return epsilon(Dyadic(n)); }

/// Composition of an adjacent pair in the dyadic tree. Accepts consecutive
/// addresses at a common level, and integers n-1, n+1 (whose composition is
/// the line-bundle slope n).
inline ExceptionalSlope dot(const ExceptionalSlope& alpha, const ExceptionalSlope& beta) {
    Rational diff = beta.address.value() - alpha.address.value();
    bool adjacent = false;
    if (alpha.address.is_integer() && beta.address.is_integer()) {
        adjacent = diff == Rational(1) || diff == Rational(2);
    } else if (diff.signum() > 0 && diff.num().is_one()) {
        adjacent = diff.den() == BigInt::pow2(diff.den().two_adic_valuation());
    }
    require(adjacent, errc::not_an_exceptional_pair,
            "addresses " + alpha.address.to_string() + ", " + beta.address.to_string());
    ExceptionalSlope child = epsilon(Dyadic::midpoint(alpha.address, beta.address));
    Rational formula =
        detail::dot_slope(alpha.slope, alpha.discriminant, beta.slope, beta.discriminant);
    require(child.slope == formula, errc::internal_inconsistency,
            "dot formula disagrees with the slope recursion");
    return child;
}

/// Closed interval [mu_G, mu_F] cut out on Delta = 1/2 by the two orthogonality
/// parabolas of an exceptional slope gamma: gamma -+ (3/2 - sqrt(2 D + 5/4)).
struct EndpointInterval {
    Quadratic lo, hi; // mu_G, mu_F

    bool contains(const Quadratic& x) const { return lo.compare(x) <= 0 && x.compare(hi) <= 0; }
    bool on_boundary(const Quadratic& x) const {
        return lo.compare(x) == 0 || hi.compare(x) == 0;
    }
};

inline EndpointInterval endpoint_interval(const Rational& gamma, const Rational& delta) {
    Quadratic root = Quadratic::sqrt_of(Rational(2) * delta + Rational(5, 4));
    Quadratic g = root + (gamma - Rational(3, 2)); // gamma - 3/2 + sqrt(...)
    Quadratic f = (-root) + (gamma + Rational(3, 2));
    return {g, f};
}

inline EndpointInterval endpoint_interval(const ExceptionalSlope& e) {
    return endpoint_interval(e.slope, e.discriminant);
}

/// Controlling data of a character: the exceptional gamma = d - mu_E whose
/// endpoint interval contains the chosen intersection of xi-perp with
/// Delta = 1/2, together with the base bundle E (slope in [0,1)), the twist d,
/// and gamma's parents in the dyadic tree.
struct ControllingData {
    ExceptionalSlope base;  // E with mu_E in [0, 1)
    long long d = 0;        // E_{alpha.beta} = E^*(d)
    ExceptionalSlope gamma; // slope d - mu_E
    ExceptionalSlope alpha, beta;
    Quadratic target;        // the intersection point that was matched
    bool on_boundary = false;

    Rational mu_e() const { return base.slope; }
};

inline unsigned& controlling_depth_cap() {
    // searches for characters above the DLP curve resolve within a few levels;
    // the cap only guards against targets sitting in gaps of the interval
    // family
    static unsigned cap = 64;
    return cap;
}

/// Operation endpoints(): (mu_G, mu_F) of the controlling bundle, at its twist.
inline std::pair<Quadratic, Quadratic> endpoints(const ControllingData& c) {
    EndpointInterval iv = endpoint_interval(c.gamma);
    return {iv.lo, iv.hi};
}

namespace detail {

inline ControllingData make_controlling(const ExceptionalSlope& gamma, Quadratic target,
                                        bool boundary) {
    ControllingData cd;
    cd.gamma = gamma;
    cd.target = std::move(target);
    cd.on_boundary = boundary;
    // mu_E = ceil(gamma) - gamma lies in [0,1); d = gamma + mu_E
    Rational g = gamma.slope;
    Rational mu_e = Rational(g.ceil()) - g;
    cd.d = (g + mu_e).to_integer();
    cd.base = epsilon(gamma.address.negated().shifted(cd.d));
    require(cd.base.slope == mu_e, errc::internal_inconsistency, "controlling base mismatch");
    auto [pa, pb] = gamma.address.parents();
    cd.alpha = epsilon(pa);
    cd.beta = epsilon(pb);
    return cd;
}

/// Finds the exceptional slope whose closed endpoint interval contains x, by
/// bisection on the dyadic tree inside the integer window around x.
inline ControllingData interval_search(const Quadratic& x) {
    long long fl = x.floor();
    ExceptionalSlope lo = epsilon(fl);
    ExceptionalSlope hi = epsilon(fl + 1);
    for (unsigned depth = 0; depth <= controlling_depth_cap(); ++depth) {
        EndpointInterval ilo = endpoint_interval(lo);
        if (ilo.contains(x)) return make_controlling(lo, x, ilo.on_boundary(x));
        EndpointInterval ihi = endpoint_interval(hi);
        if (ihi.contains(x)) return make_controlling(hi, x, ihi.on_boundary(x));
        ExceptionalSlope mid = epsilon(Dyadic::midpoint(lo.address, hi.address));
        EndpointInterval imid = endpoint_interval(mid);
        if (imid.contains(x)) return make_controlling(mid, x, imid.on_boundary(x));
        if (x.compare(imid.lo) < 0)
            hi = mid;
        else
            lo = mid;
    }
    fail(errc::controlling_not_found,
         "no endpoint interval contains " + x.to_string() + " within the depth cap");
}

} // namespace detail

/// Drezet-Le Potier curve delta(mu) = P(-|mu - gamma|) - Delta_gamma with
/// P(x) = (x^2+3x+2)/2, where gamma is the exceptional slope whose endpoint
/// interval contains mu. Points in the (measure-zero) gaps of the interval
/// family evaluate to the limit value 1/2.
inline Rational dlp_threshold(const Rational& mu) {
    try {
        ControllingData cd = detail::interval_search(Quadratic(mu));
        Rational t = (mu - cd.gamma.slope).abs();
        Rational p = half(1) * (t * t - Rational(3) * t + Rational(2)); // P(-t)
        return p - cd.gamma.discriminant;
    } catch (const failure& f) {
        if (f.code() != errc::controlling_not_found) throw;
        return half(1);
    }
}

/// Strictly above the Drezet-Le Potier curve.
inline bool is_above_dlp(const LogChern& xi) {
    require(xi.r.signum() > 0, errc::non_positive_rank, "DLP test needs positive rank");
    return xi.delta > dlp_threshold(xi.mu);
}

/// Primary or secondary controlling exceptional bundle of xi. The primary
/// branch matches the larger intersection of xi-perp with Delta = 1/2; the
/// secondary branch (rank >= 3) matches the smaller one mirrored through the
/// Serre involution, i.e. the primary controlling data of the Serre dual.
inline ControllingData controlling(const LogChern& xi, Branch branch = Branch::larger) {
    require(is_above_dlp(xi), errc::controlling_not_found,
            "character " + xi.to_string() + " is not above the Drezet-Le Potier curve");
    if (branch == Branch::smaller) {
        require(xi.r >= Rational(3), errc::unsupported_rank,
                "secondary controlling bundle needs rank >= 3");
        return detail::interval_search(orthogonal_slope_at_half(xi.serre_dual(), Branch::larger));
    }
    return detail::interval_search(orthogonal_slope_at_half(xi, Branch::larger));
}

/// All exceptional slopes with rank <= max_rank and slope in [lo, hi], sorted
/// by slope. Ranks strictly increase down the dyadic tree, so pruning on rank
/// is exhaustive.
inline std::vector<ExceptionalSlope> enumerate_exceptionals(const BigInt& max_rank,
                                                            const Rational& lo,
                                                            const Rational& hi) {
    require(max_rank >= BigInt(1), errc::out_of_range, "max_rank must be >= 1");
    std::vector<ExceptionalSlope> out;
    long long first = lo.floor().to_int64();
    long long last = hi.ceil().to_int64();
    for (long long n = first; n <= last; ++n) {
        ExceptionalSlope e = epsilon(n);
        if (e.slope >= lo && e.slope <= hi) out.push_back(e);
    }
    // DFS between consecutive integers
    struct Span {
        ExceptionalSlope a, b;
    };
    std::vector<Span> stack;
    for (long long n = first; n < last; ++n) stack.push_back({epsilon(n), epsilon(n + 1)});
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.b.slope <= lo || s.a.slope >= hi) continue;
        ExceptionalSlope mid = epsilon(Dyadic::midpoint(s.a.address, s.b.address));
        if (mid.rank > max_rank) continue; // ranks only grow deeper
        if (mid.slope >= lo && mid.slope <= hi) out.push_back(mid);
        stack.push_back({s.a, mid});
        stack.push_back({mid, s.b});
    }
    std::sort(out.begin(), out.end(),
              [](const ExceptionalSlope& a, const ExceptionalSlope& b) { return a.slope < b.slope; });
    return out;
}

} // namespace gaeta
