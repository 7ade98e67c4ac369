#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "gaeta/resolutions.hpp"

namespace gaeta {

/// Divisor class h*H - b_half*(B/2) on the Hilbert scheme of points.
struct DivisorClass {
    Rational h, b_half;

    Rational pair(const struct CurveClass& c) const;

    std::string to_string() const {
        return h.to_string() + " H - " + (b_half / Rational(2)).to_string() + " B";
    }
};

/// Curve class recorded by its intersection numbers with H and B/2.
struct CurveClass {
    Rational h_deg, b_half_deg;
};

inline Rational DivisorClass::pair(const CurveClass& c) const {
    return h * c.h_deg - b_half * c.b_half_deg;
}

inline std::optional<long long> is_triangular(long long n) {
    require(n >= 1, errc::out_of_range, "n must be positive");
    long long r = static_cast<long long>((std::sqrt(8.0 * n + 1) - 1) / 2);
    for (long long c = std::max(1LL, r - 2); c <= r + 2; ++c)
        if (c * (c + 1) / 2 == n) return c;
    return std::nullopt;
}

inline std::optional<long long> is_tangential(long long n) {
    require(n >= 1, errc::out_of_range, "n must be positive");
    long long s = static_cast<long long>((std::sqrt(2.0 * n + 1) - 1) / 2);
    for (long long c = std::max(1LL, s - 2); c <= s + 2; ++c)
        if (2 * c * (c + 1) == n) return c;
    return std::nullopt;
}

struct MovEdge {
    DivisorClass cls;
    ResolutionShape interpolating; // presentation of the edge bundle at k = 1
};

/// Primary edge of the movable cone for triangular (n > 3) and tangential
/// (s >= 2) point counts, with the presentation of the interpolating bundle.
inline MovEdge mov_primary_edge(long long n) {
    if (auto r = is_triangular(n); r && *r >= 3) {
        MovEdge e;
        e.cls = {Rational(*r - 1) + Rational(1, *r - 1), Rational(1)};
        e.interpolating = ResolutionShape::make({{*r - 3, *r}}, {{*r - 2, 2 * *r - 1}});
        return e;
    }
    if (auto s = is_tangential(n); s && *s >= 2) {
        MovEdge e;
        e.cls = {Rational(8 * *s * *s - 4 * *s + 1, 4 * *s - 1), Rational(1)};
        e.interpolating = ResolutionShape::make({{2 * *s - 3, *s}}, {{2 * *s - 1, 5 * *s - 1}});
        return e;
    }
    fail(errc::unsupported_n,
         "n = " + std::to_string(n) +
             " is neither triangular (> 3) nor tangential; other n fall to the general theory");
}

/// Primary edge of the effective cone: the controlling slope of (1, 0, n).
inline DivisorClass eff_primary_edge(long long n) {
    require(n >= 2, errc::unsupported_n, "effective edge needs n >= 2");
    ControllingData cd = controlling(ideal_points_log(n));
    return {cd.gamma.slope, Rational(1)};
}

/// Curve dual to the movable edge: a pencil of n points on a curve. The
/// triangular case uses a degree r-1 curve of genus g = (r-2)(r-3)/2 and the
/// pencil formula beta.(B/2) = n + g - 1; the tangential case uses the nodal
/// degree 4s-1 curve with beta.(B/2) = 8s^2 - 4s + 1.
inline std::pair<CurveClass, Rational> dual_curve_certificate(long long n) {
    MovEdge edge = mov_primary_edge(n);
    CurveClass beta;
    if (auto r = is_triangular(n); r && *r >= 3) {
        long long g = (*r - 2) * (*r - 3) / 2;
        beta = {Rational(*r - 1), Rational(n + g - 1)};
    } else {
        long long s = *is_tangential(n);
        beta = {Rational(4 * s - 1), Rational(8 * s * s - 4 * s + 1)};
    }
    Rational value = edge.cls.pair(beta);
    require(value.is_zero(), errc::internal_inconsistency, "dual curve does not pair to zero");
    return {beta, value};
}

/// Point strata appearing in the stable-base-locus tables.
enum class Stratum {
    general,
    collinear,     // L_k: k points on a line
    on_conic,      // Q_k
    on_cubic,      // C_k
    two_triples,   // L_{3,3}: two collinear triples sharing a point (n = 5)
    on_curve,      // n points on a curve of given degree
    qk_ideal,      // Hilbert-Burch ideal with the (qk) shape
    tangent_zeros, // zero scheme of a twisted tangent field
};

struct StratumSpec {
    Stratum kind = Stratum::general;
    long long k = 0; // points on the curve (L_k/Q_k/C_k), or curve degree, or (s,k)
    long long k2 = 0;

    std::string name() const {
        switch (kind) {
        case Stratum::general: return "general";
        case Stratum::collinear: return "L_" + std::to_string(k);
        case Stratum::on_conic: return "Q_" + std::to_string(k);
        case Stratum::on_cubic: return "C_" + std::to_string(k);
        case Stratum::two_triples: return "L_{3,3}";
        case Stratum::on_curve: return "on_curve(" + std::to_string(k) + ")";
        case Stratum::qk_ideal:
            return "qk(" + std::to_string(k) + "," + std::to_string(k2) + ")";
        case Stratum::tangent_zeros: return "zero_locus_T(" + std::to_string(k) + ")";
        }
        return "?";
    }
};

/// A named destabilizing character.
struct Destabilizer {
    std::string name;
    ChernCharacter ch;
};

/// One row of a stable-base-locus table: the Betti diagram, the optional map
/// pattern, the destabilization set, the base locus, and the interpolating
/// bundle of the chamber.
struct SbldRow {
    std::string betti_id;
    std::string map_pattern;                      // empty when no extra vanishing
    ResolutionShape diagram;                      // minimal free resolution display
    std::vector<Destabilizer> destabilizers;
    std::string base_locus;
    bool base_locus_component = true;             // false for footnoted sub-loci
    std::optional<ResolutionShape> interpolating; // presentation of the bundle
    bool wall_below = true;                       // solid line under the row
    StratumSpec stratum;                          // sampling recipe for the diagram
};

namespace tabledata {

inline ChernCharacter o(long long a) { return line_bundle_char(a); }
inline ChernCharacter o(long long a, long long k) { return Rational(k) * line_bundle_char(a); }
inline ChernCharacter ik(long long k, long long a) { return ideal_points_char(k).twist(a); }
inline ChernCharacter f_log(long long r, Rational mu, Rational delta) {
    return from_log(log_of(r, std::move(mu), std::move(delta)));
}

inline Destabilizer d_o(long long a) { return {"O(" + std::to_string(a) + ")", o(a)}; }
inline Destabilizer d_ok(long long a, long long k) {
    return {"O(" + std::to_string(a) + ")^" + std::to_string(k), o(a, k)};
}
inline Destabilizer d_ik(long long k, long long a) {
    return {"I_" + std::to_string(k) + "(" + std::to_string(a) + ")", ik(k, a)};
}
inline Destabilizer d_t(long long m) { return {"T(" + std::to_string(m) + ")", tangent_char(m)}; }
inline Destabilizer d_ehalf(long long a) {
    return {"E_{1/2}(" + std::to_string(a) + ")",
            f_log(2, Rational(1, 2) + Rational(a), Rational(3, 8))};
}
inline Destabilizer d_f(long long r, Rational mu, Rational delta) {
    return {"F_(" + std::to_string(r) + "," + mu.to_string() + "," + delta.to_string() + ")",
            f_log(r, mu, delta)};
}

using TL = std::vector<std::pair<long long, long long>>; // twist list

inline ResolutionShape sh(TL syz, TL gen, std::optional<long long> shared = std::nullopt) {
    return ResolutionShape::make(std::move(syz), std::move(gen), shared);
}

} // namespace tabledata

/// The destabilization tables for n = 2..6 and n = 12, as literal data.
/// Consistency is checked by table_consistency, not derived.
inline std::vector<SbldRow> sbld_table(long long n) {
    using namespace tabledata;
    std::vector<SbldRow> rows;
    auto row = [&](std::string id, std::string map, ResolutionShape diag,
                   std::vector<Destabilizer> dest, std::string locus, bool component,
                   std::optional<ResolutionShape> interp, bool wall, StratumSpec stratum) {
        rows.push_back({std::move(id), std::move(map), std::move(diag), std::move(dest),
                        std::move(locus), component, std::move(interp), wall, stratum});
    };
    switch (n) {
    case 2:
        row("G(2)", "", sh({{-3, 1}}, {{-2, 1}, {-1, 1}}), {d_o(-1)}, "P2[2]", true,
            std::nullopt, true, {Stratum::general});
        break;
    case 3:
        row("G_1(3)", "", sh({{-4, 1}}, {{-3, 1}, {-1, 1}}), {d_o(-1)}, "L_3", true,
            sh({{-2, 4}}, {{0, 6}}), true, {Stratum::collinear, 3});
        row("G(3)", "", sh({{-3, 2}}, {{-2, 3}}),
            {d_ehalf(-2), d_ik(1, -1), d_o(-2)}, "P2[3]", true, sh({}, {{1, 1}}), true,
            {Stratum::general});
        break;
    case 4:
        row("G_2(4)", "", sh({{-5, 1}}, {{-4, 1}, {-1, 1}}), {d_o(-1)}, "L_4", true,
            sh({{-1, 6}}, {{0, 8}}), true, {Stratum::collinear, 4});
        row("G_1(4)", "", sh({{-4, 1}, {-3, 1}}, {{-3, 1}, {-2, 2}}, -3), {d_ik(1, -1)},
            "L_3", true, sh({{-1, 2}}, {{0, 2}, {1, 2}}), true, {Stratum::collinear, 3});
        row("G(4)", "", sh({{-4, 1}}, {{-2, 2}}), {d_o(-2), d_ok(-2, 2)}, "P2[4]", true,
            sh({{0, 1}}, {{1, 3}}), true, {Stratum::general});
        break;
    case 5:
        row("G_2(5)", "", sh({{-6, 1}}, {{-5, 1}, {-1, 1}}), {d_o(-1)}, "L_5", true,
            sh({{-1, 8}}, {{0, 10}}), true, {Stratum::collinear, 5});
        row("G_1(5)", "", sh({{-5, 1}, {-3, 1}}, {{-4, 1}, {-2, 2}}), {d_ik(1, -1)}, "L_4",
            true, sh({{-1, 4}}, {{0, 4}, {1, 2}}), true, {Stratum::collinear, 4});
        row("G(5)", "g(5)''", sh({{-4, 2}}, {{-3, 2}, {-2, 1}}), {d_ik(2, -1), d_o(-2)},
            "L_{3,3}", false, sh({{0, 2}}, {{1, 4}}), false, {Stratum::two_triples});
        row("G(5)", "g(5)'", sh({{-4, 2}}, {{-3, 2}, {-2, 1}}), {d_ik(2, -1), d_o(-2)},
            "L_3", false, sh({{0, 2}}, {{1, 4}}), false, {Stratum::collinear, 3});
        row("G(5)", "", sh({{-4, 2}}, {{-3, 2}, {-2, 1}}), {d_o(-2)}, "P2[5]", true,
            sh({{0, 2}}, {{1, 4}}), true, {Stratum::general});
        break;
    case 6:
        row("G_4(6)", "", sh({{-7, 1}}, {{-6, 1}, {-1, 1}}), {d_o(-1)}, "L_6", true,
            sh({{-1, 10}}, {{0, 12}}), true, {Stratum::collinear, 6});
        row("G_3(6)", "", sh({{-6, 1}, {-3, 1}}, {{-5, 1}, {-2, 2}}), {d_ik(1, -1)}, "L_5",
            true, sh({{-1, 6}}, {{0, 6}, {1, 2}}), true, {Stratum::collinear, 5});
        row("G_2(6)", "", sh({{-5, 1}, {-4, 1}}, {{-4, 1}, {-3, 1}, {-2, 1}}, -4),
            {d_ik(2, -1)}, "L_4", true, sh({{-1, 2}}, {{1, 4}}), true,
            {Stratum::collinear, 4});
        row("G_1(6)", "", sh({{-5, 1}}, {{-3, 1}, {-2, 1}}), {d_o(-2)}, "Q_6", true,
            sh({{0, 3}}, {{1, 5}}), true, {Stratum::on_conic, 6});
        row("G(6)", "g(6)'", sh({{-4, 3}}, {{-3, 4}}),
            {d_ehalf(-3), d_f(2, Rational(-2), Rational(1)), d_o(-3), d_ok(-3, 2),
             d_ok(-3, 3), d_ok(-3, 4), d_ik(1, -2), d_ik(3, -1)},
            "L_3", false, sh({}, {{2, 1}}), false, {Stratum::collinear, 3});
        row("G(6)", "", sh({{-4, 3}}, {{-3, 4}}),
            {d_ehalf(-3), d_f(2, Rational(-2), Rational(1)), d_o(-3), d_ok(-3, 2),
             d_ok(-3, 3), d_ok(-3, 4), d_ik(1, -2)},
            "P2[6]", true, sh({}, {{2, 1}}), true, {Stratum::general});
        break;
    case 12:
        row("G_9(12)", "", sh({{-8, 1}, {-5, 2}}, {{-7, 1}, {-4, 2}, {-3, 1}}),
            {d_ik(5, -1)}, "L_7", true, sh({{-1, 2}, {0, 6}}, {{1, 10}}), true,
            {Stratum::collinear, 7});
        row("G_8(12)", "", sh({{-8, 1}}, {{-6, 1}, {-2, 1}}), {d_o(-2)}, "Q_12", true,
            sh({{0, 9}}, {{1, 11}}), true, {Stratum::on_conic, 12});
        row("G_7(12)", "", sh({{-7, 2}, {-4, 1}}, {{-6, 2}, {-3, 2}}), {d_ik(1, -2)},
            "Q_11", true, sh({{0, 6}}, {{1, 6}, {2, 2}}), false, {Stratum::on_conic, 11});
        row("G_6(12)", "", sh({{-7, 1}, {-5, 3}}, {{-6, 1}, {-4, 4}}), {d_ik(6, -1)},
            "L_6", true, sh({{0, 6}}, {{1, 6}, {2, 2}}), true, {Stratum::collinear, 6});
        row("G_5(12)", "", sh({{-7, 1}, {-5, 1}}, {{-5, 1}, {-4, 1}, {-3, 1}}, -5),
            {d_ik(2, -2)}, "Q_10", true, sh({{0, 3}}, {{1, 1}, {2, 4}}), true,
            {Stratum::on_conic, 10});
        row("G_4(12)", "", sh({{-6, 3}}, {{-5, 3}, {-3, 1}}), {d_o(-3)}, "C_12", true,
            sh({{1, 4}}, {{2, 6}}), false, {Stratum::on_cubic, 12});
        row("G_3(12)", "", sh({{-6, 2}, {-5, 2}}, {{-5, 2}, {-4, 3}}, -5), {d_ik(3, -2)},
            "Q_9", true, sh({{1, 4}}, {{2, 6}}), false, {Stratum::on_conic, 9});
        row("G_2(12)", "", sh({{-8, 1}, {-5, 2}}, {{-7, 1}, {-4, 2}, {-3, 1}}),
            {d_ik(7, -1)}, "L_5", true, sh({{1, 4}}, {{2, 6}}), true,
            {Stratum::collinear, 5});
        row("G_1(12)", "g_1(12)'", sh({{-6, 2}, {-5, 1}}, {{-5, 1}, {-4, 3}}, -5),
            {d_ik(1, -3)}, "C_11", true, sh({{1, 2}}, {{2, 2}, {3, 3}}), true,
            {Stratum::on_cubic, 11});
        row("G_1(12)", "", sh({{-6, 2}, {-5, 1}}, {{-5, 1}, {-4, 3}}, -5), {d_t(-5)},
            "D_{T(-5)}", true, sh({{1, 2}}, {{3, 9}}), true, {Stratum::qk_ideal, 2, 1});
        row("G(12)", "g(12)'", sh({{-6, 2}}, {{-4, 3}}),
            {d_o(-4), d_ok(-4, 2), d_ok(-4, 3), d_f(2, Rational(-3), Rational(3, 2)),
             d_ik(4, -2)},
            "Q_8", false, sh({{2, 1}}, {{3, 3}}), false, {Stratum::on_conic, 8});
        row("G(12)", "", sh({{-6, 2}}, {{-4, 3}}),
            {d_o(-4), d_ok(-4, 2), d_ok(-4, 3), d_f(2, Rational(-3), Rational(3, 2))},
            "P2[12]", true, sh({{2, 1}}, {{3, 3}}), true, {Stratum::general});
        break;
    default:
        fail(errc::unsupported_n, "no table for n = " + std::to_string(n));
    }
    return rows;
}

/// Bridgeland wall parameter of a destabilizing character against I_n:
/// (r(U) ch2(zeta) - r(zeta) ch2(U)) / (-c1(zeta) r(U)).
inline Rational wall_fraction(const ChernCharacter& zeta, long long n) {
    require(zeta.c1.signum() < 0, errc::internal_inconsistency,
            "wall fraction needs c1 < 0");
    return (zeta.ch2 + Rational(n) * zeta.r) / (-zeta.c1);
}

struct ConsistencyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the embedded table: (i) each interpolating character is numerically
/// orthogonal to I_n and above the DLP curve or exceptional, (ii) slopes
/// weakly decrease down the table, (iii) destabilizer wall fractions weakly
/// decrease down the table.
inline ConsistencyReport table_consistency(long long n) {
    ConsistencyReport rep;
    auto rows = sbld_table(n);
    std::optional<Rational> prev_slope;
    std::optional<Rational> prev_min_fraction;
    for (size_t i = 0; i < rows.size(); ++i) {
        const SbldRow& r = rows[i];
        if (r.interpolating) {
            const ChernCharacter& v = r.interpolating->character;
            if (!pairing(ideal_points_char(n), v).is_zero())
                rep.violations.push_back(r.betti_id + "/" + r.base_locus +
                                         ": interpolating bundle not orthogonal");
            LogChern lv = to_log(v);
            // on-or-above the threshold, or exceptional (Delta below 1/2)
            if (lv.delta < dlp_threshold(lv.mu) && !(lv.delta < half(1)))
                rep.violations.push_back(r.betti_id + ": interpolating bundle below DLP");
            Rational slope = lv.mu;
            if (prev_slope && slope > *prev_slope)
                rep.violations.push_back(r.betti_id + ": interpolating slope increases");
            prev_slope = slope;
        }
        std::optional<Rational> row_min, row_max;
        for (const auto& dd : r.destabilizers) {
            Rational f = wall_fraction(dd.ch, n);
            if (!row_min || f < *row_min) row_min = f;
            if (!row_max || f > *row_max) row_max = f;
        }
        if (prev_min_fraction && row_max && *row_max > *prev_min_fraction)
            rep.violations.push_back(r.betti_id + "/" + r.base_locus +
                                     ": destabilizer wall ordering violated");
        if (row_min) prev_min_fraction = row_min;
    }
    return rep;
}

/// One instance of the block-decomposition check behind the wall conjecture.
struct ConjectureReport {
    ExceptionalSlope base;   // E with slope in [0, 1)
    long long d = 0;         // twist with E^*(d) the controlling bundle
    ExceptionalSlope gamma;  // slope of E^*(d)
    long long n = 0;         // chi(E^*(d)) / rank, the orthogonal point count
    bool decomposition_found = false;
    bool pure = false;           // whether the Gaeta shape of n is pure
    bool used_fallback = false;  // destabilizer found by search, not E_{-gamma}^m
    long long exponent = 0;      // multiplicity m of the block factor
    std::string factor_name;     // the destabilizer whose resolution is block B
    ChernCharacter factor;       // its character
    Rational fraction;           // its wall parameter
    ResolutionShape total, block_b, block_a;
    std::string note;
};

namespace detail {

using Multiset = std::map<long long, long long>;

inline Multiset to_multiset(const std::vector<std::pair<long long, long long>>& v) {
    Multiset m;
    for (auto& [t, k] : v) m[t] += k;
    return m;
}

inline bool subtract(Multiset& from, const Multiset& what) {
    for (auto& [t, k] : what) {
        from[t] -= k;
        if (from[t] < 0) return false;
    }
    return true;
}

inline std::vector<std::pair<long long, long long>> to_list(const Multiset& m) {
    std::vector<std::pair<long long, long long>> out;
    for (auto& [t, k] : m)
        if (k > 0) out.push_back({t, k});
    return out;
}

/// Remainder of total minus block, if non-negative and shaped like a right
/// resolution (every remaining syzygy twist strictly below every remaining
/// generator twist, and non-negative kernel rank).
inline std::optional<ResolutionShape> remainder_shape(const ResolutionShape& total,
                                                      const Multiset& bsyz,
                                                      const Multiset& bgen) {
    Multiset syz = to_multiset(total.syzygies);
    Multiset gen = to_multiset(total.generators);
    if (!subtract(syz, bsyz) || !subtract(gen, bgen)) return std::nullopt;
    long long rank = 0;
    long long max_syz = LLONG_MIN, min_gen = LLONG_MAX;
    for (auto& [t, k] : syz)
        if (k > 0) {
            rank += k;
            max_syz = std::max(max_syz, t);
        }
    for (auto& [t, k] : gen)
        if (k > 0) {
            rank -= k;
            min_gen = std::min(min_gen, t);
        }
    if (rank < 0) return std::nullopt;
    if (max_syz != LLONG_MIN && min_gen != LLONG_MAX && max_syz >= min_gen)
        return std::nullopt;
    return ResolutionShape::make(to_list(syz), to_list(gen));
}

/// Whether a character can carry a semistable sheaf: twisted ideal sheaves in
/// rank one, exceptional powers below the Delta = 1/2 line, anything on or
/// above the DLP curve otherwise.
inline bool plausible_destabilizer(const ChernCharacter& ch) {
    if (ch.r.signum() <= 0) return false;
    LogChern l = to_log(ch);
    if (l.r == Rational(1))
        return l.delta.signum() >= 0 && l.delta.is_integer() && l.mu.is_integer();
    if (l.delta < half(1)) {
        const BigInt& q = l.mu.den();
        if (!(l.delta == exceptional_discriminant(q))) return false;
        return (l.r.num() % q).is_zero(); // a power of the exceptional of that slope
    }
    return !(l.delta < dlp_threshold(l.mu));
}

} // namespace detail

/// Verifies, instance by instance, that the stratum cut out at the wall just
/// outside the final one admits a Betti-level block decomposition: the minimal
/// free resolution of the destabilizer embeds positionwise in the stratum's
/// Gaeta diagram (the divisorial one when the Gaeta shape is pure), with a
/// valid right-resolution as the complementary block. The destabilizer is
/// E_{-gamma}^m with minimal m when that fits; otherwise the checker searches
/// two-twist blocks and reports the one on the nearest wall strictly outside
/// the final wall. Instances are all (E, d) with n = chi(E^*(d))/rk integral,
/// 2 <= rk E < max_rank, d in the window.
inline std::vector<ConjectureReport> conjecture_check(const BigInt& max_rank, long long d_lo,
                                                      long long d_hi) {
    require(max_rank >= BigInt(3), errc::out_of_range, "max_rank must be >= 3");
    std::vector<ConjectureReport> out;
    for (const auto& e : enumerate_exceptionals(max_rank - BigInt(1), Rational(0),
                                                Rational(1))) {
        if (e.rank < BigInt(2) || e.slope == Rational(1)) continue;
        for (long long d = d_lo; d <= d_hi; ++d) {
            Rational chi = euler(e.log().dual().twist(d));
            Rational n_rat = chi / Rational(e.rank);
            if (!n_rat.is_integer() || n_rat < Rational(2)) continue;
            long long n = n_rat.to_integer();

            ConjectureReport rep;
            rep.base = e;
            rep.d = d;
            rep.gamma = epsilon(e.address.negated().shifted(d));
            rep.n = n;

            // sanity: this gamma is the controlling slope of n points
            ControllingData cd = controlling(ideal_points_log(n));
            if (!(cd.gamma.slope == rep.gamma.slope)) {
                rep.note = "controlling slope of I_n is " + cd.gamma.slope.to_string();
                out.push_back(rep);
                continue;
            }

            LogChern xi = ideal_points_log(n);
            ResolutionShape total = gaeta_resolution(xi);
            rep.pure = total.is_pure();
            if (rep.pure) total = divisorial_gaeta(xi);
            rep.total = total;
            Rational last_wall = rep.gamma.slope + Rational(3, 2);

            // primary route: block B = MFR of E_{-gamma}^m, m minimal
            ResolutionShape unit = gaeta_resolution(rep.gamma.log().dual());
            for (long long m = 1; !rep.decomposition_found; ++m) {
                detail::Multiset bs, bg;
                bool overflow = false;
                for (auto& [t, k] : unit.syzygies) {
                    bs[t] = k * m;
                    if (k * m > total.total_syz()) overflow = true;
                }
                for (auto& [t, k] : unit.generators) {
                    bg[t] = k * m;
                    if (k * m > total.total_gens()) overflow = true;
                }
                if (overflow) break;
                auto rem = detail::remainder_shape(total, bs, bg);
                if (!rem) continue;
                rep.decomposition_found = true;
                rep.exponent = m;
                rep.factor = Rational(m) * from_log(rep.gamma.log().dual());
                rep.factor_name = detail::name_character(from_log(rep.gamma.log().dual())) +
                                  (m > 1 ? "^" + std::to_string(m) : "");
                rep.fraction = wall_fraction(rep.factor, n);
                rep.block_b = ResolutionShape::make(detail::to_list(bs), detail::to_list(bg));
                rep.block_a = *rem;
            }

            // fallback: search two-twist blocks [O(ts)^p -> O(tt)^q] inside the
            // diagram whose wall sits strictly outside the final wall; among the
            // valid ones keep the nearest wall
            if (!rep.decomposition_found) {
                std::optional<Rational> best;
                for (auto& [ts, smax] : total.syzygies) {
                    for (auto& [tt, gmax] : total.generators) {
                        if (ts >= tt) continue;
                        for (long long p = 0; p <= smax; ++p)
                            for (long long q = p + 1; q <= gmax; ++q) {
                                ChernCharacter f =
                                    Rational(q) * line_bundle_char(tt) -
                                    Rational(p) * line_bundle_char(ts);
                                if (f.c1.signum() >= 0) continue;
                                if (!detail::plausible_destabilizer(f)) continue;
                                Rational frac = wall_fraction(f, n);
                                if (!(frac > last_wall)) continue;
                                detail::Multiset bs, bg;
                                if (p > 0) bs[ts] = p;
                                bg[tt] = q;
                                auto rem = detail::remainder_shape(total, bs, bg);
                                if (!rem) continue;
                                if (best && !(frac < *best)) continue;
                                best = frac;
                                rep.decomposition_found = true;
                                rep.used_fallback = true;
                                rep.exponent = 1;
                                rep.factor = f;
                                rep.factor_name = detail::name_character(f);
                                rep.fraction = frac;
                                rep.block_b = ResolutionShape::make(detail::to_list(bs),
                                                                    detail::to_list(bg));
                                rep.block_a = *rem;
                            }
                    }
                }
            }
            out.push_back(rep);
        }
    }
    std::sort(out.begin(), out.end(), [](const ConjectureReport& a, const ConjectureReport& b) {
        if (a.base.rank != b.base.rank) return a.base.rank < b.base.rank;
        if (!(a.base.slope == b.base.slope)) return a.base.slope < b.base.slope;
        return a.d < b.d;
    });
    return out;
}

} // namespace gaeta
