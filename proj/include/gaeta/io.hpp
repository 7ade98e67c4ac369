#pragma once

#include <json.hpp>

#include "gaeta/cones.hpp"
#include "gaeta/gradecoh.hpp"

namespace gaeta {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Rational& r) { return r.to_string(); }

inline ojson to_json(const ChernCharacter& c) {
    return ojson{{"r", c.r.to_string()}, {"c1", c.c1.to_string()}, {"ch2", c.ch2.to_string()}};
}

inline ojson to_json(const LogChern& l) {
    return ojson{{"r", l.r.to_string()}, {"mu", l.mu.to_string()}, {"delta", l.delta.to_string()}};
}

inline ojson to_json(const ExceptionalSlope& e) {
    return ojson{{"slope", e.slope.to_string()},
                 {"rank", e.rank.to_string()},
                 {"discriminant", e.discriminant.to_string()},
                 {"address", e.address.to_string()}};
}

inline ojson to_json(const ResolutionShape& s) {
    ojson syz = ojson::array(), gen = ojson::array();
    for (auto& [t, k] : s.syzygies) syz.push_back(ojson::array({t, k}));
    for (auto& [t, k] : s.generators) gen.push_back(ojson::array({t, k}));
    ojson out{{"syzygies", syz}, {"generators", gen}};
    if (s.shared_twist) out["shared_twist"] = *s.shared_twist;
    return out;
}

inline ojson to_json(const ControllingData& c) {
    ojson out{{"gamma", to_json(c.gamma)},
              {"base", to_json(c.base)},
              {"d", c.d},
              {"alpha", to_json(c.alpha)},
              {"beta", to_json(c.beta)}};
    auto [lo, hi] = endpoints(c);
    out["mu_G"] = lo.to_string();
    out["mu_F"] = hi.to_string();
    if (c.on_boundary) out["on_boundary"] = true;
    return out;
}

inline ojson to_json(const GaetaTriangle& t) {
    ojson left = ojson::array(), right = ojson::array();
    for (const auto& fct : t.left)
        left.push_back(ojson{{"bundle", fct.label}, {"exponent", fct.exponent},
                             {"ch", to_json(fct.ch)}});
    for (const auto& fct : t.right)
        right.push_back(ojson{{"bundle", fct.label}, {"exponent", fct.exponent},
                              {"ch", to_json(fct.ch)}});
    return ojson{{"case", case_name(t.kind)},
                 {"chi", t.chi_value.to_string()},
                 {"left", left},
                 {"right", right},
                 {"F", to_json(t.f_char)},
                 {"F_exponent", t.f_exponent},
                 {"W", to_json(t.w_char)}};
}

inline ojson to_json(const ZetaMapModel& z) {
    return ojson{{"case", case_name(z.kind)},
                 {"total", to_json(z.total)},
                 {"block_B", to_json(z.block_b)},
                 {"block_A", to_json(z.block_a)},
                 {"exponents",
                  ojson{{"n1", z.n1}, {"n2", z.n2}, {"l1", z.l1}, {"l2", z.l2},
                        {"j1", z.j1}, {"j2", z.j2}}},
                 {"zeta", to_json(z.zeta)}};
}

inline ojson to_json(const DivisorClass& d) {
    return ojson{{"h", d.h.to_string()}, {"b_half", d.b_half.to_string()},
                 {"text", d.to_string()}};
}

inline ojson to_json(const SbldRow& r) {
    ojson dest = ojson::array();
    for (const auto& d : r.destabilizers)
        dest.push_back(ojson{{"name", d.name}, {"ch", to_json(d.ch)}});
    ojson out{{"betti", r.betti_id},
              {"map", r.map_pattern},
              {"diagram", to_json(r.diagram)},
              {"destabilizers", dest},
              {"base_locus", r.base_locus},
              {"base_locus_is_component", r.base_locus_component},
              {"wall_below", r.wall_below},
              {"stratum", r.stratum.name()}};
    if (r.interpolating) {
        out["interpolating"] = to_json(*r.interpolating);
        out["interpolating_slope"] = to_log(r.interpolating->character).mu.to_string();
    }
    return out;
}

inline ojson to_json(const ConjectureReport& r) {
    ojson out{{"base", to_json(r.base)},
              {"d", r.d},
              {"gamma", to_json(r.gamma)},
              {"n", r.n},
              {"found", r.decomposition_found},
              {"pure", r.pure}};
    if (r.decomposition_found) {
        out["factor"] = r.factor_name;
        out["factor_ch"] = to_json(r.factor);
        out["exponent"] = r.exponent;
        out["wall_fraction"] = r.fraction.to_string();
        out["searched"] = r.used_fallback;
        out["total"] = to_json(r.total);
        out["block_B"] = to_json(r.block_b);
        out["block_A"] = to_json(r.block_a);
    }
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

inline ojson to_json(const CohomologyReport& r) {
    return ojson{{"h0", r.h0}, {"h1", r.h1}, {"h2", r.h2}, {"chi", r.chi.to_string()}};
}

/// Parses a character argument triple given either as (r, mu, Delta) or, with
/// ch_coords, as (r, c1, ch2).
inline LogChern parse_character(const std::string& a, const std::string& b,
                                const std::string& c, bool ch_coords) {
    Rational x = Rational::parse(a), y = Rational::parse(b), z = Rational::parse(c);
    if (ch_coords) return to_log(ChernCharacter{x, y, z});
    require(x.signum() > 0, errc::non_positive_rank, "log form needs positive rank");
    return log_of(std::move(x), std::move(y), std::move(z));
}

} // namespace gaeta
