#pragma once

#include <array>
#include <vector>

#include "gaeta/fp.hpp"

namespace gaeta {

/// Number of monomials of degree d in x, y, z.
inline long long monomial_count(long long d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

/// Fixed monomial order within a degree: lexicographic in (a, b) with a the
/// x-exponent descending, then b descending; c = d - a - b. This order is
/// multiplicative, so leading terms behave under products (needed for the
/// exact division inside fraction-free elimination).
inline long long monomial_index(long long a, long long b, long long d) {
    // monomials with x-exponent > a come first: sum_{i=a+1..d} (d-i+1)
    long long before = (d - a) * (d - a + 1) / 2;
    return before + (d - a - b);
}

inline std::array<long long, 3> monomial_at(long long index, long long d) {
    for (long long a = d; a >= 0; --a) {
        long long block = d - a + 1;
        if (index < block) return {a, d - a - index, index};
        index -= block;
    }
    fail(errc::internal_inconsistency, "monomial index out of range");
}

/// Dense homogeneous polynomial over F_p. The zero polynomial carries
/// degree -1 and no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long long degree, std::vector<uint32_t> coefs) : deg_(degree), c_(std::move(coefs)) {
        require(static_cast<long long>(c_.size()) == monomial_count(degree),
                errc::internal_inconsistency, "coefficient count mismatch");
        normalize();
    }

    static Poly zero() { return Poly(); }
    static Poly constant(uint32_t v, const Fp& f) {
        if (v % f.p == 0) return Poly();
        return Poly(0, {v % f.p});
    }
    static Poly variable(int which) { // 0 = x, 1 = y, 2 = z
        std::vector<uint32_t> c(3, 0);
        c[which == 0 ? monomial_index(1, 0, 1) : which == 1 ? monomial_index(0, 1, 1)
                                                            : monomial_index(0, 0, 1)] = 1;
        return Poly(1, std::move(c));
    }
    static Poly random(long long degree, const Fp& f, Rng& rng) {
        if (degree < 0) return Poly();
        std::vector<uint32_t> c(monomial_count(degree));
        for (auto& v : c) v = f.random(rng);
        return Poly(degree, std::move(c));
    }

    bool is_zero() const { return deg_ < 0; }
    long long degree() const { return deg_; }
    const std::vector<uint32_t>& coefs() const { return c_; }
    uint32_t coef(long long a, long long b) const {
        return c_[monomial_index(a, b, deg_)];
    }

    friend Poly add(const Poly& x, const Poly& y, const Fp& f) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        require(x.deg_ == y.deg_, errc::internal_inconsistency, "degree mismatch in add");
        std::vector<uint32_t> c(x.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(x.c_[i], y.c_[i]);
        return Poly(x.deg_, std::move(c));
    }
    friend Poly sub(const Poly& x, const Poly& y, const Fp& f) {
        return add(x, scale(y, f.p - 1, f), f);
    }
    friend Poly scale(const Poly& x, uint32_t s, const Fp& f) {
        if (x.is_zero() || s % f.p == 0) return Poly();
        std::vector<uint32_t> c(x.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.mul(x.c_[i], s);
        return Poly(x.deg_, std::move(c));
    }

    friend Poly mul(const Poly& x, const Poly& y, const Fp& f) {
        if (x.is_zero() || y.is_zero()) return Poly();
        long long d = x.deg_ + y.deg_;
        std::vector<uint64_t> acc(monomial_count(d), 0);
        for (long long i = 0; i < static_cast<long long>(x.c_.size()); ++i) {
            if (x.c_[i] == 0) continue;
            auto [a1, b1, c1] = monomial_at(i, x.deg_);
            for (long long j = 0; j < static_cast<long long>(y.c_.size()); ++j) {
                if (y.c_[j] == 0) continue;
                auto [a2, b2, c2] = monomial_at(j, y.deg_);
                uint64_t& slot = acc[monomial_index(a1 + a2, b1 + b2, d)];
                slot += static_cast<uint64_t>(x.c_[i]) * y.c_[j];
                if (slot >= (1ULL << 62)) slot %= f.p;
            }
        }
        std::vector<uint32_t> c(acc.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<uint32_t>(acc[i] % f.p);
        return Poly(d, std::move(c));
    }

    uint32_t eval(uint32_t x, uint32_t y, uint32_t z, const Fp& f) const {
        if (is_zero()) return 0;
        // powers tables
        std::vector<uint32_t> px(deg_ + 1, 1), py(deg_ + 1, 1), pz(deg_ + 1, 1);
        for (long long i = 1; i <= deg_; ++i) {
            px[i] = f.mul(px[i - 1], x);
            py[i] = f.mul(py[i - 1], y);
            pz[i] = f.mul(pz[i - 1], z);
        }
        uint64_t acc = 0;
        for (long long i = 0; i < static_cast<long long>(c_.size()); ++i) {
            if (c_[i] == 0) continue;
            auto [a, b, c] = monomial_at(i, deg_);
            acc += static_cast<uint64_t>(f.mul(f.mul(px[a], py[b]), pz[c])) * c_[i];
            if (acc >= (1ULL << 62)) acc %= f.p;
        }
        return static_cast<uint32_t>(acc % f.p);
    }

    /// Index of the leading monomial in the fixed order (smallest index wins
    /// since the order lists larger monomials first).
    long long leading_index() const {
        for (long long i = 0; i < static_cast<long long>(c_.size()); ++i)
            if (c_[i] != 0) return i;
        return -1;
    }

    /// Exact division: returns q with x = q * g; the ring is a domain and the
    /// monomial order is multiplicative, so repeated leading-term division
    /// terminates without remainder whenever g divides x.
    friend Poly exact_divide(Poly x, const Poly& g, const Fp& f) {
        require(!g.is_zero(), errc::internal_inconsistency, "division by zero polynomial");
        if (x.is_zero()) return Poly();
        long long qd = x.deg_ - g.deg_;
        require(qd >= 0, errc::internal_inconsistency, "degree drop in exact division");
        std::vector<uint32_t> qc(monomial_count(qd), 0);
        long long gl = g.leading_index();
        auto [ga, gb, gc] = monomial_at(gl, g.deg_);
        uint32_t ginv = f.inv(g.c_[gl]);
        for (;;) {
            long long xl = x.leading_index();
            if (xl < 0) break;
            auto [xa, xb, xc] = monomial_at(xl, x.deg_);
            long long ta = xa - ga, tb = xb - gb, tc = xc - gc;
            require(ta >= 0 && tb >= 0 && tc >= 0, errc::internal_inconsistency,
                    "inexact polynomial division");
            uint32_t coef = f.mul(x.c_[xl], ginv);
            std::vector<uint32_t> tc_vec(monomial_count(qd), 0);
            tc_vec[monomial_index(ta, tb, qd)] = coef;
            qc[monomial_index(ta, tb, qd)] = coef;
            x = sub(x, mul(Poly(qd, std::move(tc_vec)), g, f), f);
            if (x.is_zero()) break;
            require(x.deg_ == qd + g.deg_, errc::internal_inconsistency, "division drift");
        }
        return Poly(qd, std::move(qc));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (long long i = 0; i < static_cast<long long>(c_.size()); ++i) {
            if (c_[i] == 0) continue;
            auto [a, b, c] = monomial_at(i, deg_);
            if (!s.empty()) s += " + ";
            s += std::to_string(c_[i]);
            auto var = [&](const char* v, long long e) {
                if (e == 0) return std::string();
                std::string r = std::string("*") + v;
                if (e > 1) r += "^" + std::to_string(e);
                return r;
            };
            s += var("x", a) + var("y", b) + var("z", c);
        }
        return s;
    }

private:
    long long deg_ = -1;
    std::vector<uint32_t> c_;

    void normalize() {
        for (uint32_t v : c_)
            if (v != 0) return;
        deg_ = -1;
        c_.clear();
    }
};

} // namespace gaeta
