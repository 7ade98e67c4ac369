#pragma once

#include <sstream>

#include "gaeta/chern.hpp"
#include "gaeta/fpmat.hpp"
#include "gaeta/poly.hpp"

namespace gaeta {

/// Matrix of homogeneous forms representing a map of twisted free sheaves
/// (+) O(col_j) -> (+) O(row_i). Entry (i, j) is homogeneous of degree
/// row_i - col_j (zero when that is negative). Degree-zero entries are kept
/// at zero: constants would contradict minimality, matching the usual
/// normalization of resolution matrices.
class GradedMatrix {
public:
    GradedMatrix(std::vector<long long> row_twists, std::vector<long long> col_twists,
                 uint32_t prime)
        : rows_(std::move(row_twists)), cols_(std::move(col_twists)), p_(prime),
          e_(rows_.size() * cols_.size()) {}

    static GradedMatrix random(std::vector<long long> row_twists,
                               std::vector<long long> col_twists, const Fp& f, Rng& rng) {
        GradedMatrix m(std::move(row_twists), std::move(col_twists), f.p);
        for (size_t i = 0; i < m.rows_.size(); ++i)
            for (size_t j = 0; j < m.cols_.size(); ++j) {
                long long d = m.rows_[i] - m.cols_[j];
                if (d > 0) m.set(i, j, Poly::random(d, f, rng));
            }
        return m;
    }

    size_t nrows() const { return rows_.size(); }
    size_t ncols() const { return cols_.size(); }
    const std::vector<long long>& row_twists() const { return rows_; }
    const std::vector<long long>& col_twists() const { return cols_; }
    uint32_t prime() const { return p_; }

    const Poly& entry(size_t i, size_t j) const { return e_[i * cols_.size() + j]; }
    void set(size_t i, size_t j, Poly v) {
        long long need = rows_[i] - cols_[j];
        if (!v.is_zero()) {
            require(need > 0, errc::internal_inconsistency,
                    "entry would need degree " + std::to_string(need));
            require(v.degree() == need, errc::internal_inconsistency,
                    "entry degree mismatch");
        }
        e_[i * cols_.size() + j] = std::move(v);
    }

    ChernCharacter row_char() const {
        ChernCharacter c{Rational(0), Rational(0), Rational(0)};
        for (long long t : rows_) c = c + line_bundle_char(t);
        return c;
    }
    ChernCharacter col_char() const {
        ChernCharacter c{Rational(0), Rational(0), Rational(0)};
        for (long long t : cols_) c = c + line_bundle_char(t);
        return c;
    }
    /// Character of the cokernel sheaf (rows minus columns).
    ChernCharacter coker_char() const { return row_char() - col_char(); }

    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.e_ == b.e_;
    }

    /// Serialization: header lines with the twists, then one line per nonzero
    /// entry as a sparse monomial sum. Round-trips bit-exactly.
    std::string serialize() const {
        std::ostringstream os;
        os << "prime: " << p_ << "\n";
        os << "rows:";
        for (long long t : rows_) os << " " << t;
        os << "\ncols:";
        for (long long t : cols_) os << " " << t;
        os << "\n";
        for (size_t i = 0; i < rows_.size(); ++i)
            for (size_t j = 0; j < cols_.size(); ++j)
                if (!entry(i, j).is_zero())
                    os << i << " " << j << " : " << entry(i, j).to_string() << "\n";
        return os.str();
    }

    static GradedMatrix parse(const std::string& text);

private:
    std::vector<long long> rows_, cols_;
    uint32_t p_;
    std::vector<Poly> e_;
};

namespace detail {

/// Multiplication-by-f matrix from degree-(to - f.deg) monomials to degree-to
/// monomials.
inline void add_mult_block(FpMat& m, long long row0, long long col0, const Poly& f,
                           long long to_deg, const Fp& fp) {
    if (f.is_zero()) return;
    long long from_deg = to_deg - f.degree();
    if (from_deg < 0 || to_deg < 0) return;
    for (long long k = 0; k < monomial_count(from_deg); ++k) {
        auto [a, b, c] = monomial_at(k, from_deg);
        for (long long i = 0; i < monomial_count(f.degree()); ++i) {
            auto [fa, fb, fc] = monomial_at(i, f.degree());
            uint32_t v = f.coefs()[static_cast<size_t>(i)];
            if (v == 0) continue;
            long long target = monomial_index(a + fa, b + fb, to_deg);
            uint32_t& slot = m.at(row0 + target, col0 + k);
            slot = fp.add(slot, v);
        }
    }
}

} // namespace detail

/// H^0 of the twisted map: block matrix of multiplication maps between the
/// monomial bases of the summands, at twist t.
inline FpMat induced_h0(const GradedMatrix& m, long long t) {
    Fp fp(m.prime());
    std::vector<long long> row_off(m.nrows() + 1, 0), col_off(m.ncols() + 1, 0);
    for (size_t i = 0; i < m.nrows(); ++i)
        row_off[i + 1] = row_off[i] + std::max(0LL, monomial_count(m.row_twists()[i] + t));
    for (size_t j = 0; j < m.ncols(); ++j)
        col_off[j + 1] = col_off[j] + std::max(0LL, monomial_count(m.col_twists()[j] + t));
    FpMat out(row_off[m.nrows()], col_off[m.ncols()]);
    for (size_t i = 0; i < m.nrows(); ++i)
        for (size_t j = 0; j < m.ncols(); ++j) {
            if (m.col_twists()[j] + t < 0) continue;
            detail::add_mult_block(out, row_off[i], col_off[j], m.entry(i, j),
                                   m.row_twists()[i] + t, fp);
        }
    return out;
}

/// Serre-dual transpose: the matrix whose H^0 at twist -t computes H^2 of the
/// original summands at twist t (rows and columns swap, twists map to
/// -3 - twist, entries transpose).
inline GradedMatrix transpose_serre(const GradedMatrix& m) {
    std::vector<long long> rt, ct;
    for (long long c : m.col_twists()) rt.push_back(-3 - c);
    for (long long r : m.row_twists()) ct.push_back(-3 - r);
    GradedMatrix out(std::move(rt), std::move(ct), m.prime());
    for (size_t i = 0; i < m.nrows(); ++i)
        for (size_t j = 0; j < m.ncols(); ++j)
            if (!m.entry(i, j).is_zero()) out.set(j, i, m.entry(i, j));
    return out;
}

/// H^2 of the twisted map at twist t, as the transpose of the H^0 matrix of
/// the Serre-dual transpose at twist -t. Dimensions match
/// h^2(O(a + t)) = h^0(O(-3 - a - t)) summand by summand.
inline FpMat induced_h2(const GradedMatrix& m, long long t) {
    return induced_h0(transpose_serre(m), -t).transposed();
}

inline long long h0_dim(const std::vector<long long>& twists, long long t) {
    long long s = 0;
    for (long long a : twists) s += std::max(0LL, monomial_count(a + t));
    return s;
}
inline long long h2_dim(const std::vector<long long>& twists, long long t) {
    long long s = 0;
    for (long long a : twists) s += std::max(0LL, monomial_count(-3 - a - t));
    return s;
}

/// Matrix product where defined (used to verify composites vanish).
inline bool composite_is_zero(const GradedMatrix& f, const GradedMatrix& g) {
    // f: T1 -> T0, g: T2 -> T1; checks f . g = 0
    if (f.ncols() != g.nrows()) return false;
    Fp fp(f.prime());
    for (size_t i = 0; i < f.nrows(); ++i)
        for (size_t j = 0; j < g.ncols(); ++j) {
            Poly acc;
            for (size_t k = 0; k < f.ncols(); ++k) {
                if (f.entry(i, k).is_zero() || g.entry(k, j).is_zero()) continue;
                acc = add(acc, mul(f.entry(i, k), g.entry(k, j), fp), fp);
            }
            if (!acc.is_zero()) return false;
        }
    return true;
}

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination; every division is exact in the polynomial ring.
inline Poly poly_determinant(std::vector<std::vector<Poly>> a, const Fp& f) {
    size_t n = a.size();
    if (n == 0) return Poly::constant(1, f);
    Poly prev = Poly::constant(1, f);
    uint32_t sign = 1; // 1 or p-1
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            std::swap(a[k], a[swap_row]);
            sign = f.neg(sign);
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = sub(mul(a[i][j], a[k][k], f), mul(a[i][k], a[k][j], f), f);
                a[i][j] = num.is_zero() ? Poly() : exact_divide(num, prev, f);
            }
        prev = a[k][k];
        if (prev.is_zero()) return Poly(); // column of zeros below a zero pivot
    }
    return scale(a[n - 1][n - 1], sign, f);
}

/// Signed maximal minors of a matrix with one more row than columns; minor i
/// omits row i and carries sign (-1)^i. By Hilbert-Burch these generate the
/// ideal whose resolution matrix is the input.
inline std::vector<Poly> maximal_minors(const GradedMatrix& m, const Fp& f) {
    require(m.nrows() == m.ncols() + 1, errc::not_generic_matrix,
            "maximal minors need one more row than columns");
    size_t t = m.ncols();
    std::vector<Poly> out;
    bool any = false;
    for (size_t skip = 0; skip <= t; ++skip) {
        std::vector<std::vector<Poly>> sub(t, std::vector<Poly>(t));
        size_t r = 0;
        for (size_t i = 0; i <= t; ++i) {
            if (i == skip) continue;
            for (size_t j = 0; j < t; ++j) sub[r][j] = m.entry(i, j);
            ++r;
        }
        Poly d = poly_determinant(std::move(sub), f);
        if (skip % 2 == 1) d = scale(d, f.p - 1, f);
        if (!d.is_zero()) any = true;
        out.push_back(std::move(d));
    }
    require(any, errc::not_generic_matrix, "all maximal minors vanish");
    return out;
}

/// Two-term tensor total complex of a presentation [P1 -> P0] (of a bundle M)
/// with a resolution [L2 -> L1] (of a sheaf I): T2 -> T1 -> T0 with
/// T2 = P1 x L2, T1 = P0 x L2 + P1 x L1, T0 = P0 x L1, computing M x I when
/// the sheaf-Tor terms vanish. The sign on the second block makes the
/// composite vanish identically.
struct TensorComplex {
    GradedMatrix g; // T2 -> T1
    GradedMatrix f; // T1 -> T0
};

inline TensorComplex tensor_total(const GradedMatrix& pres, const GradedMatrix& mfr) {
    require(pres.prime() == mfr.prime(), errc::internal_inconsistency, "prime mismatch");
    uint32_t p = pres.prime();
    Fp fp(p);
    const auto& p0 = pres.row_twists();
    const auto& p1 = pres.col_twists();
    const auto& l1 = mfr.row_twists();
    const auto& l2 = mfr.col_twists();
    auto sum_twists = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> out;
        for (long long x : a)
            for (long long y : b) out.push_back(x + y);
        return out;
    };
    std::vector<long long> t2 = sum_twists(p1, l2);
    std::vector<long long> t0 = sum_twists(p0, l1);
    std::vector<long long> t1 = sum_twists(p0, l2);
    std::vector<long long> t1b = sum_twists(p1, l1);
    t1.insert(t1.end(), t1b.begin(), t1b.end());

    size_t np0 = p0.size(), np1 = p1.size(), nl1 = l1.size(), nl2 = l2.size();
    GradedMatrix g(t1, t2, p);
    GradedMatrix f(t0, t1, p);
    // index helpers: block (a, b) = a * inner + b
    // g upper block: A x id_{L2} at rows (P0, L2), cols (P1, L2)
    for (size_t i = 0; i < np0; ++i)
        for (size_t j = 0; j < np1; ++j)
            for (size_t k = 0; k < nl2; ++k)
                if (!pres.entry(i, j).is_zero())
                    g.set(i * nl2 + k, j * nl2 + k, pres.entry(i, j));
    // g lower block: -id_{P1} x B at rows (P1, L1), cols (P1, L2)
    for (size_t j = 0; j < np1; ++j)
        for (size_t a = 0; a < nl1; ++a)
            for (size_t k = 0; k < nl2; ++k)
                if (!mfr.entry(a, k).is_zero())
                    g.set(np0 * nl2 + j * nl1 + a, j * nl2 + k,
                          scale(mfr.entry(a, k), p - 1, fp));
    // f left block: id_{P0} x B at rows (P0, L1), cols (P0, L2)
    for (size_t i = 0; i < np0; ++i)
        for (size_t a = 0; a < nl1; ++a)
            for (size_t k = 0; k < nl2; ++k)
                if (!mfr.entry(a, k).is_zero()) f.set(i * nl1 + a, i * nl2 + k, mfr.entry(a, k));
    // f right block: A x id_{L1} at rows (P0, L1), cols (P1, L1)
    for (size_t i = 0; i < np0; ++i)
        for (size_t j = 0; j < np1; ++j)
            for (size_t a = 0; a < nl1; ++a)
                if (!pres.entry(i, j).is_zero())
                    f.set(i * nl1 + a, np0 * nl2 + j * nl1 + a, pres.entry(i, j));
    return {std::move(g), std::move(f)};
}

inline GradedMatrix GradedMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    uint32_t p = 0;
    std::vector<long long> rows, cols;
    std::vector<std::tuple<size_t, size_t, std::string>> entries;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "prime:") {
            ls >> p;
        } else if (head == "rows:") {
            long long t;
            while (ls >> t) rows.push_back(t);
        } else if (head == "cols:") {
            long long t;
            while (ls >> t) cols.push_back(t);
        } else {
            size_t i = std::stoull(head), j;
            std::string colon, rest;
            ls >> j >> colon;
            require(colon == ":", errc::parse_error, "bad entry line: " + line);
            std::getline(ls, rest);
            entries.emplace_back(i, j, rest);
        }
    }
    require(p != 0 && !rows.empty() && !cols.empty(), errc::parse_error,
            "missing graded matrix header");
    Fp fp(p);
    GradedMatrix m(rows, cols, p);
    for (auto& [i, j, s] : entries) {
        long long deg = rows[i] - cols[j];
        std::vector<uint32_t> coefs(monomial_count(deg), 0);
        // terms "c*x^a*y^b*z^c" joined by " + "
        std::istringstream ts(s);
        std::string term;
        auto flush = [&](const std::string& t) {
            if (t.empty() || t == "+") return;
            long long a = 0, b = 0, c = 0;
            uint32_t coef = 1;
            size_t pos = 0;
            std::string num;
            while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) num += t[pos++];
            require(!num.empty(), errc::parse_error, "bad term: " + t);
            coef = static_cast<uint32_t>(std::stoul(num));
            while (pos < t.size()) {
                require(t[pos] == '*', errc::parse_error, "bad term: " + t);
                ++pos;
                char v = t[pos++];
                long long e = 1;
                if (pos < t.size() && t[pos] == '^') {
                    ++pos;
                    std::string en;
                    while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos])))
                        en += t[pos++];
                    e = std::stoll(en);
                }
                (v == 'x' ? a : v == 'y' ? b : c) = e;
            }
            require(a + b + c == deg, errc::parse_error, "term degree mismatch: " + t);
            coefs[static_cast<size_t>(monomial_index(a, b, deg))] = coef % p;
        };
        while (ts >> term) flush(term);
        m.set(i, j, Poly(deg, std::move(coefs)));
    }
    return m;
}

} // namespace gaeta
