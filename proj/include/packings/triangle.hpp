#pragma once

#include "packings/stirling.hpp"

#include <map>

namespace packings {

// One level of the triangular array: the strictly positive integers
// t_{i,j}(n) for n+1 <= i <= 2n, 0 <= j <= 2n-i, zero outside. Levels are
// chained by
//   t_{i,j}(n) = (i-2) t_{i-1,j}(n-1) + t_{i-1,j-1}(n-1) + (i-3) t_{i-2,j}(n-1)
// from the seed t_{2,0}(1) = 1.
class Triangle {
public:
    explicit Triangle(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Triangle: n must be >= 1");
        rows_.assign(1, {Int(1)});  // T(1)
        for (int level = 2; level <= n; ++level) rows_ = next_level(rows_, level);
    }

    int n() const { return n_; }

    // Zero outside the stored range.
    Int at(int i, int j) const {
        if (i < n_ + 1 || i > 2 * n_ || j < 0 || j > 2 * n_ - i) return 0;
        return rows_[i - (n_ + 1)][j];
    }

    // Row i as the list t_{i,0}(n) .. t_{i,2n-i}(n).
    const std::vector<Int>& row(int i) const {
        if (i < n_ + 1 || i > 2 * n_) throw std::out_of_range("Triangle::row: index out of range");
        return rows_[i - (n_ + 1)];
    }

    std::vector<Int> first_column() const {
        std::vector<Int> col;
        col.reserve(rows_.size());
        for (const auto& r : rows_) col.push_back(r[0]);
        return col;
    }

    Int sum_all() const {
        Int s = 0;
        for (const auto& r : rows_)
            for (const Int& v : r) s += v;
        return s;
    }

    size_t entry_count() const {
        size_t c = 0;
        for (const auto& r : rows_) c += r.size();
        return c;
    }

    static std::vector<std::vector<Int>> next_level(const std::vector<std::vector<Int>>& prev, int level) {
        // prev holds T(level-1): rows i = level .. 2(level-1)
        auto tprev = [&](int i, int j) -> Int {
            if (i < level || i > 2 * (level - 1) || j < 0 || j > 2 * (level - 1) - i) return 0;
            return prev[i - level][j];
        };
        std::vector<std::vector<Int>> rows;
        rows.reserve(level);
        for (int i = level + 1; i <= 2 * level; ++i) {
            std::vector<Int> row(2 * level - i + 1);
            for (int j = 0; j <= 2 * level - i; ++j)
                row[j] = Int(i - 2) * tprev(i - 1, j) + tprev(i - 1, j - 1) + Int(i - 3) * tprev(i - 2, j);
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    int n_;
    std::vector<std::vector<Int>> rows_;  // rows_[r] = row i = n+1+r
};

inline Triangle triangle(int n) { return Triangle(n); }

// Rolling two-level iterator over T(1), T(2), ...; holds only the current
// level, so streaming to large n stays linear in memory.
class TriangleStream {
public:
    TriangleStream() : level_(1), rows_(1, {Int(1)}) {}

    int level() const { return level_; }

    void advance() {
        rows_ = Triangle::next_level(rows_, level_ + 1);
        ++level_;
    }

    Int at(int i, int j) const {
        if (i < level_ + 1 || i > 2 * level_ || j < 0 || j > 2 * level_ - i) return 0;
        return rows_[i - (level_ + 1)][j];
    }

    const std::vector<std::vector<Int>>& rows() const { return rows_; }

private:
    int level_;
    std::vector<std::vector<Int>> rows_;
};

// sum_k t_{n+1,k}(n) x^{k+1} = x(x+1)...(x+n-1), checked exactly.
inline bool first_row_stirling_check(int n) {
    Triangle t(n);
    const std::vector<Int>& row = t.row(n + 1);
    // expand the rising factorial independently
    std::vector<Int> poly{Int(1)};  // coefficients of prod_{j=0}^{n-1} (x+j), degree offset by the leading x
    for (int j = 0; j < n; ++j) {
        std::vector<Int> next(poly.size() + 1);
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];       // * x
            next[d] += poly[d] * Int(j);  // * j
        }
        poly = std::move(next);
    }
    // poly[d] is the coefficient of x^d in prod (x+j); the identity says
    // poly[k+1] = t_{n+1,k}(n) and poly[0] = 0
    if (poly[0] != 0 && n >= 1) return false;
    if (poly.size() != row.size() + 1) return false;
    for (size_t k = 0; k < row.size(); ++k)
        if (poly[k + 1] != row[k]) return false;
    return true;
}

namespace detail {

// gamma_i(sigma1, n) = sum_j t_{i,j}(n) (-sigma1)^j, rolled level by level:
// gamma_i(n) = (i-2-sigma1) gamma_{i-1}(n-1) + (i-3) gamma_{i-2}(n-1).
template <class Ring>
std::vector<Ring> gamma_next(const std::vector<Ring>& prev, int level, const Ring& sigma1) {
    // prev holds gamma_{level}(level-1) .. gamma_{2 level - 2}(level-1)
    auto p = [&](int idx) -> Ring {  // idx relative to level: gamma_{level + idx}
        if (idx < 0 || idx >= static_cast<int>(prev.size())) return Ring(0);
        return prev[idx];
    };
    std::vector<Ring> next(level);
    for (int t = 0; t < level; ++t) {
        int i = level + 1 + t;
        next[t] = (Ring(i - 2) - sigma1) * p(t) + Ring(i - 3) * p(t - 1);
    }
    return next;
}

}  // namespace detail

// s(n) = sum_i t_{i,0}(n): first-column sums, via the rolling gamma vector
// at sigma1 = 0.
inline std::vector<Int> s_sequence(int max_n) {
    if (max_n < 1) throw std::invalid_argument("s_sequence: max_n must be >= 1");
    std::vector<Int> out;
    out.reserve(max_n);
    std::vector<Int> gamma{Int(1)};
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) gamma = detail::gamma_next(gamma, n, Int(0));
        Int s = 0;
        for (const Int& v : gamma) s += v;
        out.push_back(std::move(s));
    }
    return out;
}

// S(n) = sum of all entries of T(n), via the gamma vector at sigma1 = -1.
inline std::vector<Int> S_sequence(int max_n) {
    if (max_n < 1) throw std::invalid_argument("S_sequence: max_n must be >= 1");
    std::vector<Int> out;
    out.reserve(max_n);
    std::vector<Int> gamma{Int(1)};
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) gamma = detail::gamma_next(gamma, n, Int(-1));
        Int s = 0;
        for (const Int& v : gamma) s += v;
        out.push_back(std::move(s));
    }
    return out;
}

// Independent slow paths straight off the tables, kept for cross-validation.
inline std::vector<Int> s_sequence_from_tables(int max_n) {
    std::vector<Int> out;
    TriangleStream ts;
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) ts.advance();
        Int s = 0;
        for (const auto& r : ts.rows()) s += r[0];
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Int> S_sequence_from_tables(int max_n) {
    std::vector<Int> out;
    TriangleStream ts;
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) ts.advance();
        Int s = 0;
        for (const auto& r : ts.rows())
            for (const Int& v : r) s += v;
        out.push_back(std::move(s));
    }
    return out;
}

// q_i(x,y) = sum_{n,j} t_{i,j}(n) x^n y^j, from its own two-term recurrence
// q_i = x((i-2+y) q_{i-1} + (i-3) q_{i-2}), q_1 = 0, q_2 = x.
class QPolynomial {
public:
    // coeff(n, j); support is ceil(i/2) <= n <= i-1, 0 <= j <= n-1
    Int coeff(int n, int j) const {
        auto it = c_.find({n, j});
        return it == c_.end() ? Int(0) : it->second;
    }

    const std::map<std::pair<int, int>, Int>& terms() const { return c_; }

    Rational specialize(const Rational& x0, const Rational& y0) const {
        Rational acc = 0;
        for (const auto& [nj, v] : c_) {
            Rational term(v);
            for (int t = 0; t < nj.first; ++t) term *= x0;
            for (int t = 0; t < nj.second; ++t) term *= y0;
            acc += term;
        }
        return acc;
    }

    static QPolynomial q(int i) {
        if (i < 1) throw std::invalid_argument("QPolynomial: i must be >= 1");
        QPolynomial q1, q2;
        // q_1 = 0; q_2 = x
        q2.c_[{1, 0}] = 1;
        if (i == 1) return q1;
        if (i == 2) return q2;
        for (int m = 3; m <= i; ++m) {
            QPolynomial next;
            for (const auto& [nj, v] : q2.c_) {
                next.add(nj.first + 1, nj.second, v * Int(m - 2));  // x(i-2) q_{i-1}
                next.add(nj.first + 1, nj.second + 1, v);           // x y q_{i-1}
            }
            for (const auto& [nj, v] : q1.c_) next.add(nj.first + 1, nj.second, v * Int(m - 3));
            q1 = std::move(q2);
            q2 = std::move(next);
        }
        return q2;
    }

private:
    void add(int n, int j, const Int& v) {
        if (v == 0) return;
        auto [it, fresh] = c_.try_emplace({n, j}, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<std::pair<int, int>, Int> c_;
};

inline QPolynomial q_polynomial(int i) { return QPolynomial::q(i); }

inline Rational q_specialize(int i, const Rational& x0, const Rational& y0) {
    return QPolynomial::q(i).specialize(x0, y0);
}

// Weighted sums over the full (finite) support of t_{i,j}(.) for fixed i.
enum class WeightedKind { A, B, C, D, E, F };

namespace detail {

// Collect t_{i,j}(n) for fixed i over the support ceil(i/2) <= n <= i-1.
inline std::vector<std::pair<std::pair<int, int>, Int>> column_support(int i) {
    std::vector<std::pair<std::pair<int, int>, Int>> out;
    TriangleStream ts;
    int n_lo = (i + 1) / 2, n_hi = i - 1;
    while (ts.level() < n_lo) ts.advance();
    for (int n = n_lo; n <= n_hi; ++n) {
        if (ts.level() < n) ts.advance();
        for (int j = 0; j <= 2 * n - i; ++j) {
            Int v = ts.at(i, j);
            if (v != 0) out.push_back({{n, j}, std::move(v)});
        }
    }
    return out;
}

}  // namespace detail

inline Rational weighted_sum(WeightedKind kind, int i) {
    if (i < 2) throw std::invalid_argument("weighted_sum: i must be >= 2");
    Rational acc = 0;
    for (const auto& [nj, t] : detail::column_support(i)) {
        auto [n, j] = nj;
        Rational term(t);
        switch (kind) {
            case WeightedKind::A:  // (n-j) (-2)^j
                term *= Rational(n - j);
                term *= Rational(int_pow(Int(-2), j));
                break;
            case WeightedKind::B: {  // (n-1-j) 2^n (-3/2)^j / 4
                term *= Rational(n - 1 - j);
                term *= Rational(int_pow(Int(2), n));
                Rational r(-3, 2);
                for (int u = 0; u < j; ++u) term *= r;
                term /= 4;
                break;
            }
            case WeightedKind::C:  // (n-1-j)! (-1)^j
                term *= Rational(factorial(n - 1 - j));
                if (j % 2) term = -term;
                break;
            case WeightedKind::D:  // (n-1-j)! (-1)^n, total sign (-1)^{i+1}
                term *= Rational(factorial(n - 1 - j));
                if (n % 2) term = -term;
                break;
            case WeightedKind::E:  // (-1)^j / (n-1-j)!
                term /= Rational(factorial(n - 1 - j));
                if (j % 2) term = -term;
                break;
            case WeightedKind::F:  // first column only: t_{i,0}(n)/(n-1)!, total (i-1)!
                if (j != 0) continue;
                term /= Rational(factorial(n - 1));
                break;
        }
        acc += term;
    }
    if (kind == WeightedKind::D && i % 2 == 0) acc = -acc;  // (-1)^{i+1}
    if (kind == WeightedKind::F) acc *= Rational(factorial(i - 1));
    return acc;
}

// s_i = sum C(n-j+k-1, k) t_{i,j}(n) (-1)^j
inline Int weighted_sum_binomial(int k, int i) {
    if (i < 2 || k < 0) throw std::invalid_argument("weighted_sum_binomial: bad arguments");
    Int acc = 0;
    for (const auto& [nj, t] : detail::column_support(i)) {
        auto [n, j] = nj;
        Int term = binomial(n - j + k - 1, k) * t;
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

// (-1)^i k! (i-1+k) sum t_{i,j}(n) (-1)^j / (n+k-j)!  -- identically 1
inline Rational weighted_sum_factorial(int k, int i) {
    if (i < 2 || k < 0) throw std::invalid_argument("weighted_sum_factorial: bad arguments");
    Rational acc = 0;
    for (const auto& [nj, t] : detail::column_support(i)) {
        auto [n, j] = nj;
        Rational term(t);
        term /= Rational(factorial(n + k - j));
        if (j % 2) term = -term;
        acc += term;
    }
    acc *= Rational(factorial(k)) * Rational(i - 1 + k);
    if (i % 2) acc = -acc;
    return acc;
}

}  // namespace packings
