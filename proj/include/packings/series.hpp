#pragma once

#include "packings/sigma_poly.hpp"
#include "packings/triangle.hpp"

#include <optional>

namespace packings {

// Truncation of U(x, sigma_1, sigma_2, ...) = 1 - sum_n x^n sum_i sigma_i
// sum_j t_{i,j}(n) (-sigma_1)^j. Coefficient n lives in the span of the
// monomials sigma_i sigma_1^j with n+1 <= i <= 2n and i + j <= 2n.
class USeries {
public:
    explicit USeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("USeries: negative order");
        coeff_.reserve(order + 1);
        coeff_.push_back(SigmaPoly::constant(1));
        TriangleStream ts;
        for (int n = 1; n <= order; ++n) {
            if (n > 1) ts.advance();
            SigmaPoly un;
            for (int i = n + 1; i <= 2 * n; ++i) {
                for (int j = 0; j <= 2 * n - i; ++j) {
                    Int c = ts.at(i, j);
                    if (c == 0) continue;
                    if (j % 2 == 0) c = -c;  // -(-1)^j t_{i,j}(n)
                    SigmaPoly::Monomial m(j, 1);
                    m.push_back(i);
                    un.add(std::move(m), std::move(c));
                }
            }
            coeff_.push_back(std::move(un));
        }
    }

    int order() const { return order_; }

    const SigmaPoly& coeff(int n) const {
        if (n < 0 || n > order_) throw std::out_of_range("USeries::coeff");
        return coeff_[n];
    }

private:
    int order_;
    std::vector<SigmaPoly> coeff_;
};

inline USeries u_series(int order) { return USeries(order); }

struct SeriesMismatch {
    int order = 0;                  // power of x
    SigmaPoly::Monomial monomial;   // first differing monomial
    Int lhs;
    Int rhs;
};

struct EquationCheck {
    bool ok = true;
    int order = 0;
    std::optional<SeriesMismatch> mismatch;
};

namespace detail {

inline std::optional<SeriesMismatch> first_mismatch(int n, const SigmaPoly& lhs, const SigmaPoly& rhs) {
    SigmaPoly diff = lhs - rhs;
    if (diff.is_zero()) return std::nullopt;
    const auto& [m, c] = *diff.terms().begin();
    (void)c;
    return SeriesMismatch{n, m, lhs.coeff(m), rhs.coeff(m)};
}

}  // namespace detail

// (1 - sigma_1 x) U(x, sigma) = U(x, shifted sigma), coefficient-wise in x.
inline EquationCheck functional_equation_check(int order) {
    USeries u(order);
    EquationCheck out;
    out.order = order;
    for (int n = 0; n <= order; ++n) {
        SigmaPoly lhs = u.coeff(n);
        if (n >= 1) lhs -= SigmaPoly::sigma(1) * u.coeff(n - 1);
        SigmaPoly rhs = shift_substitute(u.coeff(n));
        auto mm = detail::first_mismatch(n, lhs, rhs);
        if (mm) {
            out.ok = false;
            out.mismatch = mm;
            return out;
        }
    }
    return out;
}

// U(x, sigma) prod_{j=0}^{fold-1} (1 - (sigma_1 + j) x) = U(x, sigma~) with
// sigma~_k = sum_{j<=min(k,fold)} C(fold, j) sigma_{k-j}, sigma_0 = 1.
inline EquationCheck iterated_functional_equation_check(int fold, int order) {
    if (fold < 1) throw std::invalid_argument("iterated_functional_equation_check: fold must be >= 1");
    USeries u(order);
    std::vector<SigmaPoly> lhs;
    lhs.reserve(order + 1);
    for (int n = 0; n <= order; ++n) lhs.push_back(u.coeff(n));
    for (int j = 0; j < fold; ++j) {
        // multiply by (1 - (sigma_1 + j) x)
        SigmaPoly factor = SigmaPoly::sigma(1) + SigmaPoly::constant(j);
        for (int n = order; n >= 1; --n) lhs[n] -= factor * lhs[n - 1];
    }
    auto rule = [fold](int k) {
        SigmaPoly s;
        for (int j = 0; j <= std::min(k, fold); ++j) {
            Int c = binomial(fold, j);
            if (k - j == 0)
                s += SigmaPoly::constant(c);
            else
                s.add({k - j}, c);
        }
        return s;
    };
    EquationCheck out;
    out.ok = true;
    out.order = order;
    for (int n = 0; n <= order; ++n) {
        SigmaPoly rhs = u.coeff(n).substitute(rule);
        auto mm = detail::first_mismatch(n, lhs[n], rhs);
        if (mm) {
            out.ok = false;
            out.mismatch = mm;
            return out;
        }
    }
    return out;
}

// sigma_0 = 1, ..., sigma_n = prod s_i from prod_k (1 + s_k t).
inline std::vector<Int> elementary_symmetric(const std::vector<int>& cards) {
    std::vector<Int> sigma{Int(1)};
    for (int s : cards) {
        if (s < 1) throw std::invalid_argument("elementary_symmetric: cardinalities must be >= 1");
        sigma.push_back(0);
        for (size_t k = sigma.size() - 1; k >= 1; --k) sigma[k] += Int(s) * sigma[k - 1];
    }
    return sigma;
}

// Number of packings of a generic family with the given cardinalities in a
// group of order N: N^n U(1/N, sigma). Genericity is the caller's
// responsibility; a negative value can only arise from a non-generic-at-N
// input and is returned as-is for the caller to flag.
inline Int packing_count(const Int& N, const std::vector<int>& cards) {
    if (N < 1) throw std::invalid_argument("packing_count: N must be >= 1");
    int n = static_cast<int>(cards.size());
    std::vector<Int> sigma = elementary_symmetric(cards);
    Int sigma1 = n > 0 ? sigma[1] : Int(0);
    Int alpha = int_pow(N, n);  // m = 0 term
    std::vector<Int> gamma{Int(1)};
    for (int m = 1; m <= n; ++m) {
        if (m > 1) gamma = detail::gamma_next(gamma, m, sigma1);
        Int um = 0;  // eval of U_m at sigma
        for (int i = m + 1; i <= std::min(2 * m, n); ++i) um += gamma[i - (m + 1)] * sigma[i];
        alpha -= um * int_pow(N, n - m);
    }
    return alpha;
}

// Coefficients of U under a numeric specialization sigma_1 = s1,
// sigma_i = rule(i) for i >= 2, through x^order.
inline std::vector<Rational> specialize_numeric(const Rational& s1, const std::function<Rational(int)>& rule,
                                                int order) {
    std::vector<Rational> out;
    out.reserve(order + 1);
    out.push_back(1);
    std::vector<Rational> gamma{Rational(1)};
    for (int n = 1; n <= order; ++n) {
        if (n > 1) gamma = detail::gamma_next(gamma, n, s1);
        Rational c = 0;
        for (int i = n + 1; i <= 2 * n; ++i) c += gamma[i - (n + 1)] * rule(i);
        out.push_back(-c);
    }
    return out;
}

// c_n(sigma_1) = (gamma_{n+1}, ..., gamma_{2n}) for n = 1..max_n.
inline std::vector<std::vector<Rational>> gamma_vectors(const Rational& s1, int max_n) {
    if (max_n < 1) throw std::invalid_argument("gamma_vectors: max_n must be >= 1");
    std::vector<std::vector<Rational>> out;
    out.reserve(max_n);
    std::vector<Rational> gamma{Rational(1)};
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) gamma = detail::gamma_next(gamma, n, s1);
        out.push_back(gamma);
    }
    return out;
}

struct SpecializationFit {
    bool solved = false;
    std::vector<Rational> alpha;      // alpha_0..alpha_d
    std::vector<Rational> residuals;  // per n in the verification range
    bool all_zero = false;
};

// Fit constants alpha_h with [x^n] U(x, s1, P(2), P(3), ...) =
// sum_h alpha_h [x^{n+h}] U(x, s1, 1, 1, ...), exactly, then verify on the
// rest of 1..n_max.
inline SpecializationFit polynomial_specialization_relation(const std::vector<Rational>& p_coeffs,
                                                            const Rational& s1, int n_max) {
    if (p_coeffs.empty()) throw std::invalid_argument("polynomial_specialization_relation: empty polynomial");
    int d = static_cast<int>(p_coeffs.size()) - 1;
    if (n_max < d + 1) throw std::invalid_argument("polynomial_specialization_relation: range too short");
    auto p_rule = [&](int i) {
        Rational v = 0;
        Rational x(i);
        for (int t = d; t >= 0; --t) v = v * x + p_coeffs[t];
        return v;
    };
    auto one_rule = [](int) { return Rational(1); };
    std::vector<Rational> up = specialize_numeric(s1, p_rule, n_max);
    std::vector<Rational> u1 = specialize_numeric(s1, one_rule, n_max + d);

    // d+1 x d+1 linear system from n = 1..d+1
    int m = d + 1;
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(m + 1));
    for (int r = 0; r < m; ++r) {
        int n = r + 1;
        for (int h = 0; h <= d; ++h) aug[r][h] = u1[n + h];
        aug[r][m] = up[n];
    }
    SpecializationFit fit;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return fit;  // singular: report, do not guess
        std::swap(aug[col], aug[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col] / aug[col][col];
            for (int c = col; c <= m; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    fit.solved = true;
    fit.alpha.resize(m);
    for (int r = 0; r < m; ++r) fit.alpha[r] = aug[r][m] / aug[r][r];

    fit.all_zero = true;
    for (int n = 1; n <= n_max; ++n) {
        Rational pred = 0;
        for (int h = 0; h <= d; ++h) pred += fit.alpha[h] * u1[n + h];
        Rational res = up[n] - pred;
        if (res != 0) fit.all_zero = false;
        fit.residuals.push_back(std::move(res));
    }
    return fit;
}

}  // namespace packings
