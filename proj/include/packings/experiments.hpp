#pragma once

#include "packings/series.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <optional>

namespace packings {

namespace detail {

// Folded first-column state: v[i mod p] = sum over translates of t_{i,0}(n)
// mod p. The j = 0 recurrence t_{i,0}(n) = (i-2) t_{i-1,0}(n-1) +
// (i-3) t_{i-2,0}(n-1) holds for every integer i with zero extension, so the
// fold commutes with the recurrence and the state space is finite.
inline std::vector<int> fold_step(const std::vector<int>& v, int p) {
    std::vector<int> next(p, 0);
    for (int i = 0; i < p; ++i) {
        int a = ((i - 2) % p + p) % p;
        int b = ((i - 3) % p + p) % p;
        int im1 = (i - 1 + p) % p;
        int im2 = (i - 2 + p) % p;
        next[i] = static_cast<int>((static_cast<long long>(a) * v[im1] + static_cast<long long>(b) * v[im2]) % p);
    }
    return next;
}

inline std::vector<int> fold_initial(int p) {
    std::vector<int> v(p, 0);
    v[2 % p] = 1 % p;
    return v;
}

}  // namespace detail

// s(n) mod p for n = 1..max_n via the folded recurrence (O(p) state).
inline std::vector<int> s_mod_p(int p, int max_n) {
    if (p < 2) throw std::invalid_argument("s_mod_p: p must be >= 2");
    if (max_n < 1) throw std::invalid_argument("s_mod_p: max_n must be >= 1");
    std::vector<int> out;
    out.reserve(max_n);
    std::vector<int> v = detail::fold_initial(p);
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) v = detail::fold_step(v, p);
        long long s = 0;
        for (int x : v) s += x;
        out.push_back(static_cast<int>(s % p));
    }
    return out;
}

struct PeriodInfo {
    bool found = false;
    int preperiod = 0;  // number of leading states before the cycle (0-based from n = 1)
    int period = 0;
};

// Minimal eventual period of s(n) mod p, detected by repetition of the
// folded state vector rather than by matching output values.
inline PeriodInfo find_period_mod_p(int p, int max_n = 100000) {
    if (p < 2) throw std::invalid_argument("find_period_mod_p: p must be >= 2");
    std::map<std::vector<int>, int> seen;
    std::vector<int> v = detail::fold_initial(p);
    PeriodInfo info;
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) v = detail::fold_step(v, p);
        auto [it, fresh] = seen.try_emplace(v, n);
        if (!fresh) {
            info.found = true;
            info.preperiod = it->second - 1;
            info.period = n - it->second;
            return info;
        }
    }
    return info;  // undetermined within max_n
}

// Printed constants for the mod-p stabilization conjecture; exact rationals.
inline const std::vector<Rational>& modular_alpha_constants() {
    static const std::vector<Rational> alphas = {
        Rational(-1),
        Rational(2),
        Rational(0),
        Rational(1, 3),
        Rational(5, 18),
        Rational(149, 540),
        Rational(553, 2025),
        Rational(1849741, 6804000),
        Rational(Int("775167119"), Int("2857680000")),
        Rational(Int("325214957371"), Int("1200225600000")),
    };
    return alphas;
}

struct ModularAlphaEntry {
    int m = 0;       // power of x
    int lhs = 0;     // computed coefficient mod p
    int rhs = 0;     // conjectured coefficient mod p
    bool agree = false;
};

struct ModularAlphaReport {
    int p = 0;
    bool all_agree = true;
    std::vector<ModularAlphaEntry> entries;
};

// (1 + x^{p-1}) sum s(n) x^n == x + sum_{n=0}^{p-2} alpha_n x^{p-n} (mod p):
// compares low coefficients against the alpha table and checks that all
// higher coefficients of the left side vanish (stabilization).
inline ModularAlphaReport modular_alpha_check(int p, int n_max = 0) {
    const auto& alphas = modular_alpha_constants();
    if (p < 2 || p - 1 > static_cast<int>(alphas.size()))
        throw std::invalid_argument("modular_alpha_check: need alpha_0..alpha_{p-2}; p too large");
    if (n_max <= 0) n_max = 4 * p + 20;
    auto mod_value = [&](const Rational& r) {
        Int num = numerator(r) % p;
        Int den = denominator(r) % p;
        if (den == 0) throw std::invalid_argument("modular_alpha_check: non-invertible denominator mod p");
        // Fermat inverse
        Int inv = 1, base = (den % p + p) % p;
        for (int e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        Int v = ((num % p + p) % p) * inv % p;
        return static_cast<int>(v);
    };
    std::vector<int> s = s_mod_p(p, n_max);
    ModularAlphaReport rep;
    rep.p = p;
    auto push = [&](int m, int lhs, int rhs) {
        ModularAlphaEntry e;
        e.m = m;
        e.lhs = lhs;
        e.rhs = rhs;
        e.agree = (lhs == rhs);
        if (!e.agree) rep.all_agree = false;
        rep.entries.push_back(e);
    };
    // x^m for 2 <= m <= p-1: s(m) == alpha_{p-m}
    for (int m = 2; m <= p - 1; ++m) push(m, s[m - 1], mod_value(alphas[p - m]));
    // x^p: s(p) + s(1) == alpha_0
    if (p >= 2) push(p, (s[p - 1] + s[0]) % p, mod_value(alphas[0]));
    // beyond the polynomial: coefficients of the left side vanish
    for (int m = p + 1; m <= n_max; ++m) push(m, (s[m - 1] + s[m - p]) % p, 0);
    return rep;
}

struct AsymptoticRow {
    int n = 0;
    std::string r;           // s(n) e^n (1-log2)^{n-1/2} / n^{n-1}
    std::string dev0;        // r - 1
    std::string dev1;        // r - 1 - A_1(1-log2)/n
    long long argmax_i = 0;  // m_n with t_{m_n,0}(n) maximal
    std::string argmax_ratio;  // m_n / (n / (2(1-log2)))
    std::string peak_ratio;    // t_{m_n,0}(n) sqrt(n) / s(n)
};

struct AsymptoticReport {
    int precision_bits = 256;
    std::vector<AsymptoticRow> rows;
};

namespace detail {

template <unsigned Bits>
AsymptoticReport asymptotic_report_impl(const std::vector<int>& ns) {
    using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>;
    int n_max = 0;
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("asymptotic_report: n must be >= 1");
        n_max = std::max(n_max, n);
    }
    std::vector<int> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const F c = 1 - log(F(2));
    const F a1 = F(11) / 24 - c / 12;  // first correction polynomial at x = 1-log2
    AsymptoticReport rep;
    rep.precision_bits = static_cast<int>(Bits);

    std::vector<Int> gamma{Int(1)};
    size_t next = 0;
    for (int n = 1; n <= n_max && next < sorted.size(); ++n) {
        if (n > 1) gamma = packings::detail::gamma_next(gamma, n, Int(0));
        if (n != sorted[next]) continue;
        ++next;
        Int s = 0;
        size_t arg = 0;
        for (size_t t = 0; t < gamma.size(); ++t) {
            s += gamma[t];
            if (gamma[t] > gamma[arg]) arg = t;
        }
        long long m_n = static_cast<long long>(n) + 1 + static_cast<long long>(arg);
        F log_r = log(F(s)) + n + (F(n) - F(1) / 2) * log(c) - (n - 1) * log(F(n));
        F r = exp(log_r);
        AsymptoticRow row;
        row.n = n;
        auto str = [](const F& v) {
            std::ostringstream os;
            os << std::setprecision(40) << v;
            return os.str();
        };
        row.r = str(r);
        row.dev0 = str(r - 1);
        row.dev1 = str(r - 1 - a1 / n);
        row.argmax_i = m_n;
        row.argmax_ratio = str(F(m_n) * 2 * c / n);
        row.peak_ratio = str(exp(log(F(gamma[arg])) + log(F(n)) / 2 - log(F(s))));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace detail

// Big-integer s(n) with ratios evaluated in the log domain at the requested
// float precision. Deterministic for a fixed precision setting.
inline AsymptoticReport asymptotic_report(const std::vector<int>& ns, int precision_bits = 256) {
    switch (precision_bits) {
        case 64: return detail::asymptotic_report_impl<64>(ns);
        case 128: return detail::asymptotic_report_impl<128>(ns);
        case 256: return detail::asymptotic_report_impl<256>(ns);
        case 512: return detail::asymptotic_report_impl<512>(ns);
        default:
            throw std::invalid_argument("asymptotic_report: supported precisions are 64, 128, 256, 512 bits");
    }
}

struct OdeMismatch {
    int x_deg = 0;
    int z_deg = 0;
    int y_deg = 0;
    Int lhs;
    Int rhs;
};

struct OdeCheck {
    bool ok = true;
    std::optional<OdeMismatch> mismatch;
};

// f(z) = U(x, -y, -z^{2+r}, -z^{3+r}, ...) - 1 satisfies
//   f = x z (z^{r+1} + (y - (1+z)(1+r)) f + z (1+z) df/dz),
// checked coefficient-wise through x^{M_x} and z^{M_z} with exact integers.
inline OdeCheck ode_check_power_spec(int r, int mx, int mz) {
    if (r < 0 || mx < 1 || mz < 0) throw std::invalid_argument("ode_check_power_spec: bad arguments");
    using Layer = std::map<std::pair<int, int>, Int>;  // (z-degree, y-degree) -> coeff
    auto add = [](Layer& layer, int zd, int yd, const Int& v) {
        if (v == 0) return;
        auto [it, fresh] = layer.try_emplace({zd, yd}, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) layer.erase(it);
        }
    };

    // f by x-degree; [x^n]f = sum_i z^{i+r} sum_j t_{i,j}(n) y^j
    std::vector<Layer> f(mx + 1);
    TriangleStream ts;
    for (int n = 1; n <= mx; ++n) {
        if (n > 1) ts.advance();
        for (int i = n + 1; i <= 2 * n; ++i)
            for (int j = 0; j <= 2 * n - i; ++j) add(f[n], i + r, j, ts.at(i, j));
    }

    std::vector<Layer> rhs(mx + 1);
    add(rhs[1], r + 2, 0, 1);  // x z * z^{r+1}
    for (int n = 1; n < mx; ++n) {
        for (const auto& [zy, c] : f[n]) {
            auto [zd, yd] = zy;
            add(rhs[n + 1], zd + 1, yd + 1, c);                  // x z * y f
            add(rhs[n + 1], zd + 1, yd, -Int(1 + r) * c);        // x z * -(1+r) f
            add(rhs[n + 1], zd + 2, yd, -Int(1 + r) * c);        // x z * -(1+r) z f
            add(rhs[n + 1], zd + 1, yd, Int(zd) * c);            // x z * z f'
            add(rhs[n + 1], zd + 2, yd, Int(zd) * c);            // x z * z^2 f'
        }
    }

    OdeCheck out;
    for (int n = 1; n <= mx; ++n) {
        Layer diff = f[n];
        for (const auto& [zy, c] : rhs[n]) add(diff, zy.first, zy.second, -c);
        for (const auto& [zy, c] : diff) {
            if (zy.first > mz) continue;  // outside the z window
            out.ok = false;
            auto itf = f[n].find(zy);
            auto itr = rhs[n].find(zy);
            out.mismatch = OdeMismatch{n, zy.first, zy.second, itf == f[n].end() ? Int(0) : itf->second,
                                       itr == rhs[n].end() ? Int(0) : itr->second};
            return out;
        }
    }
    return out;
}

// Dispatcher over the five displayed specialization families. Only the power
// specialization (family 1) is implemented; the remaining four are data
// entry on the same mechanism and stay unimplemented placeholders.
inline OdeCheck ode_check_family(int family, int r, int mx, int mz) {
    if (family == 1) return ode_check_power_spec(r, mx, mz);
    if (family >= 2 && family <= 5)
        throw std::logic_error("ode_check_family: family " + std::to_string(family) +
                               " is not implemented; only the power specialization (1) is checked");
    throw std::invalid_argument("ode_check_family: family must be in 1..5");
}

// Error-term exploration for the second mod-p conjecture: for small n the
// printed alpha_n minus the series sum_k k^{k-n}/k! (2/e^2)^k, rescaled by
// (1-log2) s(n+1) (-1)^{n+1}, is compared against 1 - ((1-log2)/12)/n^2.
// Report only; nothing is asserted.
struct EpsilonRow {
    int n = 0;
    std::string scaled_epsilon;
    std::string reference;
};

inline std::vector<EpsilonRow> epsilon_report(int n_max = 9, int precision_bits = 256) {
    if (precision_bits != 256) throw std::invalid_argument("epsilon_report: fixed at 256 bits");
    using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;
    const auto& alphas = modular_alpha_constants();
    n_max = std::min<int>(n_max, static_cast<int>(alphas.size()) - 1);
    const F c = 1 - log(F(2));
    const F w = 2 / exp(F(2));
    std::vector<Int> s = s_sequence(n_max + 1);
    std::vector<EpsilonRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        F tail = 0;
        F wk = 1;
        for (int k = 1; k <= 700; ++k) {
            wk *= w;
            // k^{k-n}/k!
            F term = exp((k - n) * log(F(k)) - lgamma(F(k + 1)));
            tail += term * wk;
        }
        F alpha = F(numerator(alphas[n])) / F(denominator(alphas[n]));
        F eps = alpha - tail;
        F scaled = eps * F(s[n]) * c;  // s(n+1) is s[n] (1-based sequence)
        if (n % 2 == 0) scaled = -scaled;
        F ref = 1 - (c / 12) / (F(n) * n);
        std::ostringstream o1, o2;
        o1 << std::setprecision(30) << scaled;
        o2 << std::setprecision(30) << ref;
        rows.push_back({n, o1.str(), o2.str()});
    }
    return rows;
}

}  // namespace packings
