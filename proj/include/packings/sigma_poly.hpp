#pragma once

#include "packings/common.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace packings {

// Sparse polynomial in sigma_1, sigma_2, ... over Int. A monomial is the
// sorted multiset of its sigma indices; the empty multiset is the constant
// term. Graded degree of a monomial is the sum of its indices.
class SigmaPoly {
public:
    using Monomial = std::vector<int>;

    SigmaPoly() = default;

    static SigmaPoly constant(Int c) {
        SigmaPoly p;
        p.add({}, std::move(c));
        return p;
    }

    static SigmaPoly sigma(int i) {
        if (i < 1) throw std::invalid_argument("SigmaPoly::sigma: index must be >= 1");
        SigmaPoly p;
        p.add({i}, 1);
        return p;
    }

    static SigmaPoly term(Monomial m, Int c) {
        SigmaPoly p;
        p.add(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coeff(const Monomial& m) const {
        Monomial k = m;
        std::sort(k.begin(), k.end());
        auto it = terms_.find(k);
        return it == terms_.end() ? Int(0) : it->second;
    }

    int graded_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int i : m) s += i;
            d = std::max(d, s);
        }
        return d;
    }

    void add(Monomial m, Int c) {
        if (c == 0) return;
        std::sort(m.begin(), m.end());
        auto [it, fresh] = terms_.try_emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SigmaPoly& operator+=(const SigmaPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }

    SigmaPoly& operator-=(const SigmaPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }

    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
    friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }

    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
        SigmaPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                r.add(std::move(m), ca * cb);
            }
        }
        return r;
    }

    SigmaPoly& operator*=(const SigmaPoly& o) { return *this = *this * o; }

    friend SigmaPoly operator*(const Int& c, const SigmaPoly& p) {
        SigmaPoly r;
        for (const auto& [m, v] : p.terms_) r.add(m, c * v);
        return r;
    }

    friend SigmaPoly operator-(const SigmaPoly& p) { return Int(-1) * p; }

    bool operator==(const SigmaPoly& o) const { return terms_ == o.terms_; }

    // Replace every sigma_i by rule(i), expanding exactly.
    SigmaPoly substitute(const std::function<SigmaPoly(int)>& rule) const {
        SigmaPoly out;
        for (const auto& [m, c] : terms_) {
            SigmaPoly prod = SigmaPoly::constant(c);
            for (int i : m) prod *= rule(i);
            out += prod;
        }
        return out;
    }

    // Evaluate with sigma_i |-> value(i), in any ring constructible from Int.
    template <class R>
    R evaluate(const std::function<R(int)>& value) const {
        R acc(0);
        for (const auto& [m, c] : terms_) {
            R t(c);
            for (int i : m) t *= value(i);
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool printed = false;
            if (a != 1 || m.empty()) {
                os << a.str();
                printed = true;
            }
            int run = 0;
            for (size_t t = 0; t <= m.size(); ++t) {
                if (t < m.size() && (t == 0 || m[t] == m[t - 1])) {
                    ++run;
                    continue;
                }
                if (run > 0) {
                    if (printed) os << "*";
                    os << "s" << m[t - 1];
                    if (run > 1) os << "^" << run;
                    printed = true;
                }
                run = 1;
            }
            (void)printed;
        }
        return os.str();
    }

private:
    std::map<Monomial, Int> terms_;
};

// sigma_i |-> sigma_{i-1} + sigma_i with the convention sigma_0 = 1.
inline SigmaPoly shift_substitute(const SigmaPoly& p) {
    return p.substitute([](int i) {
        SigmaPoly s = SigmaPoly::sigma(i);
        if (i == 1)
            s += SigmaPoly::constant(1);
        else
            s += SigmaPoly::sigma(i - 1);
        return s;
    });
}

}  // namespace packings
