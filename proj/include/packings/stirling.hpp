#pragma once

#include "packings/common.hpp"

namespace packings {

// Signed Stirling numbers of the first kind and Stirling numbers of the
// second kind, tabulated up to a bound.
class StirlingTables {
public:
    explicit StirlingTables(int max_n) : max_n_(max_n) {
        if (max_n < 0) throw std::invalid_argument("StirlingTables: negative bound");
        s1_.resize(max_n + 1);
        s2_.resize(max_n + 1);
        s1_[0] = {Int(1)};
        s2_[0] = {Int(1)};
        for (int n = 1; n <= max_n; ++n) {
            s1_[n].assign(n + 1, 0);
            s2_[n].assign(n + 1, 0);
            for (int k = 1; k <= n; ++k) {
                // x(x-1)...(x-n+1): S1(n,k) = S1(n-1,k-1) - (n-1) S1(n-1,k)
                s1_[n][k] = s1_[n - 1][k - 1] - Int(n - 1) * at(s1_[n - 1], k);
                s2_[n][k] = at(s2_[n - 1], k - 1) + Int(k) * at(s2_[n - 1], k);
            }
        }
    }

    // sum_k S1(n,k) x^k = x(x-1)...(x-n+1)
    Int s1(int n, int k) const {
        check(n);
        if (k < 0 || k > n) return 0;
        return s1_[n][k];
    }

    Int s2(int n, int k) const {
        check(n);
        if (k < 0 || k > n) return 0;
        return s2_[n][k];
    }

    Int bell(int n) const {
        check(n);
        Int b = 0;
        for (const Int& v : s2_[n]) b += v;
        return b;
    }

    int max_n() const { return max_n_; }

private:
    static Int at(const std::vector<Int>& row, int k) {
        return (k < 0 || k >= static_cast<int>(row.size())) ? Int(0) : row[k];
    }
    void check(int n) const {
        if (n < 0 || n > max_n_) throw std::out_of_range("StirlingTables: n out of range");
    }

    int max_n_;
    std::vector<std::vector<Int>> s1_;
    std::vector<std::vector<Int>> s2_;
};

}  // namespace packings
