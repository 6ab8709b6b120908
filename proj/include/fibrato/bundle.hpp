#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "fibrato/scalar.hpp"

namespace fibrato {

// Split vector bundle on the projective line: the multiset of line-bundle
// degrees, kept sorted descending. The rank-0 bundle is legal.
struct SplitBundle {
    std::vector<int> d;

    SplitBundle() = default;
    explicit SplitBundle(std::vector<int> degs) : d(std::move(degs)) {
        std::sort(d.begin(), d.end(), std::greater<int>());
    }
    static SplitBundle line(int deg) { return SplitBundle({deg}); }
    static SplitBundle power(int deg, int n) { return SplitBundle(std::vector<int>(n, deg)); }

    int rank() const { return static_cast<int>(d.size()); }
    int degree() const { return std::accumulate(d.begin(), d.end(), 0); }

    friend bool operator==(const SplitBundle& a, const SplitBundle& b) { return a.d == b.d; }
    friend bool operator!=(const SplitBundle& a, const SplitBundle& b) { return !(a.d == b.d); }

    std::string str() const {
        if (d.empty()) return "0";
        std::map<int, int, std::greater<int>> mult;
        for (int x : d) mult[x]++;
        std::ostringstream os;
        bool first = true;
        for (auto [deg, n] : mult) {
            if (!first) os << " + ";
            os << "O(" << deg << ")";
            if (n > 1) os << "^" << n;
            first = false;
        }
        return os.str();
    }
};

inline SplitBundle twist(const SplitBundle& b, int m) {
    std::vector<int> d = b.d;
    for (int& x : d) x += m;
    return SplitBundle(d);
}

inline SplitBundle dual(const SplitBundle& b) {
    std::vector<int> d = b.d;
    for (int& x : d) x = -x;
    return SplitBundle(d);
}

inline SplitBundle direct_sum(const SplitBundle& a, const SplitBundle& b) {
    std::vector<int> d = a.d;
    d.insert(d.end(), b.d.begin(), b.d.end());
    return SplitBundle(d);
}

inline SplitBundle tensor(const SplitBundle& a, const SplitBundle& b) {
    std::vector<int> d;
    for (int x : a.d)
        for (int y : b.d) d.push_back(x + y);
    return SplitBundle(d);
}

inline SplitBundle det(const SplitBundle& b) { return SplitBundle::line(b.degree()); }

// multisets of {0..n-1} of size k, nondecreasing; index order is the basis
// order used for symmetric powers everywhere
inline std::vector<std::vector<int>> multisets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) { out.push_back({}); return out; }
    if (n == 0) return out;
    std::vector<int> cur(k, 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
    }
    return out;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k > n || k < 0) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline SplitBundle sym_power(const SplitBundle& b, int n) {
    if (n < 0) throw math_error("negative symmetric power");
    std::vector<int> d;
    for (const auto& ms : multisets(b.rank(), n)) {
        int s = 0;
        for (int i : ms) s += b.d[i];
        d.push_back(s);
    }
    return SplitBundle(d);
}

inline SplitBundle wedge_power(const SplitBundle& b, int k) {
    if (k < 0 || k > b.rank()) throw math_error("wedge power outside 0..rank");
    std::vector<int> d;
    for (const auto& ss : subsets(b.rank(), k)) {
        int s = 0;
        for (int i : ss) s += b.d[i];
        d.push_back(s);
    }
    return SplitBundle(d);
}

inline int h0(const SplitBundle& b, int m = 0) {
    int s = 0;
    for (int x : b.d) s += std::max(x + m + 1, 0);
    return s;
}

inline int h1(const SplitBundle& b, int m = 0) {
    int s = 0;
    for (int x : b.d) s += std::max(-(x + m) - 1, 0);
    return s;
}

// Recover the degree multiset from m -> h0(b, m). The profile determines the
// multiset through its second differences: #\{degrees == -m\} jumps there.
inline SplitBundle splitting_from_h0_profile(const std::map<int, int>& profile, int rank) {
    if (profile.empty()) throw math_error("empty cohomology profile");
    std::vector<int> degs;
    // delta(m) = #{e : e + m >= 0}; needs consecutive twists
    int prev_m = profile.begin()->first;
    int prev_h = profile.begin()->second;
    if (prev_h != 0) throw math_error("profile window does not reach the vanishing range");
    std::map<int, int> delta;
    for (auto it = std::next(profile.begin()); it != profile.end(); ++it) {
        if (it->first != prev_m + 1) throw math_error("profile window has gaps");
        delta[it->first] = it->second - prev_h;
        prev_m = it->first;
        prev_h = it->second;
    }
    int prev_d = 0;
    for (const auto& [m, dm] : delta) {
        int jump = dm - prev_d;
        if (jump < 0) throw math_error("inconsistent cohomology profile");
        for (int i = 0; i < jump; ++i) degs.push_back(-m);
        prev_d = dm;
    }
    if (prev_d != rank || static_cast<int>(degs.size()) != rank)
        throw math_error("cohomology profile does not match the requested rank");
    SplitBundle out{std::vector<int>(degs)};
    // confirm the whole profile, not only the jumps
    for (const auto& [m, h] : profile)
        if (h0(out, m) != h) throw math_error("cohomology profile mismatch after reconstruction");
    return out;
}

}  // namespace fibrato
