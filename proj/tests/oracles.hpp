#pragma once

// Test-only reference implementations. They share nothing with the library's
// algorithms beyond the basic value types, and favour obviousness over speed.

#include <algorithm>
#include <functional>
#include <vector>

#include "barcount/core.hpp"
#include "barcount/juggling.hpp"

namespace oracle {

using barcount::Entry;

/// Every y in the box [0, x_1] x ... x [0, x_n] satisfying the three overlay
/// conditions, lexicographically decreasing.
inline std::vector<std::vector<Entry>> overlays(const std::vector<Entry>& x) {
    std::vector<std::vector<Entry>> out;
    std::vector<Entry> y(x.size(), 0);
    std::function<void(std::size_t)> box = [&](std::size_t pos) {
        if (pos == x.size()) {
            bool ok = y[0] == x[0];
            for (std::size_t k = 1; k < y.size(); ++k) ok = ok && y[k] <= y[k - 1] && y[k] <= x[k];
            if (ok) out.push_back(y);
            return;
        }
        for (Entry v = 0; v <= x[pos]; ++v) {
            y[pos] = v;
            box(pos + 1);
        }
    };
    if (!x.empty()) box(0);
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// All multiplicity vectors over the intervals of [1, n+1), each bounded by the
/// minimum of beta over the interval, filtered by their Betti curve. No pruning.
inline std::vector<barcount::Barcode> barcodes(const std::vector<Entry>& beta) {
    const int n = static_cast<int>(beta.size());
    std::vector<barcount::Interval> intervals;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) intervals.emplace_back(i, j);
    std::vector<Entry> mult(intervals.size(), 0);
    std::vector<barcount::Barcode> out;
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
        if (idx == intervals.size()) {
            std::vector<Entry> curve(beta.size(), 0);
            for (std::size_t k = 0; k < intervals.size(); ++k)
                for (int c = intervals[k].birth; c < intervals[k].death; ++c) curve[c - 1] += mult[k];
            if (curve != beta) return;
            barcount::Barcode bc;
            for (std::size_t k = 0; k < intervals.size(); ++k) bc.add(intervals[k], mult[k]);
            out.push_back(bc);
            return;
        }
        Entry bound = beta[intervals[idx].birth - 1];
        for (int c = intervals[idx].birth; c < intervals[idx].death; ++c) bound = std::min(bound, beta[c - 1]);
        for (Entry m = 0; m <= bound; ++m) {
            mult[idx] = m;
            assign(idx + 1);
        }
        mult[idx] = 0;
    };
    assign(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of multisets of roots e_i - e_j (1 <= i < j <= n+1) whose simple-root
/// coordinates equal z, by trying every multiplicity vector.
inline std::size_t kostant(const std::vector<Entry>& z) {
    const int n = static_cast<int>(z.size());
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) roots.emplace_back(i, j);
    Entry top = 0;
    for (Entry v : z) top = std::max(top, v);
    std::vector<Entry> mult(roots.size(), 0);
    std::size_t found = 0;
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
        if (idx == roots.size()) {
            std::vector<Entry> sum(z.size(), 0);
            for (std::size_t k = 0; k < roots.size(); ++k)
                for (int c = roots[k].first; c < roots[k].second; ++c) sum[c - 1] += mult[k];
            found += sum == z ? 1 : 0;
            return;
        }
        for (Entry m = 0; m <= top; ++m) {
            mult[idx] = m;
            assign(idx + 1);
        }
    };
    assign(0);
    return found;
}

/// Checks both clauses of the validity criterion on raw vectors.
inline bool valid(const std::vector<std::vector<Entry>>& states) {
    auto at = [](const std::vector<Entry>& s, std::size_t k) -> Entry {
        return k >= 1 && k <= s.size() ? s[k - 1] : 0;
    };
    Entry balls = 0;
    for (Entry v : states.front()) balls += v;
    std::size_t top = 0;
    for (const auto& s : states) {
        Entry sum = 0;
        for (Entry v : s) sum += v;
        if (sum != balls) return false;
        top = std::max(top, s.size());
    }
    for (std::size_t i = 1; i < states.size(); ++i)
        for (std::size_t k = 1; k <= top + 1; ++k)
            if (at(states[i - 1], k + 1) > at(states[i], k)) return false;
    return true;
}

/// JS(a, b, n) by applying the transition rule literally: throw the s_1 balls
/// in hand to any heights up to `max_height`, with no other pruning.
inline std::vector<barcount::JugglingSequence> sequences(const barcount::JugglingState& a,
                                                         const barcount::JugglingState& b, std::size_t n,
                                                         std::size_t max_height) {
    std::vector<barcount::JugglingSequence> out;
    std::vector<barcount::JugglingState> path{a};
    std::function<void()> step = [&] {
        if (path.size() == n + 1) {
            if (path.back() == b) out.push_back({path});
            return;
        }
        const auto& s = path.back().entries();
        const Entry hand = s.empty() ? 0 : s.front();
        if (hand < 0) return;
        std::vector<Entry> next(max_height + s.size(), 0);
        for (std::size_t k = 1; k < s.size(); ++k) next[k - 1] = s[k];
        std::function<void(std::size_t, Entry)> place = [&](std::size_t h, Entry left) {
            if (h > max_height) {
                if (left != 0) return;
                path.emplace_back(next);
                step();
                path.pop_back();
                return;
            }
            for (Entry t = 0; t <= left; ++t) {
                next[h - 1] += t;
                place(h + 1, left - t);
                next[h - 1] -= t;
            }
        };
        place(1, hand);
    };
    step();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
