#include "barcount/fiber.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace barcount {

namespace {

using Key = std::vector<Entry>;

struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
        return boost::hash_range(key.begin(), key.end());
    }
};

class SerialMemo {
public:
    std::optional<BigCount> find(const Key& key) const {
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    void store(const Key& key, const BigCount& value) { table_.insert_or_assign(key, value); }

private:
    std::unordered_map<Key, BigCount, KeyHash> table_;
};

// Lock-striped map. Every writer for a key computes the same value, so a
// racing second store just overwrites with an identical count.
class ConcurrentMemo {
public:
    std::optional<BigCount> find(const Key& key) const {
        const auto& shard = shard_for(key);
        std::lock_guard lock(shard.mutex);
        auto it = shard.table.find(key);
        if (it == shard.table.end()) return std::nullopt;
        return it->second;
    }
    void store(const Key& key, const BigCount& value) {
        auto& shard = shard_for(key);
        std::lock_guard lock(shard.mutex);
        shard.table.insert_or_assign(key, value);
    }

private:
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_map<Key, BigCount, KeyHash> table;
    };
    static constexpr std::size_t kShards = 64;

    Shard& shard_for(const Key& key) { return shards_[KeyHash{}(key) % kShards]; }
    const Shard& shard_for(const Key& key) const { return shards_[KeyHash{}(key) % kShards]; }

    std::array<Shard, kShards> shards_;
};

// Calls visit(rest) for every overlay Y of beta, where rest = beta - Y with the
// leading zero dropped. Overlays are produced in lexicographically decreasing
// order. `beta` must be nonempty.
template <class Visit>
void for_each_peel(std::span<const Entry> beta, Visit&& visit) {
    const std::size_t n = beta.size();
    Key rest(n - 1);
    if (n == 1) {
        visit(std::as_const(rest));
        return;
    }
    std::function<void(std::size_t, Entry)> fill = [&](std::size_t pos, Entry prev) {
        for (Entry y = std::min(prev, beta[pos]); y >= 0; --y) {
            rest[pos - 1] = beta[pos] - y;
            if (y == 0) {
                // Every later column of Y is forced to zero.
                for (std::size_t k = pos + 1; k < n; ++k) rest[k - 1] = beta[k];
                visit(std::as_const(rest));
            } else if (pos + 1 == n) {
                visit(std::as_const(rest));
            } else {
                fill(pos + 1, y);
            }
        }
    };
    fill(1, beta[0]);
}

template <class Memo>
class Recursion {
public:
    Recursion(Memo& memo, bool split) : memo_(memo), split_(split) {}

    BigCount count(std::span<const Entry> beta) {
        if (beta.empty()) return 1;
        if (split_) {
            auto zero = std::find(beta.begin(), beta.end(), Entry{0});
            if (zero != beta.end()) {
                const auto cut = static_cast<std::size_t>(zero - beta.begin());
                BigCount left = count(beta.first(cut));
                return left * count(beta.subspan(cut + 1));
            }
        }
        Key key(beta.begin(), beta.end());
        if (auto hit = memo_.find(key)) return *hit;

        BigCount total = 0;
        for_each_peel(beta, [&](const Key& rest) { total += count(rest); });
        memo_.store(key, total);
        return total;
    }

private:
    Memo& memo_;
    bool split_;
};

BigCount count_parallel(std::span<const Entry> beta, bool split) {
    ConcurrentMemo memo;
    Recursion<ConcurrentMemo> recursion(memo, split);

    // Split at zeros up front so the top level of every factor fans out.
    std::vector<std::span<const Entry>> factors;
    if (split) {
        std::size_t start = 0;
        for (std::size_t k = 0; k <= beta.size(); ++k) {
            if (k == beta.size() || beta[k] == 0) {
                if (k > start) factors.push_back(beta.subspan(start, k - start));
                start = k + 1;
            }
        }
    } else if (!beta.empty()) {
        factors.push_back(beta);
    }

    BigCount product = 1;
    for (auto factor : factors) {
        std::vector<Key> branches;
        for_each_peel(factor, [&](const Key& rest) { branches.push_back(rest); });
        std::vector<BigCount> partial(branches.size());
        const auto branch_count = static_cast<std::int64_t>(branches.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t b = 0; b < branch_count; ++b) {
            partial[b] = recursion.count(branches[b]);
        }
        BigCount sum = 0;
        for (const auto& p : partial) sum += p;
        product *= sum;
    }
    return product;
}

}  // namespace

bool fits_under(std::span<const Entry> overlay, std::span<const Entry> reference) {
    if (overlay.size() != reference.size() || overlay.empty()) return false;
    if (overlay[0] != reference[0]) return false;
    for (std::size_t k = 0; k < overlay.size(); ++k) {
        if (overlay[k] < 0 || overlay[k] > reference[k]) return false;
        if (k > 0 && overlay[k] > overlay[k - 1]) return false;
    }
    return true;
}

std::vector<YoungOverlay> young_overlays(const BettiCurve& beta) {
    if (beta.empty()) throw DomainError("overlays need a nonempty Betti curve");
    std::vector<YoungOverlay> out;
    const auto& x = beta.values();
    std::vector<Entry> y(x.size(), 0);
    y[0] = x[0];
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == x.size()) {
            out.push_back({y});
            return;
        }
        for (Entry v = std::min(y[pos - 1], x[pos]); v >= 0; --v) {
            y[pos] = v;
            fill(pos + 1);
        }
    };
    fill(1);
    return out;
}

Barcode overlay_bars(const YoungOverlay& overlay) {
    Barcode out;
    const auto& y = overlay.values;
    for (std::size_t k = 0; k < y.size(); ++k) {
        const Entry next = k + 1 < y.size() ? y[k + 1] : 0;
        out.add(Interval(1, static_cast<int>(k) + 2), y[k] - next);
    }
    return out;
}

BettiCurve peel(const BettiCurve& beta, const YoungOverlay& overlay) {
    if (!fits_under(overlay.values, beta.values())) {
        throw DomainError("overlay does not fit under " + to_string(beta));
    }
    std::vector<Entry> rest(beta.size() - 1);
    for (std::size_t k = 1; k < beta.size(); ++k) rest[k - 1] = beta[k] - overlay.values[k];
    return BettiCurve(std::move(rest));
}

BigCount count_barcodes(const BettiCurve& beta, CountOptions options) {
    if (options.execution == Execution::parallel) {
        return count_parallel(beta.values(), options.split_at_zeros);
    }
    SerialMemo memo;
    return Recursion<SerialMemo>(memo, options.split_at_zeros).count(beta.values());
}

std::vector<Barcode> enumerate_barcodes(const BettiCurve& beta, std::uint64_t cap) {
    const BigCount total = count_barcodes(beta);
    if (total > cap) throw CapExceeded("barcodes", total, cap);

    std::map<Key, std::vector<Barcode>> cache;
    std::function<const std::vector<Barcode>&(const Key&)> fiber =
        [&](const Key& curve) -> const std::vector<Barcode>& {
        if (auto it = cache.find(curve); it != cache.end()) return it->second;
        std::vector<Barcode> out;
        if (curve.empty()) {
            out.emplace_back();
        } else {
            for (const auto& overlay : young_overlays(BettiCurve(curve))) {
                const Barcode born_first = overlay_bars(overlay);
                for (const auto& tail : fiber(peel(BettiCurve(curve), overlay).values())) {
                    Barcode bc = tail.shifted(1);
                    bc.merge(born_first);
                    out.push_back(std::move(bc));
                }
            }
        }
        return cache.emplace(curve, std::move(out)).first->second;
    };

    std::vector<Barcode> out = fiber(beta.values());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Barcode> brute_force_barcodes(const BettiCurve& beta) {
    const int n = static_cast<int>(beta.size());
    std::vector<Interval> intervals;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) intervals.emplace_back(i, j);

    std::vector<Entry> remaining = beta.values();
    std::vector<Entry> mult(intervals.size(), 0);
    std::vector<Barcode> out;

    // Intervals are sorted by birth, so once every interval born at i has a
    // multiplicity, column i can no longer change and must be exhausted.
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
        if (idx > 0 && (idx == intervals.size() || intervals[idx].birth != intervals[idx - 1].birth)) {
            if (remaining[intervals[idx - 1].birth - 1] != 0) return;
        }
        if (idx == intervals.size()) {
            Barcode bc;
            for (std::size_t k = 0; k < intervals.size(); ++k) bc.add(intervals[k], mult[k]);
            if (betti_of(bc, beta.size()) == beta) out.push_back(std::move(bc));
            return;
        }
        const Interval bar = intervals[idx];
        Entry bound = beta[bar.birth - 1];
        for (int c = bar.birth; c < bar.death; ++c) bound = std::min(bound, beta[c - 1]);
        for (Entry m = 0; m <= bound; ++m) {
            bool fits = true;
            for (int c = bar.birth; c < bar.death; ++c) fits = fits && remaining[c - 1] >= m;
            if (!fits) break;
            for (int c = bar.birth; c < bar.death; ++c) remaining[c - 1] -= m;
            mult[idx] = m;
            assign(idx + 1);
            for (int c = bar.birth; c < bar.death; ++c) remaining[c - 1] += m;
        }
        mult[idx] = 0;
    };
    assign(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace barcount
