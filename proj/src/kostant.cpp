#include "barcount/kostant.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace barcount {

namespace {

void require_positive_cone(const Weight& mu) {
    const auto& z = mu.simple();
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k] < 0) {
            throw DomainError("simple-root coordinate " + std::to_string(k + 1) + " is " +
                              std::to_string(z[k]) +
                              "; the Kostant partition function is only taken on nonnegative "
                              "combinations of simple roots (it vanishes outside the positive cone)");
        }
    }
}

// Longest roots first, ties by birth. The trailing block of simple roots is
// forced by whatever remains, so the search only branches on roots of length >= 2.
std::vector<PositiveRoot> search_order(std::size_t n) {
    auto roots = n == 0 ? std::vector<PositiveRoot>{} : positive_roots(n);
    std::stable_sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.j - a.i != b.j - b.i) return a.j - a.i > b.j - b.i;
        return a.i < b.i;
    });
    return roots;
}

Entry capacity(const std::vector<Entry>& remaining, const PositiveRoot& root) {
    Entry bound = remaining[root.i - 1];
    for (int c = root.i; c < root.j; ++c) bound = std::min(bound, remaining[c - 1]);
    return bound;
}

void apply(std::vector<Entry>& remaining, const PositiveRoot& root, Entry delta) {
    for (int c = root.i; c < root.j; ++c) remaining[c - 1] -= delta;
}

struct StateHash {
    std::size_t operator()(const std::vector<Entry>& v) const noexcept {
        return boost::hash_range(v.begin(), v.end());
    }
};

}  // namespace

PositiveRoot::PositiveRoot(int first, int second) : i(first), j(second) {
    if (first < 1 || second <= first) {
        throw DomainError("e_" + std::to_string(first) + " - e_" + std::to_string(second) +
                          " is not a positive root");
    }
}

std::vector<PositiveRoot> positive_roots(std::size_t n) {
    if (n == 0) throw DomainError("A_n needs n >= 1");
    std::vector<PositiveRoot> out;
    out.reserve(n * (n + 1) / 2);
    const int top = static_cast<int>(n) + 1;
    for (int i = 1; i < top; ++i)
        for (int j = i + 1; j <= top; ++j) out.emplace_back(i, j);
    return out;
}

Weight weight_of_betti(const BettiCurve& beta) { return Weight::from_simple(beta.values()); }

Weight weight_of_partition(const RootPartition& partition, std::size_t rank) {
    std::vector<std::int64_t> z(rank, 0);
    for (const auto& [root, mult] : partition) {
        if (static_cast<std::size_t>(root.j) > rank + 1) {
            throw DomainError("root does not exist in rank " + std::to_string(rank));
        }
        for (int c = root.i; c < root.j; ++c) z[c - 1] += mult;
    }
    return Weight::from_simple(std::move(z));
}

std::vector<RootPartition> kostant_partitions(const Weight& mu, std::uint64_t cap) {
    require_positive_cone(mu);
    const BigCount total = kostant_count(mu);
    if (total > cap) throw CapExceeded("root partitions", total, cap);

    const auto order = search_order(mu.rank());
    std::vector<Entry> remaining = mu.simple();
    std::vector<Entry> chosen(order.size(), 0);
    std::vector<RootPartition> out;

    std::function<void(std::size_t)> choose = [&](std::size_t idx) {
        if (idx == order.size() || order[idx].j - order[idx].i == 1) {
            RootPartition p;
            for (std::size_t k = 0; k < idx; ++k)
                if (chosen[k]) p.emplace(order[k], chosen[k]);
            for (std::size_t c = 0; c < remaining.size(); ++c) {
                const int at = static_cast<int>(c) + 1;
                if (remaining[c]) p.emplace(PositiveRoot(at, at + 1), remaining[c]);
            }
            out.push_back(std::move(p));
            return;
        }
        const PositiveRoot root = order[idx];
        for (Entry m = capacity(remaining, root); m >= 0; --m) {
            apply(remaining, root, m);
            chosen[idx] = m;
            choose(idx + 1);
            apply(remaining, root, -m);
        }
        chosen[idx] = 0;
    };
    choose(0);
    std::sort(out.begin(), out.end());
    return out;
}

BigCount kostant_count(const Weight& mu) {
    require_positive_cone(mu);
    const auto order = search_order(mu.rank());
    std::vector<Entry> remaining = mu.simple();
    // Memo keyed by (remaining coordinates, next root index).
    std::unordered_map<std::vector<Entry>, BigCount, StateHash> memo;

    std::function<BigCount(std::size_t)> count = [&](std::size_t idx) -> BigCount {
        if (idx == order.size() || order[idx].j - order[idx].i == 1) return 1;
        std::vector<Entry> key = remaining;
        key.push_back(static_cast<Entry>(idx));
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const PositiveRoot root = order[idx];
        BigCount total = 0;
        for (Entry m = capacity(remaining, root); m >= 0; --m) {
            apply(remaining, root, m);
            total += count(idx + 1);
            apply(remaining, root, -m);
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0);
}

Barcode partition_to_barcode(const RootPartition& partition) {
    Barcode out;
    for (const auto& [root, mult] : partition) out.add(root.to_interval(), mult);
    return out;
}

}  // namespace barcount
