#pragma once

#include <map>
#include <vector>

#include "barcount/core.hpp"
#include "barcount/weight.hpp"

namespace barcount {

/// e_i - e_j with 1 <= i < j. Same index data as the interval [i, j).
struct PositiveRoot {
    int i = 1;
    int j = 2;

    PositiveRoot() = default;
    PositiveRoot(int first, int second);

    Interval to_interval() const { return Interval(i, j); }
    static PositiveRoot from_interval(Interval bar) { return PositiveRoot(bar.birth, bar.death); }

    friend auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Multiset of positive roots, root -> multiplicity, canonical (i, j) order.
using RootPartition = std::map<PositiveRoot, Entry>;

/// All n(n+1)/2 positive roots of A_n in lexicographic order. Throws for n = 0.
std::vector<PositiveRoot> positive_roots(std::size_t n);

/// mu = sum beta_i alpha_i.
Weight weight_of_betti(const BettiCurve& beta);

/// Sum of the roots in a partition, as a weight of the given rank.
Weight weight_of_partition(const RootPartition& partition, std::size_t rank);

/// Every multiset of positive roots summing to mu, in canonical order.
/// Throws DomainError outside the positive cone, CapExceeded above `cap`.
std::vector<RootPartition> kostant_partitions(const Weight& mu,
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// K(mu), by choosing root multiplicities longest-root-first. Does not use the
/// overlay recursion.
BigCount kostant_count(const Weight& mu);

Barcode partition_to_barcode(const RootPartition& partition);

}  // namespace barcount
