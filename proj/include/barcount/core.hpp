#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "barcount/errors.hpp"
#include "barcount/weight.hpp"

namespace barcount {

using Entry = std::int64_t;

/// A function [n] -> Z>=0 stored as (beta_1, ..., beta_n). Length is explicit,
/// so (1,0) and (1) are different curves.
class BettiCurve {
public:
    BettiCurve() = default;
    BettiCurve(std::initializer_list<Entry> values);
    explicit BettiCurve(std::vector<Entry> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    /// 0-based: curve[0] is beta_1.
    Entry operator[](std::size_t idx) const { return values_[idx]; }
    const std::vector<Entry>& values() const noexcept { return values_; }

    friend auto operator<=>(const BettiCurve&, const BettiCurve&) = default;

private:
    std::vector<Entry> values_;
};

std::string to_string(const BettiCurve& beta);

/// Half-open integer interval [birth, death) with 1 <= birth < death.
struct Interval {
    int birth = 1;
    int death = 2;

    Interval() = default;
    Interval(int b, int d);

    int length() const noexcept { return death - birth; }
    bool contains(int idx) const noexcept { return birth <= idx && idx < death; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Multiset of intervals, stored as interval -> multiplicity. Zero multiplicities
/// are never stored, so map equality is multiset equality and map iteration is
/// the canonical (birth, death) order.
class Barcode {
public:
    using Bars = std::map<Interval, Entry>;

    Barcode() = default;
    Barcode(std::initializer_list<std::tuple<int, int, Entry>> triples);

    /// Adds `mult` copies of `bar`; mult == 0 is a no-op.
    void add(Interval bar, Entry mult = 1);
    /// Multiset union.
    void merge(const Barcode& other);

    Entry multiplicity(Interval bar) const;
    const Bars& bars() const noexcept { return bars_; }
    bool empty() const noexcept { return bars_.empty(); }
    /// Number of distinct intervals.
    std::size_t distinct() const noexcept { return bars_.size(); }
    /// Number of bars counted with multiplicity.
    Entry total() const;
    /// Largest death over all bars, 1 for the empty barcode.
    int max_death() const;

    /// Every bar moved right by `offset`.
    Barcode shifted(int offset) const;

    // Lexicographic on the canonical (birth, death, multiplicity) triples.
    friend auto operator<=>(const Barcode&, const Barcode&) = default;

private:
    Bars bars_;
};

std::string to_string(const Barcode& bc);

/// beta(i) = number of bars (with multiplicity) containing i, for i in [1, n].
/// Throws DomainError when a bar does not fit inside [1, n+1).
BettiCurve betti_of(const Barcode& bc, std::size_t n);

/// beta_i copies of [i, i+1) for each i.
Barcode unit_barcode(const BettiCurve& beta);

/// [i, j) -> alpha_i + ... + alpha_{j-1} = e_i - e_j, as a weight of the given
/// rank (defaults to death - 1, the smallest rank containing the root).
Weight interval_to_root(Interval bar, std::size_t rank);
Weight interval_to_root(Interval bar);

}  // namespace barcount
