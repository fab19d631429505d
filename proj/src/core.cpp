#include "barcount/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace barcount {

namespace {

void require_nonnegative(const std::vector<Entry>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 0) {
            throw DomainError("Betti curve entry " + std::to_string(k + 1) + " is negative (" +
                              std::to_string(values[k]) + ")");
        }
    }
}

std::string join(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out << ',';
        out << values[k];
    }
    out << ')';
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------- Weight

Weight Weight::from_simple(std::vector<std::int64_t> coords) { return Weight(std::move(coords)); }

Weight Weight::from_standard(std::span<const std::int64_t> coords) {
    if (coords.empty()) {
        throw DomainError("standard-basis weight needs at least one coordinate");
    }
    std::vector<std::int64_t> simple(coords.size() - 1);
    std::int64_t running = 0;
    for (std::size_t k = 0; k + 1 < coords.size(); ++k) {
        running += coords[k];
        simple[k] = running;
    }
    if (running + coords.back() != 0) {
        throw DomainError("standard-basis coordinates must sum to zero to lie in the root lattice");
    }
    return Weight(std::move(simple));
}

std::vector<std::int64_t> Weight::standard() const {
    std::vector<std::int64_t> out(simple_.size() + 1);
    std::int64_t prev = 0;
    for (std::size_t k = 0; k < simple_.size(); ++k) {
        out[k] = simple_[k] - prev;
        prev = simple_[k];
    }
    out.back() = -prev;
    return out;
}

bool Weight::in_positive_cone() const noexcept {
    return std::all_of(simple_.begin(), simple_.end(), [](std::int64_t z) { return z >= 0; });
}

std::string to_string(const Weight& w) { return join(w.simple()); }

// ------------------------------------------------------------ BettiCurve

BettiCurve::BettiCurve(std::initializer_list<Entry> values) : values_(values) {
    require_nonnegative(values_);
}

BettiCurve::BettiCurve(std::vector<Entry> values) : values_(std::move(values)) {
    require_nonnegative(values_);
}

std::string to_string(const BettiCurve& beta) { return join(beta.values()); }

// -------------------------------------------------------------- Interval

Interval::Interval(int b, int d) : birth(b), death(d) {
    if (b < 1 || d <= b) {
        throw DomainError("[" + std::to_string(b) + "," + std::to_string(d) +
                          ") is not an interval: need 1 <= birth < death");
    }
}

// --------------------------------------------------------------- Barcode

Barcode::Barcode(std::initializer_list<std::tuple<int, int, Entry>> triples) {
    for (const auto& [b, d, m] : triples) {
        if (m < 0) throw DomainError("negative bar multiplicity");
        add(Interval(b, d), m);
    }
}

void Barcode::add(Interval bar, Entry mult) {
    if (mult == 0) return;
    bars_[bar] += mult;
}

void Barcode::merge(const Barcode& other) {
    for (const auto& [bar, mult] : other.bars_) add(bar, mult);
}

Entry Barcode::multiplicity(Interval bar) const {
    auto it = bars_.find(bar);
    return it == bars_.end() ? 0 : it->second;
}

Entry Barcode::total() const {
    Entry sum = 0;
    for (const auto& [bar, mult] : bars_) sum += mult;
    return sum;
}

int Barcode::max_death() const {
    int hi = 1;
    for (const auto& [bar, mult] : bars_) hi = std::max(hi, bar.death);
    return hi;
}

Barcode Barcode::shifted(int offset) const {
    Barcode out;
    for (const auto& [bar, mult] : bars_) {
        out.bars_.emplace_hint(out.bars_.end(), Interval(bar.birth + offset, bar.death + offset), mult);
    }
    return out;
}

std::string to_string(const Barcode& bc) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [bar, mult] : bc.bars()) {
        if (!first) out << ", ";
        first = false;
        out << '[' << bar.birth << ',' << bar.death << "):" << mult;
    }
    out << '}';
    return out.str();
}

BettiCurve betti_of(const Barcode& bc, std::size_t n) {
    std::vector<Entry> values(n, 0);
    for (const auto& [bar, mult] : bc.bars()) {
        if (static_cast<std::size_t>(bar.death) > n + 1) {
            throw DomainError("bar [" + std::to_string(bar.birth) + "," + std::to_string(bar.death) +
                              ") does not fit in [1," + std::to_string(n + 1) + ")");
        }
        for (int idx = bar.birth; idx < bar.death; ++idx) values[idx - 1] += mult;
    }
    return BettiCurve(std::move(values));
}

Barcode unit_barcode(const BettiCurve& beta) {
    Barcode out;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        const int idx = static_cast<int>(k) + 1;
        out.add(Interval(idx, idx + 1), beta[k]);
    }
    return out;
}

Weight interval_to_root(Interval bar, std::size_t rank) {
    if (static_cast<std::size_t>(bar.death) > rank + 1) {
        throw DomainError("root e_" + std::to_string(bar.birth) + " - e_" + std::to_string(bar.death) +
                          " does not exist in rank " + std::to_string(rank));
    }
    std::vector<std::int64_t> coords(rank, 0);
    for (int idx = bar.birth; idx < bar.death; ++idx) coords[idx - 1] = 1;
    return Weight::from_simple(std::move(coords));
}

Weight interval_to_root(Interval bar) {
    return interval_to_root(bar, static_cast<std::size_t>(bar.death - 1));
}

}  // namespace barcount
