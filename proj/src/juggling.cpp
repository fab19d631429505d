#include "barcount/juggling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace barcount {

namespace {

void trim(std::vector<Entry>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::string join(const std::vector<Entry>& v) {
    std::ostringstream out;
    out << '<';
    if (v.empty()) out << '0';
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out << ',';
        out << v[k];
    }
    out << '>';
    return out.str();
}

// Search bounds for JS(from, to, n) at the transition into `step`.
struct Bounds {
    std::size_t max_throw;   // candidate heights 1..max_throw
    std::size_t live_limit;  // positive entries above this can never reach `to`
};

Bounds bounds_for(const JugglingState& from, const JugglingState& to, std::size_t n,
                  std::size_t step) {
    const auto reach = static_cast<std::int64_t>(to.height() + n - step);
    const auto magic = static_cast<std::int64_t>(from.height()) - static_cast<std::int64_t>(step) + 1;
    const auto top = std::max<std::int64_t>({reach, magic, 0});
    return {static_cast<std::size_t>(top), static_cast<std::size_t>(reach)};
}

// Calls visit(next) for every state reachable from `state` by one valid
// transition whose throws stay within `bounds`.
template <class Visit>
void for_each_transition(const std::vector<Entry>& state, const Bounds& bounds, Visit&& visit) {
    const Entry in_hand = state.empty() ? 0 : state.front();
    if (in_hand < 0) return;

    std::vector<Entry> next(state.size() > 1 ? state.begin() + 1 : state.end(), state.end());
    auto emit = [&] {
        std::vector<Entry> out = next;
        trim(out);
        for (std::size_t k = bounds.live_limit; k < out.size(); ++k) {
            if (out[k] > 0) return;
        }
        visit(std::move(out));
    };
    if (in_hand == 0) {
        emit();
        return;
    }
    if (bounds.max_throw == 0) return;
    if (next.size() < bounds.max_throw) next.resize(bounds.max_throw, 0);

    // Distribute the balls in hand over heights 1..max_throw.
    std::function<void(std::size_t, Entry)> place = [&](std::size_t height, Entry left) {
        if (height == bounds.max_throw) {
            next[height - 1] += left;
            emit();
            next[height - 1] -= left;
            return;
        }
        for (Entry t = left; t >= 0; --t) {
            next[height - 1] += t;
            place(height + 1, left - t);
            next[height - 1] -= t;
        }
    };
    place(1, in_hand);
}

struct StepKey {
    std::size_t step;
    std::vector<Entry> state;
    bool operator==(const StepKey&) const = default;
};

struct StepKeyHash {
    std::size_t operator()(const StepKey& key) const noexcept {
        std::size_t seed = key.step;
        boost::hash_range(seed, key.state.begin(), key.state.end());
        return seed;
    }
};

class SequenceCounter {
public:
    SequenceCounter(const JugglingState& from, const JugglingState& to, std::size_t n)
        : from_(from), to_(to), n_(n) {}

    BigCount count(std::size_t step, const std::vector<Entry>& state) {
        if (step == n_) return state == to_.entries() ? 1 : 0;
        StepKey key{step, state};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigCount total = 0;
        for_each_transition(state, bounds_for(from_, to_, n_, step + 1),
                            [&](std::vector<Entry> next) { total += count(step + 1, next); });
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const JugglingState& from_;
    const JugglingState& to_;
    std::size_t n_;
    std::unordered_map<StepKey, BigCount, StepKeyHash> memo_;
};

class SequenceLister {
public:
    SequenceLister(const JugglingState& from, const JugglingState& to, std::size_t n,
                   std::uint64_t cap, std::atomic<std::uint64_t>& found,
                   std::vector<JugglingSequence>& out)
        : from_(from), to_(to), n_(n), cap_(cap), found_(found), out_(out) {}

    // Returns false once the shared cap has been exceeded.
    bool run(std::vector<JugglingState>& path) {
        const std::size_t step = path.size() - 1;
        if (step == n_) {
            if (path.back() == to_) {
                if (found_.fetch_add(1) + 1 > cap_) return false;
                out_.push_back({path});
            }
            return true;
        }
        bool keep_going = true;
        for_each_transition(path.back().entries(), bounds_for(from_, to_, n_, step + 1),
                            [&](std::vector<Entry> next) {
                                if (!keep_going) return;
                                path.emplace_back(std::move(next));
                                keep_going = run(path);
                                path.pop_back();
                            });
        return keep_going;
    }

private:
    const JugglingState& from_;
    const JugglingState& to_;
    std::size_t n_;
    std::uint64_t cap_;
    std::atomic<std::uint64_t>& found_;
    std::vector<JugglingSequence>& out_;
};

}  // namespace

// --------------------------------------------------------- JugglingState

JugglingState::JugglingState(std::vector<Entry> entries) : entries_(std::move(entries)) {
    trim(entries_);
    if (balls() < 0) {
        throw DomainError("juggling state " + join(entries_) + " has a negative ball count");
    }
}

Entry JugglingState::balls() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), Entry{0});
}

std::string to_string(const JugglingState& s) { return join(s.entries()); }

std::string to_string(const JugglingSequence& seq) {
    std::string out = "(";
    for (std::size_t i = 0; i < seq.states.size(); ++i) {
        if (i) out += ", ";
        out += to_string(seq.states[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------- differential

Differential differential(const BettiCurve& beta) {
    Differential d;
    d.entries.resize(beta.size() + 1);
    Entry prev = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        d.entries[k] = beta[k] - prev;
        prev = beta[k];
    }
    d.entries.back() = -prev;
    return d;
}

BettiCurve integrate(const Differential& d) {
    if (d.entries.empty()) throw DomainError("a differential has at least one entry");
    std::vector<Entry> beta(d.entries.size() - 1);
    Entry running = 0;
    for (std::size_t k = 0; k + 1 < d.entries.size(); ++k) {
        running += d.entries[k];
        if (running < 0) throw DomainError("differential has a negative prefix sum");
        beta[k] = running;
    }
    if (running + d.entries.back() != 0) throw DomainError("differential does not sum to zero");
    return BettiCurve(std::move(beta));
}

// -------------------------------------------------------------- sigma

Barcode truncate(const Barcode& bc, std::size_t i) {
    Barcode out;
    const int cut = static_cast<int>(i);
    for (const auto& [bar, mult] : bc.bars()) {
        if (bar.birth >= cut + 1) out.add(Interval(bar.birth - cut, bar.death - cut), mult);
    }
    return out;
}

JugglingSequence sigma(const Barcode& bc, std::size_t n) {
    if (static_cast<std::size_t>(bc.max_death()) > n + 1) {
        throw DomainError("barcode " + to_string(bc) + " does not fit in [1," + std::to_string(n + 1) + ")");
    }
    JugglingSequence seq;
    seq.states.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        seq.states.emplace_back(differential(betti_of(truncate(bc, i), n)).entries);
    }
    return seq;
}

std::string Validity::describe() const {
    switch (clause) {
        case Clause::none:
            return "valid";
        case Clause::empty:
            return "invalid: a juggling sequence needs at least one state";
        case Clause::constant_sum:
            return "invalid: clause (i) at i=" + std::to_string(step) +
                   ": ball count differs from state 0";
        case Clause::shift:
            return "invalid: clause (ii) at i=" + std::to_string(step) + ", k=" + std::to_string(height) +
                   ": s^" + std::to_string(step - 1) + "_" + std::to_string(height + 1) + " > s^" +
                   std::to_string(step) + "_" + std::to_string(height);
    }
    return "invalid";
}

Validity is_valid(const JugglingSequence& seq) {
    if (seq.states.empty()) return {Validity::Clause::empty, 0, 0};
    const Entry balls = seq.states.front().balls();
    for (std::size_t i = 1; i < seq.states.size(); ++i) {
        if (seq.states[i].balls() != balls) return {Validity::Clause::constant_sum, i, 0};
    }
    for (std::size_t i = 1; i < seq.states.size(); ++i) {
        const auto& prev = seq.states[i - 1];
        const auto& cur = seq.states[i];
        const std::size_t top = std::max(prev.height(), cur.height());
        for (std::size_t k = 1; k <= top; ++k) {
            if (prev.at(k + 1) > cur.at(k)) return {Validity::Clause::shift, i, k};
        }
    }
    return {};
}

Barcode sigma_inverse(const JugglingSequence& seq) {
    if (auto verdict = is_valid(seq); !verdict.valid()) throw InvalidSequence(verdict);
    const std::size_t n = seq.length();
    if (!seq.states.back().is_zero()) {
        throw DomainError("sequence must end in the empty state <0>, not " + to_string(seq.states.back()));
    }
    if (seq.states.front().height() > n + 1) {
        throw DomainError("initial state " + to_string(seq.states.front()) + " is longer than n+1 = " +
                          std::to_string(n + 1));
    }
    std::size_t top = 0;
    for (const auto& s : seq.states) top = std::max(top, s.height());

    Barcode out;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= top; ++j) {
            const Entry mult = seq.states[i].at(j) - seq.states[i - 1].at(j + 1);
            if (mult == 0) continue;
            if (i + j > n + 1) {
                throw DomainError("throw at step " + std::to_string(i) + " to height " + std::to_string(j) +
                                  " leaves [1," + std::to_string(n + 1) + ")");
            }
            out.add(Interval(static_cast<int>(i), static_cast<int>(i + j)), mult);
        }
    }
    return out;
}

std::map<Entry, Entry> throws_at(const JugglingSequence& seq, std::size_t step) {
    if (auto verdict = is_valid(seq); !verdict.valid()) throw InvalidSequence(verdict);
    if (step < 1 || step > seq.length()) {
        throw DomainError("step " + std::to_string(step) + " is outside 1.." + std::to_string(seq.length()));
    }
    const auto& prev = seq.states[step - 1];
    const auto& cur = seq.states[step];
    const std::size_t top = std::max(prev.height(), cur.height());
    std::map<Entry, Entry> out;
    for (std::size_t j = 1; j <= top; ++j) {
        const Entry t = cur.at(j) - prev.at(j + 1);
        if (t != 0) out.emplace(static_cast<Entry>(j), t);
    }
    return out;
}

std::size_t max_useful_throw(const JugglingState& from, const JugglingState& to, std::size_t n,
                             std::size_t step) {
    return bounds_for(from, to, n, step).max_throw;
}

std::vector<JugglingSequence> enumerate_sequences(const JugglingState& from, const JugglingState& to,
                                                  std::size_t n, std::uint64_t cap,
                                                  Execution execution) {
    std::vector<JugglingSequence> out;
    if (from.balls() != to.balls()) return out;
    std::atomic<std::uint64_t> found{0};

    if (execution == Execution::serial || n == 0) {
        std::vector<JugglingState> path{from};
        if (!SequenceLister(from, to, n, cap, found, out).run(path)) {
            throw CapExceeded("juggling sequences", BigCount(found.load()), cap);
        }
    } else {
        std::vector<JugglingState> firsts;
        for_each_transition(from.entries(), bounds_for(from, to, n, 1),
                            [&](std::vector<Entry> next) { firsts.emplace_back(std::move(next)); });
        std::vector<std::vector<JugglingSequence>> parts(firsts.size());
        std::atomic<bool> overflow{false};
        const auto branch_count = static_cast<std::int64_t>(firsts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t b = 0; b < branch_count; ++b) {
            if (overflow.load()) continue;
            std::vector<JugglingState> path{from, firsts[b]};
            if (!SequenceLister(from, to, n, cap, found, parts[b]).run(path)) overflow = true;
        }
        if (overflow) throw CapExceeded("juggling sequences", BigCount(found.load()), cap);
        for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigCount count_sequences(const JugglingState& from, const JugglingState& to, std::size_t n,
                         Execution execution) {
    if (from.balls() != to.balls()) return 0;
    if (execution == Execution::serial || n == 0) {
        return SequenceCounter(from, to, n).count(0, from.entries());
    }
    std::vector<std::vector<Entry>> firsts;
    for_each_transition(from.entries(), bounds_for(from, to, n, 1),
                        [&](std::vector<Entry> next) { firsts.push_back(std::move(next)); });
    std::vector<BigCount> partial(firsts.size());
    const auto branch_count = static_cast<std::int64_t>(firsts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < branch_count; ++b) {
        partial[b] = SequenceCounter(from, to, n).count(1, firsts[b]);
    }
    BigCount total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

BigCount kostant_via_juggling(const Weight& mu, std::size_t n) {
    if (!mu.in_positive_cone()) {
        throw DomainError("weight " + to_string(mu) +
                          " has a negative simple-root coordinate; the Kostant partition function "
                          "is only taken on the positive cone");
    }
    if (mu.rank() != n) {
        throw DomainError("weight has rank " + std::to_string(mu.rank()) + " but n = " + std::to_string(n));
    }
    const auto standard = mu.standard();
    std::vector<Entry> head(standard.begin(), standard.end() - 1);
    const Entry total = std::accumulate(head.begin(), head.end(), Entry{0});
    return count_sequences(JugglingState(std::move(head)), JugglingState{total}, n);
}

}  // namespace barcount
