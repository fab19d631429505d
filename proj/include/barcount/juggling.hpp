#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "barcount/core.hpp"
#include "barcount/weight.hpp"

namespace barcount {

/// A zero-padded integer vector <s_1, ..., s_h>. Stored with trailing zeros
/// trimmed, so <0> is the empty vector and equality ignores padding. Negative
/// entries are magic balls; the total ball count must be nonnegative.
class JugglingState {
public:
    JugglingState() = default;
    explicit JugglingState(std::vector<Entry> entries);
    JugglingState(std::initializer_list<Entry> entries)
        : JugglingState(std::vector<Entry>(entries)) {}

    /// 1-based; zero for k == 0 and beyond the stored entries.
    Entry at(std::size_t k) const noexcept {
        return k >= 1 && k <= entries_.size() ? entries_[k - 1] : 0;
    }
    std::size_t height() const noexcept { return entries_.size(); }
    Entry balls() const noexcept;
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    friend auto operator<=>(const JugglingState&, const JugglingState&) = default;

private:
    std::vector<Entry> entries_;
};

std::string to_string(const JugglingState& s);

/// (s^0, ..., s^n). Always holds at least one state; validity is a separate check.
struct JugglingSequence {
    std::vector<JugglingState> states;

    std::size_t length() const noexcept { return states.empty() ? 0 : states.size() - 1; }

    friend auto operator<=>(const JugglingSequence&, const JugglingSequence&) = default;
};

std::string to_string(const JugglingSequence& seq);

/// delta(beta) = (beta_1, beta_2 - beta_1, ..., beta_n - beta_{n-1}, -beta_n).
struct Differential {
    std::vector<Entry> entries;
};

Differential differential(const BettiCurve& beta);
/// Prefix sums of a differential. Throws unless it sums to zero with
/// nonnegative prefix sums.
BettiCurve integrate(const Differential& d);

/// Drops bars born at or before i and shifts the rest left by i.
Barcode truncate(const Barcode& bc, std::size_t i);

/// State i is <delta(betti of the i-truncation)>, for i = 0..n.
JugglingSequence sigma(const Barcode& bc, std::size_t n);

struct Validity {
    enum class Clause {
        none,          // valid
        constant_sum,  // ball counts differ between states
        shift,         // s^{i-1}_{k+1} > s^i_k
        empty,         // no states at all
    };
    Clause clause = Clause::none;
    std::size_t step = 0;    // i
    std::size_t height = 0;  // k, shift clause only

    bool valid() const noexcept { return clause == Clause::none; }
    std::string describe() const;
};

Validity is_valid(const JugglingSequence& seq);

/// Thrown by operations that need a valid sequence.
class InvalidSequence : public DomainError {
public:
    explicit InvalidSequence(Validity verdict)
        : DomainError(verdict.describe()), verdict_(verdict) {}
    const Validity& verdict() const noexcept { return verdict_; }

private:
    Validity verdict_;
};

/// Inverse of sigma: bar [i, i+j) gets multiplicity s^i_j - s^{i-1}_{j+1}.
/// Needs a valid sequence ending at <0> whose first state has height <= n+1.
Barcode sigma_inverse(const JugglingSequence& seq);

/// Nonzero throw counts t_j = s^i_j - s^{i-1}_{j+1} for the transition into
/// step i (1 <= i <= n), keyed by height.
std::map<Entry, Entry> throws_at(const JugglingSequence& seq, std::size_t step);

/// JS(a, b, n): every valid sequence of length n from a to b, canonical order.
/// Throws CapExceeded once more than `cap` sequences are found.
std::vector<JugglingSequence> enumerate_sequences(const JugglingState& from, const JugglingState& to,
                                                  std::size_t n,
                                                  std::uint64_t cap = kDefaultEnumerationCap,
                                                  Execution execution = Execution::serial);

/// |JS(a, b, n)| by dynamic programming over (step, state).
BigCount count_sequences(const JugglingState& from, const JugglingState& to, std::size_t n,
                         Execution execution = Execution::serial);

/// Largest throw height worth trying on the transition into `step`; higher
/// balls can neither land in the terminal state nor meet a magic ball.
std::size_t max_useful_throw(const JugglingState& from, const JugglingState& to, std::size_t n,
                             std::size_t step);

/// K(mu) = |JS(<mu_1..mu_n>, <mu_1 + ... + mu_n>, n)| in standard coordinates.
BigCount kostant_via_juggling(const Weight& mu, std::size_t n);

}  // namespace barcount
