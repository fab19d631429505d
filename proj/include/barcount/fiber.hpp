#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "barcount/core.hpp"

namespace barcount {

/// A non-increasing sequence Y that fits under a reference curve X with the
/// same first column: y_1 = x_1 and y_i <= x_i.
struct YoungOverlay {
    std::vector<Entry> values;

    friend auto operator<=>(const YoungOverlay&, const YoungOverlay&) = default;
};

/// The three overlay conditions, checked directly.
bool fits_under(std::span<const Entry> overlay, std::span<const Entry> reference);

/// All Y fitting under beta, lexicographically decreasing. Throws on empty beta.
std::vector<YoungOverlay> young_overlays(const BettiCurve& beta);

/// The unique multiset of bars born at 1 whose Betti curve is the overlay:
/// [1, k+1) with multiplicity y_k - y_{k+1}.
Barcode overlay_bars(const YoungOverlay& overlay);

/// beta - Y with its leading zero removed: a curve one shorter than beta.
BettiCurve peel(const BettiCurve& beta, const YoungOverlay& overlay);

struct CountOptions {
    /// Factor the curve at zero entries before recursing.
    bool split_at_zeros = true;
    Execution execution = Execution::serial;
};

/// |Barc(beta)|, by summing |Barc(peel(beta, Y))| over every overlay Y.
BigCount count_barcodes(const BettiCurve& beta, CountOptions options = {});

/// Every barcode with Betti curve beta, once each, in canonical order. Counts
/// first and throws CapExceeded when the fiber is larger than `cap`.
std::vector<Barcode> enumerate_barcodes(const BettiCurve& beta,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Independent oracle: tries every multiplicity assignment on the intervals of
/// [1, n+1) and keeps those whose Betti curve is beta. Only for small inputs.
std::vector<Barcode> brute_force_barcodes(const BettiCurve& beta);

}  // namespace barcount
