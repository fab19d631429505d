#include "barcount/crosscheck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "barcount/fiber.hpp"
#include "barcount/juggling.hpp"
#include "barcount/kostant.hpp"

namespace barcount {

bool CrosscheckRow::passed() const {
    return recursion == brute && recursion == kostant && recursion == juggling &&
           recursion == kostant_juggling && lists_agree && roots_biject && sigma_roundtrip &&
           inverse_roundtrip;
}

std::vector<BettiCurve> curve_grid(std::size_t min_n, std::size_t max_n, Entry max_entry) {
    std::vector<BettiCurve> out;
    for (std::size_t n = min_n; n <= max_n; ++n) {
        std::vector<Entry> values(n, 0);
        std::function<void(std::size_t)> fill = [&](std::size_t pos) {
            if (pos == n) {
                out.emplace_back(values);
                return;
            }
            for (Entry v = 0; v <= max_entry; ++v) {
                values[pos] = v;
                fill(pos + 1);
            }
        };
        fill(0);
    }
    return out;
}

CrosscheckRow crosscheck_curve(const BettiCurve& beta) {
    CrosscheckRow row;
    row.curve = beta;
    const std::size_t n = beta.size();

    row.recursion = count_barcodes(beta);
    const auto fiber = enumerate_barcodes(beta);
    const auto brute = brute_force_barcodes(beta);
    row.brute = brute.size();
    row.lists_agree = fiber == brute;

    const Weight mu = weight_of_betti(beta);
    row.kostant = kostant_count(mu);
    std::vector<Barcode> from_roots;
    for (const auto& p : kostant_partitions(mu)) from_roots.push_back(partition_to_barcode(p));
    std::sort(from_roots.begin(), from_roots.end());
    row.roots_biject = from_roots == fiber;

    const JugglingState start(differential(beta).entries);
    const auto sequences = enumerate_sequences(start, JugglingState{}, n);
    row.juggling = sequences.size();
    row.kostant_juggling = n == 0 ? BigCount(1) : kostant_via_juggling(mu, n);

    row.sigma_roundtrip = std::all_of(fiber.begin(), fiber.end(), [&](const Barcode& bc) {
        return sigma_inverse(sigma(bc, n)) == bc;
    });
    row.inverse_roundtrip = std::all_of(sequences.begin(), sequences.end(), [&](const JugglingSequence& t) {
        return sigma(sigma_inverse(t), n) == t;
    });
    return row;
}

std::vector<CrosscheckRow> crosscheck_grid(const std::vector<BettiCurve>& grid, Execution execution) {
    std::vector<CrosscheckRow> rows(grid.size());
    const auto count = static_cast<std::int64_t>(grid.size());
    if (execution == Execution::serial) {
        for (std::int64_t k = 0; k < count; ++k) rows[k] = crosscheck_curve(grid[k]);
        return rows;
    }
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) rows[k] = crosscheck_curve(grid[k]);
    return rows;
}

std::string format_row(const CrosscheckRow& row) {
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::ostringstream out;
    out << (row.passed() ? "PASS " : "FAIL ") << to_string(row.curve) << " recursion=" << row.recursion
        << " brute=" << row.brute << " kostant=" << row.kostant << " juggling=" << row.juggling
        << " kostant-juggling=" << row.kostant_juggling << " lists=" << mark(row.lists_agree)
        << " roots=" << mark(row.roots_biject) << " sigma=" << mark(row.sigma_roundtrip)
        << " sigma-inverse=" << mark(row.inverse_roundtrip);
    return out.str();
}

}  // namespace barcount
