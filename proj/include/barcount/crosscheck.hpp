#pragma once

#include <string>
#include <vector>

#include "barcount/core.hpp"

namespace barcount {

/// Every counting route and bijection check for one Betti curve.
struct CrosscheckRow {
    BettiCurve curve;
    BigCount recursion;         // overlay recursion
    BigCount brute;             // brute-force enumeration
    BigCount kostant;           // root-partition count of sum beta_i alpha_i
    BigCount juggling;          // |JS(<delta beta>, <0>, n)|, enumerated
    BigCount kostant_juggling;  // |JS(<mu_1..mu_n>, <mu_1+..+mu_n>, n)|
    bool lists_agree = false;       // enumerate_barcodes == brute_force_barcodes
    bool roots_biject = false;      // root partitions map onto the enumerated fiber
    bool sigma_roundtrip = false;   // sigma_inverse(sigma(B)) == B on the fiber
    bool inverse_roundtrip = false; // sigma(sigma_inverse(T)) == T on JS(<delta beta>, <0>, n)

    bool passed() const;
};

/// All curves of length min_n..max_n with entries in [0, max_entry], ordered by
/// length, then lexicographically.
std::vector<BettiCurve> curve_grid(std::size_t min_n, std::size_t max_n, Entry max_entry);

CrosscheckRow crosscheck_curve(const BettiCurve& beta);

/// Rows come back in grid order whatever the execution mode.
std::vector<CrosscheckRow> crosscheck_grid(const std::vector<BettiCurve>& grid,
                                           Execution execution = Execution::serial);

std::string format_row(const CrosscheckRow& row);

}  // namespace barcount
