#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace barcount {

/// An element of the type A_n root lattice, stored in simple-root coordinates
/// (z_1, ..., z_n) so that mu = z_1 alpha_1 + ... + z_n alpha_n.
class Weight {
public:
    Weight() = default;

    static Weight from_simple(std::vector<std::int64_t> coords);
    /// Standard-basis coordinates (mu_1, ..., mu_{n+1}); must sum to zero.
    static Weight from_standard(std::span<const std::int64_t> coords);

    std::size_t rank() const noexcept { return simple_.size(); }
    const std::vector<std::int64_t>& simple() const noexcept { return simple_; }
    /// mu_i = z_i - z_{i-1} with z_0 = z_{n+1} = 0.
    std::vector<std::int64_t> standard() const;

    /// True iff every simple coordinate is nonnegative.
    bool in_positive_cone() const noexcept;

    friend bool operator==(const Weight&, const Weight&) = default;

private:
    explicit Weight(std::vector<std::int64_t> coords) : simple_(std::move(coords)) {}
    std::vector<std::int64_t> simple_;
};

std::string to_string(const Weight& w);

}  // namespace barcount
