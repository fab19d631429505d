#include <doctest.h>

#include <limits>
#include <map>

#include "barcount/fiber.hpp"
#include "barcount/kostant.hpp"
#include "oracles.hpp"

using namespace barcount;

namespace {

std::vector<std::vector<Entry>> values_of(const std::vector<YoungOverlay>& ys) {
    std::vector<std::vector<Entry>> out;
    for (const auto& y : ys) out.push_back(y.values);
    return out;
}

std::vector<BettiCurve> small_grid(std::size_t max_n, Entry max_entry) {
    std::vector<BettiCurve> out{BettiCurve{}};
    std::vector<BettiCurve> layer{BettiCurve{}};
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<BettiCurve> next;
        for (const auto& c : layer)
            for (Entry v = 0; v <= max_entry; ++v) {
                auto values = c.values();
                values.push_back(v);
                next.emplace_back(values);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("young_overlays matches the exhaustive box search") {
    CHECK(values_of(young_overlays({1, 2, 1})) ==
          std::vector<std::vector<Entry>>{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}});
    CHECK(values_of(young_overlays({2, 3, 2})) ==
          std::vector<std::vector<Entry>>{{2, 2, 2}, {2, 2, 1}, {2, 2, 0}, {2, 1, 1}, {2, 1, 0}, {2, 0, 0}});
    CHECK(values_of(young_overlays({0, 5})) == std::vector<std::vector<Entry>>{{0, 0}});
    CHECK_THROWS_AS(young_overlays(BettiCurve{}), DomainError);

    for (const auto& beta : small_grid(4, 3)) {
        if (beta.empty()) continue;
        REQUIRE(values_of(young_overlays(beta)) == oracle::overlays(beta.values()));
    }
}

TEST_CASE("overlay bars are born at 1 and have the overlay as Betti curve") {
    for (const auto& y : young_overlays({3, 4, 2, 2})) {
        const Barcode bars = overlay_bars(y);
        for (const auto& [bar, mult] : bars.bars()) CHECK(bar.birth == 1);
        CHECK(betti_of(bars, 4).values() == y.values);
    }
}

TEST_CASE("count_barcodes reproduces the known fiber sizes") {
    CHECK(count_barcodes({2, 3, 2}) == 13);
    CHECK(count_barcodes({2, 3, 1, 1, 1}) == 32);
    CHECK(count_barcodes({1, 2, 1}) == 5);
    CHECK(count_barcodes(BettiCurve{}) == 1);
    for (Entry k = 0; k <= 20; ++k) CHECK(count_barcodes({k}) == 1);
    CHECK(count_barcodes({1, 1}) == 2);
    // Frozen from an independent brute-force count.
    CHECK(count_barcodes({2, 2}) == 3);
    CHECK(count_barcodes({3, 1, 2}) == 4);
    CHECK(count_barcodes({2, 0, 3, 1}) == 2);
    CHECK(count_barcodes({3, 3, 3, 3}) == 112);
    CHECK(count_barcodes({1, 2, 3, 2, 1}) == 86);
}

TEST_CASE("counts do not overflow 64 bits") {
    const BettiCurve segment{10, 14, 16, 14, 10};
    const BigCount one = count_barcodes(segment);
    CHECK(one == count_barcodes(segment, {.split_at_zeros = false}));
    CHECK(one == kostant_count(weight_of_betti(segment)));

    const BettiCurve three{10, 14, 16, 14, 10, 0, 10, 14, 16, 14, 10, 0, 10, 14, 16, 14, 10};
    const BigCount total = count_barcodes(three);
    CHECK(total == one * one * one);
    CHECK(total > BigCount(std::numeric_limits<std::uint64_t>::max()));
    CHECK(total == count_barcodes(three, {.split_at_zeros = false}));
}

TEST_CASE("enumeration agrees with the brute-force oracles") {
    for (const auto& beta : small_grid(4, 3)) {
        const auto listed = enumerate_barcodes(beta);
        const auto brute = brute_force_barcodes(beta);
        REQUIRE(listed == brute);
        REQUIRE(count_barcodes(beta) == listed.size());
        REQUIRE(std::is_sorted(listed.begin(), listed.end()));
        for (const auto& bc : listed) REQUIRE(betti_of(bc, beta.size()) == beta);
        if (beta.size() <= 3) REQUIRE(brute == oracle::barcodes(beta.values()));
    }
}

TEST_CASE("enumerate_barcodes small cases") {
    CHECK(enumerate_barcodes({0, 0}) == std::vector<Barcode>{Barcode{}});
    CHECK(enumerate_barcodes({1, 1}) == std::vector<Barcode>{Barcode{{1, 2, 1}, {2, 3, 1}}, Barcode{{1, 3, 1}}});
    CHECK(brute_force_barcodes({1, 0, 1}) == std::vector<Barcode>{Barcode{{1, 2, 1}, {3, 4, 1}}});
    CHECK(brute_force_barcodes({0}) == std::vector<Barcode>{Barcode{}});

    const auto fig = enumerate_barcodes({2, 3, 2});
    CHECK(fig.size() == 13);
    CHECK(fig == brute_force_barcodes({2, 3, 2}));
    CHECK(std::find(fig.begin(), fig.end(), Barcode{{1, 4, 2}, {2, 3, 1}}) != fig.end());
}

TEST_CASE("enumeration refuses above the cap and names the count") {
    try {
        enumerate_barcodes({2, 3, 2}, 12);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.count() == 13);
        CHECK(std::string(e.what()).find("13") != std::string::npos);
    }
    CHECK(enumerate_barcodes({2, 3, 2}, 13).size() == 13);
}

TEST_CASE("fiber splits by the bars born at 1, one group per overlay") {
    for (const auto& beta : small_grid(4, 3)) {
        if (beta.empty()) continue;
        std::map<Barcode, std::size_t> groups;
        for (const auto& bc : enumerate_barcodes(beta)) {
            Barcode born_first;
            for (const auto& [bar, mult] : bc.bars())
                if (bar.birth == 1) born_first.add(bar, mult);
            ++groups[born_first];
        }
        const auto overlays = young_overlays(beta);
        REQUIRE(groups.size() == overlays.size());
        for (const auto& y : overlays) {
            auto it = groups.find(overlay_bars(y));
            REQUIRE(it != groups.end());
            REQUIRE(count_barcodes(peel(beta, y)) == it->second);
        }
    }
}

TEST_CASE("a zero column factors the count") {
    for (const auto& beta : small_grid(5, 2)) {
        const auto& v = beta.values();
        const BigCount whole = count_barcodes(beta, {.split_at_zeros = false});
        REQUIRE(whole >= 1);
        REQUIRE(whole == count_barcodes(beta));
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] != 0) continue;
            const BettiCurve left(std::vector<Entry>(v.begin(), v.begin() + k));
            const BettiCurve right(std::vector<Entry>(v.begin() + k + 1, v.end()));
            REQUIRE(whole == count_barcodes(left, {.split_at_zeros = false}) *
                                 count_barcodes(right, {.split_at_zeros = false}));
        }
    }
}

TEST_CASE("peel drops the leading zero of beta - Y") {
    CHECK(peel({2, 3, 2}, YoungOverlay{{2, 1, 0}}) == BettiCurve{2, 2});
    CHECK(peel({2, 3, 2}, YoungOverlay{{2, 2, 2}}) == BettiCurve{1, 0});
    CHECK_THROWS_AS(peel({2, 3, 2}, YoungOverlay{{1, 1, 1}}), DomainError);
}
