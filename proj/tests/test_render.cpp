#include <doctest.h>

#include <set>

#include "barcount/crosscheck.hpp"
#include "barcount/fiber.hpp"
#include "barcount/render.hpp"

using namespace barcount;

namespace {

JugglingSequence seq(std::initializer_list<std::vector<Entry>> states) {
    JugglingSequence out;
    for (const auto& s : states) out.states.emplace_back(s);
    return out;
}

}  // namespace

TEST_CASE("barcode rendering layout") {
    CHECK(render_barcode(Barcode{{1, 4, 1}}, 3).str() == "━━━━━━━━━\n1  2  3  \n");
    CHECK(render_barcode(Barcode{}, 3).str() == "1  2  3  \n");
    CHECK(render_barcode(unit_barcode({2, 1}), 2).str() == "━━━   \n━━━   \n   ━━━\n1  2  \n");
    CHECK(render_barcode(Barcode{{2, 3, 1}}, 2, Glyphs::ascii()).str() == "   ===\n1  2  \n");
    CHECK_THROWS_AS(render_barcode(Barcode{{1, 4, 1}}, 2), DomainError);
}

TEST_CASE("canvases are rectangular") {
    const Canvas c = render_barcode(Barcode{{1, 2, 1}, {2, 4, 2}}, 4);
    CHECK(c.height() == 4);
    CHECK(c.width() == 12);
    CHECK_THROWS(Canvas(2, 2).set(2, 0, "x"));
}

TEST_CASE("distinct barcodes render differently") {
    for (const auto& beta : curve_grid(1, 3, 3)) {
        std::set<std::string> seen;
        const auto fiber = enumerate_barcodes(beta);
        for (const auto& bc : fiber) seen.insert(render_barcode(bc, beta.size()).str());
        REQUIRE(seen.size() == fiber.size());
    }
}

TEST_CASE("bucket diagram layout") {
    CHECK(render_buckets(seq({{0}, {0}, {0}})).str() == "  + 0 1 2\n");

    const Canvas c = render_buckets(seq({{1, 0, -1}, {0}, {0}}));
    // Heights 3..1 top to bottom, then the axis.
    REQUIRE(c.height() == 4);
    const std::size_t first_cell = 4;
    CHECK(c.at(0, first_cell) == "○");
    CHECK(c.at(1, first_cell) == " ");
    CHECK(c.at(2, first_cell) == "●");
    CHECK(c.str() == "3 | ○    \n2 |      \n1 | ●    \n  + 0 1 2\n");

    CHECK(render_buckets(seq({{1, 0, -1}, {0}, {0}}), Glyphs::ascii()).str() ==
          "3 | o    \n2 |      \n1 | *    \n  + 0 1 2\n");
    CHECK_THROWS_AS(render_buckets(seq({{1}, {0}})), InvalidSequence);
}

TEST_CASE("bucket columns hold one glyph per ball") {
    for (const auto& beta : curve_grid(1, 3, 3)) {
        for (const auto& bc : enumerate_barcodes(beta)) {
            const auto js = sigma(bc, beta.size());
            const Canvas c = render_buckets(js);
            std::size_t top = 0;
            Entry widest = 1;
            for (const auto& s : js.states) {
                top = std::max(top, s.height());
                for (Entry v : s.entries()) widest = std::max(widest, std::abs(v));
            }
            const auto cell = std::max<std::size_t>(widest, std::to_string(beta.size()).size());
            const std::size_t left = std::to_string(std::max<std::size_t>(top, 1)).size() + 2;
            for (std::size_t i = 0; i < js.states.size(); ++i) {
                Entry expected = 0;
                for (Entry v : js.states[i].entries()) expected += std::abs(v);
                Entry drawn = 0;
                for (std::size_t row = 0; row < top; ++row)
                    for (std::size_t k = 0; k < cell; ++k) {
                        const auto& g = c.at(row, left + i * (cell + 1) + 1 + k);
                        drawn += (g == "●" || g == "○") ? 1 : 0;
                    }
                REQUIRE(drawn == expected);
            }
        }
    }
}
