#include "barcount/render.hpp"

#include <algorithm>
#include <cstdlib>

namespace barcount {

namespace {

std::size_t digits(std::size_t v) { return std::to_string(v).size(); }

}  // namespace

Canvas::Canvas(std::size_t width, std::size_t height)
    : width_(width), cells_(height, std::vector<std::string>(width, " ")) {}

void Canvas::set(std::size_t row, std::size_t col, std::string glyph) {
    cells_.at(row).at(col) = std::move(glyph);
}

void Canvas::write(std::size_t row, std::size_t col, const std::string& text) {
    for (std::size_t k = 0; k < text.size(); ++k) set(row, col + k, std::string(1, text[k]));
}

std::string Canvas::str() const {
    std::string out;
    for (const auto& row : cells_) {
        for (const auto& cell : row) out += cell;
        out += '\n';
    }
    return out;
}

Canvas render_barcode(const Barcode& bc, std::size_t n, const Glyphs& glyphs) {
    if (static_cast<std::size_t>(bc.max_death()) > n + 1) {
        throw DomainError("barcode " + to_string(bc) + " does not fit in [1," + std::to_string(n + 1) + ")");
    }
    const std::size_t col = std::max<std::size_t>(3, digits(n) + 1);
    const auto rows = static_cast<std::size_t>(bc.total());
    Canvas canvas(col * n, rows + 1);

    std::size_t row = 0;
    for (const auto& [bar, mult] : bc.bars()) {
        for (Entry copy = 0; copy < mult; ++copy, ++row) {
            const std::size_t lo = col * static_cast<std::size_t>(bar.birth - 1);
            const std::size_t hi = col * static_cast<std::size_t>(bar.death - 1);
            for (std::size_t c = lo; c < hi; ++c) canvas.set(row, c, glyphs.bar);
        }
    }
    for (std::size_t idx = 1; idx <= n; ++idx) canvas.write(rows, col * (idx - 1), std::to_string(idx));
    return canvas;
}

Canvas render_buckets(const JugglingSequence& seq, const Glyphs& glyphs) {
    if (auto verdict = is_valid(seq); !verdict.valid()) throw InvalidSequence(verdict);

    std::size_t top = 0;
    Entry widest = 1;
    for (const auto& s : seq.states) {
        top = std::max(top, s.height());
        for (Entry v : s.entries()) widest = std::max(widest, std::abs(v));
    }
    const std::size_t steps = seq.states.size();
    const std::size_t label = digits(std::max<std::size_t>(top, 1));
    const std::size_t cell = std::max(static_cast<std::size_t>(widest), digits(steps - 1));
    // "<label> |" then " <cell>" per state.
    const std::size_t left = label + 2;
    Canvas canvas(left + steps * (cell + 1), top + 1);

    for (std::size_t k = top; k >= 1; --k) {
        const std::size_t row = top - k;
        const std::string name = std::to_string(k);
        canvas.write(row, label - name.size(), name);
        canvas.set(row, label + 1, "|");
        for (std::size_t i = 0; i < steps; ++i) {
            const Entry v = seq.states[i].at(k);
            const std::string& glyph = v > 0 ? glyphs.filled : glyphs.hollow;
            const std::size_t start = left + i * (cell + 1) + 1;
            for (Entry b = 0; b < std::abs(v); ++b) canvas.set(row, start + static_cast<std::size_t>(b), glyph);
        }
    }
    canvas.set(top, label + 1, "+");
    for (std::size_t i = 0; i < steps; ++i) canvas.write(top, left + i * (cell + 1) + 1, std::to_string(i));
    return canvas;
}

}  // namespace barcount
