#pragma once

#include <string>
#include <vector>

#include "barcount/core.hpp"
#include "barcount/juggling.hpp"

namespace barcount {

struct Glyphs {
    std::string bar;
    std::string filled;  // ordinary ball
    std::string hollow;  // magic ball

    static Glyphs unicode() { return {"━", "●", "○"}; }
    static Glyphs ascii() { return {"=", "*", "o"}; }
};

/// Rectangular grid of single-glyph cells. Each cell holds one UTF-8 glyph.
class Canvas {
public:
    Canvas(std::size_t width, std::size_t height);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return cells_.size(); }

    void set(std::size_t row, std::size_t col, std::string glyph);
    const std::string& at(std::size_t row, std::size_t col) const { return cells_.at(row).at(col); }
    /// Writes an ASCII string starting at (row, col).
    void write(std::size_t row, std::size_t col, const std::string& text);

    /// Rows joined with '\n', each row ending in a newline.
    std::string str() const;

private:
    std::size_t width_;
    std::vector<std::vector<std::string>> cells_;
};

/// One row per bar copy in canonical order, then an index axis. Index c spans
/// a fixed-width column; bar [i, j) fills the columns of i..j-1.
Canvas render_barcode(const Barcode& bc, std::size_t n, const Glyphs& glyphs = Glyphs::unicode());

/// Bucket diagram: one column per state, one row per height (highest on top).
/// Cell (k, i) holds |s^i_k| glyphs, filled when positive, hollow when negative.
Canvas render_buckets(const JugglingSequence& seq, const Glyphs& glyphs = Glyphs::unicode());

}  // namespace barcount
