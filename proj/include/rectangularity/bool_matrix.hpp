#pragma once

#include "error.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rectangularity {

/// Square 0/1 matrix stored as one bitset row per node.
///
/// Row i is `words_per_row()` 64-bit words; bit j of row i lives in word j / 64 at
/// position j % 64. Unused high bits of the last word are always zero, so whole-row
/// comparisons and popcounts need no masking.
class BoolMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BoolMatrix() = default;

    explicit BoolMatrix(std::size_t order)
        : order_(order), words_((order + word_bits - 1) / word_bits), bits_(order * words_, 0)
    {
    }

    static BoolMatrix identity(std::size_t order)
    {
        BoolMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            m.set(i, i);
        return m;
    }

    static BoolMatrix all_ones(std::size_t order)
    {
        BoolMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j)
                m.set(i, j);
        return m;
    }

    /// Rows given as strings of '0'/'1', e.g. {"1100", "0011", ...}.
    static BoolMatrix from_rows(std::initializer_list<std::string_view> rows)
    {
        BoolMatrix m(rows.size());
        std::size_t i = 0;
        for (auto row : rows) {
            if (row.size() != rows.size())
                throw SizeError("matrix row " + std::to_string(i) + " has " + std::to_string(row.size())
                                + " entries, expected " + std::to_string(rows.size()));
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] == '1')
                    m.set(i, j);
                else if (row[j] != '0')
                    throw ValidationError("matrix entry at (" + std::to_string(i) + "," + std::to_string(j)
                                          + ") is not 0 or 1");
            }
            ++i;
        }
        return m;
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool operator()(std::size_t i, std::size_t j) const noexcept
    {
        return (bits_[i * words_ + j / word_bits] >> (j % word_bits)) & 1U;
    }

    void set(std::size_t i, std::size_t j, bool value = true) noexcept
    {
        Word & w = bits_[i * words_ + j / word_bits];
        Word mask = Word{1} << (j % word_bits);
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const Word> row(std::size_t i) const noexcept { return {bits_.data() + i * words_, words_}; }

    std::size_t row_count(std::size_t i) const noexcept
    {
        std::size_t c = 0;
        for (Word w : row(i))
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (Word w : bits_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// |row i of *this AND row j of other|.
    std::size_t and_count(std::size_t i, const BoolMatrix & other, std::size_t j) const noexcept
    {
        std::size_t c = 0;
        auto a = row(i);
        auto b = other.row(j);
        for (std::size_t w = 0; w < words_; ++w)
            c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
        return c;
    }

    /// Lowest column set in row i of *this AND row j of other, or order() if none.
    std::size_t and_first(std::size_t i, const BoolMatrix & other, std::size_t j) const noexcept
    {
        auto a = row(i);
        auto b = other.row(j);
        for (std::size_t w = 0; w < words_; ++w)
            if (Word x = a[w] & b[w])
                return w * word_bits + static_cast<std::size_t>(std::countr_zero(x));
        return order_;
    }

    bool is_symmetric() const noexcept
    {
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    friend bool operator==(const BoolMatrix &, const BoolMatrix &) = default;

private:
    std::size_t order_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

/// Bit (i, j) of the result is bit (j, i) of m.
inline BoolMatrix transpose(const BoolMatrix & m)
{
    BoolMatrix t(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j))
                t.set(j, i);
    return t;
}

} // namespace rectangularity
