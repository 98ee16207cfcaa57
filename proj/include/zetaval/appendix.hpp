#ifndef ZETAVAL_APPENDIX_HPP
#define ZETAVAL_APPENDIX_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace zetaval {

/// One column of a published table of generalized Bernoulli numbers, rows
/// n = 0..12, in canonical `p/q` rendering.
struct GoldenColumn {
    std::string_view label;
    std::array<std::string_view, 13> cells;
};

/// Columns B, kronecker:3, chi4, kronecker:5, kronecker:7, kronecker:11.
std::span<const GoldenColumn> appendix_table_small();

/// Columns kronecker:13, kronecker:17, kronecker:19, kronecker:23.
std::span<const GoldenColumn> appendix_table_large();

/// Golden value for a column label and row, if the fixture has one.
std::optional<std::string_view> golden_cell(std::string_view label, std::size_t n);

} // namespace zetaval

#endif
