#include "zetaval/appendix.hpp"

namespace zetaval {

namespace {

// Transcribed from the published tables, zero cells included.
constexpr std::array<GoldenColumn, 6> small_table{{
    {"B", {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"}},
    {"kronecker:3", {"0", "-1/3", "0", "2/3", "0", "-10/3", "0", "98/3", "0", "-1618/3", "0", "40634/3", "0"}},
    {"chi4", {"0", "-1/2", "0", "3/2", "0", "-25/2", "0", "427/2", "0", "-12465/2", "0", "555731/2", "0"}},
    {"kronecker:5", {"0", "0", "4/5", "0", "-8", "0", "804/5", "0", "-5776", "0", "1651004/5", "0", "-27622104"}},
    {"kronecker:7", {"0", "-1", "0", "48/7", "0", "-160", "0", "8176", "0", "-5086656/7", "0", "99070928", "0"}},
    {"kronecker:11",
     {"0", "-1", "0", "18", "0", "-12750/11", "0", "152082", "0", "-33743250", "0", "11392546506", "0"}},
}};

constexpr std::array<GoldenColumn, 4> large_table{{
    {"kronecker:13",
     {"0", "0", "4", "0", "-232", "0", "401556/13", "0", "-7482704", "0", "2890943420", "0", "-1634752049016"}},
    {"kronecker:17",
     {"0", "0", "8", "0", "-656", "0", "138984", "0", "-958428704/17", "0", "37040430040", "0",
      "-35766492971568"}},
    {"kronecker:19",
     {"0", "-1", "0", "66", "0", "-13450", "0", "5303074", "0", "-66751985430/19", "0", "3539203405562", "0"}},
    {"kronecker:23",
     {"0", "-3", "0", "144", "0", "-34080", "0", "18665136", "0", "-17895000384", "0", "605747775717744/23",
      "0"}},
}};

} // namespace

std::span<const GoldenColumn> appendix_table_small()
{
    return small_table;
}

std::span<const GoldenColumn> appendix_table_large()
{
    return large_table;
}

std::optional<std::string_view> golden_cell(std::string_view label, std::size_t n)
{
    if (n >= 13) {
        return std::nullopt;
    }
    for (auto table : {appendix_table_small(), appendix_table_large()}) {
        for (const auto& column : table) {
            if (column.label == label) {
                return column.cells[n];
            }
        }
    }
    return std::nullopt;
}

} // namespace zetaval
