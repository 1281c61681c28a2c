#pragma once

#include <array>
#include <string>

namespace bakfem {

/// Published convergence tables for the model problem, kept verbatim in the
/// original 2-significant-figure format ("0.89E-2"). Rates are printed one row
/// ahead of the halving (rate in row N compares N with 2N); the last row has
/// the sentinel "---".
struct ReferenceCell {
    const char* value;
    const char* rate;
};

struct ReferenceTable {
    int id;                 // 1..6
    double eps2;
    bool superclose;        // false: ||u - u^N||_E, true: ||u^I - u^N||_E
    std::array<double, 6> eps1_cols;
    std::array<int, 9> n_rows;
    ReferenceCell cells[9][6];
};

/// Throws std::out_of_range unless 1 <= id <= 6.
const ReferenceTable& reference_table(int id);

/// Parse "0.89E-2" -> 0.0089. Throws std::invalid_argument on malformed input.
double parse_table_value(const std::string& s);

/// Round to the table format: 2 significant figures, mantissa in [0.10, 0.99].
std::string format_table_value(double x);

}  // namespace bakfem
