#pragma once
#include <ostream>
#include <string>
#include <vector>

// Deterministic CSV formatting: 17 significant digits, '.' decimal separator
// (the process never calls setlocale, so the C locale is in effect), '\n'
// line endings. Identical data serializes to identical bytes.

namespace spindimer {

std::string format_g17(double v);
std::string csv_row(const std::vector<double>& vals);
std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows);
void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

} // namespace spindimer
