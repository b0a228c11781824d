#include "spindimer/csvio.hpp"

#include <cstdio>

namespace spindimer {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_row(const std::vector<double>& vals) {
    std::string line;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) line += ',';
        line += format_g17(vals[i]);
    }
    line += '\n';
    return line;
}

std::string csv_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& r : rows) out += csv_row(r);
    return out;
}

void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    os << csv_table(columns, rows);
}

} // namespace spindimer
