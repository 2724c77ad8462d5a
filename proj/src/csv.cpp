#include "gqa/csv.hpp"

#include <cstdio>

namespace gqa {

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_join(std::span<const double> values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ' ';
        s += csv_double(values[i]);
    }
    return s;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) s += ',';
        s += fields[i];
    }
    return s;
}

}  // namespace gqa
