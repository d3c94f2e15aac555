#include "spinent/text_format.hpp"

#include <charconv>
#include <cmath>

#include "spinent/errors.hpp"

namespace spinent {

std::string format_double(double value) {
    if (!std::isfinite(value)) throw Error("refusing to format a non-finite number");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& columns)
    : out_(out), columns_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw Error("csv row width differs from header");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << format_double(values[i]);
    }
    out_ << '\n';
}

}  // namespace spinent
