#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinent {

/// Locale-independent decimal rendering with 15 significant digits
/// (std::to_chars under the hood), so emitted files are byte-stable.
std::string format_double(double value);

/// Writes "name1,name2,...\n" followed by rows of format_double values.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);

private:
    std::ostream& out_;
    std::size_t columns_;
};

}  // namespace spinent
