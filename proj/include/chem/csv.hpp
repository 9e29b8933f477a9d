#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chem {

// RFC 4180 rows; fields may contain quoted commas, quotes, and newlines.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::string csv_escape(std::string_view field);

std::string write_csv(const std::vector<std::vector<std::string>>& rows);

} // namespace chem
