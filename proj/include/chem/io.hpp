#pragma once

#include <filesystem>
#include <string>

namespace chem {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace chem
