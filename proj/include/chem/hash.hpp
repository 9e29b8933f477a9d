#pragma once

#include <string>
#include <string_view>

namespace chem {

// SHA-256 digest as lowercase hex.
std::string sha256_hex(std::string_view bytes);

} // namespace chem
