#include "chem/semver.hpp"

#include <charconv>

#include "chem/error.hpp"

namespace chem {

namespace {

int parse_component(std::string_view part, const std::string& full) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0) {
        throw Error("invalid version '" + full + "': expected major.minor.patch");
    }
    return value;
}

} // namespace

SemVer SemVer::parse(const std::string& text) {
    auto dot1 = text.find('.');
    auto dot2 = text.find('.', dot1 == std::string::npos ? dot1 : dot1 + 1);
    if (dot1 == std::string::npos || dot2 == std::string::npos) {
        throw Error("invalid version '" + text + "': expected major.minor.patch");
    }
    std::string_view sv = text;
    return SemVer{
        parse_component(sv.substr(0, dot1), text),
        parse_component(sv.substr(dot1 + 1, dot2 - dot1 - 1), text),
        parse_component(sv.substr(dot2 + 1), text),
    };
}

SemVer SemVer::bumped(Bump b) const {
    switch (b) {
    case Bump::major: return {major + 1, 0, 0};
    case Bump::minor: return {major, minor + 1, 0};
    case Bump::patch: return {major, minor, patch + 1};
    }
    throw Error("invalid bump kind");
}

std::string SemVer::str() const {
    return std::to_string(major) + "." + std::to_string(minor) + "." + std::to_string(patch);
}

} // namespace chem
