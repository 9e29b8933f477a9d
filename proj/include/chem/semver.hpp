#pragma once

#include <string>

namespace chem {

enum class Bump { major, minor, patch };

struct SemVer {
    int major = 0;
    int minor = 0;
    int patch = 0;

    static SemVer parse(const std::string& text);

    SemVer bumped(Bump b) const;

    std::string str() const;

    friend bool operator==(const SemVer&, const SemVer&) = default;
    friend auto operator<=>(const SemVer&, const SemVer&) = default;
};

} // namespace chem
