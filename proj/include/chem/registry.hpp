#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chem/semver.hpp"

namespace chem {

enum class ArtifactKind { module, dataset, program, catalogue };

std::string to_string(ArtifactKind k);
ArtifactKind artifact_kind_from_string(const std::string& s);

struct RegistryEntry {
    std::string identifier;
    ArtifactKind kind = ArtifactKind::dataset;
    SemVer version;
    std::vector<std::string> keywords;
    std::string description;
    std::string content_hash; // SHA-256 of the stored bytes
    std::string location;     // relative path under the registry root
    bool deprecated = false;
    std::string citation;

    nlohmann::ordered_json to_json() const;
    static RegistryEntry from_json(const nlohmann::json& j);
};

struct PublishMetadata {
    std::string identifier;
    ArtifactKind kind = ArtifactKind::dataset;
    SemVer version;
    std::vector<std::string> keywords;
    std::string description;
    std::string citation;
    bool confidential = false; // datasets flagged confidential are refused
};

struct SearchOptions {
    std::optional<ArtifactKind> kind;
    bool include_deprecated = false;
};

struct FetchedArtifact {
    std::string bytes;
    RegistryEntry entry;
};

class Registry {
public:
    virtual ~Registry() = default;

    virtual RegistryEntry publish_artifact(const std::string& bytes,
                                           const PublishMetadata& metadata) = 0;

    // Case-insensitive substring match over identifier, keywords, description;
    // results ordered by (identifier, version descending).
    virtual std::vector<RegistryEntry> search_index(const std::string& query,
                                                    const SearchOptions& opts = {}) const = 0;

    // version: exact "x.y.z" or "latest" (highest non-deprecated).
    virtual FetchedArtifact fetch_artifact(const std::string& identifier,
                                           const std::string& version = "latest") const = 0;

    virtual std::uint64_t index_version() const = 0;

    // Marks (identifier, version) deprecated; entries are never removed.
    virtual void deprecate(const std::string& identifier, const SemVer& version) = 0;
};

// index.json + blobs/<hash-prefix-2>/<hash> under a local directory.
// Publishes are serialized through an exclusive lock file.
class LocalRegistry : public Registry {
public:
    explicit LocalRegistry(std::filesystem::path root);

    RegistryEntry publish_artifact(const std::string& bytes,
                                   const PublishMetadata& metadata) override;
    std::vector<RegistryEntry> search_index(const std::string& query,
                                            const SearchOptions& opts = {}) const override;
    FetchedArtifact fetch_artifact(const std::string& identifier,
                                   const std::string& version = "latest") const override;
    std::uint64_t index_version() const override;
    void deprecate(const std::string& identifier, const SemVer& version) override;

private:
    std::filesystem::path root_;
};

// Read-only backend over GET index.json / GET <location>.
class HttpRegistry : public Registry {
public:
    explicit HttpRegistry(std::string base_url);

    RegistryEntry publish_artifact(const std::string& bytes,
                                   const PublishMetadata& metadata) override;
    std::vector<RegistryEntry> search_index(const std::string& query,
                                            const SearchOptions& opts = {}) const override;
    FetchedArtifact fetch_artifact(const std::string& identifier,
                                   const std::string& version = "latest") const override;
    std::uint64_t index_version() const override;
    void deprecate(const std::string& identifier, const SemVer& version) override;

private:
    std::string base_url_;
    std::string get(const std::string& path) const;
};

// --registry value, falling back to the READY_REGISTRY_URL environment
// variable; http(s) URLs open an HttpRegistry, anything else a LocalRegistry.
std::unique_ptr<Registry> open_registry(const std::string& location);

// Shared search/resolve logic over a loaded index.
std::vector<RegistryEntry> filter_entries(const std::vector<RegistryEntry>& entries,
                                          const std::string& query, const SearchOptions& opts);
const RegistryEntry* resolve_version(const std::vector<RegistryEntry>& entries,
                                     const std::string& identifier, const std::string& version);

} // namespace chem
