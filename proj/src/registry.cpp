#include "chem/registry.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "chem/error.hpp"
#include "chem/hash.hpp"
#include "chem/io.hpp"

namespace chem {

std::string to_string(ArtifactKind k) {
    switch (k) {
    case ArtifactKind::module: return "module";
    case ArtifactKind::dataset: return "dataset";
    case ArtifactKind::program: return "program";
    case ArtifactKind::catalogue: return "catalogue";
    }
    return "dataset";
}

ArtifactKind artifact_kind_from_string(const std::string& s) {
    if (s == "module") return ArtifactKind::module;
    if (s == "dataset") return ArtifactKind::dataset;
    if (s == "program") return ArtifactKind::program;
    if (s == "catalogue") return ArtifactKind::catalogue;
    throw Error("unknown artifact kind '" + s + "'");
}

nlohmann::ordered_json RegistryEntry::to_json() const {
    nlohmann::ordered_json j;
    j["identifier"] = identifier;
    j["kind"] = to_string(kind);
    j["version"] = version.str();
    j["keywords"] = keywords;
    j["description"] = description;
    j["content_hash"] = content_hash;
    j["location"] = location;
    j["deprecated"] = deprecated;
    j["citation"] = citation;
    return j;
}

RegistryEntry RegistryEntry::from_json(const nlohmann::json& j) {
    RegistryEntry e;
    e.identifier = j.at("identifier").get<std::string>();
    e.kind = artifact_kind_from_string(j.at("kind").get<std::string>());
    e.version = SemVer::parse(j.at("version").get<std::string>());
    e.keywords = j.value("keywords", std::vector<std::string>{});
    e.description = j.value("description", "");
    e.content_hash = j.at("content_hash").get<std::string>();
    e.location = j.at("location").get<std::string>();
    e.deprecated = j.value("deprecated", false);
    e.citation = j.value("citation", "");
    return e;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool matches(const RegistryEntry& e, const std::string& needle) {
    if (needle.empty()) return true;
    if (lower(e.identifier).find(needle) != std::string::npos) return true;
    if (lower(e.description).find(needle) != std::string::npos) return true;
    for (const auto& k : e.keywords) {
        if (lower(k).find(needle) != std::string::npos) return true;
    }
    return false;
}

struct Index {
    std::uint64_t index_version = 0;
    std::vector<RegistryEntry> entries;
};

Index parse_index(const std::string& text) {
    Index idx;
    auto j = nlohmann::json::parse(text);
    idx.index_version = j.at("index_version").get<std::uint64_t>();
    for (const auto& ej : j.at("entries")) idx.entries.push_back(RegistryEntry::from_json(ej));
    return idx;
}

std::string dump_index(const Index& idx) {
    nlohmann::ordered_json j;
    j["index_version"] = idx.index_version;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : idx.entries) entries.push_back(e.to_json());
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string blob_location(const std::string& hash) {
    return "blobs/" + hash.substr(0, 2) + "/" + hash;
}

// RAII exclusive lock file; publishes to a local index are serialized.
class LockFile {
public:
    explicit LockFile(std::filesystem::path path) : path_(std::move(path)) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::FILE* f = std::fopen(path_.c_str(), "wx");
            if (f) {
                std::fclose(f);
                held_ = true;
                return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }
        throw Error("could not acquire registry lock '" + path_.string() + "'");
    }
    ~LockFile() {
        if (held_) std::filesystem::remove(path_);
    }
    LockFile(const LockFile&) = delete;
    LockFile& operator=(const LockFile&) = delete;

private:
    std::filesystem::path path_;
    bool held_ = false;
};

} // namespace

std::vector<RegistryEntry> filter_entries(const std::vector<RegistryEntry>& entries,
                                          const std::string& query, const SearchOptions& opts) {
    std::string needle = lower(query);
    std::vector<RegistryEntry> out;
    for (const auto& e : entries) {
        if (e.deprecated && !opts.include_deprecated) continue;
        if (opts.kind && e.kind != *opts.kind) continue;
        if (matches(e, needle)) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const RegistryEntry& a, const RegistryEntry& b) {
        if (a.identifier != b.identifier) return a.identifier < b.identifier;
        return b.version < a.version; // version descending
    });
    return out;
}

const RegistryEntry* resolve_version(const std::vector<RegistryEntry>& entries,
                                     const std::string& identifier, const std::string& version) {
    const RegistryEntry* best = nullptr;
    if (version == "latest") {
        for (const auto& e : entries) {
            if (e.identifier != identifier || e.deprecated) continue;
            if (!best || best->version < e.version) best = &e;
        }
    } else {
        SemVer v = SemVer::parse(version);
        for (const auto& e : entries) {
            if (e.identifier == identifier && e.version == v) best = &e;
        }
    }
    return best;
}

LocalRegistry::LocalRegistry(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
    if (!std::filesystem::exists(root_ / "index.json")) {
        write_file(root_ / "index.json", dump_index(Index{}));
    }
}

std::uint64_t LocalRegistry::index_version() const {
    return parse_index(read_file(root_ / "index.json")).index_version;
}

RegistryEntry LocalRegistry::publish_artifact(const std::string& bytes,
                                              const PublishMetadata& metadata) {
    if (metadata.kind == ArtifactKind::dataset && metadata.confidential) {
        throw Error("confidential data cannot be shared");
    }
    LockFile lock(root_ / "index.lock");
    Index idx = parse_index(read_file(root_ / "index.json"));
    for (const auto& e : idx.entries) {
        if (e.identifier == metadata.identifier && e.version == metadata.version) {
            throw Error("'" + metadata.identifier + "' version " + metadata.version.str() +
                        " is already published");
        }
    }
    RegistryEntry entry;
    entry.identifier = metadata.identifier;
    entry.kind = metadata.kind;
    entry.version = metadata.version;
    entry.keywords = metadata.keywords;
    entry.description = metadata.description;
    entry.citation = metadata.citation;
    entry.content_hash = sha256_hex(bytes);
    entry.location = blob_location(entry.content_hash);
    write_file(root_ / entry.location, bytes);
    idx.entries.push_back(entry);
    ++idx.index_version;
    write_file(root_ / "index.json", dump_index(idx));
    return entry;
}

std::vector<RegistryEntry> LocalRegistry::search_index(const std::string& query,
                                                       const SearchOptions& opts) const {
    return filter_entries(parse_index(read_file(root_ / "index.json")).entries, query, opts);
}

FetchedArtifact LocalRegistry::fetch_artifact(const std::string& identifier,
                                              const std::string& version) const {
    Index idx = parse_index(read_file(root_ / "index.json"));
    const RegistryEntry* entry = resolve_version(idx.entries, identifier, version);
    if (!entry) {
        throw Error("no entry for '" + identifier + "' version " + version);
    }
    std::string bytes = read_file(root_ / entry->location);
    if (sha256_hex(bytes) != entry->content_hash) {
        throw Error("integrity error: stored bytes for '" + identifier +
                    "' do not match content_hash " + entry->content_hash);
    }
    return {std::move(bytes), *entry};
}

void LocalRegistry::deprecate(const std::string& identifier, const SemVer& version) {
    LockFile lock(root_ / "index.lock");
    Index idx = parse_index(read_file(root_ / "index.json"));
    bool found = false;
    for (auto& e : idx.entries) {
        if (e.identifier == identifier && e.version == version) {
            e.deprecated = true;
            found = true;
        }
    }
    if (!found) throw Error("no entry for '" + identifier + "' version " + version.str());
    ++idx.index_version;
    write_file(root_ / "index.json", dump_index(idx));
}

HttpRegistry::HttpRegistry(std::string base_url) : base_url_(std::move(base_url)) {
    while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

std::string HttpRegistry::get(const std::string& path) const {
    // Split scheme://host[:port] from any base path.
    auto scheme_end = base_url_.find("://");
    if (scheme_end == std::string::npos) throw Error("bad registry URL '" + base_url_ + "'");
    auto path_start = base_url_.find('/', scheme_end + 3);
    std::string host = path_start == std::string::npos ? base_url_
                                                       : base_url_.substr(0, path_start);
    std::string prefix = path_start == std::string::npos ? "" : base_url_.substr(path_start);
    httplib::Client client(host);
    client.set_connection_timeout(10);
    auto res = client.Get(prefix + "/" + path);
    if (!res || res->status != 200) {
        throw Error("GET " + base_url_ + "/" + path + " failed" +
                    (res ? " (status " + std::to_string(res->status) + ")" : ""));
    }
    return res->body;
}

std::uint64_t HttpRegistry::index_version() const {
    return parse_index(get("index.json")).index_version;
}

RegistryEntry HttpRegistry::publish_artifact(const std::string&, const PublishMetadata&) {
    throw Error("HTTP registry backend is read-only");
}

void HttpRegistry::deprecate(const std::string&, const SemVer&) {
    throw Error("HTTP registry backend is read-only");
}

std::vector<RegistryEntry> HttpRegistry::search_index(const std::string& query,
                                                      const SearchOptions& opts) const {
    return filter_entries(parse_index(get("index.json")).entries, query, opts);
}

FetchedArtifact HttpRegistry::fetch_artifact(const std::string& identifier,
                                             const std::string& version) const {
    Index idx = parse_index(get("index.json"));
    const RegistryEntry* entry = resolve_version(idx.entries, identifier, version);
    if (!entry) throw Error("no entry for '" + identifier + "' version " + version);
    std::string bytes = get(entry->location);
    if (sha256_hex(bytes) != entry->content_hash) {
        throw Error("integrity error: fetched bytes for '" + identifier +
                    "' do not match content_hash " + entry->content_hash);
    }
    return {std::move(bytes), *entry};
}

std::unique_ptr<Registry> open_registry(const std::string& location) {
    std::string loc = location;
    if (loc.empty()) {
        const char* env = std::getenv("READY_REGISTRY_URL");
        if (!env || !*env) {
            throw Error("no registry given: pass --registry or set READY_REGISTRY_URL");
        }
        loc = env;
    }
    if (loc.rfind("http://", 0) == 0 || loc.rfind("https://", 0) == 0) {
        return std::make_unique<HttpRegistry>(loc);
    }
    return std::make_unique<LocalRegistry>(loc);
}

} // namespace chem
