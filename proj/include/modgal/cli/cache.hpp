#ifndef MODGAL_CLI_CACHE_HPP
#define MODGAL_CLI_CACHE_HPP

#include <optional>
#include <string>

namespace modgal {

std::string sha256_hex(const std::string& data);
/// Throws DataError if the file cannot be read.
std::string sha256_file(const std::string& path);

/// Text artifacts on disk under names derived from a hash of what they were
/// computed from. Loading never throws; a missing or unreadable entry is
/// simply absent. Writes go through a temporary file and a rename.
class ArtifactCache {
public:
    static constexpr const char* kEnvVar = "MODGAL_CACHE_DIR";

    ArtifactCache() = default;
    explicit ArtifactCache(std::string dir) : dir_(std::move(dir)) {}
    /// The directory named by MODGAL_CACHE_DIR, unless disabled or unset.
    static ArtifactCache from_env(bool disabled = false);

    bool enabled() const { return dir_.has_value(); }
    const std::optional<std::string>& directory() const { return dir_; }
    std::string path_for(const std::string& kind, const std::string& key) const;

    std::optional<std::string> load(const std::string& kind, const std::string& key) const;
    void store(const std::string& kind, const std::string& key, const std::string& content) const;

private:
    std::optional<std::string> dir_;
};

}  // namespace modgal

#endif  // MODGAL_CLI_CACHE_HPP
