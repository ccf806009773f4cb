#include "modgal/cli/cache.hpp"

#include "modgal/exact/integer.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace modgal {

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

std::string sha256_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

ArtifactCache ArtifactCache::from_env(bool disabled)
{
    if (disabled) return ArtifactCache();
    const char* dir = std::getenv(kEnvVar);
    if (dir == nullptr || *dir == '\0') return ArtifactCache();
    return ArtifactCache(dir);
}

std::string ArtifactCache::path_for(const std::string& kind, const std::string& key) const
{
    if (!dir_) throw Error("cache is disabled");
    return (std::filesystem::path(*dir_) / (kind + "-" + sha256_hex(kind + "\n" + key).substr(0, 32) + ".txt")).string();
}

std::optional<std::string> ArtifactCache::load(const std::string& kind, const std::string& key) const
{
    if (!dir_) return std::nullopt;
    std::ifstream in(path_for(kind, key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void ArtifactCache::store(const std::string& kind, const std::string& key, const std::string& content) const
{
    if (!dir_) return;
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    const std::string target = path_for(kind, key);
    std::ostringstream tmp;
    tmp << target << ".tmp" << std::hash<std::thread::id>()(std::this_thread::get_id()) << "." << counter++;
    {
        std::ofstream out(tmp.str(), std::ios::binary);
        if (!out) return;  // an unwritable cache only costs time
        out << content;
    }
    std::filesystem::rename(tmp.str(), target, ec);
    if (ec) std::filesystem::remove(tmp.str(), ec);
}

}  // namespace modgal
