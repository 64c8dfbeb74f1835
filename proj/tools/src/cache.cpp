#include "shintani_cli/cache.hpp"

#include "shintani/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace shintani::cli {

namespace fs = std::filesystem;

namespace {
struct FileLock {
    int fd = -1;
    FileLock(std::string const & path, bool exclusive)
    {
        fd = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd >= 0)
            ::flock(fd, exclusive ? LOCK_EX : LOCK_SH);
    }
    ~FileLock()
    {
        if (fd >= 0) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
    }
};
} // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir))
{
    if (!dir_.empty())
        fs::create_directories(dir_);
}

std::string Cache::hash_key(std::string const & canonical)
{
    /* two independent FNV-1a lanes, 128 bits of key */
    std::uint64_t h1 = 1469598103934665603ULL, h2 = 0x9ae16a3b2f90404fULL;
    for (unsigned char c : canonical) {
        h1 = (h1 ^ c) * 1099511628211ULL;
        h2 = (h2 ^ c) * 0x100000001b3ULL + 0x7fULL;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h1),
                  static_cast<unsigned long long>(h2));
    return buf;
}

std::string Cache::path_of(std::string const & key) const
{
    return (fs::path(dir_) / (hash_key(key) + ".json")).string();
}

std::optional<nlohmann::json> Cache::get(std::string const & key)
{
    if (!enabled())
        return std::nullopt;
    FileLock lock((fs::path(dir_) / ".lock").string(), false);
    std::ifstream in(path_of(key));
    if (!in) {
        ++misses;
        return std::nullopt;
    }
    try {
        auto j = nlohmann::json::parse(in);
        if (j.at("version").get<std::string>() != library_version() || j.at("key").get<std::string>() != key) {
            ++misses;
            return std::nullopt;
        }
        ++hits;
        return j.at("value");
    } catch (std::exception const &) {
        std::cerr << "warning: ignoring corrupt cache entry " << path_of(key) << "\n";
        ++warnings;
        ++misses;
        return std::nullopt;
    }
}

void Cache::put(std::string const & key, nlohmann::json const & value)
{
    if (!enabled())
        return;
    FileLock lock((fs::path(dir_) / ".lock").string(), true);
    std::string path = path_of(key);
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        nlohmann::json j = {{"version", library_version()}, {"key", key}, {"value", value}};
        out << j.dump();
    }
    fs::rename(tmp, path);
}

} // namespace shintani::cli
