#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace shintani::cli {

/* content-addressed on-disk store; entries carry the library version,
 * readers share a lock file, writers hold it exclusively */
class Cache
{
  public:
    Cache() = default;
    explicit Cache(std::string dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<nlohmann::json> get(std::string const & key);
    void put(std::string const & key, nlohmann::json const & value);

    static std::string hash_key(std::string const & canonical);

    long hits = 0, misses = 0, warnings = 0;

  private:
    std::string dir_;
    std::string path_of(std::string const & key) const;
};

} // namespace shintani::cli
