#ifndef BGS_CACHE_HPP
#define BGS_CACHE_HPP

#include <filesystem>
#include <iosfwd>
#include <memory>

#include <bgs/stirling.hpp>

namespace bgs
{

// Environment variable naming the cache directory.
inline constexpr const char *cache_dir_env = "BGS_CACHE_DIR";
inline constexpr const char *cache_file_name = "stirling2-v1.txt";

// $BGS_CACHE_DIR, else $XDG_CACHE_HOME/bgs, else $HOME/.cache/bgs, else
// <temp>/bgs.
std::filesystem::path cache_directory();
std::filesystem::path cache_file_path();

// Triangle with at least min_rows rows. Uses the cache file when it is
// present, valid and large enough; otherwise builds one in memory. Cache
// problems are reported on `diag` and never change the returned values.
std::shared_ptr<const StirlingTriangle> cached_or_built_triangle(unsigned min_rows, std::ostream &diag);

} // namespace bgs

#endif
