#include <bgs/cache.hpp>

#include <cstdlib>
#include <ostream>
#include <system_error>

namespace bgs
{

namespace
{

const char *non_empty_env(const char *name)
{
    const char *v = std::getenv(name);
    return v != nullptr && *v != '\0' ? v : nullptr;
}

} // namespace

std::filesystem::path cache_directory()
{
    if (const char *dir = non_empty_env(cache_dir_env)) {
        return dir;
    }
    if (const char *xdg = non_empty_env("XDG_CACHE_HOME")) {
        return std::filesystem::path(xdg) / "bgs";
    }
    if (const char *home = non_empty_env("HOME")) {
        return std::filesystem::path(home) / ".cache" / "bgs";
    }
    std::error_code ec;
    const auto tmp = std::filesystem::temp_directory_path(ec);
    return (ec ? std::filesystem::path("/tmp") : tmp) / "bgs";
}

std::filesystem::path cache_file_path()
{
    return cache_directory() / cache_file_name;
}

std::shared_ptr<const StirlingTriangle> cached_or_built_triangle(unsigned min_rows, std::ostream &diag)
{
    const auto path = cache_file_path();
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        try {
            auto t = triangle_load(path);
            if (t.max_n() >= min_rows) {
                return std::make_shared<const StirlingTriangle>(std::move(t));
            }
        } catch (const triangle_load_error &e) {
            diag << "warning: ignoring Stirling cache " << path.string() << ": " << e.what() << '\n';
        }
    }
    return std::make_shared<const StirlingTriangle>(StirlingTriangle::build(min_rows));
}

} // namespace bgs
