#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include <bgs/cache.hpp>
#include <bgs/cli.hpp>

namespace fs = std::filesystem;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = bgs::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Points the cache at a fresh directory for the lifetime of the object.
struct ScopedCacheDir {
    fs::path dir;

    explicit ScopedCacheDir(const std::string &name) : dir(fs::temp_directory_path() / ("bgs_cli_test_" + name))
    {
        fs::remove_all(dir);
        ::setenv(bgs::cache_dir_env, dir.c_str(), 1);
    }
    ~ScopedCacheDir()
    {
        fs::remove_all(dir);
        ::unsetenv(bgs::cache_dir_env);
    }
};

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) {
        out.push_back(l);
    }
    return out;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("compute")
    {
        ScopedCacheDir cache("compute");
        auto r = run({"compute", "GENOCCHI_THEOREM_16", "12"});
        CHECK(r.code == 0);
        CHECK(r.out == "2073\n");

        r = run({"compute", "stirling_single_10", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "-1/2\n");

        r = run({"compute", "FAULHABER_RECURSION_13", "3"});
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(r.err.find("not applicable") != std::string::npos);

        r = run({"compute", "NO_SUCH_FORMULA", "3"});
        CHECK(r.code == 1);
        CHECK(r.err.find("unknown formula") != std::string::npos);

        r = run({"compute", "HIGGINS_9", "4", "--format", "csv"});
        CHECK(r.out == "formula,n,value\nHIGGINS_9,4,-1/30\n");

        r = run({"compute", "TANGENT_DOUBLE_14_AS_PRINTED", "2", "--format", "json"});
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["value"] == "1/3");
    }

    TEST_CASE("verify exit status")
    {
        ScopedCacheDir cache("verify");
        auto r = run({"verify", "--max-n", "20"});
        CHECK(r.code == 0);
        CHECK(r.out.find("TANGENT_DOUBLE_14_AS_PRINTED=1/3") != std::string::npos);

        r = run({"verify", "--max-n", "20", "--strict"});
        CHECK(r.code == 2);

        r = run({"verify", "--max-n", "0", "--format", "json"});
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["records"].size() == 1);
        CHECK(j["verdict"] == "ALL_TRUSTED_AGREE");

        // No even index above 0, so strict has nothing to promote.
        CHECK(run({"verify", "--max-n", "1", "--strict"}).code == 0);
    }

    TEST_CASE("usage errors exit 1")
    {
        CHECK(run({}).code == 1);
        CHECK(run({"frobnicate"}).code == 1);
        CHECK(run({"verify", "--max-n", "minus"}).code == 1);
        CHECK(run({"table", "euler", "4"}).code == 1);
        CHECK(run({"compute", "HIGGINS_9"}).code == 1);
        CHECK(run({"verify", "--format", "xml"}).code == 1);
        CHECK(run({"bench", "--reps", "0"}).code == 1);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("table")
    {
        ScopedCacheDir cache("table");
        auto r = run({"table", "genocchi", "18"});
        CHECK(r.code == 0);
        const auto g = lines(r.out);
        REQUIRE(g.size() == 18);
        CHECK(g[7] == "8 17");
        CHECK(g[17] == "18 -28820619");

        r = run({"table", "bernoulli", "4"});
        CHECK(lines(r.out) == std::vector<std::string>{"0 1", "1 -1/2", "2 1/6", "3 0", "4 -1/30"});

        r = run({"table", "stirling", "--max-n", "4"});
        CHECK(lines(r.out).back() == "0,1,7,6,1");

        r = run({"table", "bernoulli", "2", "--format", "csv"});
        CHECK(r.out == "n,value\n0,1\n1,-1/2\n2,1/6\n");

        r = run({"table", "stirling", "1", "--format", "csv"});
        CHECK(r.out == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n");

        r = run({"table", "genocchi", "2", "--format", "JSON"});
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["rows"][1]["value"] == "-1");
    }

    TEST_CASE("bench")
    {
        ScopedCacheDir cache("bench");
        auto r = run({"bench", "--max-n", "16", "--reps", "3"});
        CHECK(r.code == 0);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 1 + 8 * 2);
        CHECK(rows[0] == "formula,n,reps,median_ns,value");

        r = run({"bench", "--max-n", "8", "--reps", "1", "--deterministic"});
        CHECK(r.out.find("STIRLING_SINGLE_10,8,1,0,-1/30\n") != std::string::npos);
    }

    TEST_CASE("cache lifecycle and transparency")
    {
        ScopedCacheDir cache("lifecycle");
        const auto cold = run({"verify", "--max-n", "12", "--deterministic", "--format", "json"});

        CHECK(run({"cache", "clear"}).code == 0);
        auto r = run({"cache", "build", "40"});
        CHECK(r.code == 0);
        const auto path = run({"cache", "path"});
        CHECK(path.code == 0);
        const fs::path file = path.out.substr(0, path.out.size() - 1);
        CHECK(file == cache.dir / bgs::cache_file_name);
        CHECK(fs::exists(file));

        const auto warm = run({"verify", "--max-n", "12", "--deterministic", "--format", "json"});
        CHECK(warm.out == cold.out);
        CHECK(warm.code == cold.code);

        // Triangle too small for n = 30 is ignored rather than trusted.
        CHECK(run({"compute", "STIRLING_RATIO_12", "30"}).out == "8615841276005/14322\n");

        CHECK(run({"cache", "clear"}).code == 0);
        CHECK_FALSE(fs::exists(file));
        CHECK(run({"cache", "clear"}).code == 0);
    }

    TEST_CASE("corrupt cache falls back to a fresh triangle")
    {
        ScopedCacheDir cache("corrupt");
        REQUIRE(run({"cache", "build", "10"}).code == 0);
        {
            std::ofstream os(cache.dir / bgs::cache_file_name, std::ios::trunc);
            os << "STIRLING2 v1 max_n=1\n0 0 1\n1 0 0\n1 1 2\nEND 3\n";
        }
        const auto r = run({"compute", "STIRLING_SINGLE_10", "1"});
        CHECK(r.code == 0);
        CHECK(r.out == "-1/2\n");
        CHECK(r.err.find("warning") != std::string::npos);
    }

    TEST_CASE("unwritable cache directory")
    {
        const fs::path blocker = fs::temp_directory_path() / "bgs_cli_test_blocker";
        fs::remove_all(blocker);
        std::ofstream(blocker) << "not a directory";
        ::setenv(bgs::cache_dir_env, (blocker / "sub").c_str(), 1);
        CHECK(run({"cache", "build", "5"}).code == 1);
        ::unsetenv(bgs::cache_dir_env);
        fs::remove_all(blocker);
    }
}
