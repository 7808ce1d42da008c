#include "qcensus/cache.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace qcensus;

namespace {

struct TempPath {
    std::filesystem::path path;
    explicit TempPath(const std::string& stem) {
        path = std::filesystem::temp_directory_path() /
               (stem + std::to_string(::getpid()) + ".jsonl");
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    ~TempPath() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cold miss then warm hit return identical multisets") {
    TempPath tmp("qcensus-cache-");
    Cocharacter c(1, 1, {1, 0});
    std::vector<int> cold;
    {
        auto store = std::make_shared<JsonlCensusStore>(tmp.path.string());
        CellCensus census(store);
        cold = census.dimensions(c, 4);
        store->save();
    }
    REQUIRE(std::filesystem::exists(tmp.path));
    {
        auto store = std::make_shared<JsonlCensusStore>(tmp.path.string());
        REQUIRE(store->entry_count() == 1);
        CellCensus census(store);
        REQUIRE(census.dimensions(c, 4) == cold);
    }
    // and both agree with an uncached computation
    CellCensus fresh;
    REQUIRE(fresh.dimensions(c, 4) == cold);
}

TEST_CASE("version bump invalidates prior entries") {
    TempPath tmp("qcensus-cache-version-");
    {
        std::ofstream out(tmp.path);
        out << R"({"v":999,"r":1,"alpha":1,"beta":1,"w":[0],"n":1,"dims":[0]})" << "\n";
    }
    auto store = std::make_shared<JsonlCensusStore>(tmp.path.string());
    REQUIRE(store->entry_count() == 0);
}

TEST_CASE("corrupted lines are dropped and the file is repaired") {
    TempPath tmp("qcensus-cache-repair-");
    {
        std::ofstream out(tmp.path);
        out << "this is not json\n";
        out << R"({"v":1,"r":1,"alpha":1,"beta":1,"w":[0],"n":1,"dims":[0]})" << "\n";
        out << R"({"v":1,"r":1,"alpha":1,"beta":1,"w":[0],"n":2,"dims":[0]})" << "\n";  // wrong count
        out << R"({"v":1,"r":1,"alpha":1,"beta":1,"w":[0],"n":3,"dims":[3,0,1]})" << "\n";  // unsorted
    }
    auto store = std::make_shared<JsonlCensusStore>(tmp.path.string());
    REQUIRE(store->entry_count() == 1);
    REQUIRE(store->load(CensusKey{1, 1, 1, {0}, 1}) == std::vector<int>{0});
    REQUIRE(!store->load(CensusKey{1, 1, 1, {0}, 2}).has_value());
    store->save();
    const std::string repaired = slurp(tmp.path);
    REQUIRE(repaired.find("not json") == std::string::npos);
    REQUIRE(repaired.find("\"n\":1") != std::string::npos);
    // recomputation replaces the dropped entry
    CellCensus census(store);
    REQUIRE(census.dimensions(Cocharacter(1, 1, {0}), 2).size() == 2);
}

TEST_CASE("unwritable paths degrade to in-memory operation") {
    const std::string bad = "/nonexistent-directory-qcensus/cache.jsonl";
    auto store = std::make_shared<JsonlCensusStore>(bad);
    CellCensus census(store);
    const auto dims = census.dimensions(Cocharacter(1, 1, {0}), 3);
    REQUIRE(dims.size() == 3);
    store->save();  // warns, keeps going
    REQUIRE(census.dimensions(Cocharacter(1, 1, {0}), 3) == dims);
}

TEST_CASE("cached and uncached censuses agree") {
    TempPath tmp("qcensus-cache-agree-");
    Cocharacter c(2, 3, {1, 0});
    auto store = std::make_shared<JsonlCensusStore>(tmp.path.string());
    CellCensus cached(store);
    CellCensus plain;
    for (int n = 0; n <= 5; ++n) REQUIRE(cached.dimensions(c, n) == plain.dimensions(c, n));
    store->save();
    auto reloaded = std::make_shared<JsonlCensusStore>(tmp.path.string());
    CellCensus warm(reloaded);
    for (int n = 0; n <= 5; ++n) REQUIRE(warm.dimensions(c, n) == plain.dimensions(c, n));
}
