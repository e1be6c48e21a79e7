#include "cbdiv/table_cache.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace cbdiv;

TEST_CASE("three-point tables round-trip through the disk cache") {
    auto dir = std::filesystem::temp_directory_path() / "cbdiv-cache-test";
    std::filesystem::remove_all(dir);

    LeveledAlgebra alg(3, 2);
    FusionTable reference(alg);
    REQUIRE(save_threepoint_cache(reference, dir));

    FusionTable loaded(alg);
    REQUIRE(load_threepoint_cache(loaded, dir));
    for (int i = 0; i < reference.count(); ++i)
        for (int j = 0; j < reference.count(); ++j) {
            CHECK(loaded.has_product(i, j));
            CHECK(loaded.fuse(i, j) == reference.fuse(i, j));
        }

    // header mismatches are rejected
    FusionTable other(LeveledAlgebra(3, 3));
    CHECK_FALSE(load_threepoint_cache(other, dir));
    CHECK_FALSE(load_threepoint_cache(reference, dir / "missing"));

    std::filesystem::remove_all(dir);
}
