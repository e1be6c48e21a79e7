/*
  table_cache.hpp

  Optional on-disk memo of three-point tables, enabled through the
  CBDIV_CACHE_DIR environment variable.  One file per algebra:

    threepoint-sl<k>-l<ell>.bin

  Layout, all little-endian u64 after the magic: magic "CBDV", version,
  k, ell, alcove size, entry count, then entries (i, j, l, value)
  sorted by key, one per nonzero three-point rank with i <= j.  Values
  are verified to fit u64 before writing.
*/

#pragma once

#include "fusion.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace cbdiv {

namespace detail {

inline void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(buf), 8);
}

inline bool get_u64(std::istream& is, std::uint64_t& v) {
    unsigned char buf[8];
    if (!is.read(reinterpret_cast<char*>(buf), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return true;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, const LeveledAlgebra& alg) {
    return dir / ("threepoint-sl" + std::to_string(alg.rank_plus_one) + "-l" +
                  std::to_string(alg.level) + ".bin");
}

constexpr std::uint64_t kCacheVersion = 1;

} // namespace detail

/// Write the complete three-point table.  Returns false when a value
/// does not fit u64 (nothing is written then).
inline bool save_threepoint_cache(FusionTable& table, const std::filesystem::path& dir) {
    table.build_all();
    int count = table.count();
    std::vector<std::array<std::uint64_t, 4>> entries;
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j)
            for (int l = 0; l < count; ++l) {
                Int v = table.threepoint(i, j, l);
                if (v == 0) continue;
                if (v > Int(std::numeric_limits<std::uint64_t>::max())) return false;
                entries.push_back({static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j),
                                   static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(v)});
            }
    std::filesystem::create_directories(dir);
    std::ofstream os(detail::cache_file(dir, table.algebra()), std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write("CBDV", 4);
    detail::put_u64(os, detail::kCacheVersion);
    detail::put_u64(os, static_cast<std::uint64_t>(table.algebra().rank_plus_one));
    detail::put_u64(os, static_cast<std::uint64_t>(table.algebra().level));
    detail::put_u64(os, static_cast<std::uint64_t>(count));
    detail::put_u64(os, entries.size());
    for (const auto& e : entries)
        for (std::uint64_t v : e) detail::put_u64(os, v);
    return static_cast<bool>(os);
}

/// Populate every pair product from a cache file.  Returns false on a
/// missing file or any header mismatch; the table is untouched then.
inline bool load_threepoint_cache(FusionTable& table, const std::filesystem::path& dir) {
    std::ifstream is(detail::cache_file(dir, table.algebra()), std::ios::binary);
    if (!is) return false;
    char magic[4];
    if (!is.read(magic, 4) || std::string_view(magic, 4) != "CBDV") return false;
    std::uint64_t version, k, ell, alcove, count;
    if (!detail::get_u64(is, version) || version != detail::kCacheVersion) return false;
    if (!detail::get_u64(is, k) || k != static_cast<std::uint64_t>(table.algebra().rank_plus_one))
        return false;
    if (!detail::get_u64(is, ell) || ell != static_cast<std::uint64_t>(table.algebra().level))
        return false;
    if (!detail::get_u64(is, alcove) || alcove != static_cast<std::uint64_t>(table.count()))
        return false;
    if (!detail::get_u64(is, count)) return false;

    std::size_t n = static_cast<std::size_t>(table.count());
    std::vector<std::vector<Int>> products(n * n, std::vector<Int>(n, Int(0)));
    for (std::uint64_t e = 0; e < count; ++e) {
        std::uint64_t i, j, l, v;
        if (!detail::get_u64(is, i) || !detail::get_u64(is, j) || !detail::get_u64(is, l) ||
            !detail::get_u64(is, v))
            return false;
        if (i >= n || j >= n || l >= n || i > j) return false;
        // fuse(i,j)[dual(l)] = threepoint(i,j,l)
        products[i * n + j][static_cast<std::size_t>(table.dual_id(static_cast<int>(l)))] = Int(v);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            table.set_product(static_cast<int>(i), static_cast<int>(j), std::move(products[i * n + j]));
    return true;
}

/// CBDIV_CACHE_DIR hook used by the command line: load if present,
/// compute and save otherwise.
inline void attach_disk_cache(FusionTable& table) {
    const char* dir = std::getenv("CBDIV_CACHE_DIR");
    if (!dir || !*dir) return;
    if (load_threepoint_cache(table, dir)) return;
    save_threepoint_cache(table, dir);
}

} // namespace cbdiv
