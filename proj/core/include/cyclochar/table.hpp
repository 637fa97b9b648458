#pragma once

#include <optional>
#include <string>

#include "cyclochar/characters.hpp"

namespace cyclochar {

inline constexpr int kTableFormatVersion = 1;
inline constexpr const char* kCanonicalOrderName = "canonical-v1";

// JSON is the lossless source of truth; csv and latex are export-only views.
// Rows cover P_{n,m} x P_{n,m} exactly once in the canonical order, outer
// index lambda, inner index mu.
std::string table_to_json(const CharTable& table);
CharTable table_from_json(const std::string& text);

std::string table_to_csv(const CharTable& table,
                         const std::vector<std::string>* u_names = nullptr);
std::string table_to_latex(const CharTable& table,
                           const std::vector<std::string>* u_names = nullptr);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Cache protocol for repeated table builds: a cache file is a complete JSON
// table.  Missing file -> nullopt; a file whose header disagrees with
// (m, n, format version, order name, order hash) throws CacheVersionMismatch.
std::optional<CharTable> load_table_cache(const std::string& path, int m, int n);

}  // namespace cyclochar
