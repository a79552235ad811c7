#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rankfuzz/ranking.hpp"

namespace rankfuzz {

enum class RankingFormat { Csv, Json };

// CSV: UTF-8, header line `item,score`, then one `id,score` row per item.
// Rows end in LF (a trailing CR is stripped). Ids are taken verbatim and may
// not contain ',' or line breaks; there is no quoting. Scores are decimal
// literals as accepted by std::from_chars. Blank lines are ignored.
//
// JSON: a single object mapping id -> number. Member order is the input
// order, so it decides how zero-score ties are broken.

/// Throws ParseError (with line or key location) on malformed input, or any
/// Ranking::create error on invalid content.
Ranking parse_ranking(std::string_view bytes, RankingFormat format,
                      TieMode mode = TieMode::Permissive);

/// Scores are written in shortest round-trip form, so parse(serialize(r)) == r.
std::string serialize_ranking(const Ranking& r, RankingFormat format);

/// Format from the file extension: `.json` is JSON, anything else CSV.
RankingFormat format_for_path(const std::filesystem::path& path);

Ranking load_ranking(const std::filesystem::path& path, TieMode mode = TieMode::Permissive);
void save_ranking(const Ranking& r, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace rankfuzz
