#include "rankfuzz/ranking_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "rankfuzz/error.hpp"

namespace rankfuzz {

namespace {

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Error parse_error(std::size_t line, const std::string& what) {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

Ranking parse_csv(std::string_view bytes, TieMode mode) {
    std::vector<std::string> items;
    std::vector<double> scores;
    bool seen_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t end = bytes.find('\n', pos);
        if (end == std::string_view::npos) {
            end = bytes.size();
        }
        std::string_view line = bytes.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!seen_header) {
            if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") {
                line.remove_prefix(3);
            }
            if (line != "item,score") {
                throw parse_error(line_no, "expected header 'item,score'");
            }
            seen_header = true;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw parse_error(line_no, "expected exactly two fields 'item,score'");
        }
        const std::string_view id = line.substr(0, comma);
        const std::string_view field = line.substr(comma + 1);
        if (id.empty()) {
            throw parse_error(line_no, "empty item id");
        }
        double value = 0.0;
        const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
            throw parse_error(line_no, "field 'score' is not a number: '" + std::string(field) + "'");
        }
        items.emplace_back(id);
        scores.push_back(value);
    }
    if (!seen_header) {
        throw parse_error(1, "missing header 'item,score'");
    }
    return Ranking::create(std::move(items), std::move(scores), mode);
}

Ranking parse_json(std::string_view bytes, TieMode mode) {
    using nlohmann::ordered_json;
    std::unordered_set<std::string> keys;
    std::string duplicate;
    // Duplicate keys are silently merged by the DOM, so catch them while parsing.
    const ordered_json::parser_callback_t track = [&](int depth, ordered_json::parse_event_t event,
                                                      ordered_json& parsed) {
        if (event == ordered_json::parse_event_t::key && depth == 1 && parsed.is_string()) {
            const auto& key = parsed.get_ref<const std::string&>();
            if (!keys.insert(key).second && duplicate.empty()) {
                duplicate = key;
            }
        }
        return true;
    };
    ordered_json doc;
    try {
        doc = ordered_json::parse(bytes.begin(), bytes.end(), track);
    } catch (const ordered_json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!duplicate.empty()) {
        throw Error(ErrorCode::DuplicateItemId, "item '" + duplicate + "' appears twice");
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::ParseError, "expected a JSON object mapping item -> score");
    }
    std::vector<std::string> items;
    std::vector<double> scores;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            throw Error(ErrorCode::ParseError, "key '" + key + "': score is not a number");
        }
        items.push_back(key);
        scores.push_back(value.get<double>());
    }
    return Ranking::create(std::move(items), std::move(scores), mode);
}

}  // namespace

Ranking parse_ranking(std::string_view bytes, RankingFormat format, TieMode mode) {
    return format == RankingFormat::Csv ? parse_csv(bytes, mode) : parse_json(bytes, mode);
}

std::string serialize_ranking(const Ranking& r, RankingFormat format) {
    std::string out;
    if (format == RankingFormat::Csv) {
        out = "item,score\n";
        for (std::size_t i = 0; i < r.size(); ++i) {
            out += r.items()[i];
            out += ',';
            out += shortest(r.scores()[i]);
            out += '\n';
        }
        return out;
    }
    // Hand-written so numbers keep the same shortest form as the CSV writer.
    out = "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += "\n  ";
        out += nlohmann::json(r.items()[i]).dump();
        out += ": ";
        out += shortest(r.scores()[i]);
    }
    out += "\n}\n";
    return out;
}

RankingFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? RankingFormat::Json : RankingFormat::Csv;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

Ranking load_ranking(const std::filesystem::path& path, TieMode mode) {
    try {
        return parse_ranking(read_file(path), format_for_path(path), mode);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.message());
    }
}

void save_ranking(const Ranking& r, const std::filesystem::path& path) {
    write_file(path, serialize_ranking(r, format_for_path(path)));
}

}  // namespace rankfuzz
