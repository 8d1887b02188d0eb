#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfw/config.hpp"
#include "sfw/error.hpp"
#include "sfw/perm/group.hpp"

namespace sfw {

namespace detail {

struct TextPos {
    std::size_t line = 1, column = 1;
};

inline TextPos text_pos(const std::string& text, std::size_t offset) {
    TextPos p;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

inline std::string where(const std::string& source, const std::string& text, std::size_t offset) {
    TextPos p = text_pos(text, offset);
    return source + ":" + std::to_string(p.line) + ":" + std::to_string(p.column);
}

/// Byte offset of the `nth` string literal equal to `value` after the key
/// `"key"`; falls back to the key itself, then to 0.
inline std::size_t locate_literal(const std::string& text, const std::string& key, const std::string& value,
                                  std::size_t nth) {
    std::size_t at = text.find("\"" + key + "\"");
    if (at == std::string::npos) return 0;
    const std::string lit = nlohmann::json(value).dump();
    std::size_t pos = at;
    for (std::size_t k = 0; k <= nth; ++k) {
        std::size_t next = text.find(lit, pos + 1);
        if (next == std::string::npos) return at;
        pos = next;
    }
    return pos + 1;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json parse_text(const std::string& text, const std::string& source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
        throw InputError(where(source, text, off) + ": malformed JSON (" + e.what() + ")");
    }
}

inline PermGroup group_from_value(const nlohmann::json& j, const std::string& text, const std::string& source,
                                  const std::string& key_prefix, const Config& cfg) {
    if (!j.is_object() || !j.contains("degree"))
        throw InputError(source + ": group object needs \"degree\"");
    if (!j.at("degree").is_number_unsigned()) throw InputError(source + ": degree must be a nonnegative integer");
    const std::size_t n = j.at("degree").get<std::size_t>();
    if (n == 0) throw InputError(source + ": degree must be positive");
    std::vector<Permutation> gens;
    if (j.contains("generators_cycles")) {
        const auto& arr = j.at("generators_cycles");
        if (!arr.is_array()) throw InputError(source + ": generators_cycles must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) throw InputError(source + ": generators_cycles[" + std::to_string(i) + "] is not a string");
            const std::string s = arr[i].get<std::string>();
            try {
                gens.push_back(Permutation::from_cycles(n, s));
            } catch (const InputError& e) {
                std::size_t nth = static_cast<std::size_t>(std::count(arr.begin(), arr.begin() + static_cast<long>(i), arr[i]));
                std::size_t off = locate_literal(text, key_prefix + "generators_cycles", s, nth);
                throw InputError(where(source, text, off) + ": generators_cycles[" + std::to_string(i) + "]: " + e.what());
            }
        }
    } else if (j.contains("generators")) {
        const auto& arr = j.at("generators");
        if (!arr.is_array()) throw InputError(source + ": generators must be an array");
        std::size_t key_off = text.find("\"generators\"");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            try {
                auto img = arr[i].get<std::vector<Point>>();
                if (img.size() != n) throw InputError("image list has length " + std::to_string(img.size()));
                gens.emplace_back(std::move(img));
            } catch (const std::exception& e) {
                throw InputError(where(source, text, key_off == std::string::npos ? 0 : key_off) + ": generators[" +
                                 std::to_string(i) + "]: " + e.what());
            }
        }
    } else {
        throw InputError(source + ": group object needs \"generators\" or \"generators_cycles\"");
    }
    return PermGroup::generate(n, std::move(gens), cfg);
}

}  // namespace detail

/// {"degree": n, "generators": [[images...], ...]} or
/// {"degree": n, "generators_cycles": ["(0 1)(2 3)", ...]}. Errors carry
/// source:line:column.
inline PermGroup parse_group_json(const std::string& text, const std::string& source = "<input>",
                                  const Config& cfg = default_config()) {
    nlohmann::json j = detail::parse_text(text, source);
    return detail::group_from_value(j, text, source, "", cfg);
}

inline PermGroup load_group_file(const std::string& path, const Config& cfg = default_config()) {
    return parse_group_json(detail::read_file(path), path, cfg);
}

/// Canonical form: degree, generators in cycle notation and the order.
inline nlohmann::json group_json(const PermGroup& g) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& s : g.generators()) gens.push_back(s.to_cycles());
    return {{"degree", g.degree()}, {"generators_cycles", gens}, {"order", g.order()}};
}

/// One inclusion H ≤ G of the verification corpus.
struct CorpusEntry {
    std::string name;
    std::string file;
    PermGroup group;
    PermGroup subgroup;
};

/// {"name": ..., "group": {...}, "subgroup": {...}}
inline CorpusEntry parse_corpus_entry(const std::string& text, const std::string& source,
                                      const Config& cfg = default_config()) {
    nlohmann::json j = detail::parse_text(text, source);
    if (!j.is_object() || !j.contains("group") || !j.contains("subgroup"))
        throw InputError(source + ": corpus entry needs \"group\" and \"subgroup\"");
    std::string name = j.value("name", std::filesystem::path(source).stem().string());
    PermGroup g = detail::group_from_value(j.at("group"), text, source, "", cfg);
    PermGroup h = detail::group_from_value(j.at("subgroup"), text, source, "", cfg);
    if (h.degree() != g.degree()) throw InputError(source + ": group and subgroup degrees differ");
    PermGroup::require_subgroup(h, g, "subgroup");
    return {std::move(name), source, std::move(g), std::move(h)};
}

inline nlohmann::json corpus_entry_json(const CorpusEntry& e) {
    return {{"name", e.name}, {"group", group_json(e.group)}, {"subgroup", group_json(e.subgroup)}};
}

/// Result of scanning a corpus directory: parsed entries and, for files
/// that failed, the file name and the error.
struct CorpusLoad {
    std::vector<CorpusEntry> entries;
    std::vector<std::pair<std::string, std::string>> errors;
};

/// All *.json files of `dir`, in file-name order.
inline CorpusLoad load_corpus(const std::string& dir, const Config& cfg = default_config()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InputError("corpus directory " + dir + " does not exist");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    CorpusLoad out;
    for (const auto& f : files) {
        try {
            out.entries.push_back(parse_corpus_entry(detail::read_file(f.string()), f.string(), cfg));
        } catch (const Error& e) {
            out.errors.emplace_back(f.string(), e.what());
        }
    }
    return out;
}

}  // namespace sfw
