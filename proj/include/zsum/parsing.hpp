#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsum/block_monoid.hpp"
#include "zsum/config.hpp"
#include "zsum/group.hpp"

namespace zsum {

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace detail

/// Comma-separated integer list, e.g. "0,8,4".
inline std::vector<std::int64_t> parse_int_vector(std::string_view text) {
    std::string compact = detail::strip_spaces(text);
    if (compact.empty()) throw std::invalid_argument("empty integer list");
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t comma = compact.find(',', pos);
        std::string_view tok(compact.data() + pos,
                             (comma == std::string::npos ? compact.size() : comma) - pos);
        out.push_back(detail::parse_int(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == compact.size()) throw std::invalid_argument("trailing comma in list");
    }
    return out;
}

/// A parenthesized residue tuple matching the group's rank, e.g. "(1,1)".
inline GroupElement parse_group_element(std::string_view text, const FiniteAbelianGroup& g) {
    std::string compact = detail::strip_spaces(text);
    if (compact.size() < 3 || compact.front() != '(' || compact.back() != ')')
        throw std::invalid_argument("expected a parenthesized tuple, got '" +
                                    std::string(text) + "'");
    auto residues = parse_int_vector(compact.substr(1, compact.size() - 2));
    if (static_cast<int>(residues.size()) != g.rank())
        throw std::invalid_argument("element '" + std::string(text) + "' does not match " +
                                    "the rank of " + g.to_string());
    return GroupElement(g, std::move(residues));
}

/// A comma-separated list of parenthesized tuples, e.g. "(1,1),(1,2)".
inline ElementTuple parse_element_tuple(std::string_view text,
                                        const FiniteAbelianGroup& g) {
    std::string compact = detail::strip_spaces(text);
    std::vector<GroupElement> elems;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        if (compact[pos] == ',') {
            ++pos;
            continue;
        }
        if (compact[pos] != '(')
            throw std::invalid_argument("expected '(' in element list: " +
                                        std::string(text));
        std::size_t close = compact.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced parenthesis in element list");
        elems.push_back(parse_group_element(compact.substr(pos, close - pos + 1), g));
        pos = close + 1;
    }
    if (elems.empty()) throw std::invalid_argument("empty element list");
    return ElementTuple(g, std::move(elems));
}

/// A range "a..b" or a single value "a"; returns {lo, hi}.
inline std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    std::string compact = detail::strip_spaces(text);
    std::size_t dots = compact.find("..");
    if (dots == std::string::npos) {
        std::int64_t v = detail::parse_int(compact);
        return {v, v};
    }
    std::int64_t lo = detail::parse_int(compact.substr(0, dots));
    std::int64_t hi = detail::parse_int(compact.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range '" + std::string(text) +
                                             "' has hi < lo");
    return {lo, hi};
}

inline OutputFormat parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::Table;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + std::string(text) +
                                "' (expected table, json or csv)");
}

/// Values read from a TOML-style config file; only the keys present are set.
struct ConfigFileValues {
    std::optional<std::int64_t> budget_candidates;
    std::optional<int> workers;
    std::optional<OutputFormat> output_format;
    std::optional<bool> automorphism_pruning;
};

/// Reads `key = value` lines; '#' comments and [section] headers are ignored.
inline ConfigFileValues read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    ConfigFileValues values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string compact = detail::strip_spaces(line);
        if (compact.empty() || compact.front() == '[') continue;
        std::size_t eq = compact.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = compact.substr(0, eq);
        std::string value = compact.substr(eq + 1);
        if (!value.empty() && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (key == "budget_candidates")
            values.budget_candidates = detail::parse_int(value);
        else if (key == "workers")
            values.workers = static_cast<int>(detail::parse_int(value));
        else if (key == "output_format")
            values.output_format = parse_output_format(value);
        else if (key == "automorphism_pruning") {
            if (value == "true")
                values.automorphism_pruning = true;
            else if (value == "false")
                values.automorphism_pruning = false;
            else
                throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                            ": expected true or false");
        } else {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return values;
}

inline void apply_config_file(RunConfig& cfg, const ConfigFileValues& values) {
    if (values.budget_candidates) cfg.budget_candidates = *values.budget_candidates;
    if (values.workers) cfg.workers = *values.workers;
    if (values.output_format) cfg.output_format = *values.output_format;
    if (values.automorphism_pruning) cfg.automorphism_pruning = *values.automorphism_pruning;
}

}  // namespace zsum
