#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

#include "error.hpp"

namespace kleinsieve::json_util {

using json = nlohmann::json;

inline json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

/// Rejects keys outside `allowed` and reports missing `required` ones.
inline void check_keys(const json& obj, std::initializer_list<std::string_view> required,
                       std::initializer_list<std::string_view> optional, const std::string& where) {
    if (!obj.is_object()) throw DataError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto k : required) known = known || it.key() == k;
        for (auto k : optional) known = known || it.key() == k;
        if (!known) throw DataError(where + ": unknown field '" + it.key() + "'");
    }
    for (auto k : required)
        if (!obj.contains(std::string(k))) throw DataError(where + ": missing field '" + std::string(k) + "'");
}

/// Checks the {"format": ..., "version": 1} header shared by all data files.
inline void check_header(const json& doc, std::string_view format, const std::string& where) {
    if (!doc.is_object() || doc.value("format", "") != format)
        throw DataError(where + ": expected format '" + std::string(format) + "'");
    if (doc.value("version", 0) != 1) throw DataError(where + ": unsupported version");
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw DataError(where + ": bad or missing field '" + key + "'");
    }
}

} // namespace kleinsieve::json_util
