#pragma once

// Catalog of simple real forms, loaded from a JSON document.
//
// {"format": "kleinsieve-realforms", "version": 1, "realforms": [
//    {"name": "e6(-14)", "type": "E6", "black": [3,4,5], "arrows": [[1,6]],
//     "compact": false, "expect": {"dim_k": 46, "real_rank": 2}}, ...]}
//
// Node labels are 1-based.  Everything else is recomputed from the diagram;
// "expect" values and the "compact" flag are cross-checked.

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"
#include "core/json_util.hpp"
#include "realform.hpp"

namespace kleinsieve {

class RealFormCatalog {
public:
    using Ptr = std::shared_ptr<const RealFormRecord>;

    RealFormCatalog() = default;

    static RealFormCatalog from_json(const nlohmann::json& doc, const std::string& source = "realforms") {
        using namespace json_util;
        check_header(doc, "kleinsieve-realforms", source);
        check_keys(doc, {"format", "version", "realforms"}, {"note"}, source);
        RealFormCatalog cat;
        std::map<SimpleType, std::shared_ptr<RootSystem>> systems;
        for (const auto& row : doc.at("realforms")) {
            std::string where = source + ": record";
            if (row.is_object() && row.contains("name") && row["name"].is_string())
                where += " '" + row["name"].get<std::string>() + "'";
            check_keys(row, {"name", "type", "black", "arrows"}, {"compact", "expect"}, where);
            auto name = get<std::string>(row, "name", where);
            if (name.empty()) throw DataError(where + ": empty name");
            if (cat.by_name_.contains(name)) throw DataError(where + ": duplicate name");
            SimpleType type = [&] {
                try {
                    return SimpleType::parse(get<std::string>(row, "type", where));
                } catch (const InvalidType& e) {
                    throw DataError(where + ": " + e.what());
                }
            }();
            if (type.name() != row["type"].get<std::string>()) throw DataError(where + ": type must be written canonically");
            auto black = get<std::vector<int>>(row, "black", where);
            auto arrow_rows = get<std::vector<std::vector<int>>>(row, "arrows", where);
            std::vector<SatakeDiagram::Arrow> arrows;
            for (const auto& a : arrow_rows) {
                if (a.size() != 2) throw DataError(where + ": arrows must be pairs");
                arrows.emplace_back(a[0], a[1]);
            }
            SatakeDiagram s = [&] {
                try {
                    return SatakeDiagram::from_labels(type, black, arrows);
                } catch (const DataError& e) {
                    throw DataError(where + ": " + e.what());
                }
            }();
            auto& rs = systems[type];
            if (!rs) rs = std::make_shared<RootSystem>(RootSystem::of(type));
            std::shared_ptr<const RealFormRecord> rec;
            try {
                rec = std::make_shared<const RealFormRecord>(make_real_form(name, s, *rs));
            } catch (const Error& e) {
                throw DataError(where + ": " + e.what());
            }

            const bool compact = row.contains("compact") ? get<bool>(row, "compact", where) : false;
            if (compact != rec->is_compact()) throw DataError(where + ": 'compact' flag disagrees with the Satake diagram");
            if (row.contains("expect")) {
                const auto& ex = row["expect"];
                check_keys(ex, {}, {"dim_g", "dim_k", "dim_p", "real_rank", "a_hyp_rank"}, where + " expect");
                auto cmp = [&](const char* key, int computed) {
                    if (!ex.contains(key)) return;
                    int stated = get<int>(ex, key, where);
                    if (stated != computed)
                        throw DataError(where + ": stated " + key + " = " + std::to_string(stated) + " but computed " +
                                        std::to_string(computed));
                };
                cmp("dim_g", rec->dims.dim_g);
                cmp("dim_k", rec->dims.dim_k);
                cmp("dim_p", rec->dims.dim_p);
                cmp("real_rank", rec->real_rank);
                cmp("a_hyp_rank", rec->a_hyp_rank);
            }
            cat.by_name_.emplace(name, cat.records_.size());
            cat.records_.push_back(std::move(rec));
        }
        return cat;
    }

    static RealFormCatalog load(const std::filesystem::path& file) {
        return from_json(json_util::read_file(file), file.string());
    }

    const std::vector<Ptr>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    const RealFormRecord* find(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        return it == by_name_.end() ? nullptr : records_[it->second].get();
    }

    Ptr ptr(std::string_view name) const {
        auto it = by_name_.find(std::string(name));
        if (it == by_name_.end()) throw DataError("unknown real form '" + std::string(name) + "'");
        return records_[it->second];
    }

    const RealFormRecord& at(std::string_view name) const { return *ptr(name); }

    /// Real forms of `t` in catalog order.
    std::vector<Ptr> forms_of(SimpleType t) const {
        std::vector<Ptr> out;
        for (const auto& r : records_)
            if (r->complex_type == t) out.push_back(r);
        return out;
    }

private:
    std::vector<Ptr> records_;
    std::map<std::string, std::size_t, std::less<>> by_name_;
};

} // namespace kleinsieve
