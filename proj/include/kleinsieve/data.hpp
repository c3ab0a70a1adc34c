#pragma once

// Loads the four shipped data files from one directory.

#include <filesystem>

#include "catalog.hpp"
#include "core/error.hpp"
#include "eliminate.hpp"
#include "subalg.hpp"

namespace kleinsieve {

struct DataSet {
    RealFormCatalog catalog;
    SSubalgebraCatalog s_catalog;
    LinearClassTable classes;
    FactSet facts;

    static DataSet load(const std::filesystem::path& dir) {
        if (!std::filesystem::is_directory(dir)) throw DataError("data directory '" + dir.string() + "' not found");
        DataSet d{RealFormCatalog::load(dir / "realforms.json"), SSubalgebraCatalog::load(dir / "s_subalgebras.json"),
                  LinearClassTable::load(dir / "linear_classes.json"), FactSet::load(dir / "facts.json")};
        if (d.catalog.empty()) throw DataError(dir.string() + ": real-form catalog is empty");
        d.facts.check_against(d.catalog);
        return d;
    }
};

} // namespace kleinsieve
