#pragma once

#include <kleinsieve/catalog.hpp>
#include <kleinsieve/eliminate.hpp>
#include <kleinsieve/subalg.hpp>

namespace fixture {

inline const kleinsieve::RealFormCatalog& catalog() {
    static const auto c = kleinsieve::RealFormCatalog::load(KS_DATA_DIR "/realforms.json");
    return c;
}
inline const kleinsieve::SSubalgebraCatalog& s_catalog() {
    static const auto c = kleinsieve::SSubalgebraCatalog::load(KS_DATA_DIR "/s_subalgebras.json");
    return c;
}
inline const kleinsieve::LinearClassTable& classes() {
    static const auto c = kleinsieve::LinearClassTable::load(KS_DATA_DIR "/linear_classes.json");
    return c;
}
inline const kleinsieve::FactSet& facts() {
    static const auto c = kleinsieve::FactSet::load(KS_DATA_DIR "/facts.json");
    return c;
}

} // namespace fixture
