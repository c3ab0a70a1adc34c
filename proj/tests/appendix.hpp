#pragma once

#include <kleinsieve/realform.hpp>

#include <vector>

namespace appendix {

struct AppendixRow {
    const char* name;
    const char* type;
    std::vector<int> black; // 1-based, as printed
    std::vector<kleinsieve::SatakeDiagram::Arrow> arrows;
    const char* pattern; // nullptr for "--"
};

// The appendix table with its printed colourings and weight patterns.
inline const std::vector<AppendixRow>& rows() {
    static const std::vector<AppendixRow> table{
        {"so(1,7)", "D4", {2, 3, 4}, {}, nullptr},
        {"so(2,6)", "D4", {1, 3}, {}, "(0,a,0,0)"},
        {"so(3,5)", "D4", {}, {{3, 4}}, "(b,a,b,b)"},
        {"so(4,4)", "D4", {}, {}, "(b,a,b,b)"},
        {"e6(6)", "E6", {}, {}, "(a,b,a,c,a,a)"},
        {"e6(2)", "E6", {}, {{3, 5}, {1, 6}}, "(a,b,a,c,a,a)"},
        {"e6(-14)", "E6", {3, 4, 5}, {{1, 6}}, "(a,b,0,0,0,a)"},
        {"e6(-26)", "E6", {3, 4, 5}, {}, "(a,b,0,0,0,a)"},
        {"f4(4)", "F4", {}, {}, "(a,b,c,d)"},
        {"f4(-20)", "F4", {1, 2, 3}, {}, "(0,0,0,a)"},
    };
    return table;
}

} // namespace appendix
