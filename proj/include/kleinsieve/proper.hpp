#pragma once

// Kobayashi's criterion for proper actions, on explicit subspaces of a:
// L acts properly on G/H iff w(a_l) and a_h meet only in 0 for every w in
// the little Weyl group.  a is identified with a* through the Killing form
// and vectors are given in simple restricted root coordinates, where the
// little Weyl group acts by the reflection matrices of the reduced system.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "core/error.hpp"
#include "core/json_util.hpp"
#include "core/rational.hpp"
#include "realform.hpp"
#include "rootsys.hpp"

namespace kleinsieve {

struct PropernessQuery {
    std::string ambient; ///< real form name, informational
    std::shared_ptr<const RestrictedRootSystem> restricted;
    std::vector<RationalVector> a_h;
    std::vector<RationalVector> a_l;

    /// Throws PreconditionError on wrong vector lengths or dependent bases.
    void validate() const {
        if (!restricted) throw PreconditionError("properness query without restricted root system");
        const auto n = static_cast<std::size_t>(restricted->rank());
        for (const auto* basis : {&a_h, &a_l}) {
            for (const auto& v : *basis)
                if (v.size() != n)
                    throw PreconditionError("basis vector of length " + std::to_string(v.size()) +
                                            " in a space of dimension " + std::to_string(n));
            if (rank(*basis) != basis->size()) throw PreconditionError("basis vectors are linearly dependent");
        }
    }

    /// {"format": "kleinsieve-proper-query", "version": 1, "ambient": "g2(2)",
    ///  "a_h": [["1", "0"]], "a_l": [["1/2", 1]]}
    static PropernessQuery from_json(const nlohmann::json& doc, const RealFormCatalog& catalog,
                                     const std::string& source = "query") {
        using namespace json_util;
        check_header(doc, "kleinsieve-proper-query", source);
        check_keys(doc, {"format", "version", "ambient", "a_h", "a_l"}, {"note"}, source);
        PropernessQuery q;
        q.ambient = get<std::string>(doc, "ambient", source);
        const auto rec = catalog.ptr(q.ambient);
        if (rec->is_compact()) throw DataError(source + ": ambient '" + q.ambient + "' is compact");
        q.restricted = rec->restricted;
        auto read_basis = [&](const char* key) {
            std::vector<RationalVector> out;
            const auto& rows = doc.at(key);
            if (!rows.is_array()) throw DataError(source + ": '" + key + "' must be a list of vectors");
            for (const auto& row : rows) {
                if (!row.is_array()) throw DataError(source + ": '" + key + "' must be a list of vectors");
                RationalVector v;
                for (const auto& x : row) {
                    if (x.is_number_integer()) v.emplace_back(x.get<long long>());
                    else if (x.is_string()) {
                        try {
                            v.push_back(parse_rational(x.get<std::string>()));
                        } catch (const Error& e) {
                            throw DataError(source + ": " + e.what());
                        }
                    } else
                        throw DataError(source + ": entries must be integers or rational strings");
                }
                out.push_back(std::move(v));
            }
            return out;
        };
        q.a_h = read_basis("a_h");
        q.a_l = read_basis("a_l");
        try {
            q.validate();
        } catch (const PreconditionError& e) {
            throw DataError(source + ": " + e.what());
        }
        return q;
    }

    static PropernessQuery load(const std::filesystem::path& file, const RealFormCatalog& catalog) {
        return from_json(json_util::read_file(file), catalog, file.string());
    }
};

struct PropernessResult {
    bool proper = true;
    std::optional<WeylElement> witness; ///< first w (breadth-first order) with w(a_l) meeting a_h
};

inline RationalVector apply(const IntMatrix& m, const RationalVector& v) {
    RationalVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) out[i] += m(i, j) * v[j];
    return out;
}

inline PropernessResult properness_test(const PropernessQuery& q, std::uint64_t cap = kDefaultWeylCap) {
    q.validate();
    const auto n = static_cast<std::size_t>(q.restricted->rank());
    PropernessResult res;
    if (q.a_h.empty() || q.a_l.empty()) return res;
    if (q.a_h.size() + q.a_l.size() > n) {
        res.proper = false;
        res.witness = WeylElement::identity(n);
        return res;
    }
    const std::size_t full = q.a_h.size() + q.a_l.size();
    for_each_weyl_element(q.restricted->reduced(), cap, [&](const WeylElement& w) {
        std::vector<RationalVector> rows = q.a_h;
        for (const auto& v : q.a_l) rows.push_back(apply(w.matrix(), v));
        if (rank(rows) < full) {
            res.proper = false;
            res.witness = w;
            return false;
        }
        return true;
    });
    return res;
}

/// d(G) = d(H) + d(L) with d the dimension of p (the noncompact dimension).
inline bool dimension_condition(int d_g, int d_h, int d_l) {
    if (d_g < 0 || d_h < 0 || d_l < 0) throw PreconditionError("negative dimension");
    return d_g == d_h + d_l;
}

} // namespace kleinsieve
