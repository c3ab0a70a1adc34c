#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace kleinsieve {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Isomorphism type of a simple complex Lie algebra.
///
/// Construction canonicalizes the low-rank coincidences B1 = C1 = A1,
/// C2 = B2 and D3 = A3, so every isomorphism class has exactly one value.
/// D1, D2 and the non-existent exceptional ranks are rejected.
class SimpleType {
public:
    static SimpleType make(Family family, int rank) {
        if (rank < 1) throw InvalidType("rank must be positive");
        switch (family) {
        case Family::A:
            break;
        case Family::B:
        case Family::C:
            if (rank == 1) family = Family::A;
            else if (rank == 2) family = Family::B;
            break;
        case Family::D:
            if (rank <= 2) throw InvalidType("D" + std::to_string(rank) + " is not simple");
            if (rank == 3) family = Family::A;
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw InvalidType("E" + std::to_string(rank) + " does not exist");
            break;
        case Family::F:
            if (rank != 4) throw InvalidType("F" + std::to_string(rank) + " does not exist");
            break;
        case Family::G:
            if (rank != 2) throw InvalidType("G" + std::to_string(rank) + " does not exist");
            break;
        default:
            throw InvalidType("unknown family");
        }
        return SimpleType(family, rank);
    }

    /// True iff (family, rank) is already in canonical form.
    static bool is_canonical(Family family, int rank) {
        try {
            return make(family, rank) == SimpleType(family, rank);
        } catch (const InvalidType&) {
            return false;
        }
    }

    /// Accepts "E6", "a3", "D4" ...
    static SimpleType parse(std::string_view text) {
        if (text.size() < 2) throw InvalidType("bad simple type '" + std::string(text) + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
        if (f < 'A' || f > 'G') throw InvalidType("bad family in '" + std::string(text) + "'");
        auto digits = text.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            digits.size() > 3)
            throw InvalidType("bad rank in '" + std::string(text) + "'");
        return make(static_cast<Family>(f), std::stoi(std::string(digits)));
    }

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }

    int dimension() const noexcept {
        const int n = rank_;
        switch (family_) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
        case Family::F: return 52;
        case Family::G: return 14;
        }
        return 0;
    }

    /// Order of the Weyl group from the classical product formulas.
    std::uint64_t weyl_order() const noexcept {
        auto factorial = [](int k) {
            std::uint64_t f = 1;
            for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
            return f;
        };
        const int n = rank_;
        switch (family_) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << n) * factorial(n);
        case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
        case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        case Family::F: return 1152;
        case Family::G: return 12;
        }
        return 0;
    }

    bool is_exceptional() const noexcept {
        return family_ == Family::E || family_ == Family::F || family_ == Family::G;
    }

    std::string name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

    friend bool operator==(const SimpleType&, const SimpleType&) = default;
    friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
    friend std::ostream& operator<<(std::ostream& os, const SimpleType& t) { return os << t.name(); }

private:
    SimpleType(Family f, int r) : family_(f), rank_(r) {}
    Family family_;
    int rank_;
};

/// Isomorphism type of a nonzero semisimple complex Lie algebra: a multiset
/// of simple types kept in canonical order (higher rank first, then family).
class SemisimpleType {
public:
    SemisimpleType(SimpleType t) : factors_{t} {} // NOLINT: implicit by intent

    static SemisimpleType make(std::vector<SimpleType> factors) {
        if (factors.empty()) throw InvalidType("semisimple type needs at least one factor");
        return SemisimpleType(std::move(factors));
    }

    /// Accepts "B4+2A1", "A1+A1", "E7".
    static SemisimpleType parse(std::string_view text) {
        std::vector<SimpleType> out;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto plus = text.find('+', start);
            auto part = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
            std::size_t k = 0;
            while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
            int mult = k == 0 ? 1 : std::stoi(std::string(part.substr(0, k)));
            if (mult < 1) throw InvalidType("bad multiplicity in '" + std::string(text) + "'");
            auto t = SimpleType::parse(part.substr(k));
            out.insert(out.end(), static_cast<std::size_t>(mult), t);
            if (plus == std::string_view::npos) break;
            start = plus + 1;
        }
        return make(std::move(out));
    }

    const std::vector<SimpleType>& factors() const noexcept { return factors_; }
    bool is_simple() const noexcept { return factors_.size() == 1; }

    int rank() const noexcept {
        int r = 0;
        for (const auto& f : factors_) r += f.rank();
        return r;
    }
    int dimension() const noexcept {
        int d = 0;
        for (const auto& f : factors_) d += f.dimension();
        return d;
    }

    /// Canonical name, e.g. "B4+2A1".
    std::string name() const {
        std::string out;
        for (std::size_t i = 0; i < factors_.size();) {
            std::size_t j = i;
            while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
            if (!out.empty()) out += '+';
            if (j - i > 1) out += std::to_string(j - i);
            out += factors_[i].name();
            i = j;
        }
        return out;
    }

    friend bool operator==(const SemisimpleType&, const SemisimpleType&) = default;
    friend auto operator<=>(const SemisimpleType& a, const SemisimpleType& b) { return a.factors_ <=> b.factors_; }
    friend std::ostream& operator<<(std::ostream& os, const SemisimpleType& t) { return os << t.name(); }

private:
    explicit SemisimpleType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end(), [](const SimpleType& a, const SimpleType& b) {
            if (a.rank() != b.rank()) return a.rank() > b.rank();
            return a.family() < b.family();
        });
    }
    std::vector<SimpleType> factors_;
};

} // namespace kleinsieve
