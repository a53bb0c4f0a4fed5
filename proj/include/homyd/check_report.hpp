#pragma once

/**
 * @file check_report.hpp
 * @brief Counterexample-carrying results of law checks.
 *
 * Every law in the library is an equality of two linear maps. A failure is
 * one domain basis tensor on which the two sides differ, together with both
 * evaluated images.
 */

#include <string>
#include <utility>
#include <vector>

#include "homyd/linear_map.hpp"

namespace homyd {

template <ExactField F>
struct Failure {
    std::string law;
    MultiIndex index;  ///< basis multi-index in the domain of the law
    Dims value_dims;   ///< factorization of the space the two sides live in
    typename LinearMap<F>::Column lhs;
    typename LinearMap<F>::Column rhs;
};

template <ExactField F>
struct CheckReport {
    std::string law;
    std::vector<Failure<F>> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    explicit operator bool() const { return passed(); }

    void absorb(CheckReport other) {
        for (auto& f : other.failures) failures.push_back(std::move(f));
        for (auto& n : other.notes) notes.push_back(std::move(n));
    }

    /// First few failures, one line each.
    std::string summary(std::size_t limit = 3) const {
        if (passed()) return law + ": pass";
        std::string s = law + ": " + std::to_string(failures.size()) + " failure(s)";
        for (std::size_t i = 0; i < failures.size() && i < limit; ++i) {
            s += "\n  " + failures[i].law + " at (";
            for (std::size_t k = 0; k < failures[i].index.size(); ++k) s += (k ? "," : "") + std::to_string(failures[i].index[k]);
            s += ")";
        }
        return s;
    }
};

/// Appends one failure per basis tensor on which lhs and rhs disagree.
template <ExactField F>
void compare_maps(CheckReport<F>& report, const std::string& law, const LinearMap<F>& lhs, const LinearMap<F>& rhs) {
    if (lhs.domain() != rhs.domain() || lhs.codomain() != rhs.codomain())
        throw ShapeError(law + ": sides have shapes " + lhs.shape() + " and " + rhs.shape());
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
        if (lhs.column(c) == rhs.column(c)) continue;
        report.failures.push_back({law, unflatten(lhs.domain(), c), lhs.codomain(), lhs.column(c), rhs.column(c)});
    }
}

template <ExactField F>
CheckReport<F> check_equal(const std::string& law, const LinearMap<F>& lhs, const LinearMap<F>& rhs) {
    CheckReport<F> r{law, {}, {}};
    compare_maps(r, law, lhs, rhs);
    return r;
}

}  // namespace homyd
