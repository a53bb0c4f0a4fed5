#pragma once

/**
 * @file fixtures.hpp
 * @brief Deterministic generators of certified example structures built
 *        from finite groups: group bialgebras and their twists, crossed
 *        G-set YD modules, graded YD modules, cyclic R-matrices and
 *        bicharacter forms.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "homyd/hom_structures.hpp"
#include "homyd/quasitriangular.hpp"
#include "homyd/representations.hpp"
#include "homyd/yetter_drinfeld.hpp"

namespace homyd {

/// A finite group as a Cayley table, cayley[a][b] = ab.
class GroupPresentation {
   public:
    GroupPresentation(std::string name, std::vector<std::vector<std::size_t>> cayley) : name_(std::move(name)), cayley_(std::move(cayley)) {
        const auto n = cayley_.size();
        if (n == 0) throw PreconditionError("group " + name_ + " is empty");
        for (std::size_t a = 0; a < n; ++a) {
            if (cayley_[a].size() != n) throw PreconditionError("row " + std::to_string(a) + " of the Cayley table has the wrong length");
            for (auto x : cayley_[a])
                if (x >= n) throw PreconditionError("Cayley table entry out of range in row " + std::to_string(a));
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw PreconditionError("Cayley table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ")");
        std::vector<std::size_t> units;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
            if (ok) units.push_back(e);
        }
        if (units.size() != 1) throw PreconditionError("Cayley table has no unique identity");
        identity_ = units[0];
        inverse_.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            auto it = std::find(cayley_[a].begin(), cayley_[a].end(), identity_);
            if (it == cayley_[a].end()) throw PreconditionError("element " + std::to_string(a) + " has no inverse");
            std::size_t b = static_cast<std::size_t>(it - cayley_[a].begin());
            if (mul(b, a) != identity_) throw PreconditionError("element " + std::to_string(a) + " has no two-sided inverse");
            inverse_[a] = b;
        }
    }

    const std::string& name() const { return name_; }
    std::size_t order() const { return cayley_.size(); }
    const std::vector<std::vector<std::size_t>>& cayley() const { return cayley_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    bool is_abelian() const {
        for (std::size_t a = 0; a < order(); ++a)
            for (std::size_t b = 0; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

   private:
    std::string name_;
    std::vector<std::vector<std::size_t>> cayley_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// C_n with basis index i standing for g^i.
inline GroupPresentation cyclic_group(std::size_t n) {
    if (n == 0) throw PreconditionError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return {"C" + std::to_string(n), std::move(t)};
}

/// S_n on permutations in lexicographic order (index 0 is the identity); (st)(i) = s(t(i)).
inline GroupPresentation symmetric_group(std::size_t n) {
    if (n == 0 || n > 5) throw PreconditionError("symmetric group degree must be in 1..5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index(c);
        }
    return {"S" + std::to_string(n), std::move(t)};
}

using GroupMap = std::vector<std::size_t>;

inline bool is_group_endomorphism(const GroupPresentation& g, const GroupMap& f) {
    if (f.size() != g.order()) return false;
    for (auto x : f)
        if (x >= g.order()) return false;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (f[g.mul(a, b)] != g.mul(f[a], f[b])) return false;
    return true;
}

inline bool is_group_automorphism(const GroupPresentation& g, const GroupMap& f) {
    if (!is_group_endomorphism(g, f)) return false;
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// h -> t h t^{-1}.
inline GroupMap inner_automorphism(const GroupPresentation& g, std::size_t t) {
    if (t >= g.order()) throw PreconditionError("conjugating element out of range");
    GroupMap f(g.order());
    for (std::size_t h = 0; h < g.order(); ++h) f[h] = g.mul(g.mul(t, h), g.inverse(t));
    return f;
}

/// g^i -> g^{ki mod n}.
inline GroupMap cyclic_power_map(std::size_t n, std::size_t k) {
    GroupMap f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = (k * i) % n;
    return f;
}

template <ExactField F>
LinearMap<F> linearize(const F& field, const GroupMap& f) {
    return basis_map(field, f.size(), f.size(), [&](std::size_t i) { return f[i]; });
}

/// k[G]: product from the Cayley table, every basis element grouplike.
template <ExactField F>
ClassicalBialgebra<F> group_bialgebra(const F& field, const GroupPresentation& g) {
    const auto n = g.order();
    auto mu = LinearMap<F>::from_columns(field, {n}, {n, n}, [&](std::size_t c) {
        return typename LinearMap<F>::Column{{g.mul(c / n, c % n), field.one()}};
    });
    auto delta = LinearMap<F>::from_columns(field, {n, n}, {n}, [&](std::size_t c) { return typename LinearMap<F>::Column{{c * n + c, field.one()}}; });
    ClassicalBialgebra<F> out(std::move(mu), std::move(delta));
    detail::require_certified(check_classical_bialgebra(out), "group bialgebra " + g.name());
    return out;
}

/// k[C_n] twisted by g -> g^k; the structure map is invertible iff gcd(k, n) = 1.
template <ExactField F>
HomBialgebra<F> cyclic_endo_twist(const F& field, std::size_t n, std::size_t k) {
    auto g = cyclic_group(n);
    return twist_bialgebra(group_bialgebra(field, g), linearize(field, cyclic_power_map(n, k % n)));
}

/// Crossed G-set: h . m = h m h^{-1}, m -> m (x) m.
template <ExactField F>
ClassicalYD<F> conjugation_classical_yd(const F& field, const GroupPresentation& g) {
    const auto n = g.order();
    auto act = LinearMap<F>::from_columns(field, {n}, {n, n}, [&](std::size_t c) {
        const auto h = c / n, m = c % n;
        return typename LinearMap<F>::Column{{g.mul(g.mul(h, m), g.inverse(h)), field.one()}};
    });
    auto coact = LinearMap<F>::from_columns(field, {n, n}, {n}, [&](std::size_t c) { return typename LinearMap<F>::Column{{c * n + c, field.one()}}; });
    return {group_bialgebra(field, g), std::move(act), std::move(coact)};
}

/// The crossed G-set twisted by a group automorphism on both the base and the carrier.
template <ExactField F>
YDModule<F> conjugation_yd(const F& field, const GroupPresentation& g, const GroupMap& aut) {
    if (!is_group_automorphism(g, aut)) throw PreconditionError("map is not an automorphism of " + g.name());
    auto a = linearize(field, aut);
    return twist_yd(conjugation_classical_yd(field, g), a, a);
}

/// Over k[C_n]: h . m = m for group elements h, m = g^i -> g^{si} (x) g^i.
template <ExactField F>
ClassicalYD<F> graded_trivial_classical_yd(const F& field, std::size_t n, std::size_t s) {
    auto g = cyclic_group(n);
    auto act = LinearMap<F>::from_columns(field, {n}, {n, n}, [&](std::size_t c) { return typename LinearMap<F>::Column{{c % n, field.one()}}; });
    auto coact = LinearMap<F>::from_columns(field, {n, n}, {n}, [&](std::size_t i) {
        return typename LinearMap<F>::Column{{((s * i) % n) * n + i, field.one()}};
    });
    return {group_bialgebra(field, g), std::move(act), std::move(coact)};
}

/// graded_trivial_classical_yd twisted by g -> g^k on base and carrier; gcd(k, n) must be 1.
template <ExactField F>
YDModule<F> graded_trivial_yd(const F& field, std::size_t n, std::size_t s, std::size_t k) {
    auto a = linearize(field, cyclic_power_map(n, k % n));
    return twist_yd(graded_trivial_classical_yd(field, n, s), a, a);
}

/// H acting on itself by its product.
template <ExactField F>
ModuleStruct<F> regular_module(const HomBialgebra<F>& h) {
    ModuleStruct<F> out(h.algebra(), h.mu(), h.alpha());
    detail::require_certified(check_module(out), "regular module");
    return out;
}

/// H coacting on itself by its coproduct.
template <ExactField F>
ComoduleStruct<F> regular_comodule(const HomBialgebra<F>& h) {
    ComoduleStruct<F> out(h.coalgebra(), h.delta(), h.alpha());
    detail::require_certified(check_comodule(out), "regular comodule");
    return out;
}

/// Zero action on a d-dimensional carrier with identity structure map.
template <ExactField F>
ModuleStruct<F> zero_module(const HomBialgebra<F>& h, std::size_t d) {
    return {h.algebra(), LinearMap<F>(h.field(), {d}, {h.dim(), d}), LinearMap<F>::identity(h.field(), {d})};
}

// ---------------------------------------------------------------------------
// Roots of unity and the cyclic (co)quasitriangular structures

/// Smallest j >= 1 with w^j = 1, or 0 if none up to `limit`.
template <ExactField F>
std::size_t multiplicative_order(const F& field, const typename F::value_type& w, std::size_t limit) {
    if (w.is_zero()) return 0;
    auto x = w;
    for (std::size_t j = 1; j <= limit; ++j) {
        if (x == field.one()) return j;
        x = x * w;
    }
    return 0;
}

/// Smallest prime p >= 5 with n | p - 1.
inline std::uint64_t smallest_prime_with_roots(std::uint64_t n) {
    if (n == 0) throw PreconditionError("order must be positive");
    for (std::uint64_t p = 5;; ++p)
        if (is_prime(p) && (p - 1) % n == 0) return p;
}

/// Smallest residue of multiplicative order exactly n.
inline ModP primitive_root_of_unity(const PrimeField& field, std::uint64_t n) {
    const auto p = field.characteristic();
    if (n == 0 || (p - 1) % n) throw PreconditionError(std::to_string(n) + " does not divide " + std::to_string(p) + " - 1");
    for (std::uint64_t w = 1; w < p; ++w)
        if (multiplicative_order(field, field.from_int(static_cast<long long>(w)), n) == n) return field.from_int(static_cast<long long>(w));
    throw PreconditionError("no root of unity of order " + std::to_string(n));
}

namespace detail {

template <ExactField F>
void require_root_of_unity(const F& field, std::size_t n, const typename F::value_type& omega) {
    if (n == 0) throw PreconditionError("group order must be positive");
    if (multiplicative_order(field, omega, n) != n)
        throw PreconditionError("omega = " + omega.str() + " does not have multiplicative order " + std::to_string(n));
}

}  // namespace detail

/// R = (1/n) sum_{i,j} omega^{-ij} g^i (x) g^j on k[C_n] twisted by g -> g^k.
template <ExactField F>
RElement<F> cyclic_r_matrix(const F& field, std::size_t n, const typename F::value_type& omega, std::size_t k) {
    detail::require_root_of_unity(field, n, omega);
    auto n_scalar = field.from_int(static_cast<long long>(n));
    if (n_scalar.is_zero()) throw PreconditionError(std::to_string(n) + " is not invertible in the field");
    auto inv_n = n_scalar.inverse();
    auto inv_omega = omega.inverse();
    Matrix<typename F::value_type> entries(n, std::vector<typename F::value_type>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i][j] = inv_n * power(inv_omega, (i * j) % n, field.one());
    return RElement<F>::from_matrix(cyclic_endo_twist(field, n, k), entries);
}

/// sigma(g^i (x) g^j) = omega^{ij} on k[C_n] twisted by g -> g^k.
template <ExactField F>
SigmaForm<F> cyclic_bicharacter_sigma(const F& field, std::size_t n, const typename F::value_type& omega, std::size_t k) {
    detail::require_root_of_unity(field, n, omega);
    Matrix<typename F::value_type> entries(n, std::vector<typename F::value_type>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i][j] = power(omega, (i * j) % n, field.one());
    return SigmaForm<F>::from_matrix(cyclic_endo_twist(field, n, k), entries);
}

}  // namespace homyd
