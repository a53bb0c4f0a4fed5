#pragma once

/**
 * @file hom_structures.hpp
 * @brief Hom-associative algebras, Hom-coassociative coalgebras, Hom-bialgebras,
 *        their classical counterparts, and the twisting constructions.
 *
 * Products are maps H (x) H -> H, coproducts H -> H (x) H, structure maps
 * H -> H. Nothing is unital or counital.
 */

#include <stdexcept>
#include <string>

#include "homyd/check_report.hpp"
#include "homyd/linear_map.hpp"

namespace homyd {

namespace detail {

template <ExactField F>
std::size_t require_endo(const LinearMap<F>& m, const char* what) {
    if (m.domain().size() != 1 || m.domain() != m.codomain())
        throw ShapeError(std::string(what) + " must be an endomorphism of a single space, got " + m.shape());
    return m.domain()[0];
}

template <ExactField F>
void require_binary(const LinearMap<F>& m, std::size_t d, const char* what) {
    if (m.domain() != Dims{d, d} || m.codomain() != Dims{d})
        throw ShapeError(std::string(what) + " must be " + dims_str({d, d}) + "->" + dims_str({d}) + ", got " + m.shape());
}

template <ExactField F>
void require_cobinary(const LinearMap<F>& m, std::size_t d, const char* what) {
    if (m.domain() != Dims{d} || m.codomain() != Dims{d, d})
        throw ShapeError(std::string(what) + " must be " + dims_str({d}) + "->" + dims_str({d, d}) + ", got " + m.shape());
}

inline std::string index_str(const MultiIndex& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

/// Raises PreconditionError naming the first counterexample of a failed hypothesis.
template <ExactField F>
void require_pass(const CheckReport<F>& r, const std::string& hypothesis) {
    if (r.passed()) return;
    const auto& f = r.failures.front();
    throw PreconditionError(hypothesis + ": " + f.law + " fails on basis " + index_str(f.index));
}

/// Constructors certify their results; a failure here is a library bug.
template <ExactField F>
void require_certified(const CheckReport<F>& r, const std::string& what) {
    if (!r.passed()) throw std::logic_error("internal: constructed " + what + " failed certification: " + r.summary());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical (strict) structures

template <ExactField F>
class Algebra {
   public:
    explicit Algebra(LinearMap<F> mu) : mu_(std::move(mu)) {
        if (mu_.codomain().size() != 1) throw ShapeError("product must land in a single space");
        detail::require_binary(mu_, mu_.codomain()[0], "product");
    }
    std::size_t dim() const { return mu_.codomain()[0]; }
    const F& field() const { return mu_.field(); }
    const LinearMap<F>& mu() const { return mu_; }
    bool operator==(const Algebra&) const = default;

   private:
    LinearMap<F> mu_;
};

template <ExactField F>
class Coalgebra {
   public:
    explicit Coalgebra(LinearMap<F> delta) : delta_(std::move(delta)) {
        if (delta_.domain().size() != 1) throw ShapeError("coproduct must start from a single space");
        detail::require_cobinary(delta_, delta_.domain()[0], "coproduct");
    }
    std::size_t dim() const { return delta_.domain()[0]; }
    const F& field() const { return delta_.field(); }
    const LinearMap<F>& delta() const { return delta_; }
    bool operator==(const Coalgebra&) const = default;

   private:
    LinearMap<F> delta_;
};

template <ExactField F>
class ClassicalBialgebra {
   public:
    ClassicalBialgebra(LinearMap<F> mu, LinearMap<F> delta) : mu_(std::move(mu)), delta_(std::move(delta)) {
        if (mu_.codomain().size() != 1) throw ShapeError("product must land in a single space");
        detail::require_binary(mu_, dim(), "product");
        detail::require_cobinary(delta_, dim(), "coproduct");
    }
    std::size_t dim() const { return mu_.codomain()[0]; }
    const F& field() const { return mu_.field(); }
    const LinearMap<F>& mu() const { return mu_; }
    const LinearMap<F>& delta() const { return delta_; }
    Algebra<F> algebra() const { return Algebra<F>(mu_); }
    Coalgebra<F> coalgebra() const { return Coalgebra<F>(delta_); }
    bool operator==(const ClassicalBialgebra&) const = default;

   private:
    LinearMap<F> mu_;
    LinearMap<F> delta_;
};

// ---------------------------------------------------------------------------
// Hom-structures

template <ExactField F>
class HomAlgebra {
   public:
    HomAlgebra(LinearMap<F> mu, LinearMap<F> alpha) : mu_(std::move(mu)), alpha_(std::move(alpha)) {
        detail::require_binary(mu_, detail::require_endo(alpha_, "structure map"), "product");
    }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return mu_.field(); }
    const LinearMap<F>& mu() const { return mu_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    bool operator==(const HomAlgebra&) const = default;

   private:
    LinearMap<F> mu_;
    LinearMap<F> alpha_;
};

template <ExactField F>
class HomCoalgebra {
   public:
    HomCoalgebra(LinearMap<F> delta, LinearMap<F> alpha) : delta_(std::move(delta)), alpha_(std::move(alpha)) {
        detail::require_cobinary(delta_, detail::require_endo(alpha_, "structure map"), "coproduct");
    }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return delta_.field(); }
    const LinearMap<F>& delta() const { return delta_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    bool operator==(const HomCoalgebra&) const = default;

   private:
    LinearMap<F> delta_;
    LinearMap<F> alpha_;
};

template <ExactField F>
class HomBialgebra {
   public:
    HomBialgebra(LinearMap<F> mu, LinearMap<F> delta, LinearMap<F> alpha)
        : mu_(std::move(mu)), delta_(std::move(delta)), alpha_(std::move(alpha)) {
        auto d = detail::require_endo(alpha_, "structure map");
        detail::require_binary(mu_, d, "product");
        detail::require_cobinary(delta_, d, "coproduct");
    }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return mu_.field(); }
    const LinearMap<F>& mu() const { return mu_; }
    const LinearMap<F>& delta() const { return delta_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    HomAlgebra<F> algebra() const { return {mu_, alpha_}; }
    HomCoalgebra<F> coalgebra() const { return {delta_, alpha_}; }
    bool alpha_invertible() const { return is_invertible(alpha_); }
    bool operator==(const HomBialgebra&) const = default;

   private:
    LinearMap<F> mu_;
    LinearMap<F> delta_;
    LinearMap<F> alpha_;
};

// ---------------------------------------------------------------------------
// Checkers

template <ExactField F>
CheckReport<F> check_associative(const Algebra<F>& a) {
    const auto& mu = a.mu();
    auto id = LinearMap<F>::identity(a.field(), {a.dim()});
    return check_equal("associativity", compose(mu, tensor_map(mu, id)), compose(mu, tensor_map(id, mu)));
}

template <ExactField F>
CheckReport<F> check_coassociative(const Coalgebra<F>& c) {
    const auto& delta = c.delta();
    auto id = LinearMap<F>::identity(c.field(), {c.dim()});
    return check_equal("coassociativity", compose(tensor_map(delta, id), delta), compose(tensor_map(id, delta), delta));
}

namespace detail {

/// Delta(hh') = h1 h'1 (x) h2 h'2.
template <ExactField F>
void compare_delta_multiplicative(CheckReport<F>& r, const LinearMap<F>& mu, const LinearMap<F>& delta, std::size_t d) {
    const auto& k = mu.field();
    auto middle = permutation(k, Dims{d, d, d, d}, {0, 2, 1, 3});
    compare_maps(r, "delta_multiplicative", compose(delta, mu), compose(tensor_map(mu, mu), middle, tensor_map(delta, delta)));
}

}  // namespace detail

template <ExactField F>
CheckReport<F> check_classical_bialgebra(const ClassicalBialgebra<F>& h) {
    CheckReport<F> r{"bialgebra", {}, {}};
    r.absorb(check_associative(h.algebra()));
    r.absorb(check_coassociative(h.coalgebra()));
    detail::compare_delta_multiplicative(r, h.mu(), h.delta(), h.dim());
    return r;
}

/// alpha o mu = mu o (alpha (x) alpha).
template <ExactField F>
CheckReport<F> check_algebra_endomorphism(const LinearMap<F>& mu, const LinearMap<F>& alpha) {
    return check_equal("multiplicativity", compose(alpha, mu), compose(mu, tensor_map(alpha, alpha)));
}

/// (alpha (x) alpha) o Delta = Delta o alpha.
template <ExactField F>
CheckReport<F> check_coalgebra_endomorphism(const LinearMap<F>& delta, const LinearMap<F>& alpha) {
    return check_equal("comultiplicativity", compose(tensor_map(alpha, alpha), delta), compose(delta, alpha));
}

template <ExactField F>
CheckReport<F> check_hom_algebra(const HomAlgebra<F>& a) {
    const auto& mu = a.mu();
    const auto& alpha = a.alpha();
    CheckReport<F> r{"hom_algebra", {}, {}};
    r.absorb(check_algebra_endomorphism(mu, alpha));
    compare_maps(r, "hom_associativity", compose(mu, tensor_map(alpha, mu)), compose(mu, tensor_map(mu, alpha)));
    return r;
}

template <ExactField F>
CheckReport<F> check_hom_coalgebra(const HomCoalgebra<F>& c) {
    const auto& delta = c.delta();
    const auto& alpha = c.alpha();
    CheckReport<F> r{"hom_coalgebra", {}, {}};
    r.absorb(check_coalgebra_endomorphism(delta, alpha));
    compare_maps(r, "hom_coassociativity", compose(tensor_map(delta, alpha), delta), compose(tensor_map(alpha, delta), delta));
    return r;
}

/// Both structure checks plus the three compatibility laws tying Delta to mu and alpha.
template <ExactField F>
CheckReport<F> check_hom_bialgebra(const HomBialgebra<F>& h) {
    const auto& mu = h.mu();
    const auto& delta = h.delta();
    const auto& alpha = h.alpha();
    CheckReport<F> r{"hom_bialgebra", {}, {}};
    r.absorb(check_hom_algebra(h.algebra()));
    r.absorb(check_hom_coalgebra(h.coalgebra()));
    compare_maps(r, "delta_alpha_exchange", compose(tensor_map(delta, alpha), delta), compose(tensor_map(alpha, delta), delta));
    detail::compare_delta_multiplicative(r, mu, delta, h.dim());
    compare_maps(r, "delta_commutes_alpha", compose(delta, alpha), compose(tensor_map(alpha, alpha), delta));
    return r;
}

// ---------------------------------------------------------------------------
// Twisting

/// (A, alpha o mu, alpha). alpha must be an algebra endomorphism of (A, mu).
template <ExactField F>
HomAlgebra<F> twist_algebra(const Algebra<F>& a, const LinearMap<F>& alpha) {
    if (alpha.domain() != Dims{a.dim()} || alpha.codomain() != Dims{a.dim()})
        throw ShapeError("twisting map " + alpha.shape() + " does not act on " + dims_str({a.dim()}));
    detail::require_pass(check_algebra_endomorphism(a.mu(), alpha), "twisting map is not an algebra endomorphism");
    HomAlgebra<F> out(compose(alpha, a.mu()), alpha);
    detail::require_certified(check_hom_algebra(out), "twisted algebra");
    return out;
}

/// (C, Delta o alpha, alpha). alpha must be a coalgebra endomorphism of (C, Delta).
template <ExactField F>
HomCoalgebra<F> twist_coalgebra(const Coalgebra<F>& c, const LinearMap<F>& alpha) {
    if (alpha.domain() != Dims{c.dim()} || alpha.codomain() != Dims{c.dim()})
        throw ShapeError("twisting map " + alpha.shape() + " does not act on " + dims_str({c.dim()}));
    detail::require_pass(check_coalgebra_endomorphism(c.delta(), alpha), "twisting map is not a coalgebra endomorphism");
    HomCoalgebra<F> out(compose(c.delta(), alpha), alpha);
    detail::require_certified(check_hom_coalgebra(out), "twisted coalgebra");
    return out;
}

template <ExactField F>
HomBialgebra<F> twist_bialgebra(const ClassicalBialgebra<F>& h, const LinearMap<F>& alpha) {
    if (alpha.domain() != Dims{h.dim()} || alpha.codomain() != Dims{h.dim()})
        throw ShapeError("twisting map " + alpha.shape() + " does not act on " + dims_str({h.dim()}));
    detail::require_pass(check_algebra_endomorphism(h.mu(), alpha), "twisting map is not a bialgebra endomorphism");
    detail::require_pass(check_coalgebra_endomorphism(h.delta(), alpha), "twisting map is not a bialgebra endomorphism");
    HomBialgebra<F> out(compose(alpha, h.mu()), compose(h.delta(), alpha), alpha);
    detail::require_certified(check_hom_bialgebra(out), "twisted bialgebra");
    return out;
}

/// A classical bialgebra viewed as a Hom-bialgebra with identity structure map.
template <ExactField F>
HomBialgebra<F> with_identity_twist(const ClassicalBialgebra<F>& h) {
    return {h.mu(), h.delta(), LinearMap<F>::identity(h.field(), {h.dim()})};
}

/// (a (x) b)(a' (x) b') = aa' (x) bb' with structure map alpha_A (x) alpha_B, flattened to one carrier.
template <ExactField F>
HomAlgebra<F> tensor_algebra(const HomAlgebra<F>& a, const HomAlgebra<F>& b) {
    const std::size_t da = a.dim(), db = b.dim();
    auto middle = permutation(a.field(), Dims{da, db, da, db}, {0, 2, 1, 3});
    auto mu = compose(tensor_map(a.mu(), b.mu()), middle).reshaped({da * db}, {da * db, da * db});
    HomAlgebra<F> out(std::move(mu), tensor_map(a.alpha(), b.alpha()).flat());
    if (check_hom_algebra(a).passed() && check_hom_algebra(b).passed())
        detail::require_certified(check_hom_algebra(out), "tensor product algebra");
    return out;
}

}  // namespace homyd
