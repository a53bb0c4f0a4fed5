#pragma once

/**
 * @file representations.hpp
 * @brief Left modules and left comodules over Hom-structures.
 *
 * An action is a map A (x) M -> M, a coaction a map M -> C (x) M. Structure
 * maps of carriers need not be bijective here.
 */

#include <string>

#include "homyd/check_report.hpp"
#include "homyd/hom_structures.hpp"

namespace homyd {

namespace detail {

template <ExactField F>
void require_action(const LinearMap<F>& act, std::size_t base, std::size_t carrier) {
    if (act.domain() != Dims{base, carrier} || act.codomain() != Dims{carrier})
        throw ShapeError("action must be " + dims_str({base, carrier}) + "->" + dims_str({carrier}) + ", got " + act.shape());
}

template <ExactField F>
void require_coaction(const LinearMap<F>& coact, std::size_t base, std::size_t carrier) {
    if (coact.domain() != Dims{carrier} || coact.codomain() != Dims{base, carrier})
        throw ShapeError("coaction must be " + dims_str({carrier}) + "->" + dims_str({base, carrier}) + ", got " + coact.shape());
}

}  // namespace detail

template <ExactField F>
class ClassicalModule {
   public:
    ClassicalModule(Algebra<F> base, LinearMap<F> act) : base_(std::move(base)), act_(std::move(act)) {
        if (act_.codomain().size() != 1) throw ShapeError("action must land in a single space");
        detail::require_action(act_, base_.dim(), act_.codomain()[0]);
    }
    const Algebra<F>& base() const { return base_; }
    const LinearMap<F>& act() const { return act_; }
    std::size_t dim() const { return act_.rows(); }
    bool operator==(const ClassicalModule&) const = default;

   private:
    Algebra<F> base_;
    LinearMap<F> act_;
};

template <ExactField F>
class ClassicalComodule {
   public:
    ClassicalComodule(Coalgebra<F> base, LinearMap<F> coact) : base_(std::move(base)), coact_(std::move(coact)) {
        if (coact_.domain().size() != 1) throw ShapeError("coaction must start from a single space");
        detail::require_coaction(coact_, base_.dim(), coact_.domain()[0]);
    }
    const Coalgebra<F>& base() const { return base_; }
    const LinearMap<F>& coact() const { return coact_; }
    std::size_t dim() const { return coact_.cols(); }
    bool operator==(const ClassicalComodule&) const = default;

   private:
    Coalgebra<F> base_;
    LinearMap<F> coact_;
};

/// Left module (M, alpha_M) over a Hom-associative algebra.
template <ExactField F>
class ModuleStruct {
   public:
    ModuleStruct(HomAlgebra<F> base, LinearMap<F> act, LinearMap<F> alpha)
        : base_(std::move(base)), act_(std::move(act)), alpha_(std::move(alpha)) {
        detail::require_action(act_, base_.dim(), detail::require_endo(alpha_, "carrier structure map"));
    }
    const HomAlgebra<F>& base() const { return base_; }
    const LinearMap<F>& act() const { return act_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return alpha_.field(); }
    bool operator==(const ModuleStruct&) const = default;

   private:
    HomAlgebra<F> base_;
    LinearMap<F> act_;
    LinearMap<F> alpha_;
};

/// Left comodule (M, alpha_M) over a Hom-coassociative coalgebra.
template <ExactField F>
class ComoduleStruct {
   public:
    ComoduleStruct(HomCoalgebra<F> base, LinearMap<F> coact, LinearMap<F> alpha)
        : base_(std::move(base)), coact_(std::move(coact)), alpha_(std::move(alpha)) {
        detail::require_coaction(coact_, base_.dim(), detail::require_endo(alpha_, "carrier structure map"));
    }
    const HomCoalgebra<F>& base() const { return base_; }
    const LinearMap<F>& coact() const { return coact_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return alpha_.field(); }
    bool operator==(const ComoduleStruct&) const = default;

   private:
    HomCoalgebra<F> base_;
    LinearMap<F> coact_;
    LinearMap<F> alpha_;
};

// ---------------------------------------------------------------------------
// Checkers

template <ExactField F>
CheckReport<F> check_classical_module(const ClassicalModule<F>& m) {
    auto id_a = LinearMap<F>::identity(m.base().field(), {m.base().dim()});
    auto id_m = LinearMap<F>::identity(m.base().field(), {m.dim()});
    return check_equal("module_associativity", compose(m.act(), tensor_map(id_a, m.act())), compose(m.act(), tensor_map(m.base().mu(), id_m)));
}

template <ExactField F>
CheckReport<F> check_classical_comodule(const ClassicalComodule<F>& m) {
    auto id_c = LinearMap<F>::identity(m.base().field(), {m.base().dim()});
    auto id_m = LinearMap<F>::identity(m.base().field(), {m.dim()});
    return check_equal("comodule_coassociativity", compose(tensor_map(m.base().delta(), id_m), m.coact()),
                       compose(tensor_map(id_c, m.coact()), m.coact()));
}

template <ExactField F>
CheckReport<F> check_module(const ModuleStruct<F>& m) {
    const auto& act = m.act();
    const auto& alpha_a = m.base().alpha();
    const auto& alpha_m = m.alpha();
    CheckReport<F> r{"module", {}, {}};
    compare_maps(r, "module_alpha_compat", compose(alpha_m, act), compose(act, tensor_map(alpha_a, alpha_m)));
    compare_maps(r, "module_hom_associativity", compose(act, tensor_map(alpha_a, act)), compose(act, tensor_map(m.base().mu(), alpha_m)));
    return r;
}

template <ExactField F>
CheckReport<F> check_comodule(const ComoduleStruct<F>& m) {
    const auto& coact = m.coact();
    const auto& alpha_c = m.base().alpha();
    const auto& alpha_m = m.alpha();
    CheckReport<F> r{"comodule", {}, {}};
    compare_maps(r, "comodule_alpha_compat", compose(tensor_map(alpha_c, alpha_m), coact), compose(coact, alpha_m));
    compare_maps(r, "comodule_hom_coassociativity", compose(tensor_map(m.base().delta(), alpha_m), coact),
                 compose(tensor_map(alpha_c, coact), coact));
    return r;
}

/// f: M -> N commutes with the structure maps and the actions. f may be given with any factorization of dim M -> dim N.
template <ExactField F>
CheckReport<F> check_module_morphism(const LinearMap<F>& f, const ModuleStruct<F>& m, const ModuleStruct<F>& n) {
    if (!(m.base() == n.base())) throw BaseMismatch("module morphism between modules over different algebras");
    if (f.cols() != m.dim() || f.rows() != n.dim())
        throw ShapeError("morphism " + f.shape() + " does not map " + dims_str({m.dim()}) + " to " + dims_str({n.dim()}));
    auto g = f.reshaped({n.dim()}, {m.dim()});
    auto id_a = LinearMap<F>::identity(m.field(), {m.base().dim()});
    CheckReport<F> r{"module_morphism", {}, {}};
    compare_maps(r, "morphism_alpha", compose(n.alpha(), g), compose(g, m.alpha()));
    compare_maps(r, "morphism_linear", compose(g, m.act()), compose(n.act(), tensor_map(id_a, g)));
    return r;
}

template <ExactField F>
CheckReport<F> check_comodule_morphism(const LinearMap<F>& f, const ComoduleStruct<F>& m, const ComoduleStruct<F>& n) {
    if (!(m.base() == n.base())) throw BaseMismatch("comodule morphism between comodules over different coalgebras");
    if (f.cols() != m.dim() || f.rows() != n.dim())
        throw ShapeError("morphism " + f.shape() + " does not map " + dims_str({m.dim()}) + " to " + dims_str({n.dim()}));
    auto g = f.reshaped({n.dim()}, {m.dim()});
    auto id_c = LinearMap<F>::identity(m.field(), {m.base().dim()});
    CheckReport<F> r{"comodule_morphism", {}, {}};
    compare_maps(r, "morphism_alpha", compose(n.alpha(), g), compose(g, m.alpha()));
    compare_maps(r, "morphism_colinear", compose(tensor_map(id_c, g), m.coact()), compose(n.coact(), g));
    return r;
}

// ---------------------------------------------------------------------------
// Induced structures

/// a |> m := alpha_M(a . m), a module over A twisted by alpha_A.
template <ExactField F>
ModuleStruct<F> induce_module(const ClassicalModule<F>& m, const LinearMap<F>& alpha_a, const LinearMap<F>& alpha_m) {
    if (alpha_m.domain() != Dims{m.dim()} || alpha_m.codomain() != Dims{m.dim()})
        throw ShapeError("carrier map " + alpha_m.shape() + " does not act on " + dims_str({m.dim()}));
    detail::require_pass(check_classical_module(m), "input is not a module");
    auto base = twist_algebra(m.base(), alpha_a);
    detail::require_pass(check_equal("alpha_m_equivariance", compose(alpha_m, m.act()), compose(m.act(), tensor_map(alpha_a, alpha_m))),
                         "alpha_M(a.m) = alpha_A(a).alpha_M(m) fails");
    ModuleStruct<F> out(std::move(base), compose(alpha_m, m.act()), alpha_m);
    detail::require_certified(check_module(out), "induced module");
    return out;
}

/// m -> alpha_C(m_(-1)) (x) alpha_M(m_(0)), a comodule over C twisted by alpha_C.
template <ExactField F>
ComoduleStruct<F> induce_comodule(const ClassicalComodule<F>& m, const LinearMap<F>& alpha_c, const LinearMap<F>& alpha_m) {
    if (alpha_m.domain() != Dims{m.dim()} || alpha_m.codomain() != Dims{m.dim()})
        throw ShapeError("carrier map " + alpha_m.shape() + " does not act on " + dims_str({m.dim()}));
    detail::require_pass(check_classical_comodule(m), "input is not a comodule");
    auto base = twist_coalgebra(m.base(), alpha_c);
    auto twisted = compose(tensor_map(alpha_c, alpha_m), m.coact());
    detail::require_pass(check_equal("alpha_m_colinearity", compose(m.coact(), alpha_m), twisted),
                         "alpha_M is not colinear over alpha_C");
    ComoduleStruct<F> out(std::move(base), std::move(twisted), alpha_m);
    detail::require_certified(check_comodule(out), "induced comodule");
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products over a Hom-bialgebra

namespace detail {

/// h . (m (x) n) = h1 . m (x) h2 . n as a map {h, m, n} -> {m, n}.
template <ExactField F>
LinearMap<F> diagonal_action(const LinearMap<F>& delta, const LinearMap<F>& act_m, const LinearMap<F>& act_n) {
    const auto& k = delta.field();
    const std::size_t h = delta.domain()[0], m = act_m.rows(), n = act_n.rows();
    auto id_m = LinearMap<F>::identity(k, {m});
    auto id_n = LinearMap<F>::identity(k, {n});
    return compose(tensor_map(act_m, act_n), permutation(k, Dims{h, h, m, n}, {0, 2, 1, 3}), tensor_map(delta, id_m, id_n));
}

/// m (x) n -> m_(-1) n_(-1) (x) m_(0) (x) n_(0) as a map {m, n} -> {h, m, n}.
template <ExactField F>
LinearMap<F> product_coaction(const LinearMap<F>& mu, const LinearMap<F>& coact_m, const LinearMap<F>& coact_n) {
    const auto& k = mu.field();
    const std::size_t h = mu.rows(), m = coact_m.cols(), n = coact_n.cols();
    auto id_m = LinearMap<F>::identity(k, {m});
    auto id_n = LinearMap<F>::identity(k, {n});
    return compose(tensor_map(mu, id_m, id_n), permutation(k, Dims{h, m, h, n}, {0, 2, 1, 3}), tensor_map(coact_m, coact_n));
}

}  // namespace detail

template <ExactField F>
ModuleStruct<F> tensor_modules(const ModuleStruct<F>& m, const ModuleStruct<F>& n, const HomBialgebra<F>& h) {
    if (!(m.base() == h.algebra()) || !(n.base() == h.algebra()))
        throw BaseMismatch("tensor_modules: modules are not over the given Hom-bialgebra");
    const std::size_t dm = m.dim(), dn = n.dim();
    auto act = detail::diagonal_action(h.delta(), m.act(), n.act()).reshaped({dm * dn}, {h.dim(), dm * dn});
    ModuleStruct<F> out(h.algebra(), std::move(act), tensor_map(m.alpha(), n.alpha()).flat());
    if (check_module(m).passed() && check_module(n).passed() && check_hom_bialgebra(h).passed())
        detail::require_certified(check_module(out), "tensor product module");
    return out;
}

template <ExactField F>
ComoduleStruct<F> tensor_comodules(const ComoduleStruct<F>& m, const ComoduleStruct<F>& n, const HomBialgebra<F>& h) {
    if (!(m.base() == h.coalgebra()) || !(n.base() == h.coalgebra()))
        throw BaseMismatch("tensor_comodules: comodules are not over the given Hom-bialgebra");
    const std::size_t dm = m.dim(), dn = n.dim();
    auto coact = detail::product_coaction(h.mu(), m.coact(), n.coact()).reshaped({h.dim(), dm * dn}, {dm * dn});
    ComoduleStruct<F> out(h.coalgebra(), std::move(coact), tensor_map(m.alpha(), n.alpha()).flat());
    if (check_comodule(m).passed() && check_comodule(n).passed() && check_hom_bialgebra(h).passed())
        detail::require_certified(check_comodule(out), "tensor product comodule");
    return out;
}

}  // namespace homyd
