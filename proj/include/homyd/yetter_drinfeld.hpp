#pragma once

/**
 * @file yetter_drinfeld.hpp
 * @brief Yetter-Drinfeld modules over a Hom-bialgebra, their two tensor
 *        products, associators, braidings and the coherence checkers.
 *
 * A carrier of dimension d is a single factor {d}. Maps between tensor
 * products of carriers keep one factor per carrier, e.g. c_{M,N} is
 * {m,n} -> {n,m}. Tensor-product YD modules flatten their carrier to one
 * factor with the same (row-major) index order.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "homyd/check_report.hpp"
#include "homyd/hom_structures.hpp"
#include "homyd/representations.hpp"

namespace homyd {

enum class Flavor { hat, tilde };

inline const char* flavor_name(Flavor f) { return f == Flavor::hat ? "hat" : "tilde"; }

template <ExactField F>
class YDModule {
   public:
    YDModule(HomBialgebra<F> base, LinearMap<F> act, LinearMap<F> coact, LinearMap<F> alpha)
        : base_(std::move(base)), act_(std::move(act)), coact_(std::move(coact)), alpha_(std::move(alpha)) {
        auto d = detail::require_endo(alpha_, "carrier structure map");
        detail::require_action(act_, base_.dim(), d);
        detail::require_coaction(coact_, base_.dim(), d);
    }
    const HomBialgebra<F>& base() const { return base_; }
    const LinearMap<F>& act() const { return act_; }
    const LinearMap<F>& coact() const { return coact_; }
    const LinearMap<F>& alpha() const { return alpha_; }
    std::size_t dim() const { return alpha_.rows(); }
    const F& field() const { return alpha_.field(); }
    ModuleStruct<F> module() const { return {base_.algebra(), act_, alpha_}; }
    ComoduleStruct<F> comodule() const { return {base_.coalgebra(), coact_, alpha_}; }
    bool operator==(const YDModule&) const = default;

   private:
    HomBialgebra<F> base_;
    LinearMap<F> act_;
    LinearMap<F> coact_;
    LinearMap<F> alpha_;
};

/// Module and comodule over a classical bialgebra on one carrier.
template <ExactField F>
class ClassicalYD {
   public:
    ClassicalYD(ClassicalBialgebra<F> base, LinearMap<F> act, LinearMap<F> coact)
        : base_(std::move(base)), act_(std::move(act)), coact_(std::move(coact)) {
        if (act_.codomain().size() != 1) throw ShapeError("action must land in a single space");
        detail::require_action(act_, base_.dim(), act_.codomain()[0]);
        detail::require_coaction(coact_, base_.dim(), act_.codomain()[0]);
    }
    const ClassicalBialgebra<F>& base() const { return base_; }
    const LinearMap<F>& act() const { return act_; }
    const LinearMap<F>& coact() const { return coact_; }
    std::size_t dim() const { return act_.rows(); }
    const F& field() const { return act_.field(); }
    ClassicalModule<F> module() const { return {base_.algebra(), act_}; }
    ClassicalComodule<F> comodule() const { return {base_.coalgebra(), coact_}; }
    bool operator==(const ClassicalYD&) const = default;

   private:
    ClassicalBialgebra<F> base_;
    LinearMap<F> act_;
    LinearMap<F> coact_;
};

// ---------------------------------------------------------------------------
// The compatibility condition

namespace detail {

/// (h1.m)_(-1) alpha^2(h2) (x) (h1.m)_(0) = alpha^2(h1) alpha(m_(-1)) (x) alpha(h2).m_(0), as maps {h,m} -> {h,m}.
template <ExactField F>
void compare_yd_condition(CheckReport<F>& r, const HomBialgebra<F>& h, const LinearMap<F>& act, const LinearMap<F>& coact,
                          const LinearMap<F>& alpha_m) {
    const auto& k = h.field();
    const std::size_t dh = h.dim(), dm = alpha_m.rows();
    auto id_h = LinearMap<F>::identity(k, {dh});
    auto id_m = LinearMap<F>::identity(k, {dm});
    const auto& a = h.alpha();
    auto a2 = compose(a, a);
    auto lhs = compose(tensor_map(h.mu(), id_m), permutation(k, Dims{dh, dm, dh}, {0, 2, 1}), tensor_map(coact, id_h),
                       tensor_map(act, a2), permutation(k, Dims{dh, dh, dm}, {0, 2, 1}), tensor_map(h.delta(), id_m));
    auto rhs = compose(tensor_map(h.mu(), act), tensor_map(a2, a, a, id_m), permutation(k, Dims{dh, dh, dh, dm}, {0, 2, 1, 3}),
                       tensor_map(h.delta(), coact));
    compare_maps(r, "yd_condition", lhs, rhs);
}

template <ExactField F>
void require_bijective(const LinearMap<F>& m, const std::string& what) {
    if (!is_invertible(m)) throw Inapplicable(what + " is not bijective (rank " + std::to_string(rank(m)) + " of " + std::to_string(m.rows()) + ")");
}

}  // namespace detail

/// Module laws, comodule laws and the YD condition, with no bijectivity demands.
template <ExactField F>
CheckReport<F> check_yd_condition(const YDModule<F>& m) {
    CheckReport<F> r{"yd", {}, {}};
    r.absorb(check_module(m.module()));
    r.absorb(check_comodule(m.comodule()));
    detail::compare_yd_condition(r, m.base(), m.act(), m.coact(), m.alpha());
    return r;
}

/// The YD category demands bijective alpha_H and alpha_M; otherwise Inapplicable.
template <ExactField F>
CheckReport<F> check_yd(const YDModule<F>& m) {
    detail::require_bijective(m.base().alpha(), "base structure map");
    detail::require_bijective(m.alpha(), "carrier structure map");
    return check_yd_condition(m);
}

/// check_yd_condition plus a note when some structure map is singular.
template <ExactField F>
CheckReport<F> certify_yd(const YDModule<F>& m) {
    auto r = check_yd_condition(m);
    if (!is_invertible(m.base().alpha())) r.notes.push_back("base structure map is singular; not an object of the YD category");
    if (!is_invertible(m.alpha()))
        r.notes.push_back("carrier structure map is singular; YD identities hold but the carrier is not an object of the YD category");
    return r;
}

/// Direct basis-by-basis evaluation of (h1.m)_(-1) h2 (x) (h1.m)_(0) = h1 m_(-1) (x) h2.m_(0), plus the classical module and comodule laws.
template <ExactField F>
CheckReport<F> check_classical_yd(const ClassicalYD<F>& y) {
    CheckReport<F> r{"classical_yd", {}, {}};
    r.absorb(check_classical_module(y.module()));
    r.absorb(check_classical_comodule(y.comodule()));
    const auto& k = y.field();
    const std::size_t dh = y.base().dim(), dm = y.dim();
    const auto mu = binary_tensor(y.base().mu());
    const auto delta = cobinary_tensor(y.base().delta());
    const auto act = binary_tensor(y.act());
    const auto coact = cobinary_tensor(y.coact());
    using S = typename F::value_type;
    for (std::size_t h = 0; h < dh; ++h) {
        for (std::size_t m = 0; m < dm; ++m) {
            std::vector<S> lhs(dh * dm, k.zero()), rhs(dh * dm, k.zero());
            for (std::size_t h1 = 0; h1 < dh; ++h1) {
                for (std::size_t h2 = 0; h2 < dh; ++h2) {
                    const S& d = delta[h][h1][h2];
                    if (d.is_zero()) continue;
                    for (std::size_t n = 0; n < dm; ++n) {
                        const S& a = act[h1][m][n];
                        if (a.is_zero()) continue;
                        for (std::size_t i = 0; i < dh; ++i)
                            for (std::size_t n0 = 0; n0 < dm; ++n0) {
                                const S& c = coact[n][i][n0];
                                if (c.is_zero()) continue;
                                for (std::size_t t = 0; t < dh; ++t)
                                    if (!mu[i][h2][t].is_zero()) lhs[t * dm + n0] += d * a * c * mu[i][h2][t];
                            }
                    }
                    for (std::size_t i = 0; i < dh; ++i)
                        for (std::size_t n0 = 0; n0 < dm; ++n0) {
                            const S& c = coact[m][i][n0];
                            if (c.is_zero()) continue;
                            for (std::size_t t = 0; t < dh; ++t) {
                                if (mu[h1][i][t].is_zero()) continue;
                                for (std::size_t n = 0; n < dm; ++n)
                                    if (!act[h2][n0][n].is_zero()) rhs[t * dm + n] += d * c * mu[h1][i][t] * act[h2][n0][n];
                            }
                        }
                }
            }
            if (lhs == rhs) continue;
            auto column = [](const std::vector<S>& v) {
                typename LinearMap<F>::Column col;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero()) col.emplace_back(i, v[i]);
                return col;
            };
            r.failures.push_back({"yd_condition", {h, m}, {dh, dm}, column(lhs), column(rhs)});
        }
    }
    return r;
}

/// Twists a classical YD module into one over the twisted Hom-bialgebra.
template <ExactField F>
YDModule<F> twist_yd(const ClassicalYD<F>& y, const LinearMap<F>& alpha_h, const LinearMap<F>& alpha_m) {
    detail::require_pass(check_classical_yd(y), "input is not a Yetter-Drinfeld module");
    if (!is_invertible(alpha_h)) throw PreconditionError("base twisting map is not bijective");
    if (!is_invertible(alpha_m)) throw PreconditionError("carrier twisting map is not bijective");
    auto base = twist_bialgebra(y.base(), alpha_h);
    auto mod = induce_module(y.module(), alpha_h, alpha_m);
    auto comod = induce_comodule(y.comodule(), alpha_h, alpha_m);
    YDModule<F> out(std::move(base), mod.act(), comod.coact(), alpha_m);
    detail::require_certified(check_yd(out), "twisted Yetter-Drinfeld module");
    return out;
}

// ---------------------------------------------------------------------------
// Braidings

namespace detail {

template <ExactField F>
void require_same_base(const YDModule<F>& m, const YDModule<F>& n, const char* what) {
    if (!(m.base() == n.base())) throw BaseMismatch(std::string(what) + ": modules are over different Hom-bialgebras");
}

/// m (x) n -> f(m_(-1)) . n (x) m_(0), {m,n} -> {n,m}.
template <ExactField F>
LinearMap<F> coaction_then_act(const YDModule<F>& m, const YDModule<F>& n, const LinearMap<F>& on_h) {
    const auto& k = m.field();
    const std::size_t dh = m.base().dim(), dm = m.dim(), dn = n.dim();
    auto id_m = LinearMap<F>::identity(k, {dm});
    auto id_n = LinearMap<F>::identity(k, {dn});
    return compose(tensor_map(n.act(), id_m), permutation(k, Dims{dh, dm, dn}, {0, 2, 1}), tensor_map(on_h, id_m, id_n),
                   tensor_map(m.coact(), id_n));
}

}  // namespace detail

/// B_{M,N}(m (x) n) = alpha_H^{-1}(m_(-1)) . n (x) m_(0).
template <ExactField F>
LinearMap<F> braiding_B(const YDModule<F>& m, const YDModule<F>& n) {
    detail::require_same_base(m, n, "braiding_B");
    return detail::coaction_then_act(m, n, invert(m.base().alpha()));
}

/// c_{M,N}(m (x) n) = alpha_N^{-1}(alpha_H^{-1}(m_(-1)) . n) (x) alpha_M^{-1}(m_(0)).
template <ExactField F>
LinearMap<F> braiding_c(const YDModule<F>& m, const YDModule<F>& n) {
    detail::require_same_base(m, n, "braiding_c");
    const auto& k = m.field();
    const std::size_t dh = m.base().dim(), dm = m.dim(), dn = n.dim();
    auto inv_h = invert(m.base().alpha());
    auto inv_m = invert(m.alpha());
    auto inv_n = invert(n.alpha());
    return compose(tensor_map(compose(inv_n, n.act()), inv_m), permutation(k, Dims{dh, dm, dn}, {0, 2, 1}),
                   tensor_map(compose(tensor_map(inv_h, LinearMap<F>::identity(k, {dm})), m.coact()), LinearMap<F>::identity(k, {dn})));
}

namespace detail {

/// Views f as {a,b} -> {b,a}.
template <ExactField F>
LinearMap<F> as_swap_shape(const LinearMap<F>& f, std::size_t a, std::size_t b, const char* what) {
    if (f.cols() != a * b || f.rows() != a * b)
        throw ShapeError(std::string(what) + " has shape " + f.shape() + ", expected " + dims_str({a, b}) + "->" + dims_str({b, a}));
    return f.reshaped({b, a}, {a, b});
}

}  // namespace detail

/// (alpha_P (x) B_MN)(B_MP (x) alpha_N)(alpha_M (x) B_NP) = (B_NP (x) alpha_M)(alpha_N (x) B_MP)(B_MN (x) alpha_P).
template <ExactField F>
CheckReport<F> check_hybe(const LinearMap<F>& b_mn, const LinearMap<F>& b_mp, const LinearMap<F>& b_np, const LinearMap<F>& alpha_m,
                          const LinearMap<F>& alpha_n, const LinearMap<F>& alpha_p) {
    const auto dm = detail::require_endo(alpha_m, "alpha_M");
    const auto dn = detail::require_endo(alpha_n, "alpha_N");
    const auto dp = detail::require_endo(alpha_p, "alpha_P");
    auto mn = detail::as_swap_shape(b_mn, dm, dn, "B_MN");
    auto mp = detail::as_swap_shape(b_mp, dm, dp, "B_MP");
    auto np = detail::as_swap_shape(b_np, dn, dp, "B_NP");
    auto lhs = compose(tensor_map(alpha_p, mn), tensor_map(mp, alpha_n), tensor_map(alpha_m, np));
    auto rhs = compose(tensor_map(np, alpha_m), tensor_map(alpha_n, mp), tensor_map(mn, alpha_p));
    return check_equal("hybe", lhs, rhs);
}

namespace detail {

/// Recovers carrier dimensions from the three flat sizes mn, mp, np.
inline std::vector<std::size_t> carrier_dims(std::size_t mn, std::size_t mp, std::size_t np) {
    auto isqrt = [](std::uint64_t v) -> std::uint64_t {
        std::uint64_t r = 0;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r * r == v ? r : 0;
    };
    if (np == 0 || (std::uint64_t(mn) * mp) % np) throw ShapeError("braid maps have inconsistent sizes");
    std::uint64_t m = isqrt(std::uint64_t(mn) * mp / np);
    if (m == 0 || mn % m || mp % m) throw ShapeError("braid maps have inconsistent sizes");
    return {static_cast<std::size_t>(m), mn / m, mp / m};
}

template <ExactField F>
std::vector<std::size_t> braid_dims(const LinearMap<F>& c_mn, const LinearMap<F>& c_mp, const LinearMap<F>& c_np) {
    if (c_mn.domain().size() == 2 && c_mp.domain().size() == 2 && c_np.domain().size() == 2)
        return {c_mn.domain()[0], c_mn.domain()[1], c_mp.domain()[1]};
    if (!c_mn.is_square() || !c_mp.is_square() || !c_np.is_square()) throw ShapeError("braid maps must be square");
    return carrier_dims(c_mn.cols(), c_mp.cols(), c_np.cols());
}

}  // namespace detail

/// (id_P (x) c_MN)(c_MP (x) id_N)(id_M (x) c_NP) = (c_NP (x) id_M)(id_N (x) c_MP)(c_MN (x) id_P).
template <ExactField F>
CheckReport<F> check_braid_relation(const LinearMap<F>& c_mn, const LinearMap<F>& c_mp, const LinearMap<F>& c_np) {
    auto d = detail::braid_dims(c_mn, c_mp, c_np);
    const auto& k = c_mn.field();
    auto mn = detail::as_swap_shape(c_mn, d[0], d[1], "c_MN");
    auto mp = detail::as_swap_shape(c_mp, d[0], d[2], "c_MP");
    auto np = detail::as_swap_shape(c_np, d[1], d[2], "c_NP");
    auto id_m = LinearMap<F>::identity(k, {d[0]});
    auto id_n = LinearMap<F>::identity(k, {d[1]});
    auto id_p = LinearMap<F>::identity(k, {d[2]});
    auto lhs = compose(tensor_map(id_p, mn), tensor_map(mp, id_n), tensor_map(id_m, np));
    auto rhs = compose(tensor_map(np, id_m), tensor_map(id_n, mp), tensor_map(mn, id_p));
    return check_equal("braid_relation", lhs, rhs);
}

/// B = (alpha_N (x) alpha_M) o c.
template <ExactField F>
LinearMap<F> b_from_c(const LinearMap<F>& c, const LinearMap<F>& alpha_m, const LinearMap<F>& alpha_n) {
    const auto dm = detail::require_endo(alpha_m, "alpha_M");
    const auto dn = detail::require_endo(alpha_n, "alpha_N");
    return compose(tensor_map(alpha_n, alpha_m), detail::as_swap_shape(c, dm, dn, "c"));
}

namespace detail {

template <ExactField F>
void compare_commutation(CheckReport<F>& r, const std::string& law, const LinearMap<F>& f, const LinearMap<F>& alpha_m,
                         const LinearMap<F>& alpha_n) {
    auto g = as_swap_shape(f, alpha_m.rows(), alpha_n.rows(), law.c_str());
    compare_maps(r, law, compose(tensor_map(alpha_n, alpha_m), g), compose(g, tensor_map(alpha_m, alpha_n)));
}

}  // namespace detail

/**
 * Verifies the three commutation hypotheses and the braid relation for c
 * (PreconditionError naming the first failing one), then checks that the
 * B maps built by b_from_c commute with the structure maps and satisfy HYBE.
 */
template <ExactField F>
CheckReport<F> check_braid_implies_hybe(const LinearMap<F>& c_mn, const LinearMap<F>& c_mp, const LinearMap<F>& c_np,
                                        const LinearMap<F>& alpha_m, const LinearMap<F>& alpha_n, const LinearMap<F>& alpha_p) {
    detail::require_endo(alpha_m, "alpha_M");
    detail::require_endo(alpha_n, "alpha_N");
    detail::require_endo(alpha_p, "alpha_P");
    const char* names[] = {"c_MN commutes with the structure maps", "c_MP commutes with the structure maps",
                           "c_NP commutes with the structure maps"};
    const LinearMap<F>* cs[] = {&c_mn, &c_mp, &c_np};
    const LinearMap<F>* left[] = {&alpha_m, &alpha_m, &alpha_n};
    const LinearMap<F>* right[] = {&alpha_n, &alpha_p, &alpha_p};
    for (int i = 0; i < 3; ++i) {
        CheckReport<F> h{"hypothesis", {}, {}};
        detail::compare_commutation(h, "commutation", *cs[i], *left[i], *right[i]);
        detail::require_pass(h, std::string("hypothesis ") + names[i]);
    }
    detail::require_pass(check_braid_relation(c_mn, c_mp, c_np), "hypothesis braid relation for c");

    auto b_mn = b_from_c(c_mn, alpha_m, alpha_n);
    auto b_mp = b_from_c(c_mp, alpha_m, alpha_p);
    auto b_np = b_from_c(c_np, alpha_n, alpha_p);
    CheckReport<F> r{"braid_implies_hybe", {}, {}};
    detail::compare_commutation(r, "B_MN_commutation", b_mn, alpha_m, alpha_n);
    detail::compare_commutation(r, "B_MP_commutation", b_mp, alpha_m, alpha_p);
    detail::compare_commutation(r, "B_NP_commutation", b_np, alpha_n, alpha_p);
    r.absorb(check_hybe(b_mn, b_mp, b_np, alpha_m, alpha_n, alpha_p));
    return r;
}

// ---------------------------------------------------------------------------
// Tensor products

namespace detail {

template <ExactField F>
bool core_passes(const YDModule<F>& m) {
    return check_yd_condition(m).passed();
}

template <ExactField F>
YDModule<F> tensor_yd(const YDModule<F>& m, const YDModule<F>& n, Flavor flavor) {
    require_same_base(m, n, flavor == Flavor::hat ? "hat_tensor" : "tilde_tensor");
    const auto& h = m.base();
    if (!h.alpha_invertible()) throw Inapplicable("base structure map is not bijective");
    const auto& k = h.field();
    const std::size_t dh = h.dim(), dm = m.dim(), dn = n.dim();
    auto inv2 = power(h.alpha(), -2);
    auto id_m = LinearMap<F>::identity(k, {dm});
    auto id_n = LinearMap<F>::identity(k, {dn});
    LinearMap<F> act = flavor == Flavor::hat ? diagonal_action(h.delta(), m.act(), n.act())
                                             : diagonal_action(compose(tensor_map(inv2, inv2), h.delta()), m.act(), n.act());
    LinearMap<F> coact = product_coaction(h.mu(), m.coact(), n.coact());
    if (flavor == Flavor::hat) coact = compose(tensor_map(inv2, id_m, id_n), coact);
    YDModule<F> out(h, act.reshaped({dm * dn}, {dh, dm * dn}), coact.reshaped({dh, dm * dn}, {dm * dn}),
                    tensor_map(m.alpha(), n.alpha()).flat());
    if (check_hom_bialgebra(h).passed() && core_passes(m) && core_passes(n))
        require_certified(check_yd_condition(out), std::string(flavor_name(flavor)) + " tensor product");
    return out;
}

}  // namespace detail

/// Action h1.m (x) h2.n, coaction alpha_H^{-2}(m_(-1) n_(-1)) (x) m_(0) (x) n_(0).
template <ExactField F>
YDModule<F> hat_tensor(const YDModule<F>& m, const YDModule<F>& n) {
    return detail::tensor_yd(m, n, Flavor::hat);
}

/// Action alpha_H^{-2}(h1).m (x) alpha_H^{-2}(h2).n, coaction m_(-1) n_(-1) (x) m_(0) (x) n_(0).
template <ExactField F>
YDModule<F> tilde_tensor(const YDModule<F>& m, const YDModule<F>& n) {
    return detail::tensor_yd(m, n, Flavor::tilde);
}

template <ExactField F>
YDModule<F> tensor_yd(const YDModule<F>& m, const YDModule<F>& n, Flavor flavor) {
    return detail::tensor_yd(m, n, flavor);
}

// ---------------------------------------------------------------------------
// Associators

namespace detail {

/// hat: alpha_M^{-1} (x) id (x) alpha_P; tilde: alpha_M (x) id (x) alpha_P^{-1}. Shape {m,n,p} -> {m,n,p}.
template <ExactField F>
LinearMap<F> associator_from(const LinearMap<F>& alpha_m, const LinearMap<F>& alpha_n, const LinearMap<F>& alpha_p, Flavor flavor) {
    auto id_n = LinearMap<F>::identity(alpha_n.field(), alpha_n.domain());
    if (flavor == Flavor::hat) return tensor_map(invert(alpha_m), id_n, alpha_p);
    return tensor_map(alpha_m, id_n, invert(alpha_p));
}

}  // namespace detail

/// (M (x) N) (x) P -> M (x) (N (x) P) for the hat tensor product.
template <ExactField F>
LinearMap<F> associator_a(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p) {
    return detail::associator_from(m.alpha(), n.alpha(), p.alpha(), Flavor::hat);
}

/// (M (x) N) (x) P -> M (x) (N (x) P) for the tilde tensor product.
template <ExactField F>
LinearMap<F> associator_frak_a(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p) {
    return detail::associator_from(m.alpha(), n.alpha(), p.alpha(), Flavor::tilde);
}

template <ExactField F>
LinearMap<F> associator(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p, Flavor flavor) {
    return detail::associator_from(m.alpha(), n.alpha(), p.alpha(), flavor);
}

/// f: M -> N is a module morphism and a comodule morphism.
template <ExactField F>
CheckReport<F> check_yd_morphism(const LinearMap<F>& f, const YDModule<F>& m, const YDModule<F>& n) {
    detail::require_same_base(m, n, "yd morphism");
    CheckReport<F> r{"yd_morphism", {}, {}};
    r.absorb(check_module_morphism(f, m.module(), n.module()));
    r.absorb(check_comodule_morphism(f, m.comodule(), n.comodule()));
    return r;
}

/// The associator as a morphism (M (x) N) (x) P -> M (x) (N (x) P) of the flavor's tensor products.
template <ExactField F>
CheckReport<F> check_associator_morphism(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p, Flavor flavor) {
    auto left = tensor_yd(tensor_yd(m, n, flavor), p, flavor);
    auto right = tensor_yd(m, tensor_yd(n, p, flavor), flavor);
    return check_yd_morphism(associator(m, n, p, flavor), left, right);
}

/// c_{M,N} as a morphism M (x) N -> N (x) M of the flavor's tensor products.
template <ExactField F>
CheckReport<F> check_braiding_morphism(const YDModule<F>& m, const YDModule<F>& n, Flavor flavor) {
    return check_yd_morphism(braiding_c(m, n), tensor_yd(m, n, flavor), tensor_yd(n, m, flavor));
}

/// c_{M,N} o (f (x) id_N) = (id_N (x) f) o c_{M,N} and c_{M,N} o (id_M (x) g) = (g (x) id_M) o c_{M,N}, for YD endomorphisms f of M and g of N.
template <ExactField F>
CheckReport<F> check_braiding_naturality(const YDModule<F>& m, const YDModule<F>& n, const LinearMap<F>& f, const LinearMap<F>& g) {
    auto c = braiding_c(m, n);
    auto fm = f.reshaped({m.dim()}, {m.dim()});
    auto gn = g.reshaped({n.dim()}, {n.dim()});
    auto id_m = LinearMap<F>::identity(m.field(), {m.dim()});
    auto id_n = LinearMap<F>::identity(m.field(), {n.dim()});
    CheckReport<F> r{"braiding_naturality", {}, {}};
    compare_maps(r, "naturality_left", compose(c, tensor_map(fm, id_n)), compose(tensor_map(id_n, fm), c));
    compare_maps(r, "naturality_right", compose(c, tensor_map(id_m, gn)), compose(tensor_map(gn, id_m), c));
    return r;
}

// ---------------------------------------------------------------------------
// Coherence

/**
 * (id (x) a_{N,P,Q}) a_{M,N(x)P,Q} (a_{M,N,P} (x) id) = a_{M,N,P(x)Q} a_{M(x)N,P,Q},
 * and both equal alpha_M^{-2} (x) alpha_N^{-1} (x) alpha_P (x) alpha_Q^{2}
 * (exponents negated for the tilde associator).
 */
template <ExactField F>
CheckReport<F> check_pentagon(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p, const YDModule<F>& q, Flavor flavor) {
    const auto& k = m.field();
    const Dims d4{m.dim(), n.dim(), p.dim(), q.dim()};
    auto id = [&](std::size_t d) { return LinearMap<F>::identity(k, {d}); };
    auto np = tensor_yd(n, p, flavor);
    auto mn = tensor_yd(m, n, flavor);
    auto pq = tensor_yd(p, q, flavor);
    auto lhs = compose(tensor_map(id(m.dim()), associator(n, p, q, flavor)), associator(m, np, q, flavor).reshaped(d4, d4),
                       tensor_map(associator(m, n, p, flavor), id(q.dim())));
    auto rhs = compose(associator(m, n, pq, flavor).reshaped(d4, d4), associator(mn, p, q, flavor).reshaped(d4, d4));
    const int s = flavor == Flavor::hat ? 1 : -1;
    auto diagonal = tensor_map(power(m.alpha(), -2 * s), power(n.alpha(), -s), power(p.alpha(), s), power(q.alpha(), 2 * s));
    CheckReport<F> r{std::string("pentagon_") + flavor_name(flavor), {}, {}};
    compare_maps(r, "pentagon", lhs, rhs);
    compare_maps(r, "pentagon_diagonal", lhs, diagonal);
    return r;
}

/**
 * a_{N,P,M} c_{M,N(x)P} a_{M,N,P} = (id_N (x) c_{M,P}) a_{N,M,P} (c_{M,N} (x) id_P)
 * a^{-1}_{P,M,N} c_{M(x)N,P} a^{-1}_{M,N,P} = (c_{M,P} (x) id_N) a^{-1}_{M,P,N} (id_M (x) c_{N,P})
 * with c supplied as a callable (x, y) -> map {x,y} -> {y,x} on YD modules.
 */
template <ExactField F, class Braid>
CheckReport<F> check_hexagons_with(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p, Flavor flavor, Braid&& c) {
    const auto& k = m.field();
    const std::size_t dm = m.dim(), dn = n.dim(), dp = p.dim();
    auto id = [&](std::size_t d) { return LinearMap<F>::identity(k, {d}); };
    auto a = [&](const YDModule<F>& x, const YDModule<F>& y, const YDModule<F>& z) { return associator(x, y, z, flavor); };
    auto a_inv = [&](const YDModule<F>& x, const YDModule<F>& y, const YDModule<F>& z) { return invert(associator(x, y, z, flavor)); };
    auto swap = [&](const YDModule<F>& x, const YDModule<F>& y) { return detail::as_swap_shape(c(x, y), x.dim(), y.dim(), "braiding"); };

    auto c_m_np = swap(m, tensor_yd(n, p, flavor)).reshaped({dn, dp, dm}, {dm, dn, dp});
    auto lhs1 = compose(a(n, p, m), c_m_np, a(m, n, p));
    auto rhs1 = compose(tensor_map(id(dn), swap(m, p)), a(n, m, p), tensor_map(swap(m, n), id(dp)));

    auto c_mn_p = swap(tensor_yd(m, n, flavor), p).reshaped({dp, dm, dn}, {dm, dn, dp});
    auto lhs2 = compose(a_inv(p, m, n), c_mn_p, a_inv(m, n, p));
    auto rhs2 = compose(tensor_map(swap(m, p), id(dn)), a_inv(m, p, n), tensor_map(id(dm), swap(n, p)));

    CheckReport<F> r{std::string("hexagons_") + flavor_name(flavor), {}, {}};
    compare_maps(r, "hexagon_1", lhs1, rhs1);
    compare_maps(r, "hexagon_2", lhs2, rhs2);
    return r;
}

/// Both hexagon relations for braiding_c and the flavor's associator.
template <ExactField F>
CheckReport<F> check_hexagons(const YDModule<F>& m, const YDModule<F>& n, const YDModule<F>& p, Flavor flavor) {
    return check_hexagons_with(m, n, p, flavor, [](const YDModule<F>& x, const YDModule<F>& y) { return braiding_c(x, y); });
}

}  // namespace homyd
