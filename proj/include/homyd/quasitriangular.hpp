#pragma once

/**
 * @file quasitriangular.hpp
 * @brief Quasitriangular and coquasitriangular Hom-bialgebras, the YD
 *        structures they induce and the braidings on modules / comodules.
 *
 * R in H (x) H is a map {} -> {h,h}; sigma: H (x) H -> k is {h,h} -> {}.
 * Sweedler legs: R = R^1 (x) R^2 = r^1 (x) r^2.
 */

#include <string>

#include "homyd/check_report.hpp"
#include "homyd/hom_structures.hpp"
#include "homyd/representations.hpp"
#include "homyd/yetter_drinfeld.hpp"

namespace homyd {

template <ExactField F>
class RElement {
   public:
    RElement(HomBialgebra<F> base, LinearMap<F> r) : base_(std::move(base)), r_(std::move(r)) {
        const auto d = base_.dim();
        if (!r_.domain().empty() || r_.codomain() != Dims{d, d})
            throw ShapeError("R must be an element of " + dims_str({d, d}) + ", got " + r_.shape());
    }
    /// entries[i][j] is the coefficient of e_i (x) e_j.
    static RElement from_matrix(HomBialgebra<F> base, const Matrix<typename F::value_type>& entries) {
        const auto d = base.dim();
        if (entries.size() != d) throw ShapeError("R matrix must have " + std::to_string(d) + " rows");
        std::vector<std::vector<typename F::value_type>> column(d * d);
        for (std::size_t i = 0; i < d; ++i) {
            if (entries[i].size() != d) throw ShapeError("R matrix row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
            for (std::size_t j = 0; j < d; ++j) column[i * d + j] = {entries[i][j]};
        }
        auto field = base.field();
        return {std::move(base), LinearMap<F>::from_dense(field, {d, d}, {}, column)};
    }
    const HomBialgebra<F>& base() const { return base_; }
    const LinearMap<F>& r() const { return r_; }
    bool operator==(const RElement&) const = default;

   private:
    HomBialgebra<F> base_;
    LinearMap<F> r_;
};

template <ExactField F>
class SigmaForm {
   public:
    SigmaForm(HomBialgebra<F> base, LinearMap<F> sigma) : base_(std::move(base)), sigma_(std::move(sigma)) {
        const auto d = base_.dim();
        if (!sigma_.codomain().empty() || sigma_.domain() != Dims{d, d})
            throw ShapeError("sigma must be a form on " + dims_str({d, d}) + ", got " + sigma_.shape());
    }
    /// entries[i][j] = sigma(e_i (x) e_j).
    static SigmaForm from_matrix(HomBialgebra<F> base, const Matrix<typename F::value_type>& entries) {
        const auto d = base.dim();
        if (entries.size() != d) throw ShapeError("sigma matrix must have " + std::to_string(d) + " rows");
        std::vector<std::vector<typename F::value_type>> row(1);
        for (std::size_t i = 0; i < d; ++i) {
            if (entries[i].size() != d) throw ShapeError("sigma matrix row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
            for (std::size_t j = 0; j < d; ++j) row[0].push_back(entries[i][j]);
        }
        auto field = base.field();
        return {std::move(base), LinearMap<F>::from_dense(field, {}, {d, d}, row)};
    }
    const HomBialgebra<F>& base() const { return base_; }
    const LinearMap<F>& sigma() const { return sigma_; }
    bool operator==(const SigmaForm&) const = default;

   private:
    HomBialgebra<F> base_;
    LinearMap<F> sigma_;
};

// ---------------------------------------------------------------------------
// Quasitriangular side

/**
 * (Delta (x) alpha)(R) = alpha(R^1) (x) alpha(r^1) (x) R^2 r^2
 * (alpha (x) Delta)(R) = R^1 r^1 (x) alpha(r^2) (x) alpha(R^2)
 * h_2 R^1 (x) h_1 R^2 = R^1 h_1 (x) R^2 h_2
 */
template <ExactField F>
CheckReport<F> check_qt(const RElement<F>& qt) {
    const auto& h = qt.base();
    const auto& k = h.field();
    const auto d = h.dim();
    const auto& r = qt.r();
    const auto& a = h.alpha();
    const auto& mu = h.mu();
    const auto& delta = h.delta();
    const Dims d4{d, d, d, d};
    auto rr = tensor_map(r, r);
    CheckReport<F> rep{"quasitriangular", {}, {}};
    compare_maps(rep, "qt_delta_left", compose(tensor_map(delta, a), r), compose(tensor_map(a, a, mu), permutation(k, d4, {0, 2, 1, 3}), rr));
    compare_maps(rep, "qt_delta_right", compose(tensor_map(a, delta), r), compose(tensor_map(mu, a, a), permutation(k, d4, {0, 2, 3, 1}), rr));
    compare_maps(rep, "qt_quasi_cocommutative", compose(tensor_map(mu, mu), permutation(k, d4, {1, 2, 0, 3}), tensor_map(delta, r)),
                 compose(tensor_map(mu, mu), permutation(k, d4, {0, 2, 1, 3}), tensor_map(r, delta)));
    return rep;
}

/// (alpha (x) alpha)(R) = R.
template <ExactField F>
CheckReport<F> check_r_invariance(const RElement<F>& qt) {
    const auto& a = qt.base().alpha();
    return check_equal("r_invariance", compose(tensor_map(a, a), qt.r()), qt.r());
}

namespace detail {

template <ExactField F>
void require_module_over(const ModuleStruct<F>& m, const HomBialgebra<F>& h, const char* what) {
    if (!(m.base() == h.algebra())) throw BaseMismatch(std::string(what) + ": module is not over the quasitriangular Hom-bialgebra");
}

template <ExactField F>
void require_comodule_over(const ComoduleStruct<F>& m, const HomBialgebra<F>& h, const char* what) {
    if (!(m.base() == h.coalgebra())) throw BaseMismatch(std::string(what) + ": comodule is not over the coquasitriangular Hom-bialgebra");
}

/// m -> alpha_H(R^2) (x) R^1 . m.
template <ExactField F>
LinearMap<F> qt_coaction(const RElement<F>& qt, const LinearMap<F>& act) {
    const auto& h = qt.base();
    const auto d = h.dim(), dm = act.rows();
    auto id_m = LinearMap<F>::identity(h.field(), {dm});
    return compose(tensor_map(h.alpha(), act), permutation(h.field(), Dims{d, d, dm}, {1, 0, 2}), tensor_map(qt.r(), id_m));
}

/// m (x) n -> f(R^2 . n) (x) g(R^1 . m).
template <ExactField F>
LinearMap<F> qt_swap(const RElement<F>& qt, const ModuleStruct<F>& m, const ModuleStruct<F>& n, const LinearMap<F>& f, const LinearMap<F>& g) {
    const auto& h = qt.base();
    const auto d = h.dim(), dm = m.dim(), dn = n.dim();
    auto id_m = LinearMap<F>::identity(h.field(), {dm});
    auto id_n = LinearMap<F>::identity(h.field(), {dn});
    return compose(tensor_map(compose(f, n.act()), compose(g, m.act())), permutation(h.field(), Dims{d, d, dm, dn}, {1, 3, 0, 2}),
                   tensor_map(qt.r(), id_m, id_n));
}

}  // namespace detail

/// Coaction m -> alpha_H(R^2) (x) R^1 . m; R must pass check_qt and check_r_invariance, structure maps bijective.
template <ExactField F>
YDModule<F> yd_from_module(const ModuleStruct<F>& m, const RElement<F>& qt) {
    detail::require_module_over(m, qt.base(), "yd_from_module");
    detail::require_pass(check_qt(qt), "R is not quasitriangular");
    detail::require_pass(check_r_invariance(qt), "R is not invariant under the structure map");
    detail::require_pass(check_module(m), "input is not a module");
    detail::require_bijective(qt.base().alpha(), "base structure map");
    detail::require_bijective(m.alpha(), "carrier structure map");
    YDModule<F> out(qt.base(), m.act(), detail::qt_coaction(qt, m.act()), m.alpha());
    if (check_hom_bialgebra(qt.base()).passed()) detail::require_certified(check_yd(out), "YD module induced by R");
    return out;
}

/**
 * The R-induced coaction on the tensor module M (x) N against the hat tensor
 * coaction of the two induced YD modules; actions compared as well. Computed
 * from the formulas directly, so a defective R shows up as failures.
 */
template <ExactField F>
CheckReport<F> check_qt_tensor_coincide(const ModuleStruct<F>& m, const ModuleStruct<F>& n, const RElement<F>& qt) {
    const auto& h = qt.base();
    detail::require_module_over(m, h, "check_qt_tensor_coincide");
    detail::require_module_over(n, h, "check_qt_tensor_coincide");
    detail::require_bijective(h.alpha(), "base structure map");
    const auto& k = h.field();
    const auto d = h.dim(), dm = m.dim(), dn = n.dim();
    auto tensor_act = detail::diagonal_action(h.delta(), m.act(), n.act()).reshaped({dm * dn}, {d, dm * dn});
    auto induced = detail::qt_coaction(qt, tensor_act);
    auto hat_coact = compose(tensor_map(power(h.alpha(), -2), LinearMap<F>::identity(k, {dm}), LinearMap<F>::identity(k, {dn})),
                             detail::product_coaction(h.mu(), detail::qt_coaction(qt, m.act()), detail::qt_coaction(qt, n.act())))
                         .reshaped({d, dm * dn}, {dm * dn});
    CheckReport<F> r{"qt_tensor_coincide", {}, {}};
    compare_maps(r, "coincide_coaction", induced, hat_coact);
    return r;
}

/// c(m (x) n) = alpha_N^{-1}(R^2 . n) (x) alpha_M^{-1}(R^1 . m).
template <ExactField F>
LinearMap<F> qt_braiding(const ModuleStruct<F>& m, const ModuleStruct<F>& n, const RElement<F>& qt) {
    detail::require_module_over(m, qt.base(), "qt_braiding");
    detail::require_module_over(n, qt.base(), "qt_braiding");
    return detail::qt_swap(qt, m, n, invert(n.alpha()), invert(m.alpha()));
}

/// B(m (x) n) = R^2 . n (x) R^1 . m; no bijectivity needed.
template <ExactField F>
LinearMap<F> qt_B(const ModuleStruct<F>& m, const ModuleStruct<F>& n, const RElement<F>& qt) {
    detail::require_module_over(m, qt.base(), "qt_B");
    detail::require_module_over(n, qt.base(), "qt_B");
    return detail::qt_swap(qt, m, n, LinearMap<F>::identity(m.field(), {n.dim()}), LinearMap<F>::identity(m.field(), {m.dim()}));
}

// ---------------------------------------------------------------------------
// Coquasitriangular side

/**
 * sigma(xy (x) alpha(z)) = sigma(alpha(x) (x) z_1) sigma(alpha(y) (x) z_2)
 * sigma(alpha(x) (x) yz) = sigma(x_1 (x) alpha(z)) sigma(x_2 (x) alpha(y))
 * y_1 x_1 sigma(x_2 (x) y_2) = sigma(x_1 (x) y_1) x_2 y_2
 */
template <ExactField F>
CheckReport<F> check_cqt(const SigmaForm<F>& cq) {
    const auto& h = cq.base();
    const auto& k = h.field();
    const auto d = h.dim();
    const auto& s = cq.sigma();
    const auto& a = h.alpha();
    const auto& mu = h.mu();
    const auto& delta = h.delta();
    auto id = LinearMap<F>::identity(k, {d});
    const Dims d4{d, d, d, d};
    auto s_left = compose(s, tensor_map(a, id));
    auto s_right = compose(s, tensor_map(id, a));
    CheckReport<F> rep{"coquasitriangular", {}, {}};
    compare_maps(rep, "cqt_mu_left", compose(s, tensor_map(mu, a)),
                 compose(tensor_map(s_left, s_left), permutation(k, d4, {0, 2, 1, 3}), tensor_map(id, id, delta)));
    compare_maps(rep, "cqt_mu_right", compose(s, tensor_map(a, mu)),
                 compose(tensor_map(s_right, s_right), permutation(k, d4, {0, 3, 1, 2}), tensor_map(delta, id, id)));
    auto dd = tensor_map(delta, delta);
    compare_maps(rep, "cqt_quasi_commutative", compose(tensor_map(mu, s), permutation(k, d4, {2, 0, 1, 3}), dd),
                 compose(tensor_map(s, mu), permutation(k, d4, {0, 2, 1, 3}), dd));
    return rep;
}

/// sigma = sigma o (alpha (x) alpha).
template <ExactField F>
CheckReport<F> check_sigma_invariance(const SigmaForm<F>& cq) {
    const auto& a = cq.base().alpha();
    return check_equal("sigma_invariance", compose(cq.sigma(), tensor_map(a, a)), cq.sigma());
}

namespace detail {

/// h . m = sigma(m_(-1) (x) alpha_H(h)) m_(0).
template <ExactField F>
LinearMap<F> cqt_action(const SigmaForm<F>& cq, const LinearMap<F>& coact) {
    const auto& h = cq.base();
    const auto d = h.dim(), dm = coact.cols();
    const auto& k = h.field();
    auto id_h = LinearMap<F>::identity(k, {d});
    auto id_m = LinearMap<F>::identity(k, {dm});
    return compose(tensor_map(compose(cq.sigma(), tensor_map(id_h, h.alpha())), id_m), permutation(k, Dims{d, d, dm}, {1, 0, 2}),
                   tensor_map(id_h, coact));
}

/// m (x) n -> sigma(n_(-1) (x) m_(-1)) f(n_(0)) (x) g(m_(0)).
template <ExactField F>
LinearMap<F> cqt_swap(const SigmaForm<F>& cq, const ComoduleStruct<F>& m, const ComoduleStruct<F>& n, const LinearMap<F>& f,
                      const LinearMap<F>& g) {
    const auto d = cq.base().dim(), dm = m.dim(), dn = n.dim();
    return compose(tensor_map(cq.sigma(), f, g), permutation(cq.base().field(), Dims{d, dm, d, dn}, {2, 0, 3, 1}),
                   tensor_map(m.coact(), n.coact()));
}

}  // namespace detail

/// Action h . m = sigma(m_(-1) (x) alpha_H(h)) m_(0); sigma must pass check_cqt and check_sigma_invariance.
template <ExactField F>
YDModule<F> yd_from_comodule(const ComoduleStruct<F>& m, const SigmaForm<F>& cq) {
    detail::require_comodule_over(m, cq.base(), "yd_from_comodule");
    detail::require_pass(check_cqt(cq), "sigma is not coquasitriangular");
    detail::require_pass(check_sigma_invariance(cq), "sigma is not invariant under the structure map");
    detail::require_pass(check_comodule(m), "input is not a comodule");
    detail::require_bijective(cq.base().alpha(), "base structure map");
    detail::require_bijective(m.alpha(), "carrier structure map");
    YDModule<F> out(cq.base(), detail::cqt_action(cq, m.coact()), m.coact(), m.alpha());
    if (check_hom_bialgebra(cq.base()).passed()) detail::require_certified(check_yd(out), "YD module induced by sigma");
    return out;
}

/// The sigma-induced action on the tensor comodule M (x) N against the tilde tensor action of the two induced YD modules.
template <ExactField F>
CheckReport<F> check_cqt_tensor_coincide(const ComoduleStruct<F>& m, const ComoduleStruct<F>& n, const SigmaForm<F>& cq) {
    const auto& h = cq.base();
    detail::require_comodule_over(m, h, "check_cqt_tensor_coincide");
    detail::require_comodule_over(n, h, "check_cqt_tensor_coincide");
    detail::require_bijective(h.alpha(), "base structure map");
    const auto d = h.dim(), dm = m.dim(), dn = n.dim();
    auto tensor_coact = detail::product_coaction(h.mu(), m.coact(), n.coact()).reshaped({d, dm * dn}, {dm * dn});
    auto induced = detail::cqt_action(cq, tensor_coact);
    auto inv2 = power(h.alpha(), -2);
    auto tilde_act = detail::diagonal_action(compose(tensor_map(inv2, inv2), h.delta()), detail::cqt_action(cq, m.coact()),
                                             detail::cqt_action(cq, n.coact()))
                         .reshaped({dm * dn}, {d, dm * dn});
    CheckReport<F> r{"cqt_tensor_coincide", {}, {}};
    compare_maps(r, "coincide_action", induced, tilde_act);
    return r;
}

/// c(m (x) n) = sigma(n_(-1) (x) m_(-1)) alpha_N^{-1}(n_(0)) (x) alpha_M^{-1}(m_(0)).
template <ExactField F>
LinearMap<F> cqt_braiding(const ComoduleStruct<F>& m, const ComoduleStruct<F>& n, const SigmaForm<F>& cq) {
    detail::require_comodule_over(m, cq.base(), "cqt_braiding");
    detail::require_comodule_over(n, cq.base(), "cqt_braiding");
    return detail::cqt_swap(cq, m, n, invert(n.alpha()), invert(m.alpha()));
}

/// B(m (x) n) = sigma(n_(-1) (x) m_(-1)) n_(0) (x) m_(0); no bijectivity needed.
template <ExactField F>
LinearMap<F> cqt_B(const ComoduleStruct<F>& m, const ComoduleStruct<F>& n, const SigmaForm<F>& cq) {
    detail::require_comodule_over(m, cq.base(), "cqt_B");
    detail::require_comodule_over(n, cq.base(), "cqt_B");
    return detail::cqt_swap(cq, m, n, LinearMap<F>::identity(m.field(), {n.dim()}), LinearMap<F>::identity(m.field(), {m.dim()}));
}

}  // namespace homyd
