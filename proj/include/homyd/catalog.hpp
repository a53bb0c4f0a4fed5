#pragma once

/**
 * @file catalog.hpp
 * @brief Named example documents built from the fixture generators, as used
 *        by `homyd example <name> <params...>`.
 *
 * Parameter p selects the field: 0 means the rationals, otherwise the prime
 * field with p elements.
 */

#include <string>
#include <vector>

#include "homyd/fixtures.hpp"
#include "homyd/spec_document.hpp"

namespace homyd {

template <ExactField F>
class DocumentBuilder {
   public:
    using S = typename F::value_type;
    explicit DocumentBuilder(F field) : d_{std::move(field), {}, {}} {}

    const F& field() const { return d_.field; }

    void hom_bialgebra(const std::string& name, const HomBialgebra<F>& h) {
        StructureSpec<F> s;
        s.kind = "hom_bialgebra";
        s.dim = h.dim();
        s.mu = binary_tensor(h.mu());
        s.delta = cobinary_tensor(h.delta());
        s.alpha = h.alpha().dense();
        add(name, std::move(s));
    }

    void bialgebra(const std::string& name, const ClassicalBialgebra<F>& h) {
        StructureSpec<F> s;
        s.kind = "bialgebra";
        s.dim = h.dim();
        s.mu = binary_tensor(h.mu());
        s.delta = cobinary_tensor(h.delta());
        add(name, std::move(s));
    }

    void yd(const std::string& name, const std::string& over, const YDModule<F>& m) {
        StructureSpec<F> s;
        s.kind = "yd";
        s.over = over;
        s.dim = m.dim();
        s.act = binary_tensor(m.act());
        s.coact = cobinary_tensor(m.coact());
        s.alpha = m.alpha().dense();
        add(name, std::move(s));
    }

    void classical_yd(const std::string& name, const std::string& over, const ClassicalYD<F>& m) {
        StructureSpec<F> s;
        s.kind = "classical_yd";
        s.over = over;
        s.dim = m.dim();
        s.act = binary_tensor(m.act());
        s.coact = cobinary_tensor(m.coact());
        add(name, std::move(s));
    }

    void module(const std::string& name, const std::string& over, const ModuleStruct<F>& m) {
        StructureSpec<F> s;
        s.kind = "module";
        s.over = over;
        s.dim = m.dim();
        s.act = binary_tensor(m.act());
        s.alpha = m.alpha().dense();
        add(name, std::move(s));
    }

    void comodule(const std::string& name, const std::string& over, const ComoduleStruct<F>& m) {
        StructureSpec<F> s;
        s.kind = "comodule";
        s.over = over;
        s.dim = m.dim();
        s.coact = cobinary_tensor(m.coact());
        s.alpha = m.alpha().dense();
        add(name, std::move(s));
    }

    void r_element(const std::string& name, const std::string& over, const RElement<F>& r) {
        StructureSpec<F> s;
        s.kind = "r_element";
        s.over = over;
        const auto d = r.base().dim();
        s.r = Matrix<S>(d, std::vector<S>(d, field().zero()));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) (*s.r)[i][j] = r.r().at(i * d + j, 0);
        add(name, std::move(s));
    }

    void sigma_form(const std::string& name, const std::string& over, const SigmaForm<F>& f) {
        StructureSpec<F> s;
        s.kind = "sigma_form";
        s.over = over;
        const auto d = f.base().dim();
        s.sigma = Matrix<S>(d, std::vector<S>(d, field().zero()));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) (*s.sigma)[i][j] = f.sigma().at(0, i * d + j);
        add(name, std::move(s));
    }

    void linear_map(const std::string& name, const LinearMap<F>& m) {
        StructureSpec<F> s;
        s.kind = "linear_map";
        s.domain = m.domain();
        s.codomain = m.codomain();
        s.matrix = m.dense();
        add(name, std::move(s));
    }

    void task(const std::string& name, const std::string& op, std::vector<std::string> args, std::optional<std::string> flavor = {}) {
        d_.tasks.push_back({name, op, std::move(args), std::move(flavor)});
    }

    SpecDocument<F> build() const { return d_; }

   private:
    void add(const std::string& name, StructureSpec<F> s) {
        if (!d_.structures.emplace(name, std::move(s)).second) throw std::logic_error("duplicate structure " + name);
    }

    SpecDocument<F> d_;
};

namespace catalog {

inline std::size_t to_size(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw PreconditionError(std::string(what) + " must be a non-negative integer, got \"" + s + "\"");
    return std::stoul(s);
}

/// Diagonal idempotent keeping the listed basis vectors.
template <ExactField F>
LinearMap<F> basis_projection(const F& field, std::size_t n, const std::vector<std::size_t>& keep) {
    return LinearMap<F>::from_columns(field, {n}, {n}, [&](std::size_t c) {
        typename LinearMap<F>::Column col;
        if (std::find(keep.begin(), keep.end(), c) != keep.end()) col.emplace_back(c, field.one());
        return col;
    });
}

inline std::string n2s(std::size_t n) { return std::to_string(n); }

template <ExactField F>
void add_cyclic_twist(DocumentBuilder<F>& b, std::size_t n, std::size_t k) {
    const auto tag = std::to_string(n) + "_" + std::to_string(k);
    b.hom_bialgebra("C" + tag, cyclic_endo_twist(b.field(), n, k));
    b.task("hom_bialgebra_C" + tag, "check_hom_bialgebra", {"C" + tag});
}

/// Graded C_n pair (s = 1, 2) twisted by g -> g^k with the associator, braiding and HYBE tasks.
template <ExactField F>
void add_graded_family(DocumentBuilder<F>& b, std::size_t n, std::size_t k) {
    const auto base = "H_C" + std::to_string(n);
    auto m1 = graded_trivial_yd(b.field(), n, 1, k);
    auto m2 = graded_trivial_yd(b.field(), n, 2 % n, k);
    b.hom_bialgebra(base, m1.base());
    const auto a = "Y" + std::to_string(n) + "a", c = "Y" + std::to_string(n) + "b";
    b.yd(a, base, m1);
    b.yd(c, base, m2);
    b.task("yd_" + a, "check_yd", {a});
    b.task("yd_" + c, "check_yd", {c});
    b.task("hat_" + a + c, "hat_tensor", {a, c});
    b.task("tilde_" + a + c, "tilde_tensor", {a, c});
    b.task("hybe_" + a + c + a, "check_hybe", {a, c, a});
    b.task("hybe_" + c + a + c, "check_hybe", {c, a, c});
    b.task("bridge_" + a + c, "check_bridge", {a, c});
    b.task("braid_" + a + c + c, "check_braid_relation", {a, c, c});
    b.task("braid_hybe_" + c + a + a, "check_braid_implies_hybe", {c, a, a});
    for (const char* fl : {"hat", "tilde"}) {
        b.task(std::string("pentagon_") + fl + "_" + n2s(n), "check_pentagon", {a, c, a, c}, fl);
        b.task(std::string("hexagons_") + fl + "_" + n2s(n), "check_hexagons", {a, c, c}, fl);
        b.task(std::string("assoc_morphism_") + fl + "_" + n2s(n), "check_associator_morphism", {a, c, a}, fl);
        b.task(std::string("braid_morphism_") + fl + "_" + n2s(n), "check_braiding_morphism", {c, a}, fl);
    }
    // Projection onto the unit basis vector is an endomorphism of both fixtures.
    const auto proj = "P" + std::to_string(n) + "_unit";
    b.linear_map(proj, basis_projection(b.field(), n, {0}));
    b.task("naturality_" + a + c, "check_braiding_naturality", {a, c, proj, proj});
    b.task("yd_morphism_" + proj, "check_yd_morphism", {proj, a, a});
}

template <ExactField F>
void add_s3(DocumentBuilder<F>& b, std::size_t t) {
    auto g = symmetric_group(3);
    auto classical = conjugation_classical_yd(b.field(), g);
    auto y = conjugation_yd(b.field(), g, inner_automorphism(g, t));
    b.bialgebra("kS3", classical.base());
    b.classical_yd("X_S3", "kS3", classical);
    b.hom_bialgebra("H_S3", y.base());
    b.yd("Y_S3", "H_S3", y);
    b.task("classical_yd_S3", "check_classical_yd", {"X_S3"});
    b.task("yd_S3", "check_yd", {"Y_S3"});
    b.task("hybe_S3", "check_hybe", {"Y_S3", "Y_S3", "Y_S3"});
    b.task("braid_S3", "check_braid_relation", {"Y_S3", "Y_S3", "Y_S3"});
    b.task("bridge_S3", "check_bridge", {"Y_S3", "Y_S3"});
    b.task("hexagons_hat_S3", "check_hexagons", {"Y_S3", "Y_S3", "Y_S3"}, "hat");
    b.task("hexagons_tilde_S3", "check_hexagons", {"Y_S3", "Y_S3", "Y_S3"}, "tilde");
    // Conjugacy classes are preserved by the action, the grading and every automorphism.
    std::vector<std::size_t> transpositions;
    for (std::size_t h = 0; h < g.order(); ++h) transpositions.push_back(g.mul(g.mul(h, 1), g.inverse(h)));
    b.linear_map("P_S3_class", basis_projection(b.field(), g.order(), transpositions));
    b.task("yd_morphism_S3_class", "check_yd_morphism", {"P_S3_class", "Y_S3", "Y_S3"});
    b.task("naturality_S3", "check_braiding_naturality", {"Y_S3", "Y_S3", "P_S3_class", "P_S3_class"});
}

template <ExactField F>
void add_r_matrix(DocumentBuilder<F>& b, std::size_t n, const typename F::value_type& omega, std::size_t k) {
    auto r = cyclic_r_matrix(b.field(), n, omega, k);
    const auto tag = n2s(n) + "_" + n2s(k);
    const auto h = "HR" + tag, rn = "R" + tag, m = "MR" + tag;
    b.hom_bialgebra(h, r.base());
    b.r_element(rn, h, r);
    b.module(m, h, regular_module(r.base()));
    b.task("qt_" + rn, "check_qt", {rn});
    b.task("r_invariance_" + rn, "check_r_invariance", {rn});
    b.task("yd_from_module_" + rn, "yd_from_module", {m, rn});
    b.task("qt_coincide_" + rn, "check_qt_tensor_coincide", {m, m, rn});
    b.task("qt_braiding_" + rn, "check_qt_braiding", {m, m, rn});
    b.task("qt_hybe_" + rn, "check_qt_hybe", {m, m, m, rn});
}

template <ExactField F>
void add_bicharacter(DocumentBuilder<F>& b, std::size_t n, const typename F::value_type& omega, std::size_t k) {
    auto s = cyclic_bicharacter_sigma(b.field(), n, omega, k);
    const auto tag = n2s(n) + "_" + n2s(k);
    const auto h = "HS" + tag, sn = "sigma" + tag, m = "MS" + tag;
    b.hom_bialgebra(h, s.base());
    b.sigma_form(sn, h, s);
    b.comodule(m, h, regular_comodule(s.base()));
    b.task("cqt_" + sn, "check_cqt", {sn});
    b.task("sigma_invariance_" + sn, "check_sigma_invariance", {sn});
    b.task("yd_from_comodule_" + sn, "yd_from_comodule", {m, sn});
    b.task("cqt_coincide_" + sn, "check_cqt_tensor_coincide", {m, m, sn});
    b.task("cqt_braiding_" + sn, "check_cqt_braiding", {m, m, sn});
    b.task("cqt_hybe_" + sn, "check_cqt_hybe", {m, m, m, sn});
}

/// The passing suite shipped for each field.
template <ExactField F>
SpecDocument<F> suite(const F& field, std::uint64_t p) {
    DocumentBuilder<F> b(field);
    add_cyclic_twist(b, 6, 5);
    add_cyclic_twist(b, 4, 2);
    add_s3(b, 1);
    if (p == 0) {
        add_r_matrix(b, 2, field.from_int(-1), 1);
        add_graded_family(b, 3, 2);
    } else if (p == 7) {
        add_r_matrix(b, 3, field.from_int(2), 1);
        add_bicharacter(b, 3, field.from_int(2), 1);
        add_graded_family(b, 3, 2);
    } else {
        if ((p - 1) % 5) throw PreconditionError("suite over a prime field needs p = 7 or 5 | p - 1");
        auto w = primitive_root_of_unity(PrimeField(p), 5);
        auto omega = field.from_int(static_cast<long long>(w.value()));
        add_r_matrix(b, 5, omega, 4);
        add_bicharacter(b, 5, omega, 4);
        add_graded_family(b, 5, 4);
    }
    return b.build();
}

template <ExactField F>
SpecDocument<F> build(const F& field, std::uint64_t p, const std::string& name, const std::vector<std::string>& params) {
    auto need = [&](std::size_t n, const char* usage) {
        if (params.size() != n) throw PreconditionError("usage: example " + name + " " + usage);
    };
    DocumentBuilder<F> b(field);
    if (name == "cyclic_twist") {
        need(3, "<n> <k> <p>");
        add_cyclic_twist(b, to_size(params[0], "n"), to_size(params[1], "k"));
    } else if (name == "s3_conjugation") {
        need(2, "<t> <p>");
        add_s3(b, to_size(params[0], "t"));
    } else if (name == "graded_yd") {
        need(3, "<n> <k> <p>");
        add_graded_family(b, to_size(params[0], "n"), to_size(params[1], "k"));
    } else if (name == "r_matrix") {
        need(4, "<n> <p> <omega> <k>");
        add_r_matrix(b, to_size(params[0], "n"), field.parse(params[2]), to_size(params[3], "k"));
    } else if (name == "bicharacter") {
        need(4, "<n> <p> <omega> <k>");
        add_bicharacter(b, to_size(params[0], "n"), field.parse(params[2]), to_size(params[3], "k"));
    } else if (name == "suite") {
        need(1, "<p>");
        return suite(field, p);
    } else {
        throw PreconditionError("unknown example \"" + name + "\"; known: cyclic_twist, s3_conjugation, graded_yd, r_matrix, bicharacter, suite");
    }
    return b.build();
}

/// Position of the field parameter among an example's parameters.
inline std::size_t field_param_index(const std::string& name) {
    if (name == "r_matrix" || name == "bicharacter") return 1;
    if (name == "cyclic_twist" || name == "graded_yd") return 2;
    if (name == "s3_conjugation") return 1;
    return 0;
}

}  // namespace catalog

/// Builds the named example; the field comes from its p parameter (0 = rationals).
inline AnyDocument example_document(const std::string& name, const std::vector<std::string>& params) {
    const auto idx = catalog::field_param_index(name);
    if (idx >= params.size()) return catalog::build(RationalField{}, 0, name, params);
    const auto p = catalog::to_size(params[idx], "p");
    try {
        if (p == 0) return catalog::build(RationalField{}, 0, name, params);
        return catalog::build(PrimeField(p), p, name, params);
    } catch (const DomainError& e) {
        throw PreconditionError(e.what());
    }
}

}  // namespace homyd
