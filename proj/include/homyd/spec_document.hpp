#pragma once

/**
 * @file spec_document.hpp
 * @brief The JSON structure-file format: parsing, canonical serialization
 *        and the task runner behind the command-line front end.
 *
 * A document has three top-level keys. "field" is "rational" or
 * "prime:<p>". "structures" maps names to objects with a "kind". "tasks"
 * is an ordered list of {name, op, args[, flavor]}. Every scalar is a JSON
 * string. Keys starting with "_" are ignored everywhere.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "homyd/homyd.hpp"

namespace homyd {

/// Malformed document. `location` is "line:col" for syntax errors, a JSON path otherwise.
class DocumentError : public Error {
   public:
    DocumentError(std::string location, const std::string& message)
        : Error(location + ": " + message), location_(std::move(location)), message_(message) {}
    const std::string& location() const { return location_; }
    const std::string& message() const { return message_; }

   private:
    std::string location_;
    std::string message_;
};

template <ExactField F>
struct StructureSpec {
    using S = typename F::value_type;
    std::string kind;
    std::string over;
    std::size_t dim = 0;
    std::optional<Tensor3<S>> mu, delta, act, coact;
    std::optional<Matrix<S>> alpha, r, sigma, matrix;
    Dims domain, codomain;
    bool operator==(const StructureSpec&) const = default;
};

struct TaskSpec {
    std::string name;
    std::string op;
    std::vector<std::string> args;
    std::optional<std::string> flavor;
    bool operator==(const TaskSpec&) const = default;
};

template <ExactField F>
struct SpecDocument {
    F field;
    std::map<std::string, StructureSpec<F>> structures;
    std::vector<TaskSpec> tasks;
    bool operator==(const SpecDocument&) const = default;
};

using AnyDocument = std::variant<SpecDocument<RationalField>, SpecDocument<PrimeField>>;

namespace doc {

using nlohmann::json;

enum class Cat { algebra, coalgebra, bialgebra, hom_algebra, hom_coalgebra, hom_bialgebra, classical_module, classical_comodule, module, comodule,
                 classical_yd, yd, r_element, sigma_form, map };

inline const std::map<std::string, std::set<Cat>>& kind_table() {
    static const std::map<std::string, std::set<Cat>> t = {
        {"algebra", {Cat::algebra}},
        {"coalgebra", {Cat::coalgebra}},
        {"bialgebra", {Cat::bialgebra, Cat::algebra, Cat::coalgebra}},
        {"hom_algebra", {Cat::hom_algebra}},
        {"hom_coalgebra", {Cat::hom_coalgebra}},
        {"hom_bialgebra", {Cat::hom_bialgebra, Cat::hom_algebra, Cat::hom_coalgebra}},
        {"classical_module", {Cat::classical_module}},
        {"classical_comodule", {Cat::classical_comodule}},
        {"classical_yd", {Cat::classical_yd, Cat::classical_module, Cat::classical_comodule}},
        {"module", {Cat::module}},
        {"comodule", {Cat::comodule}},
        {"yd", {Cat::yd, Cat::module, Cat::comodule}},
        {"r_element", {Cat::r_element}},
        {"sigma_form", {Cat::sigma_form}},
        {"linear_map", {Cat::map}},
    };
    return t;
}

inline const char* cat_name(Cat c) {
    switch (c) {
        case Cat::algebra: return "algebra";
        case Cat::coalgebra: return "coalgebra";
        case Cat::bialgebra: return "bialgebra";
        case Cat::hom_algebra: return "hom_algebra";
        case Cat::hom_coalgebra: return "hom_coalgebra";
        case Cat::hom_bialgebra: return "hom_bialgebra";
        case Cat::classical_module: return "classical_module";
        case Cat::classical_comodule: return "classical_comodule";
        case Cat::module: return "module";
        case Cat::comodule: return "comodule";
        case Cat::classical_yd: return "classical_yd";
        case Cat::yd: return "yd";
        case Cat::r_element: return "r_element";
        case Cat::sigma_form: return "sigma_form";
        case Cat::map: return "linear_map";
    }
    return "?";
}

struct OpInfo {
    std::vector<std::vector<Cat>> signatures;
    bool flavored = false;
};

inline const std::map<std::string, OpInfo>& op_table() {
    using C = Cat;
    static const std::map<std::string, OpInfo> t = {
        {"check_associative", {{{C::algebra}}}},
        {"check_coassociative", {{{C::coalgebra}}}},
        {"check_classical_bialgebra", {{{C::bialgebra}}}},
        {"check_hom_algebra", {{{C::hom_algebra}}}},
        {"check_hom_coalgebra", {{{C::hom_coalgebra}}}},
        {"check_hom_bialgebra", {{{C::hom_bialgebra}}}},
        {"twist_algebra", {{{C::algebra, C::map}}}},
        {"twist_coalgebra", {{{C::coalgebra, C::map}}}},
        {"twist_bialgebra", {{{C::bialgebra, C::map}}}},
        {"tensor_algebra", {{{C::hom_algebra, C::hom_algebra}}}},
        {"check_classical_module", {{{C::classical_module}}}},
        {"check_classical_comodule", {{{C::classical_comodule}}}},
        {"check_module", {{{C::module}}}},
        {"check_comodule", {{{C::comodule}}}},
        {"induce_module", {{{C::classical_module, C::map, C::map}}}},
        {"induce_comodule", {{{C::classical_comodule, C::map, C::map}}}},
        {"tensor_modules", {{{C::module, C::module, C::hom_bialgebra}}}},
        {"tensor_comodules", {{{C::comodule, C::comodule, C::hom_bialgebra}}}},
        {"check_module_morphism", {{{C::map, C::module, C::module}}}},
        {"check_comodule_morphism", {{{C::map, C::comodule, C::comodule}}}},
        {"check_yd_morphism", {{{C::map, C::yd, C::yd}}}},
        {"check_yd", {{{C::yd}}}},
        {"check_yd_condition", {{{C::yd}}}},
        {"check_classical_yd", {{{C::classical_yd}}}},
        {"twist_yd", {{{C::classical_yd, C::map, C::map}}}},
        {"hat_tensor", {{{C::yd, C::yd}}}},
        {"tilde_tensor", {{{C::yd, C::yd}}}},
        {"check_hybe", {{{C::yd, C::yd, C::yd}, {C::map, C::map, C::map, C::map, C::map, C::map}}}},
        {"check_bridge", {{{C::yd, C::yd}}}},
        {"check_braid_relation", {{{C::yd, C::yd, C::yd}, {C::map, C::map, C::map}}}},
        {"check_braid_implies_hybe", {{{C::yd, C::yd, C::yd}, {C::map, C::map, C::map, C::map, C::map, C::map}}}},
        {"check_pentagon", {{{C::yd, C::yd, C::yd, C::yd}}, true}},
        {"check_hexagons", {{{C::yd, C::yd, C::yd}}, true}},
        {"check_associator_morphism", {{{C::yd, C::yd, C::yd}}, true}},
        {"check_braiding_morphism", {{{C::yd, C::yd}}, true}},
        {"check_braiding_naturality", {{{C::yd, C::yd, C::map, C::map}}}},
        {"check_qt", {{{C::r_element}}}},
        {"check_r_invariance", {{{C::r_element}}}},
        {"yd_from_module", {{{C::module, C::r_element}}}},
        {"check_qt_tensor_coincide", {{{C::module, C::module, C::r_element}}}},
        {"check_qt_braiding", {{{C::module, C::module, C::r_element}}}},
        {"check_qt_hybe", {{{C::module, C::module, C::module, C::r_element}}}},
        {"check_cqt", {{{C::sigma_form}}}},
        {"check_sigma_invariance", {{{C::sigma_form}}}},
        {"yd_from_comodule", {{{C::comodule, C::sigma_form}}}},
        {"check_cqt_tensor_coincide", {{{C::comodule, C::comodule, C::sigma_form}}}},
        {"check_cqt_braiding", {{{C::comodule, C::comodule, C::sigma_form}}}},
        {"check_cqt_hybe", {{{C::comodule, C::comodule, C::comodule, C::sigma_form}}}},
    };
    return t;
}

/// Which kinds may appear as "over" for a kind.
inline std::set<Cat> base_cats(const std::string& kind) {
    if (kind == "classical_module") return {Cat::algebra};
    if (kind == "classical_comodule") return {Cat::coalgebra};
    if (kind == "classical_yd") return {Cat::bialgebra};
    if (kind == "module") return {Cat::hom_algebra};
    if (kind == "comodule") return {Cat::hom_coalgebra};
    if (kind == "yd" || kind == "r_element" || kind == "sigma_form") return {Cat::hom_bialgebra};
    return {};
}

/// Fields each kind requires, besides "kind".
inline std::vector<std::string> required_fields(const std::string& kind) {
    if (kind == "algebra") return {"dim", "mu"};
    if (kind == "coalgebra") return {"dim", "delta"};
    if (kind == "bialgebra") return {"dim", "mu", "delta"};
    if (kind == "hom_algebra") return {"dim", "mu", "alpha"};
    if (kind == "hom_coalgebra") return {"dim", "delta", "alpha"};
    if (kind == "hom_bialgebra") return {"dim", "mu", "delta", "alpha"};
    if (kind == "classical_module") return {"over", "dim", "act"};
    if (kind == "classical_comodule") return {"over", "dim", "coact"};
    if (kind == "classical_yd") return {"over", "dim", "act", "coact"};
    if (kind == "module") return {"over", "dim", "act", "alpha"};
    if (kind == "comodule") return {"over", "dim", "coact", "alpha"};
    if (kind == "yd") return {"over", "dim", "act", "coact", "alpha"};
    if (kind == "r_element") return {"over", "R"};
    if (kind == "sigma_form") return {"over", "sigma"};
    if (kind == "linear_map") return {"domain", "codomain", "matrix"};
    return {};
}

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

template <ExactField F>
class Parser {
   public:
    using S = typename F::value_type;
    explicit Parser(F field) : field_(std::move(field)) {}

    SpecDocument<F> document(const json& j) {
        SpecDocument<F> d{field_, {}, {}};
        if (j.contains("structures")) {
            const auto& s = j.at("structures");
            if (!s.is_object()) fail("structures", "must be an object");
            for (auto it = s.begin(); it != s.end(); ++it) {
                if (is_ignored(it.key())) continue;
                d.structures.emplace(it.key(), structure("structures." + it.key(), it.value()));
            }
        }
        if (j.contains("tasks")) {
            const auto& t = j.at("tasks");
            if (!t.is_array()) fail("tasks", "must be an array");
            for (std::size_t i = 0; i < t.size(); ++i) d.tasks.push_back(task("tasks[" + std::to_string(i) + "]", t[i]));
        }
        resolve(d);
        return d;
    }

   private:
    static bool is_ignored(const std::string& key) { return !key.empty() && key[0] == '_'; }

    [[noreturn]] static void fail(const std::string& path, const std::string& msg) { throw DocumentError(path, msg); }

    S scalar(const std::string& path, const json& v) {
        if (!v.is_string()) fail(path, "scalar must be a string");
        try {
            return field_.parse(v.get<std::string>());
        } catch (const DomainError& e) {
            fail(path, e.what());
        }
    }

    std::size_t positive(const std::string& path, const json& v) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) fail(path, "must be a positive integer");
        return v.get<std::size_t>();
    }

    Matrix<S> matrix(const std::string& path, const json& v, std::size_t rows, std::size_t cols) {
        if (!v.is_array() || v.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
        Matrix<S> out;
        for (std::size_t i = 0; i < rows; ++i) {
            const auto p = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_array() || v[i].size() != cols) fail(p, "expected " + std::to_string(cols) + " entries");
            std::vector<S> row;
            for (std::size_t j = 0; j < cols; ++j) row.push_back(scalar(p + "[" + std::to_string(j) + "]", v[i][j]));
            out.push_back(std::move(row));
        }
        return out;
    }

    Tensor3<S> tensor(const std::string& path, const json& v, std::size_t a, std::size_t b, std::size_t c) {
        if (!v.is_array() || v.size() != a) fail(path, "expected " + std::to_string(a) + " slices");
        Tensor3<S> out;
        for (std::size_t i = 0; i < a; ++i) out.push_back(matrix(path + "[" + std::to_string(i) + "]", v[i], b, c));
        return out;
    }

    Dims dims(const std::string& path, const json& v) {
        if (!v.is_array()) fail(path, "must be a list of positive integers");
        Dims out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(positive(path + "[" + std::to_string(i) + "]", v[i]));
        return out;
    }

    /// Shapes that depend on "over" are checked later in resolve(); keep the raw arrays until then.
    StructureSpec<F> structure(const std::string& path, const json& v) {
        if (!v.is_object()) fail(path, "must be an object");
        if (!v.contains("kind") || !v.at("kind").is_string()) fail(path, "missing string field \"kind\"");
        StructureSpec<F> s;
        s.kind = v.at("kind").get<std::string>();
        if (!kind_table().count(s.kind)) fail(path + ".kind", "unknown kind \"" + s.kind + "\"");
        auto req = required_fields(s.kind);
        for (const auto& f : req)
            if (!v.contains(f)) fail(path, "kind " + s.kind + " requires field \"" + f + "\"");
        for (auto it = v.begin(); it != v.end(); ++it)
            if (!is_ignored(it.key()) && it.key() != "kind" && std::find(req.begin(), req.end(), it.key()) == req.end())
                fail(path + "." + it.key(), "unexpected field for kind " + s.kind);
        if (v.contains("over")) {
            if (!v.at("over").is_string()) fail(path + ".over", "must be a structure name");
            s.over = v.at("over").get<std::string>();
        }
        if (v.contains("dim")) s.dim = positive(path + ".dim", v.at("dim"));
        raw_[path] = v;
        return s;
    }

    TaskSpec task(const std::string& path, const json& v) {
        if (!v.is_object()) fail(path, "must be an object");
        TaskSpec t;
        for (auto it = v.begin(); it != v.end(); ++it) {
            const auto& k = it.key();
            if (is_ignored(k)) continue;
            if (k != "name" && k != "op" && k != "args" && k != "flavor") fail(path + "." + k, "unexpected task field");
        }
        for (const char* k : {"name", "op"}) {
            if (!v.contains(k) || !v.at(k).is_string()) fail(path, std::string("missing string field \"") + k + "\"");
        }
        t.name = v.at("name").get<std::string>();
        t.op = v.at("op").get<std::string>();
        if (!v.contains("args") || !v.at("args").is_array()) fail(path, "missing list field \"args\"");
        for (std::size_t i = 0; i < v.at("args").size(); ++i) {
            const auto& a = v.at("args")[i];
            if (!a.is_string()) fail(path + ".args[" + std::to_string(i) + "]", "must be a structure name");
            t.args.push_back(a.get<std::string>());
        }
        if (v.contains("flavor")) {
            if (!v.at("flavor").is_string()) fail(path + ".flavor", "must be \"hat\" or \"tilde\"");
            t.flavor = v.at("flavor").get<std::string>();
            if (*t.flavor != "hat" && *t.flavor != "tilde") fail(path + ".flavor", "must be \"hat\" or \"tilde\"");
        }
        return t;
    }

    std::size_t dim_of(const SpecDocument<F>& d, const std::string& name) { return d.structures.at(name).dim; }

    void resolve(SpecDocument<F>& d) {
        // Leaves first: bases do not have an "over".
        for (int pass = 0; pass < 2; ++pass) {
            for (auto& [name, s] : d.structures) {
                const bool leaf = s.over.empty();
                if ((pass == 0) != leaf) continue;
                const auto path = "structures." + name;
                if (!leaf) {
                    auto it = d.structures.find(s.over);
                    if (it == d.structures.end()) fail(path + ".over", "unresolved reference \"" + s.over + "\"");
                    const auto& cats = kind_table().at(it->second.kind);
                    bool ok = false;
                    for (auto c : base_cats(s.kind)) ok = ok || cats.count(c);
                    if (!ok) fail(path + ".over", "\"" + s.over + "\" of kind " + it->second.kind + " cannot carry a " + s.kind);
                }
                fill(path, s, leaf ? 0 : dim_of(d, s.over));
            }
        }
        std::set<std::string> names;
        for (std::size_t i = 0; i < d.tasks.size(); ++i) {
            const auto& t = d.tasks[i];
            const auto path = "tasks[" + std::to_string(i) + "]";
            if (!names.insert(t.name).second) fail(path + ".name", "duplicate task name \"" + t.name + "\"");
            auto op = op_table().find(t.op);
            if (op == op_table().end()) fail(path + ".op", "unknown op \"" + t.op + "\"");
            if (t.flavor && !op->second.flavored) fail(path + ".flavor", "op " + t.op + " takes no flavor");
            for (std::size_t a = 0; a < t.args.size(); ++a)
                if (!d.structures.count(t.args[a]))
                    fail(path + ".args[" + std::to_string(a) + "]", "unresolved reference \"" + t.args[a] + "\"");
            bool matched = false;
            for (const auto& sig : op->second.signatures) {
                if (sig.size() != t.args.size()) continue;
                bool ok = true;
                for (std::size_t a = 0; a < sig.size() && ok; ++a) ok = kind_table().at(d.structures.at(t.args[a]).kind).count(sig[a]) > 0;
                matched = matched || ok;
            }
            if (!matched) {
                std::string expect;
                for (const auto& sig : op->second.signatures) {
                    expect += expect.empty() ? "(" : " or (";
                    for (std::size_t a = 0; a < sig.size(); ++a) expect += std::string(a ? ", " : "") + cat_name(sig[a]);
                    expect += ")";
                }
                fail(path + ".args", "op " + t.op + " expects " + expect);
            }
        }
    }

    void fill(const std::string& path, StructureSpec<F>& s, std::size_t base) {
        const json& v = raw_.at(path);
        const auto d = s.dim;
        const auto& k = s.kind;
        if (v.contains("mu")) s.mu = tensor(path + ".mu", v.at("mu"), d, d, d);
        if (v.contains("delta")) s.delta = tensor(path + ".delta", v.at("delta"), d, d, d);
        if (v.contains("alpha")) s.alpha = matrix(path + ".alpha", v.at("alpha"), d, d);
        if (v.contains("act")) s.act = tensor(path + ".act", v.at("act"), base, d, d);
        if (v.contains("coact")) s.coact = tensor(path + ".coact", v.at("coact"), d, base, d);
        if (k == "r_element") s.r = matrix(path + ".R", v.at("R"), base, base);
        if (k == "sigma_form") s.sigma = matrix(path + ".sigma", v.at("sigma"), base, base);
        if (k == "linear_map") {
            s.domain = dims(path + ".domain", v.at("domain"));
            s.codomain = dims(path + ".codomain", v.at("codomain"));
            s.matrix = matrix(path + ".matrix", v.at("matrix"), dims_product(s.codomain), dims_product(s.domain));
        }
    }

    F field_;
    std::map<std::string, json> raw_;
};

template <class S>
json matrix_json(const Matrix<S>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        out.push_back(std::move(r));
    }
    return out;
}

template <class S>
json tensor_json(const Tensor3<S>& t) {
    json out = json::array();
    for (const auto& m : t) out.push_back(matrix_json(m));
    return out;
}

}  // namespace doc

/// Parses a document; syntax errors carry "line:col", semantic ones a JSON path.
inline AnyDocument parse_spec(std::string_view text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = doc::line_col(text, e.byte);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        if (pos != std::string::npos) msg = msg.substr(pos);
        throw DocumentError(std::to_string(line) + ":" + std::to_string(col), msg);
    }
    if (!j.is_object()) throw DocumentError("1:1", "document must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (!k.empty() && k[0] == '_') continue;
        if (k != "field" && k != "structures" && k != "tasks") throw DocumentError(k, "unexpected top-level key");
    }
    if (!j.contains("field") || !j.at("field").is_string()) throw DocumentError("field", "missing field descriptor");
    const auto desc = j.at("field").get<std::string>();
    if (desc == "rational") return doc::Parser<RationalField>(RationalField{}).document(j);
    if (desc.rfind("prime:", 0) == 0) {
        const auto digits = desc.substr(6);
        if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw DocumentError("field", "malformed field descriptor \"" + desc + "\"");
        try {
            return doc::Parser<PrimeField>(PrimeField(std::stoull(digits))).document(j);
        } catch (const DocumentError&) {
            throw;
        } catch (const DomainError& e) {
            throw DocumentError("field", e.what());
        }
    }
    throw DocumentError("field", "field must be \"rational\" or \"prime:<p>\", got \"" + desc + "\"");
}

/// Canonical JSON form; parse_spec(serialize(d)) == d.
template <ExactField F>
std::string serialize(const SpecDocument<F>& d) {
    using nlohmann::json;
    json j;
    j["field"] = d.field.descriptor();
    j["structures"] = json::object();
    for (const auto& [name, s] : d.structures) {
        json o;
        o["kind"] = s.kind;
        if (!s.over.empty()) o["over"] = s.over;
        if (s.dim) o["dim"] = s.dim;
        if (s.mu) o["mu"] = doc::tensor_json(*s.mu);
        if (s.delta) o["delta"] = doc::tensor_json(*s.delta);
        if (s.act) o["act"] = doc::tensor_json(*s.act);
        if (s.coact) o["coact"] = doc::tensor_json(*s.coact);
        if (s.alpha) o["alpha"] = doc::matrix_json(*s.alpha);
        if (s.r) o["R"] = doc::matrix_json(*s.r);
        if (s.sigma) o["sigma"] = doc::matrix_json(*s.sigma);
        if (s.kind == "linear_map") {
            o["domain"] = s.domain;
            o["codomain"] = s.codomain;
            o["matrix"] = doc::matrix_json(*s.matrix);
        }
        j["structures"][name] = std::move(o);
    }
    j["tasks"] = json::array();
    for (const auto& t : d.tasks) {
        json o{{"name", t.name}, {"op", t.op}, {"args", t.args}};
        if (t.flavor) o["flavor"] = *t.flavor;
        j["tasks"].push_back(std::move(o));
    }
    return j.dump(2) + "\n";
}

inline std::string serialize(const AnyDocument& d) {
    return std::visit([](const auto& x) { return serialize(x); }, d);
}

/// Largest carrier or base dimension declared in the document.
template <ExactField F>
std::size_t max_declared_dim(const SpecDocument<F>& d) {
    std::size_t m = 0;
    for (const auto& [name, s] : d.structures) {
        m = std::max(m, s.dim);
        for (auto x : s.domain) m = std::max(m, x);
        for (auto x : s.codomain) m = std::max(m, x);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Building typed structures from a document

template <ExactField F>
class Workspace {
   public:
    using S = typename F::value_type;
    explicit Workspace(const SpecDocument<F>& d) : d_(d) {}

    const F& field() const { return d_.field; }
    const StructureSpec<F>& spec(const std::string& name) const { return d_.structures.at(name); }

    LinearMap<F> matrix_map(const Matrix<S>& m, std::size_t d) const { return LinearMap<F>::from_dense(field(), {d}, {d}, m); }
    LinearMap<F> binary(const Tensor3<S>& t, std::size_t a, std::size_t b) const { return map_from_binary(field(), a, b, b, t); }
    LinearMap<F> product(const StructureSpec<F>& s) const { return map_from_binary(field(), s.dim, s.dim, s.dim, *s.mu); }
    LinearMap<F> coproduct(const StructureSpec<F>& s) const { return map_from_cobinary(field(), s.dim, s.dim, s.dim, *s.delta); }
    LinearMap<F> action(const StructureSpec<F>& s) const { return map_from_binary(field(), spec(s.over).dim, s.dim, s.dim, *s.act); }
    LinearMap<F> coaction(const StructureSpec<F>& s) const { return map_from_cobinary(field(), s.dim, spec(s.over).dim, s.dim, *s.coact); }
    LinearMap<F> alpha(const StructureSpec<F>& s) const { return matrix_map(*s.alpha, s.dim); }

    Algebra<F> algebra(const std::string& n) const { return Algebra<F>(product(spec(n))); }
    Coalgebra<F> coalgebra(const std::string& n) const { return Coalgebra<F>(coproduct(spec(n))); }
    ClassicalBialgebra<F> bialgebra(const std::string& n) const { return {product(spec(n)), coproduct(spec(n))}; }
    HomAlgebra<F> hom_algebra(const std::string& n) const { return {product(spec(n)), alpha(spec(n))}; }
    HomCoalgebra<F> hom_coalgebra(const std::string& n) const { return {coproduct(spec(n)), alpha(spec(n))}; }
    HomBialgebra<F> hom_bialgebra(const std::string& n) const { return {product(spec(n)), coproduct(spec(n)), alpha(spec(n))}; }

    ClassicalModule<F> classical_module(const std::string& n) const {
        const auto& s = spec(n);
        return {algebra(s.over), action(s)};
    }
    ClassicalComodule<F> classical_comodule(const std::string& n) const {
        const auto& s = spec(n);
        return {coalgebra(s.over), coaction(s)};
    }
    ClassicalYD<F> classical_yd(const std::string& n) const {
        const auto& s = spec(n);
        return {bialgebra(s.over), action(s), coaction(s)};
    }
    ModuleStruct<F> module(const std::string& n) const {
        const auto& s = spec(n);
        return {hom_algebra(s.over), action(s), alpha(s)};
    }
    ComoduleStruct<F> comodule(const std::string& n) const {
        const auto& s = spec(n);
        return {hom_coalgebra(s.over), coaction(s), alpha(s)};
    }
    YDModule<F> yd(const std::string& n) const {
        const auto& s = spec(n);
        return {hom_bialgebra(s.over), action(s), coaction(s), alpha(s)};
    }
    RElement<F> r_element(const std::string& n) const {
        const auto& s = spec(n);
        return RElement<F>::from_matrix(hom_bialgebra(s.over), *s.r);
    }
    SigmaForm<F> sigma_form(const std::string& n) const {
        const auto& s = spec(n);
        return SigmaForm<F>::from_matrix(hom_bialgebra(s.over), *s.sigma);
    }
    LinearMap<F> map(const std::string& n) const {
        const auto& s = spec(n);
        return LinearMap<F>::from_dense(field(), s.codomain, s.domain, *s.matrix);
    }

   private:
    const SpecDocument<F>& d_;
};

// ---------------------------------------------------------------------------
// Running tasks

struct TaskResult {
    std::string name;
    std::string op;
    std::string status;  ///< "pass", "fail", "inapplicable: <why>" or "error: <why>"
    std::string law;
    std::size_t failure_count = 0;
    nlohmann::json failures = nlohmann::json::array();
    std::vector<std::string> notes;
    bool passed() const { return status == "pass"; }
};

struct ReportBundle {
    std::string source;
    std::string field;
    std::vector<TaskResult> results;

    bool all_passed() const {
        return std::all_of(results.begin(), results.end(), [](const TaskResult& r) { return r.passed(); });
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["source"] = source;
        j["field"] = field;
        j["tasks"] = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json t{{"name", r.name}, {"op", r.op}, {"status", r.status}, {"passed", r.passed()}};
            if (!r.law.empty()) t["law"] = r.law;
            t["failure_count"] = r.failure_count;
            t["failures"] = r.failures;
            t["notes"] = r.notes;
            j["tasks"].push_back(std::move(t));
        }
        return j;
    }

    std::string to_human() const {
        std::size_t w_name = 4, w_op = 2;
        for (const auto& r : results) {
            w_name = std::max(w_name, r.name.size());
            w_op = std::max(w_op, r.op.size());
        }
        auto pad = [](std::string s, std::size_t w) {
            s.resize(std::max(w, s.size()), ' ');
            return s;
        };
        std::ostringstream os;
        os << "== " << source << " (" << field << ")\n";
        os << pad("task", w_name) << "  " << pad("op", w_op) << "  status\n";
        std::size_t pass = 0, fail = 0, inapplicable = 0;
        for (const auto& r : results) {
            os << pad(r.name, w_name) << "  " << pad(r.op, w_op) << "  " << r.status;
            if (!r.passed() && !r.failures.empty()) {
                const auto& f = r.failures.front();
                os << "  [" << r.failure_count << " failure(s); first: " << f.at("law").get<std::string>() << " at " << f.at("index").dump() << "]";
            }
            os << "\n";
            for (const auto& n : r.notes) os << pad("", w_name) << "  note: " << n << "\n";
            if (r.passed())
                ++pass;
            else if (r.status.rfind("inapplicable", 0) == 0)
                ++inapplicable;
            else
                ++fail;
        }
        os << results.size() << " task(s): " << pass << " pass, " << fail << " fail, " << inapplicable << " inapplicable\n";
        return os.str();
    }
};

namespace doc {

constexpr std::size_t kFailureLimit = 10;

template <ExactField F>
json column_json(const typename LinearMap<F>::Column& col, const Dims& dims) {
    json out = json::array();
    for (const auto& [r, v] : col) out.push_back(json{{"at", unflatten(dims, r)}, {"value", v.str()}});
    return out;
}

template <ExactField F>
TaskResult to_result(const TaskSpec& t, const CheckReport<F>& rep) {
    TaskResult r{t.name, t.op, rep.passed() ? "pass" : "fail", rep.law, rep.failures.size(), json::array(), rep.notes};
    for (std::size_t i = 0; i < rep.failures.size() && i < kFailureLimit; ++i) {
        const auto& f = rep.failures[i];
        r.failures.push_back(json{{"law", f.law},
                                  {"index", f.index},
                                  {"value_dims", f.value_dims},
                                  {"lhs", column_json<F>(f.lhs, f.value_dims)},
                                  {"rhs", column_json<F>(f.rhs, f.value_dims)}});
    }
    return r;
}

template <ExactField F>
CheckReport<F> dispatch(const Workspace<F>& w, const TaskSpec& t) {
    const auto& op = t.op;
    const auto& a = t.args;
    const Flavor flavor = t.flavor && *t.flavor == "tilde" ? Flavor::tilde : Flavor::hat;
    auto is_map = [&](std::size_t i) { return w.spec(a[i]).kind == "linear_map"; };

    if (op == "check_associative") return check_associative(w.algebra(a[0]));
    if (op == "check_coassociative") return check_coassociative(w.coalgebra(a[0]));
    if (op == "check_classical_bialgebra") return check_classical_bialgebra(w.bialgebra(a[0]));
    if (op == "check_hom_algebra") return check_hom_algebra(w.hom_algebra(a[0]));
    if (op == "check_hom_coalgebra") return check_hom_coalgebra(w.hom_coalgebra(a[0]));
    if (op == "check_hom_bialgebra") return check_hom_bialgebra(w.hom_bialgebra(a[0]));
    if (op == "twist_algebra") return check_hom_algebra(twist_algebra(w.algebra(a[0]), w.map(a[1])));
    if (op == "twist_coalgebra") return check_hom_coalgebra(twist_coalgebra(w.coalgebra(a[0]), w.map(a[1])));
    if (op == "twist_bialgebra") return check_hom_bialgebra(twist_bialgebra(w.bialgebra(a[0]), w.map(a[1])));
    if (op == "tensor_algebra") return check_hom_algebra(tensor_algebra(w.hom_algebra(a[0]), w.hom_algebra(a[1])));
    if (op == "check_classical_module") return check_classical_module(w.classical_module(a[0]));
    if (op == "check_classical_comodule") return check_classical_comodule(w.classical_comodule(a[0]));
    if (op == "check_module") return check_module(w.module(a[0]));
    if (op == "check_comodule") return check_comodule(w.comodule(a[0]));
    if (op == "induce_module") return check_module(induce_module(w.classical_module(a[0]), w.map(a[1]), w.map(a[2])));
    if (op == "induce_comodule") return check_comodule(induce_comodule(w.classical_comodule(a[0]), w.map(a[1]), w.map(a[2])));
    if (op == "tensor_modules") return check_module(tensor_modules(w.module(a[0]), w.module(a[1]), w.hom_bialgebra(a[2])));
    if (op == "tensor_comodules") return check_comodule(tensor_comodules(w.comodule(a[0]), w.comodule(a[1]), w.hom_bialgebra(a[2])));
    if (op == "check_module_morphism") return check_module_morphism(w.map(a[0]), w.module(a[1]), w.module(a[2]));
    if (op == "check_comodule_morphism") return check_comodule_morphism(w.map(a[0]), w.comodule(a[1]), w.comodule(a[2]));
    if (op == "check_yd_morphism") return check_yd_morphism(w.map(a[0]), w.yd(a[1]), w.yd(a[2]));
    if (op == "check_yd") return check_yd(w.yd(a[0]));
    if (op == "check_yd_condition") return certify_yd(w.yd(a[0]));
    if (op == "check_classical_yd") return check_classical_yd(w.classical_yd(a[0]));
    if (op == "twist_yd") return check_yd(twist_yd(w.classical_yd(a[0]), w.map(a[1]), w.map(a[2])));
    if (op == "hat_tensor") return certify_yd(hat_tensor(w.yd(a[0]), w.yd(a[1])));
    if (op == "tilde_tensor") return certify_yd(tilde_tensor(w.yd(a[0]), w.yd(a[1])));
    if (op == "check_hybe") {
        if (is_map(0)) return check_hybe(w.map(a[0]), w.map(a[1]), w.map(a[2]), w.map(a[3]), w.map(a[4]), w.map(a[5]));
        auto m = w.yd(a[0]), n = w.yd(a[1]), p = w.yd(a[2]);
        return check_hybe(braiding_B(m, n), braiding_B(m, p), braiding_B(n, p), m.alpha(), n.alpha(), p.alpha());
    }
    if (op == "check_bridge") {
        auto m = w.yd(a[0]), n = w.yd(a[1]);
        return check_equal("bridge", braiding_B(m, n), b_from_c(braiding_c(m, n), m.alpha(), n.alpha()));
    }
    if (op == "check_braid_relation") {
        if (is_map(0)) return check_braid_relation(w.map(a[0]), w.map(a[1]), w.map(a[2]));
        auto m = w.yd(a[0]), n = w.yd(a[1]), p = w.yd(a[2]);
        return check_braid_relation(braiding_c(m, n), braiding_c(m, p), braiding_c(n, p));
    }
    if (op == "check_braid_implies_hybe") {
        if (is_map(0)) return check_braid_implies_hybe(w.map(a[0]), w.map(a[1]), w.map(a[2]), w.map(a[3]), w.map(a[4]), w.map(a[5]));
        auto m = w.yd(a[0]), n = w.yd(a[1]), p = w.yd(a[2]);
        return check_braid_implies_hybe(braiding_c(m, n), braiding_c(m, p), braiding_c(n, p), m.alpha(), n.alpha(), p.alpha());
    }
    if (op == "check_pentagon") return check_pentagon(w.yd(a[0]), w.yd(a[1]), w.yd(a[2]), w.yd(a[3]), flavor);
    if (op == "check_hexagons") return check_hexagons(w.yd(a[0]), w.yd(a[1]), w.yd(a[2]), flavor);
    if (op == "check_associator_morphism") return check_associator_morphism(w.yd(a[0]), w.yd(a[1]), w.yd(a[2]), flavor);
    if (op == "check_braiding_morphism") return check_braiding_morphism(w.yd(a[0]), w.yd(a[1]), flavor);
    if (op == "check_braiding_naturality") return check_braiding_naturality(w.yd(a[0]), w.yd(a[1]), w.map(a[2]), w.map(a[3]));
    if (op == "check_qt") return check_qt(w.r_element(a[0]));
    if (op == "check_r_invariance") return check_r_invariance(w.r_element(a[0]));
    if (op == "yd_from_module") return check_yd(yd_from_module(w.module(a[0]), w.r_element(a[1])));
    if (op == "check_qt_tensor_coincide") return check_qt_tensor_coincide(w.module(a[0]), w.module(a[1]), w.r_element(a[2]));
    if (op == "check_qt_braiding") {
        auto m = w.module(a[0]), n = w.module(a[1]);
        auto r = w.r_element(a[2]);
        auto ym = yd_from_module(m, r), yn = yd_from_module(n, r);
        CheckReport<F> rep{"qt_braiding", {}, {}};
        compare_maps(rep, "qt_braiding_equals_c", qt_braiding(m, n, r), braiding_c(ym, yn));
        compare_maps(rep, "qt_B_equals_B", qt_B(m, n, r), braiding_B(ym, yn));
        return rep;
    }
    if (op == "check_qt_hybe") {
        auto m = w.module(a[0]), n = w.module(a[1]), p = w.module(a[2]);
        auto r = w.r_element(a[3]);
        return check_hybe(qt_B(m, n, r), qt_B(m, p, r), qt_B(n, p, r), m.alpha(), n.alpha(), p.alpha());
    }
    if (op == "check_cqt") return check_cqt(w.sigma_form(a[0]));
    if (op == "check_sigma_invariance") return check_sigma_invariance(w.sigma_form(a[0]));
    if (op == "yd_from_comodule") return check_yd(yd_from_comodule(w.comodule(a[0]), w.sigma_form(a[1])));
    if (op == "check_cqt_tensor_coincide") return check_cqt_tensor_coincide(w.comodule(a[0]), w.comodule(a[1]), w.sigma_form(a[2]));
    if (op == "check_cqt_braiding") {
        auto m = w.comodule(a[0]), n = w.comodule(a[1]);
        auto s = w.sigma_form(a[2]);
        auto ym = yd_from_comodule(m, s), yn = yd_from_comodule(n, s);
        CheckReport<F> rep{"cqt_braiding", {}, {}};
        compare_maps(rep, "cqt_braiding_equals_c", cqt_braiding(m, n, s), braiding_c(ym, yn));
        compare_maps(rep, "cqt_B_equals_B", cqt_B(m, n, s), braiding_B(ym, yn));
        return rep;
    }
    if (op == "check_cqt_hybe") {
        auto m = w.comodule(a[0]), n = w.comodule(a[1]), p = w.comodule(a[2]);
        auto s = w.sigma_form(a[3]);
        return check_hybe(cqt_B(m, n, s), cqt_B(m, p, s), cqt_B(n, p, s), m.alpha(), n.alpha(), p.alpha());
    }
    throw Inapplicable("unknown op " + op);
}

template <ExactField F>
TaskResult run_one(const Workspace<F>& w, const TaskSpec& t) {
    try {
        return to_result(t, dispatch(w, t));
    } catch (const Error& e) {
        return TaskResult{t.name, t.op, std::string("inapplicable: ") + e.what(), "", 0, json::array(), {}};
    } catch (const std::exception& e) {
        return TaskResult{t.name, t.op, std::string("error: ") + e.what(), "", 0, json::array(), {}};
    }
}

}  // namespace doc

/// Runs every task; `workers` > 1 schedules tasks concurrently, results keep document order.
template <ExactField F>
ReportBundle run_tasks(const SpecDocument<F>& d, std::size_t workers = 1, std::string source = "") {
    Workspace<F> w(d);
    ReportBundle out{std::move(source), d.field.descriptor(), std::vector<TaskResult>(d.tasks.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < d.tasks.size();) out.results[i] = doc::run_one(w, d.tasks[i]);
    };
    workers = std::max<std::size_t>(1, std::min(workers, d.tasks.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

inline ReportBundle run_tasks(const AnyDocument& d, std::size_t workers = 1, std::string source = "") {
    return std::visit([&](const auto& x) { return run_tasks(x, workers, source); }, d);
}

}  // namespace homyd
