#pragma once

/**
 * @file linear_map.hpp
 * @brief Exact linear maps between tensor powers of finite-dimensional spaces.
 *
 * A LinearMap carries the list of tensor-factor dimensions of its domain and
 * codomain. Multi-indices are flattened row-major, leftmost factor most
 * significant, everywhere in the library. Entries are stored column by
 * column as sorted (row, value) lists with no explicit zeros; semantically the
 * map is a dense rows x cols matrix indexed (codomain index, domain index).
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homyd/errors.hpp"
#include "homyd/field.hpp"

namespace homyd {

using Dims = std::vector<std::size_t>;
using MultiIndex = std::vector<std::size_t>;

inline std::size_t dims_product(const Dims& d) {
    return std::accumulate(d.begin(), d.end(), std::size_t{1}, std::multiplies<>());
}

inline std::string dims_str(const Dims& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

inline MultiIndex unflatten(const Dims& dims, std::size_t flat) {
    MultiIndex idx(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        idx[i] = flat % dims[i];
        flat /= dims[i];
    }
    return idx;
}

inline std::size_t flatten(const Dims& dims, const MultiIndex& idx) {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) flat = flat * dims[i] + idx[i];
    return flat;
}

inline Dims concat(const Dims& a, const Dims& b) {
    Dims out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

template <ExactField F>
class LinearMap {
   public:
    using Scalar = typename F::value_type;
    using Entry = std::pair<std::size_t, Scalar>;
    using Column = std::vector<Entry>;

    /// The zero map.
    LinearMap(F field, Dims codomain, Dims domain)
        : field_(std::move(field)),
          cod_(std::move(codomain)),
          dom_(std::move(domain)),
          rows_(dims_product(cod_)),
          columns_(dims_product(dom_)) {
        for (auto d : cod_)
            if (d == 0) throw ShapeError("zero-dimensional factor in codomain " + dims_str(cod_));
        for (auto d : dom_)
            if (d == 0) throw ShapeError("zero-dimensional factor in domain " + dims_str(dom_));
    }

    static LinearMap identity(F field, Dims dims) {
        LinearMap m(field, dims, dims);
        for (std::size_t c = 0; c < m.cols(); ++c) m.columns_[c].emplace_back(c, field.one());
        return m;
    }

    /// rows[r][c] is the coefficient of output basis vector r in the image of input basis vector c.
    static LinearMap from_dense(F field, Dims codomain, Dims domain, const std::vector<std::vector<Scalar>>& rows) {
        LinearMap m(field, std::move(codomain), std::move(domain));
        if (rows.size() != m.rows()) throw ShapeError("dense matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(m.rows()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols())
                throw ShapeError("dense matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(m.cols()));
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!rows[r][c].is_zero()) m.columns_[c].emplace_back(r, rows[r][c]);
        }
        return m;
    }

    /// Builds a map column by column; `image(c)` returns (row, value) pairs in any order, duplicates summed.
    template <class Fn>
    static LinearMap from_columns(F field, Dims codomain, Dims domain, Fn&& image) {
        LinearMap m(field, std::move(codomain), std::move(domain));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Column col = image(c);
            for (auto& [r, v] : col)
                if (r >= m.rows()) throw ShapeError("row index " + std::to_string(r) + " out of range");
            m.columns_[c] = normalize(std::move(col));
        }
        return m;
    }

    const F& field() const { return field_; }
    const Dims& codomain() const { return cod_; }
    const Dims& domain() const { return dom_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_.at(c); }
    std::string shape() const { return dims_str(dom_) + "->" + dims_str(cod_); }

    Scalar at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols()) throw ShapeError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
        const auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return field_.zero();
    }

    /// Copy with one entry replaced.
    LinearMap with_entry(std::size_t r, std::size_t c, const Scalar& v) const {
        if (r >= rows_ || c >= cols()) throw ShapeError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
        LinearMap out = *this;
        auto& col = out.columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
        bool present = it != col.end() && it->first == r;
        if (v.is_zero()) {
            if (present) col.erase(it);
        } else if (present) {
            it->second = v;
        } else {
            col.insert(it, Entry{r, v});
        }
        return out;
    }

    /// Same entries, different tensor factorization of the same flat spaces.
    LinearMap reshaped(Dims codomain, Dims domain) const {
        if (dims_product(codomain) != rows_ || dims_product(domain) != cols())
            throw ShapeError("cannot reshape " + shape() + " to " + dims_str(domain) + "->" + dims_str(codomain));
        LinearMap out = *this;
        out.cod_ = std::move(codomain);
        out.dom_ = std::move(domain);
        return out;
    }

    /// Collapses both sides to a single tensor factor.
    LinearMap flat() const { return reshaped(Dims{rows_}, Dims{cols()}); }

    std::vector<std::vector<Scalar>> dense() const {
        std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols(), field_.zero()));
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : columns_[c]) out[r][c] = v;
        return out;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& col : columns_) n += col.size();
        return n;
    }

    bool is_square() const { return rows_ == cols(); }

    bool operator==(const LinearMap& o) const {
        return field_ == o.field_ && cod_ == o.cod_ && dom_ == o.dom_ && columns_ == o.columns_;
    }

    /// Sort by row, merge duplicates, drop zeros.
    static Column normalize(Column col) {
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Column out;
        out.reserve(col.size());
        for (auto& e : col) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second = out.back().second + e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
        return out;
    }

   private:
    F field_;
    Dims cod_;
    Dims dom_;
    std::size_t rows_;
    std::vector<Column> columns_;
};

// ---------------------------------------------------------------------------
// Operations

/// g o f. Factor lists must agree exactly.
template <ExactField F>
LinearMap<F> compose(const LinearMap<F>& g, const LinearMap<F>& f) {
    if (g.domain() != f.codomain())
        throw ShapeError("cannot compose g: " + g.shape() + " after f: " + f.shape());
    return LinearMap<F>::from_columns(f.field(), g.codomain(), f.domain(), [&](std::size_t c) {
        typename LinearMap<F>::Column acc;
        for (const auto& [k, fk] : f.column(c))
            for (const auto& [r, gv] : g.column(k)) acc.emplace_back(r, gv * fk);
        return acc;
    });
}

/// Composes right to left: compose(h, g, f) = h o g o f.
template <ExactField F, class... Rest>
LinearMap<F> compose(const LinearMap<F>& h, const LinearMap<F>& g, const Rest&... rest) {
    return compose(h, compose(g, rest...));
}

/// Kronecker product: (f (x) g)(x (x) y) = f(x) (x) g(y); factor lists concatenate.
template <ExactField F>
LinearMap<F> tensor_map(const LinearMap<F>& f, const LinearMap<F>& g) {
    if (!(f.field() == g.field())) throw ShapeError("tensor product across different fields");
    const std::size_t g_rows = g.rows(), g_cols = g.cols();
    LinearMap<F> out(f.field(), concat(f.codomain(), g.codomain()), concat(f.domain(), g.domain()));
    return LinearMap<F>::from_columns(f.field(), out.codomain(), out.domain(), [&](std::size_t c) {
        typename LinearMap<F>::Column col;
        const auto& fc = f.column(c / g_cols);
        const auto& gc = g.column(c % g_cols);
        col.reserve(fc.size() * gc.size());
        for (const auto& [rf, a] : fc)
            for (const auto& [rg, b] : gc) col.emplace_back(rf * g_rows + rg, a * b);
        return col;
    });
}

/// tensor_map(f, g, h) = f (x) g (x) h.
template <ExactField F, class... Rest>
LinearMap<F> tensor_map(const LinearMap<F>& f, const LinearMap<F>& g, const Rest&... rest) {
    return tensor_map(tensor_map(f, g), rest...);
}

/**
 * Reorders tensor factors. Output factor j is input factor order[j], so for
 * dims {a,b,c} and order {0,2,1} the map sends x (x) y (x) z to x (x) z (x) y.
 */
template <ExactField F>
LinearMap<F> permutation(const F& field, const Dims& dims, const std::vector<std::size_t>& order) {
    if (order.size() != dims.size()) throw ShapeError("permutation of length " + std::to_string(order.size()) + " on " + dims_str(dims));
    std::vector<bool> seen(dims.size(), false);
    for (auto o : order) {
        if (o >= dims.size() || seen[o]) throw ShapeError("invalid factor permutation");
        seen[o] = true;
    }
    Dims out_dims(dims.size());
    for (std::size_t j = 0; j < order.size(); ++j) out_dims[j] = dims[order[j]];
    return LinearMap<F>::from_columns(field, out_dims, dims, [&](std::size_t c) {
        MultiIndex in = unflatten(dims, c);
        MultiIndex out(order.size());
        for (std::size_t j = 0; j < order.size(); ++j) out[j] = in[order[j]];
        return typename LinearMap<F>::Column{{flatten(out_dims, out), field.one()}};
    });
}

/// The flip V (x) W -> W (x) V.
template <ExactField F>
LinearMap<F> flip(const F& field, std::size_t v, std::size_t w) {
    return permutation(field, Dims{v, w}, {1, 0});
}

template <ExactField F>
LinearMap<F> scale(const LinearMap<F>& f, const typename F::value_type& s) {
    return LinearMap<F>::from_columns(f.field(), f.codomain(), f.domain(), [&](std::size_t c) {
        auto col = f.column(c);
        for (auto& e : col) e.second = e.second * s;
        return col;
    });
}

template <ExactField F>
LinearMap<F> add(const LinearMap<F>& f, const LinearMap<F>& g) {
    if (f.codomain() != g.codomain() || f.domain() != g.domain())
        throw ShapeError("cannot add " + f.shape() + " and " + g.shape());
    return LinearMap<F>::from_columns(f.field(), f.codomain(), f.domain(), [&](std::size_t c) {
        auto col = f.column(c);
        col.insert(col.end(), g.column(c).begin(), g.column(c).end());
        return col;
    });
}

namespace detail {

/// Row-reduces a copy of m augmented with `aug` (may be empty); returns rank and leaves the reduced blocks.
template <ExactField F>
std::size_t gauss_jordan(std::vector<std::vector<typename F::value_type>>& m,
                          std::vector<std::vector<typename F::value_type>>* aug) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        if (aug) std::swap((*aug)[pivot], (*aug)[rank]);
        auto inv = m[rank][c].inverse();
        for (auto& x : m[rank]) x = x * inv;
        if (aug)
            for (auto& x : (*aug)[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            auto factor = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                if (!m[rank][k].is_zero()) m[r][k] = m[r][k] - factor * m[rank][k];
            if (aug)
                for (std::size_t k = 0; k < (*aug)[r].size(); ++k)
                    if (!(*aug)[rank][k].is_zero()) (*aug)[r][k] = (*aug)[r][k] - factor * (*aug)[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

template <ExactField F>
std::size_t rank(const LinearMap<F>& f) {
    auto m = f.dense();
    return detail::gauss_jordan<F>(m, nullptr);
}

template <ExactField F>
bool is_invertible(const LinearMap<F>& f) {
    return f.is_square() && rank(f) == f.rows();
}

/// Exact inverse by Gauss-Jordan elimination; the result maps codomain back to domain.
template <ExactField F>
LinearMap<F> invert(const LinearMap<F>& f) {
    if (!f.is_square()) throw ShapeError("cannot invert non-square map " + f.shape());
    auto m = f.dense();
    std::vector<std::vector<typename F::value_type>> aug(f.rows(), std::vector<typename F::value_type>(f.rows(), f.field().zero()));
    for (std::size_t i = 0; i < f.rows(); ++i) aug[i][i] = f.field().one();
    std::size_t r = detail::gauss_jordan<F>(m, &aug);
    if (r != f.rows()) throw NotInvertible("map " + f.shape(), r);
    return LinearMap<F>::from_dense(f.field(), f.domain(), f.codomain(), aug);
}

/// f^k for a square endomorphism; negative k uses the inverse.
template <ExactField F>
LinearMap<F> power(const LinearMap<F>& f, int k) {
    if (f.domain() != f.codomain()) throw ShapeError("power of non-endomorphism " + f.shape());
    LinearMap<F> base = k < 0 ? invert(f) : f;
    LinearMap<F> acc = LinearMap<F>::identity(f.field(), f.domain());
    for (int i = 0; i < (k < 0 ? -k : k); ++i) acc = compose(base, acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Structure-constant tensors

template <class S>
using Tensor3 = std::vector<std::vector<std::vector<S>>>;
template <class S>
using Matrix = std::vector<std::vector<S>>;

/// t[i][j][k]: e_i (x) e_j -> sum_k t[i][j][k] e_k, as a map {a,b} -> {c}.
template <ExactField F>
LinearMap<F> map_from_binary(const F& field, std::size_t a, std::size_t b, std::size_t c,
                             const Tensor3<typename F::value_type>& t) {
    if (t.size() != a) throw ShapeError("binary tensor: expected " + std::to_string(a) + " slices, got " + std::to_string(t.size()));
    for (const auto& s : t) {
        if (s.size() != b) throw ShapeError("binary tensor: expected " + std::to_string(b) + " rows per slice");
        for (const auto& v : s)
            if (v.size() != c) throw ShapeError("binary tensor: expected " + std::to_string(c) + " entries per row");
    }
    return LinearMap<F>::from_columns(field, Dims{c}, Dims{a, b}, [&](std::size_t col) {
        typename LinearMap<F>::Column out;
        const auto& v = t[col / b][col % b];
        for (std::size_t k = 0; k < c; ++k)
            if (!v[k].is_zero()) out.emplace_back(k, v[k]);
        return out;
    });
}

/// t[i][j][k]: e_i -> sum_{j,k} t[i][j][k] e_j (x) e_k, as a map {a} -> {b,c}.
template <ExactField F>
LinearMap<F> map_from_cobinary(const F& field, std::size_t a, std::size_t b, std::size_t c,
                               const Tensor3<typename F::value_type>& t) {
    if (t.size() != a) throw ShapeError("cobinary tensor: expected " + std::to_string(a) + " slices, got " + std::to_string(t.size()));
    for (const auto& s : t) {
        if (s.size() != b) throw ShapeError("cobinary tensor: expected " + std::to_string(b) + " rows per slice");
        for (const auto& v : s)
            if (v.size() != c) throw ShapeError("cobinary tensor: expected " + std::to_string(c) + " entries per row");
    }
    return LinearMap<F>::from_columns(field, Dims{b, c}, Dims{a}, [&](std::size_t col) {
        typename LinearMap<F>::Column out;
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < c; ++k)
                if (!t[col][j][k].is_zero()) out.emplace_back(j * c + k, t[col][j][k]);
        return out;
    });
}

template <ExactField F>
Tensor3<typename F::value_type> binary_tensor(const LinearMap<F>& m) {
    if (m.domain().size() != 2 || m.codomain().size() != 1) throw ShapeError("not a binary map: " + m.shape());
    const auto a = m.domain()[0], b = m.domain()[1], c = m.codomain()[0];
    Tensor3<typename F::value_type> t(a, Matrix<typename F::value_type>(b, std::vector<typename F::value_type>(c, m.field().zero())));
    for (std::size_t col = 0; col < m.cols(); ++col)
        for (const auto& [r, v] : m.column(col)) t[col / b][col % b][r] = v;
    return t;
}

template <ExactField F>
Tensor3<typename F::value_type> cobinary_tensor(const LinearMap<F>& m) {
    if (m.domain().size() != 1 || m.codomain().size() != 2) throw ShapeError("not a cobinary map: " + m.shape());
    const auto a = m.domain()[0], b = m.codomain()[0], c = m.codomain()[1];
    Tensor3<typename F::value_type> t(a, Matrix<typename F::value_type>(b, std::vector<typename F::value_type>(c, m.field().zero())));
    for (std::size_t col = 0; col < a; ++col)
        for (const auto& [r, v] : m.column(col)) t[col][r / c][r % c] = v;
    return t;
}

/// Linearization of a function on basis indices.
template <ExactField F>
LinearMap<F> basis_map(const F& field, std::size_t dim_out, std::size_t dim_in, const std::function<std::size_t(std::size_t)>& fn) {
    return LinearMap<F>::from_columns(field, Dims{dim_out}, Dims{dim_in}, [&](std::size_t c) {
        return typename LinearMap<F>::Column{{fn(c), field.one()}};
    });
}

}  // namespace homyd
