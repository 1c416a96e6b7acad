#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "svir/errors.hpp"
#include "svir/modules.hpp"

namespace svir {

namespace detail {

template <class C, class V>
std::vector<C> coords_impl(const V& v, long bound) {
    if (v.degree() > bound)
        throw DegreeOverflow("to_coords: vector degree exceeds bound " + std::to_string(bound));
    std::vector<C> out(2 * (bound + 1), C(0));
    for (long k = 0; k <= bound; ++k) {
        out[static_cast<std::size_t>(k)] = v.even.coeff(k);
        out[static_cast<std::size_t>(bound + 1 + k)] = v.odd.coeff(k);
    }
    return out;
}

}  // namespace detail

/// Flat coordinates of a vector on the monomial basis up to degree `bound`:
/// index k is the even-slot coefficient of degree k, index (bound+1) + k the
/// odd-slot coefficient. Throws DegreeOverflow when the vector sticks out.
template <class C>
std::vector<C> to_coords(const RamondVector<C>& v, long bound) {
    return detail::coords_impl<C>(v, bound);
}

template <class C>
std::vector<C> to_coords(const NSVector<C>& v, long bound) {
    return detail::coords_impl<C>(v, bound);
}

template <class C>
RamondVector<C> ramond_from_coords(const std::vector<C>& coords, long bound) {
    const std::size_t n = static_cast<std::size_t>(bound + 1);
    std::vector<C> even(coords.begin(), coords.begin() + n);
    std::vector<C> odd(coords.begin() + n, coords.end());
    return RamondVector<C>(Poly<C>(VarTag::T, std::move(even)), Poly<C>(VarTag::T, std::move(odd)));
}

template <class C>
NSVector<C> ns_from_coords(const std::vector<C>& coords, long bound) {
    const std::size_t n = static_cast<std::size_t>(bound + 1);
    std::vector<C> even(coords.begin(), coords.begin() + n);
    std::vector<C> odd(coords.begin() + n, coords.end());
    return NSVector<C>(Poly<C>(VarTag::X, std::move(even)), Poly<C>(VarTag::Y, std::move(odd)));
}

/// Incremental reduced row-echelon form over the coefficient ring C.
/// Pivots must be invertible; over a field that is automatic, over the
/// symbolic ring it holds whenever the pivots are units, and a non-unit
/// pivot raises an Error rather than silently losing exactness.
template <class C>
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::vector<C>>& rows() const noexcept { return rows_; }

    /// Residual of v after elimination against the current rows.
    std::vector<C> reduce(std::vector<C> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const C& c = v[leads_[i]];
            if (c.is_zero()) continue;
            const C factor = c;
            for (std::size_t j = leads_[i]; j < width_; ++j)
                v[j] = v[j] - factor * rows_[i][j];
        }
        return v;
    }

    bool contains(const std::vector<C>& v) const {
        for (const C& c : reduce(v))
            if (!c.is_zero()) return false;
        return true;
    }

    /// Insert a vector; returns the normalized new row when the rank grew,
    /// nullopt when v was already in the span.
    std::optional<std::vector<C>> insert(const std::vector<C>& v) {
        std::vector<C> r = reduce(v);
        std::size_t lead = width_;
        for (std::size_t j = 0; j < width_; ++j) {
            if (!r[j].is_zero()) {
                lead = j;
                break;
            }
        }
        if (lead == width_) return std::nullopt;

        C inv;
        try {
            inv = r[lead].inverse();
        } catch (const std::domain_error&) {
            throw Error("RowReducer: non-invertible pivot in exact elimination");
        }
        for (std::size_t j = lead; j < width_; ++j) r[j] = inv * r[j];

        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const C c = rows_[i][lead];
            if (c.is_zero()) continue;
            for (std::size_t j = lead; j < width_; ++j)
                rows_[i][j] = rows_[i][j] - c * r[j];
        }

        std::size_t pos = 0;
        while (pos < rows_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, r);
        leads_.insert(leads_.begin() + pos, lead);
        return r;
    }

private:
    std::size_t width_;
    std::vector<std::vector<C>> rows_;
    std::vector<std::size_t> leads_;
};

/// Basis of the solution space of the homogeneous system rows * x = 0,
/// by reduced row echelon form with first-nonzero pivoting.
template <class C>
std::vector<std::vector<C>> nullspace_basis(const std::vector<std::vector<C>>& constraint_rows,
                                            std::size_t ncols) {
    RowReducer<C> reducer(ncols);
    for (const auto& row : constraint_rows) reducer.insert(row);

    std::vector<bool> is_pivot(ncols, false);
    std::vector<std::size_t> pivot_col_of_row;
    for (const auto& row : reducer.rows()) {
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!row[j].is_zero()) {
                is_pivot[j] = true;
                pivot_col_of_row.push_back(j);
                break;
            }
        }
    }

    std::vector<std::vector<C>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<C> x(ncols, C(0));
        x[free_col] = C(1);
        for (std::size_t i = 0; i < reducer.rows().size(); ++i)
            x[pivot_col_of_row[i]] = -reducer.rows()[i][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace svir
