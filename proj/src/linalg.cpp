#include "liecon/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecon {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows in matrix literal");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t height) {
    RationalMatrix m(height, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != height) throw std::invalid_argument("column length does not match matrix height");
        for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool RationalMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c) {
        if ((*this)(r, c) != 0) return false;
    }
    return true;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

namespace {

std::size_t bit_size(const Scalar& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
    RrefResult result{m, {}};
    RationalMatrix& a = result.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t best = a.rows();
        for (std::size_t r = lead; r < a.rows(); ++r) {
            if (a(r, c) == 0) continue;
            if (best == a.rows() || bit_size(a(r, c)) < bit_size(a(best, c))) best = r;
        }
        if (best == a.rows()) continue;
        a.swap_rows(lead, best);
        const Scalar inv = 1 / a(lead, c);
        for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c) == 0) continue;
            const Scalar factor = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k) {
                if (a(lead, k) != 0) a(r, k) -= factor * a(lead, k);
            }
        }
        result.pivots.push_back(c);
        ++lead;
    }
    return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

namespace {

// Primitive integer multiple of v; the sign is left unchanged.
RationalVector clear_content(const RationalVector& v) {
    Integer lcm_den = 1;
    for (const auto& s : v) {
        if (s != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.get_den_mpz_t());
    }
    Integer content = 0;
    for (const auto& s : v) {
        if (s == 0) continue;
        Integer scaled = s.get_num() * (lcm_den / s.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    if (content == 0) return v;
    RationalVector out(v.size());
    const Scalar factor(lcm_den, content);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
    return out;
}

}  // namespace

RationalVector primitive_integer(const RationalVector& v) {
    RationalVector out = clear_content(v);
    auto first = std::find_if(out.begin(), out.end(), [](const Scalar& s) { return s != 0; });
    if (first != out.end() && *first < 0) {
        for (auto& s : out) s = -s;
    }
    return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
        // The free coordinate stays 1 before clearing, and clearing scales by a positive factor.
        basis.push_back(clear_content(v));
    }
    return basis;
}

std::optional<RationalVector> in_span(std::span<const RationalVector> basis, const RationalVector& v) {
    for (const auto& b : basis) {
        if (b.size() != v.size()) throw std::invalid_argument("in_span: vector length mismatch");
    }
    RationalMatrix aug(v.size(), basis.size() + 1);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (std::size_t r = 0; r < v.size(); ++r) aug(r, c) = basis[c][r];
    }
    for (std::size_t r = 0; r < v.size(); ++r) aug(r, basis.size()) = v[r];
    const auto [reduced, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
    RationalVector coeffs(basis.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = reduced(i, basis.size());
    return coeffs;
}

std::vector<RationalVector> row_space_basis(std::span<const RationalVector> vectors, std::size_t length) {
    RationalMatrix m(vectors.size(), length);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != length) throw std::invalid_argument("row_space_basis: vector length mismatch");
        for (std::size_t c = 0; c < length; ++c) m(r, c) = vectors[r][c];
    }
    const auto [reduced, pivots] = rref(m);
    std::vector<RationalVector> out;
    out.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(reduced.row(i));
    return out;
}

nlohmann::json to_json(const RationalMatrix& m) {
    auto out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace liecon
