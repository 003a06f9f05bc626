#include "subspace.hpp"

#include "errors.hpp"

#include <string>

namespace ksseq {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch(std::string(op) + ": ambient dimensions " +
                                std::to_string(a.ambient_dim()) + " and " +
                                std::to_string(b.ambient_dim()));
}

// Reduces v against the echelon rows in place; v ends at zero iff it was in the span.
void reduce(const Matrix& rows, const std::vector<std::size_t>& pivots, Vector& v)
{
    Rational t;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rational c = v[pivots[i]];
        if (sgn(c) == 0)
            continue;
        for (std::size_t j = pivots[i]; j < rows.cols(); ++j) {
            if (sgn(rows(i, j)) == 0)
                continue;
            t = c * rows(i, j);
            v[j] -= t;
        }
    }
}

} // namespace

Subspace Subspace::span(const Matrix& columns)
{
    Subspace s;
    s.ambient_ = columns.rows();
    auto res = rref(columns.transpose());
    s.pivots_ = std::move(res.pivot_cols);
    s.rows_ = Matrix(res.rank, s.ambient_);
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < s.ambient_; ++j)
            s.rows_(i, j) = res.reduced(i, j);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    return span(Matrix::from_columns(ambient, vectors));
}

Subspace Subspace::zero(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = Matrix::identity(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices)
{
    Matrix cols(ambient, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= ambient)
            throw DimensionMismatch("coordinate index out of range");
        cols(indices[j], j) = 1;
    }
    return span(cols);
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionMismatch("membership test: vector length " + std::to_string(v.size()) +
                                " vs ambient " + std::to_string(ambient_));
    Vector w = v;
    reduce(rows_, pivots_, w);
    return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const
{
    require_same_ambient(*this, other, "contains");
    if (other.dim() > dim())
        return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.rows_.row(i)))
            return false;
    return true;
}

bool Subspace::contains_columns(const Matrix& columns) const
{
    if (columns.rows() != ambient_)
        throw DimensionMismatch("membership test: column length mismatch");
    for (std::size_t j = 0; j < columns.cols(); ++j)
        if (!contains(columns.column(j)))
            return false;
    return true;
}

Matrix Subspace::annihilator() const
{
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_)
        is_pivot[p] = true;
    Matrix w(ambient_ - dim(), ambient_);
    std::size_t r = 0;
    for (std::size_t f = 0; f < ambient_; ++f) {
        if (is_pivot[f])
            continue;
        // The functional x_f - sum_i R[i][f] x_{pivot_i} kills every echelon row.
        w(r, f) = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (sgn(rows_(i, f)) != 0)
                w(r, pivots_[i]) = -rows_(i, f);
        ++r;
    }
    return w;
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        throw ContainmentError("coordinates of a vector outside the subspace");
    Vector c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        c[i] = v[pivots_[i]];
    return c;
}

Subspace kernel_basis(const Matrix& m)
{
    auto res = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : res.pivot_cols)
        is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < res.rank; ++i)
            v[res.pivot_cols[i]] = -res.reduced(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

Subspace image_basis(const Matrix& m)
{
    return Subspace::span(m);
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "intersect");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.ambient_dim());
    if (b.dim() == b.ambient_dim())
        return a;
    if (a.dim() == a.ambient_dim())
        return b;
    Matrix basis = a.basis();
    Subspace coeffs = kernel_basis(b.annihilator() * basis);
    return Subspace::span(basis * coeffs.basis());
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "sum");
    if (a.dim() == 0)
        return b;
    if (b.dim() == 0)
        return a;
    return Subspace::span(hconcat(a.basis(), b.basis()));
}

Subspace preimage(const Matrix& f, const Subspace& s)
{
    if (f.rows() != s.ambient_dim())
        throw DimensionMismatch("preimage: map has " + std::to_string(f.rows()) +
                                " rows, subspace ambient is " + std::to_string(s.ambient_dim()));
    if (s.dim() == s.ambient_dim())
        return Subspace::full(f.cols());
    return kernel_basis(s.annihilator() * f);
}

Subspace image_of(const Matrix& f, const Subspace& s)
{
    if (f.cols() != s.ambient_dim())
        throw DimensionMismatch("image_of: map has " + std::to_string(f.cols()) +
                                " columns, subspace ambient is " + std::to_string(s.ambient_dim()));
    if (s.dim() == 0)
        return Subspace::zero(f.rows());
    return Subspace::span(f * s.basis());
}

Quotient quotient(const Subspace& ambient, const Subspace& sub)
{
    require_same_ambient(ambient, sub, "quotient");
    if (!ambient.contains(sub))
        throw ContainmentError("quotient: subspace is not contained in the ambient subspace");

    const std::size_t n = ambient.ambient_dim();
    Quotient q;
    q.ambient = ambient;
    q.sub = sub;
    q.dim = ambient.dim() - sub.dim();

    // Complement: greedily extend sub's basis by ambient's canonical basis vectors.
    Matrix sub_basis = sub.basis();
    Matrix amb_basis = ambient.basis();
    auto ext = rref(hconcat(sub_basis, amb_basis));
    std::vector<std::size_t> chosen;
    for (auto c : ext.pivot_cols)
        if (c >= sub.dim())
            chosen.push_back(c - sub.dim());
    q.section = amb_basis.select_columns(chosen);

    if (q.dim == 0) {
        q.project = Matrix(0, n);
        return q;
    }

    // Left inverse of [sub | section] supported on an invertible row subset.
    Matrix full = hconcat(sub_basis, q.section);
    auto rows = rref(full.transpose()).pivot_cols;
    Matrix inv = inverse(full.select_rows(rows));
    q.project = Matrix(q.dim, n);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            q.project(i, rows[j]) = inv(sub.dim() + i, j);
    return q;
}

Matrix induced_map(const Matrix& f, const Quotient& src, const Quotient& dst)
{
    if (f.cols() != src.ambient.ambient_dim() || f.rows() != dst.ambient.ambient_dim())
        throw DimensionMismatch("induced_map: map shape does not match the quotients");
    if (src.sub.dim() > 0 && !dst.sub.contains_columns(f * src.sub.basis()))
        throw WellDefinednessError("induced_map: f does not carry the source subspace into the target subspace");
    if (src.ambient.dim() > 0 && !dst.ambient.contains_columns(f * src.ambient.basis()))
        throw WellDefinednessError("induced_map: f does not carry the source ambient into the target ambient");
    if (src.dim == 0 || dst.dim == 0)
        return Matrix(dst.dim, src.dim);
    return dst.project * (f * src.section);
}

} // namespace ksseq
