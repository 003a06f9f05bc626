#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <vector>

namespace ksseq {

/// Linear subspace of Q^N held in a canonical basis: the columns of `basis()` are the
/// transposed rows of the reduced row-echelon form of any spanning set, so two
/// Subspace values are equal iff they describe the same subspace.
class Subspace {
public:
    Subspace() = default;

    /// Span of the columns of `columns`; ambient dimension is `columns.rows()`.
    static Subspace span(const Matrix& columns);
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Span of the listed standard basis vectors.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }

    /// ambient_dim x dim, columns linearly independent, column-reduced.
    Matrix basis() const { return rows_.transpose(); }
    /// The same basis as rows of a reduced row-echelon matrix.
    const Matrix& echelon_rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// True when every column of `columns` lies in the subspace.
    bool contains_columns(const Matrix& columns) const;

    /// Rows spanning the annihilator: v is in the subspace iff annihilator() * v == 0.
    Matrix annihilator() const;

    /// Coordinates of v in the canonical basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    Matrix rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// { v : f v in s }.
Subspace preimage(const Matrix& f, const Subspace& s);
/// f(s) as a subspace of the codomain.
Subspace image_of(const Matrix& f, const Subspace& s);

/// ambient / sub with a canonical complement. `project` is dim x N and is only
/// meaningful on vectors of `ambient`; `section` is N x dim and lifts quotient
/// coordinates to representatives.
struct Quotient {
    Subspace ambient;
    Subspace sub;
    std::size_t dim = 0;
    Matrix project;
    Matrix section;
};

/// Throws ContainmentError when sub is not inside ambient.
Quotient quotient(const Subspace& ambient, const Subspace& sub);

/// Matrix of the map induced by f from src.ambient/src.sub to dst.ambient/dst.sub.
/// Throws WellDefinednessError when f fails to map ambient into ambient or sub into sub.
Matrix induced_map(const Matrix& f, const Quotient& src, const Quotient& dst);

} // namespace ksseq
