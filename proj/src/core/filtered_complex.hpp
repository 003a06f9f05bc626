#pragma once

#include "matrix.hpp"
#include "subspace.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ksseq {

/// Finite cochain complex C^0..C^K over Q with a decreasing filtration
/// F^0 = C ⊇ F^1 ⊇ ... ⊇ F^length ⊇ F^{length+1} = 0 preserved by d.
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// d[k]: C^k -> C^{k+1} (the last one has zero rows); filtration[k][p] for p in
    /// 0..length, every degree listing the same number of levels. Validates d∘d = 0,
    /// nesting, exhaustiveness and d(F^p) ⊆ F^p; throws MalformedComplex otherwise.
    FilteredComplex(std::vector<std::size_t> chain_dims, std::vector<Matrix> d,
                    std::vector<std::vector<Subspace>> filtration);

    /// Filtration by coordinate levels: basis vector i of C^k lies in F^p iff
    /// levels[k][i] >= p.
    /// `length` defaults to the largest level present.
    static FilteredComplex from_levels(std::vector<std::size_t> chain_dims, std::vector<Matrix> d,
                                       const std::vector<std::vector<unsigned>>& levels,
                                       std::optional<unsigned> length = std::nullopt);
    /// F^0 = C, F^1 = 0.
    static FilteredComplex trivially_filtered(std::vector<std::size_t> chain_dims, std::vector<Matrix> d);

    std::size_t degree_count() const noexcept { return dims_.size(); }
    int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }
    std::size_t chain_dim(int k) const;
    const std::vector<std::size_t>& chain_dims() const noexcept { return dims_; }
    /// d: C^k -> C^{k+1}; shaped zero outside the range.
    Matrix d(int k) const;
    unsigned length() const noexcept { return length_; }
    /// F^p C^k; the whole space for p <= 0, zero for p > length.
    Subspace F(int p, int k) const;

    /// dim H^k from ranks.
    std::vector<std::size_t> cohomology_dims() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
    std::vector<std::vector<Subspace>> filt_;
    unsigned length_ = 0;
};

} // namespace ksseq
