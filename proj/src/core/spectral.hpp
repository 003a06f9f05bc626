#pragma once

#include "filtered_complex.hpp"
#include "matrix.hpp"
#include "subspace.hpp"

#include <cstddef>
#include <vector>

namespace ksseq {

/// E_r^{p,q} = Z / B with Z = F^p ∩ d^{-1}(F^{p+r}) and
/// B = (F^{p+1} ∩ Z) + (d(F^{p-r+1}) ∩ F^p), all inside C^{p+q}.
struct SpectralCell {
    int p = 0;
    int q = 0;
    Quotient quotient;
    /// d_r: E_r^{p,q} -> E_r^{p+r,q-r+1} in quotient coordinates.
    Matrix d_out;

    std::size_t dim() const noexcept { return quotient.dim; }
    int degree() const noexcept { return p + q; }
};

class SpectralPage {
public:
    SpectralPage() = default;
    SpectralPage(unsigned r, unsigned length, int top_degree, std::vector<SpectralCell> cells);

    unsigned r() const noexcept { return r_; }
    /// Cells for 0 <= p <= length and 0 <= p+q <= top degree, ordered by (p+q, p).
    const std::vector<SpectralCell>& cells() const noexcept { return cells_; }
    const SpectralCell* cell(int p, int q) const;
    std::size_t dim(int p, int q) const;
    /// Sum of dim E_r^{p,q} over p+q = k.
    std::size_t total_dim(int k) const;
    bool differentials_vanish() const;

private:
    unsigned r_ = 0;
    unsigned length_ = 0;
    int top_degree_ = -1;
    std::vector<SpectralCell> cells_;
};

SpectralPage compute_page(const FilteredComplex& fc, unsigned r);

struct SpectralRun {
    std::vector<SpectralPage> pages;    // E_0 .. E_R with R = length + 2
    unsigned stable_at = 0;             // smallest r with d_{r'} = 0 for every r' >= r

    const SpectralPage& limit() const { return pages.back(); }
};

SpectralRun run_to_convergence(const FilteredComplex& fc);

/// dim E_{r+1}^{p,q} = dim Ker d_r^{p,q} - rank d_r^{p-r,q+r-1} for every cell.
bool page_turning_holds(const SpectralPage& page, const SpectralPage& next);

bool check_abutment(const FilteredComplex& fc, const SpectralRun& run);
bool check_abutment(const FilteredComplex& fc);

} // namespace ksseq
