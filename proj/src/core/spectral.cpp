#include "spectral.hpp"

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace ksseq {

SpectralPage::SpectralPage(unsigned r, unsigned length, int top_degree, std::vector<SpectralCell> cells)
    : r_(r), length_(length), top_degree_(top_degree), cells_(std::move(cells))
{
}

const SpectralCell* SpectralPage::cell(int p, int q) const
{
    const int k = p + q;
    if (p < 0 || p > static_cast<int>(length_) || k < 0 || k > top_degree_)
        return nullptr;
    const auto idx = static_cast<std::size_t>(k) * (length_ + 1) + static_cast<std::size_t>(p);
    return &cells_[idx];
}

std::size_t SpectralPage::dim(int p, int q) const
{
    const auto* c = cell(p, q);
    return c ? c->dim() : 0;
}

std::size_t SpectralPage::total_dim(int k) const
{
    std::size_t t = 0;
    for (int p = 0; p <= static_cast<int>(length_); ++p)
        t += dim(p, k - p);
    return t;
}

bool SpectralPage::differentials_vanish() const
{
    for (const auto& c : cells_)
        if (!c.d_out.is_zero())
            return false;
    return true;
}

SpectralPage compute_page(const FilteredComplex& fc, unsigned r)
{
    const int top = fc.top_degree();
    const int length = static_cast<int>(fc.length());
    const int ri = static_cast<int>(r);

    // d(F^j C^{k-1}) is shared by several cells; cache by (j, k).
    std::map<std::pair<int, int>, Subspace> boundary_cache;
    auto boundaries = [&](int j, int k) -> const Subspace& {
        auto key = std::make_pair(std::max(j, 0), k);
        auto it = boundary_cache.find(key);
        if (it == boundary_cache.end()) {
            Subspace img = k >= 1 ? image_of(fc.d(k - 1), fc.F(key.first, k - 1))
                                  : Subspace::zero(fc.chain_dim(k));
            it = boundary_cache.emplace(key, std::move(img)).first;
        }
        return it->second;
    };

    std::vector<SpectralCell> cells;
    cells.reserve(static_cast<std::size_t>((top + 1) * (length + 1)));
    for (int k = 0; k <= top; ++k) {
        const Matrix d = fc.d(k);
        for (int p = 0; p <= length; ++p) {
            SpectralCell cell;
            cell.p = p;
            cell.q = k - p;
            Subspace fp = fc.F(p, k);
            if (fp.dim() == 0) {
                cell.quotient = quotient(fp, fp);
            } else {
                Subspace target = k + 1 <= top ? fc.F(p + ri, k + 1) : Subspace::zero(0);
                Subspace z = intersect(fp, preimage(d, target));
                Subspace b = sum(intersect(fc.F(p + 1, k), z), intersect(boundaries(p - ri + 1, k), fp));
                cell.quotient = quotient(z, b);
            }
            cells.push_back(std::move(cell));
        }
    }

    SpectralPage draft(r, fc.length(), top, std::move(cells));
    std::vector<SpectralCell> out = draft.cells();
    for (auto& cell : out) {
        const int k = cell.p + cell.q;
        const SpectralCell* dst = draft.cell(cell.p + ri, cell.q - ri + 1);
        if (dst == nullptr || cell.dim() == 0 || dst->dim() == 0) {
            cell.d_out = Matrix(dst ? dst->dim() : 0, cell.dim());
            continue;
        }
        cell.d_out = induced_map(fc.d(k), cell.quotient, dst->quotient);
    }
    return SpectralPage(r, fc.length(), top, std::move(out));
}

SpectralRun run_to_convergence(const FilteredComplex& fc)
{
    SpectralRun run;
    const unsigned last = fc.length() + 2;
    for (unsigned r = 0; r <= last; ++r)
        run.pages.push_back(compute_page(fc, r));
    if (!run.pages.back().differentials_vanish())
        throw Error("spectral sequence: nonzero differential past the filtration length");

    unsigned stable = last;
    while (stable > 0 && run.pages[stable - 1].differentials_vanish())
        --stable;
    run.stable_at = stable;

    for (unsigned r = 0; r < last; ++r)
        if (!page_turning_holds(run.pages[r], run.pages[r + 1]))
            throw Error("spectral sequence: page-turning identity fails at r = " + std::to_string(r));
    return run;
}

bool page_turning_holds(const SpectralPage& page, const SpectralPage& next)
{
    const int r = static_cast<int>(page.r());
    for (const auto& c : page.cells()) {
        const std::size_t rank_out = rank(c.d_out);
        const SpectralCell* src = page.cell(c.p - r, c.q + r - 1);
        const std::size_t rank_in = src ? rank(src->d_out) : 0;
        if (next.dim(c.p, c.q) + rank_out + rank_in != c.dim())
            return false;
    }
    return true;
}

bool check_abutment(const FilteredComplex& fc, const SpectralRun& run)
{
    auto h = fc.cohomology_dims();
    for (int k = 0; k <= fc.top_degree(); ++k)
        if (run.limit().total_dim(k) != h[static_cast<std::size_t>(k)])
            return false;
    return true;
}

bool check_abutment(const FilteredComplex& fc)
{
    return check_abutment(fc, run_to_convergence(fc));
}

} // namespace ksseq
