#include "filtered_complex.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>

namespace ksseq {

FilteredComplex::FilteredComplex(std::vector<std::size_t> chain_dims, std::vector<Matrix> d,
                                 std::vector<std::vector<Subspace>> filtration)
    : dims_(std::move(chain_dims)), d_(std::move(d)), filt_(std::move(filtration))
{
    const std::size_t K = dims_.size();
    if (K == 0)
        throw MalformedComplex("complex has no degrees");
    if (d_.size() != K)
        throw MalformedComplex("expected " + std::to_string(K) + " differentials, got " + std::to_string(d_.size()));
    if (filt_.size() != K)
        throw MalformedComplex("filtration must list every degree");
    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t rows = k + 1 < K ? dims_[k + 1] : 0;
        if (d_[k].rows() != rows || d_[k].cols() != dims_[k])
            throw MalformedComplex("differential in degree " + std::to_string(k) + " must be " +
                                   std::to_string(rows) + "x" + std::to_string(dims_[k]));
    }
    for (std::size_t k = 0; k + 1 < K; ++k)
        if (!(d_[k + 1] * d_[k]).is_zero())
            throw MalformedComplex("d∘d != 0 starting in degree " + std::to_string(k));

    const std::size_t levels = filt_[0].size();
    if (levels == 0)
        throw MalformedComplex("filtration must contain F^0");
    length_ = static_cast<unsigned>(levels - 1);
    for (std::size_t k = 0; k < K; ++k) {
        const auto& fk = filt_[k];
        if (fk.size() != levels)
            throw MalformedComplex("filtration degree " + std::to_string(k) + " lists a different number of levels");
        for (const auto& s : fk)
            if (s.ambient_dim() != dims_[k])
                throw MalformedComplex("filtration subspace in degree " + std::to_string(k) + " has the wrong ambient");
        if (fk[0].dim() != dims_[k])
            throw MalformedComplex("F^0 is not the whole space in degree " + std::to_string(k));
        for (std::size_t p = 1; p < levels; ++p)
            if (!fk[p - 1].contains(fk[p]))
                throw MalformedComplex("filtration is not decreasing at F^" + std::to_string(p) +
                                       " in degree " + std::to_string(k));
    }
    for (std::size_t k = 0; k + 1 < K; ++k)
        for (std::size_t p = 1; p < levels; ++p)
            if (!filt_[k + 1][p].contains(image_of(d_[k], filt_[k][p])))
                throw MalformedComplex("d does not preserve F^" + std::to_string(p) +
                                       " from degree " + std::to_string(k));
}

FilteredComplex FilteredComplex::from_levels(std::vector<std::size_t> chain_dims, std::vector<Matrix> d,
                                             const std::vector<std::vector<unsigned>>& levels,
                                             std::optional<unsigned> length)
{
    if (levels.size() != chain_dims.size())
        throw MalformedComplex("filtration levels must list every degree");
    unsigned top = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].size() != chain_dims[k])
            throw MalformedComplex("filtration levels in degree " + std::to_string(k) +
                                   " must have one entry per basis vector");
        for (auto l : levels[k])
            top = std::max(top, l);
    }
    if (length) {
        if (*length < top)
            throw MalformedComplex("filtration level exceeds the declared length");
        top = *length;
    }
    std::vector<std::vector<Subspace>> filt(chain_dims.size());
    for (std::size_t k = 0; k < chain_dims.size(); ++k)
        for (unsigned p = 0; p <= top; ++p) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < levels[k].size(); ++i)
                if (levels[k][i] >= p)
                    idx.push_back(i);
            filt[k].push_back(Subspace::coordinate(chain_dims[k], idx));
        }
    return FilteredComplex(std::move(chain_dims), std::move(d), std::move(filt));
}

FilteredComplex FilteredComplex::trivially_filtered(std::vector<std::size_t> chain_dims, std::vector<Matrix> d)
{
    std::vector<std::vector<Subspace>> filt;
    for (auto n : chain_dims)
        filt.push_back({Subspace::full(n)});
    return FilteredComplex(std::move(chain_dims), std::move(d), std::move(filt));
}

std::size_t FilteredComplex::chain_dim(int k) const
{
    if (k < 0 || k > top_degree())
        return 0;
    return dims_[static_cast<std::size_t>(k)];
}

Matrix FilteredComplex::d(int k) const
{
    if (k < 0 || k > top_degree())
        return Matrix(chain_dim(k + 1), chain_dim(k));
    return d_[static_cast<std::size_t>(k)];
}

Subspace FilteredComplex::F(int p, int k) const
{
    const std::size_t n = chain_dim(k);
    if (k < 0 || k > top_degree())
        return Subspace::zero(0);
    if (p <= 0)
        return Subspace::full(n);
    if (p > static_cast<int>(length_))
        return Subspace::zero(n);
    return filt_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
}

std::vector<std::size_t> FilteredComplex::cohomology_dims() const
{
    std::vector<std::size_t> out;
    std::vector<std::size_t> ranks;
    for (int k = 0; k <= top_degree(); ++k)
        ranks.push_back(rank(d(k)));
    for (int k = 0; k <= top_degree(); ++k) {
        std::size_t incoming = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
        out.push_back(chain_dim(k) - ranks[static_cast<std::size_t>(k)] - incoming);
    }
    return out;
}

} // namespace ksseq
