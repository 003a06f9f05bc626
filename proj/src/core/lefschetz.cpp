#include "lefschetz.hpp"

#include "errors.hpp"

#include <random>
#include <string>

namespace ksseq {

LefschetzModule::LefschetzModule(unsigned n, std::vector<std::size_t> dims, std::vector<Matrix> L_maps,
                                 std::vector<std::vector<std::string>> labels)
    : n_(n), dims_(std::move(dims)), L_(std::move(L_maps)), labels_(std::move(labels))
{
    const std::size_t degrees = 2 * static_cast<std::size_t>(n_) + 1;
    if (dims_.size() != degrees)
        throw DimensionMismatch("Lefschetz module: expected " + std::to_string(degrees) +
                                " dimensions, got " + std::to_string(dims_.size()));
    if (L_.size() != degrees)
        throw DimensionMismatch("Lefschetz module: expected " + std::to_string(degrees) +
                                " L maps, got " + std::to_string(L_.size()));
    for (std::size_t p = 0; p < degrees; ++p) {
        const std::size_t rows = p + 2 < degrees ? dims_[p + 2] : 0;
        if (L_[p].rows() != rows || L_[p].cols() != dims_[p])
            throw DimensionMismatch("Lefschetz module: L map in degree " + std::to_string(p) +
                                    " must be " + std::to_string(rows) + "x" + std::to_string(dims_[p]));
    }
    if (!labels_.empty()) {
        if (labels_.size() != degrees)
            throw DimensionMismatch("Lefschetz module: labels must cover every degree");
        for (std::size_t p = 0; p < degrees; ++p)
            if (labels_[p].size() != dims_[p])
                throw DimensionMismatch("Lefschetz module: label count mismatch in degree " + std::to_string(p));
    }
}

std::size_t LefschetzModule::dim(int p) const
{
    if (p < 0 || p > static_cast<int>(top_degree()))
        return 0;
    return dims_[static_cast<std::size_t>(p)];
}

Matrix LefschetzModule::L(int p) const
{
    if (p < 0 || p > static_cast<int>(top_degree()))
        return Matrix(dim(p + 2), 0);
    return L_[static_cast<std::size_t>(p)];
}

Matrix LefschetzModule::L_power(int p, unsigned k) const
{
    Matrix acc = Matrix::identity(dim(p));
    for (unsigned i = 0; i < k; ++i)
        acc = L(p + 2 * static_cast<int>(i)) * acc;
    return acc;
}

std::size_t LefschetzModule::total_dim() const
{
    std::size_t t = 0;
    for (auto d : dims_)
        t += d;
    return t;
}

LefschetzReport check_hard_lefschetz(const LefschetzModule& m)
{
    LefschetzReport rep;
    const int n = static_cast<int>(m.n());
    rep.hlp = true;
    for (int k = 0; k <= n; ++k) {
        const std::size_t src = m.dim(n - k);
        const std::size_t dst = m.dim(n + k);
        bool iso = src == dst && rank(m.L_power(n - k, static_cast<unsigned>(k))) == src;
        if (!iso) {
            rep.hlp = false;
            rep.failing_degree = static_cast<unsigned>(k);
            break;
        }
    }
    for (unsigned j = 0; j <= m.n(); ++j)
        rep.primitive_dims.push_back(primitive_subspace(m, j).dim());
    for (unsigned p = 0; p <= m.top_degree(); ++p)
        rep.kernel_L_dims.push_back(kernel_L(m, p).dim());
    return rep;
}

bool satisfies_hard_lefschetz(const LefschetzModule& m)
{
    return check_hard_lefschetz(m).hlp;
}

Subspace primitive_subspace(const LefschetzModule& m, unsigned p)
{
    if (p > m.n())
        return Subspace::zero(m.dim(static_cast<int>(p)));
    return kernel_basis(m.L_power(static_cast<int>(p), m.n() - p + 1));
}

Subspace kernel_L(const LefschetzModule& m, unsigned p)
{
    return kernel_basis(m.L(static_cast<int>(p)));
}

LefschetzBasis lefschetz_basis(const LefschetzModule& m, unsigned p)
{
    if (!satisfies_hard_lefschetz(m))
        throw HypothesisViolation("Lefschetz decomposition requires the hard Lefschetz property");
    LefschetzBasis out;
    std::vector<Vector> cols;
    for (unsigned j = p % 2; j <= std::min(p, m.n()); j += 2) {
        const unsigned i = (p - j) / 2;
        if (i > m.n() - j)
            continue;
        Matrix prim = primitive_subspace(m, j).basis();
        Matrix lifted = m.L_power(static_cast<int>(j), i) * prim;
        for (std::size_t c = 0; c < lifted.cols(); ++c) {
            cols.push_back(lifted.column(c));
            out.entries.push_back({j, i, c});
        }
    }
    out.columns = Matrix::from_columns(m.dim(static_cast<int>(p)), cols);
    if (out.columns.cols() != m.dim(static_cast<int>(p)) || rank(out.columns) != out.columns.cols())
        throw HypothesisViolation("Lefschetz pieces do not form a basis of H^" + std::to_string(p));
    return out;
}

std::vector<ClassComponent> lefschetz_decompose_class(const LefschetzModule& m, unsigned p, const Vector& v)
{
    if (p > m.top_degree() || v.size() != m.dim(static_cast<int>(p)))
        throw DimensionMismatch("class vector does not live in H^" + std::to_string(p));
    auto basis = lefschetz_basis(m, p);
    Vector coeffs = inverse(basis.columns) * v;

    std::vector<ClassComponent> out;
    std::size_t pos = 0;
    while (pos < basis.entries.size()) {
        const unsigned j = basis.entries[pos].primitive_degree;
        const unsigned i = basis.entries[pos].power;
        Matrix prim = primitive_subspace(m, j).basis();
        Vector local(prim.cols());
        for (std::size_t c = 0; c < prim.cols(); ++c)
            local[c] = coeffs[pos + c];
        pos += prim.cols();
        if (!is_zero(local))
            out.push_back({i, prim * local});
    }
    return out;
}

Vector lefschetz_reconstruct(const LefschetzModule& m, unsigned p, const std::vector<ClassComponent>& parts)
{
    Vector acc(m.dim(static_cast<int>(p)));
    for (const auto& part : parts) {
        const int j = static_cast<int>(p) - 2 * static_cast<int>(part.power);
        Vector img = m.L_power(j, part.power) * part.beta;
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += img[i];
    }
    return acc;
}

bool check_top_degree(const LefschetzModule& m)
{
    return m.dim(static_cast<int>(m.top_degree())) == 1;
}

namespace {

// Entries in {-1, 0, 1}.
int small_entry(std::mt19937_64& rng)
{
    return static_cast<int>(rng() % 3) - 1;
}

Matrix random_unipotent(std::mt19937_64& rng, std::size_t n)
{
    Matrix upper = Matrix::identity(n);
    Matrix lower = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            upper(i, j) = small_entry(rng);
            lower(j, i) = small_entry(rng);
        }
    return upper * lower;
}

} // namespace

LefschetzModule generate_hlp_module(std::uint64_t seed, unsigned n,
                                    const std::vector<std::size_t>& primitive_dims)
{
    if (primitive_dims.size() != n + 1)
        throw DimensionMismatch("primitive_dims must have n+1 entries");
    if (primitive_dims[0] < 1)
        throw DimensionMismatch("primitive_dims[0] must be at least 1");

    const unsigned top = 2 * n;
    struct Slot {
        unsigned j, i;
        std::size_t idx;
    };
    std::vector<std::vector<Slot>> slots(top + 1);
    for (unsigned j = 0; j <= n; ++j)
        for (unsigned i = 0; i <= n - j; ++i)
            for (std::size_t idx = 0; idx < primitive_dims[j]; ++idx)
                slots[j + 2 * i].push_back({j, i, idx});

    std::vector<std::size_t> dims(top + 1);
    for (unsigned r = 0; r <= top; ++r)
        dims[r] = slots[r].size();

    std::vector<Matrix> L(top + 1);
    for (unsigned r = 0; r <= top; ++r) {
        const std::size_t rows = r + 2 <= top ? dims[r + 2] : 0;
        L[r] = Matrix(rows, dims[r]);
        if (rows == 0)
            continue;
        for (std::size_t c = 0; c < dims[r]; ++c) {
            const auto& s = slots[r][c];
            if (s.i == n - s.j)
                continue;
            for (std::size_t t = 0; t < rows; ++t) {
                const auto& d = slots[r + 2][t];
                if (d.j == s.j && d.i == s.i + 1 && d.idx == s.idx)
                    L[r](t, c) = 1;
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<Matrix> g(top + 1), g_inv(top + 1);
    for (unsigned r = 0; r <= top; ++r) {
        g[r] = random_unipotent(rng, dims[r]);
        g_inv[r] = inverse(g[r]);
    }
    for (unsigned r = 0; r + 2 <= top; ++r)
        L[r] = g[r + 2] * L[r] * g_inv[r];

    return LefschetzModule(n, std::move(dims), std::move(L));
}

LefschetzModule generate_non_hlp_module(std::uint64_t seed, unsigned n,
                                        const std::vector<std::size_t>& primitive_dims)
{
    LefschetzModule base = generate_hlp_module(seed, n, primitive_dims);
    std::vector<unsigned> candidates;
    for (unsigned p = 0; p + 2 <= base.top_degree(); ++p)
        if (!base.L_maps()[p].is_zero())
            candidates.push_back(p);
    if (candidates.empty())
        return base;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const unsigned victim = candidates[rng() % candidates.size()];
    auto L = base.L_maps();
    L[victim] = Matrix(L[victim].rows(), L[victim].cols());
    return LefschetzModule(n, base.dims(), std::move(L));
}

LefschetzModule generate_random_module(std::uint64_t seed, unsigned n, std::size_t max_dim)
{
    std::mt19937_64 rng(seed);
    const unsigned top = 2 * n;
    std::vector<std::size_t> dims(top + 1);
    dims[0] = 1;
    for (unsigned p = 1; p <= top; ++p)
        dims[p] = static_cast<std::size_t>(rng() % (max_dim + 1));
    std::vector<Matrix> L(top + 1);
    for (unsigned p = 0; p <= top; ++p) {
        const std::size_t rows = p + 2 <= top ? dims[p + 2] : 0;
        L[p] = Matrix(rows, dims[p]);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < dims[p]; ++j)
                L[p](i, j) = static_cast<int>(rng() % 5) - 2;
    }
    return LefschetzModule(n, std::move(dims), std::move(L));
}

} // namespace ksseq
