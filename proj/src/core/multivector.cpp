#include "multivector.hpp"

#include "errors.hpp"
#include "subspace.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ksseq {

namespace {

void require_same_frame(const Multivector& a, const Multivector& b, const char* op)
{
    if (!(a.frame() == b.frame()))
        throw FrameMismatch(std::string(op) + ": multivectors live over different frames");
}

void require_transverse(const Multivector& a, const char* op)
{
    if (!a.is_transverse())
        throw FrameMismatch(std::string(op) + ": form has components along the eta directions");
}

// Symplectic partner of covector k: e^{2i-1} <-> e^{2i} (0-based: 2i <-> 2i+1).
unsigned partner(unsigned k) { return k ^ 1u; }

// (omega^{-1}) entry for covectors x, y: inverse of the matrix omega(e_x, e_y).
int poisson(unsigned x, unsigned y)
{
    if (partner(x) != y)
        return 0;
    return (x % 2 == 0) ? -1 : 1;
}

std::vector<unsigned> bits_of(Monomial m)
{
    std::vector<unsigned> out;
    while (m != 0) {
        out.push_back(static_cast<unsigned>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

// det[poisson(c_i, t_j)] for monomials c, t of equal degree.
int poisson_det(Monomial c, Monomial t)
{
    auto cb = bits_of(c);
    auto tb = bits_of(t);
    Monomial image = 0;
    for (auto x : cb)
        image |= Monomial{1} << partner(x);
    if (image != t)
        return 0;
    // The matrix is a signed permutation matrix; sign(perm) * product of entries.
    std::vector<unsigned> perm;
    int prod = 1;
    for (auto x : cb) {
        auto y = partner(x);
        perm.push_back(static_cast<unsigned>(std::find(tb.begin(), tb.end(), y) - tb.begin()));
        prod *= poisson(x, y);
    }
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return (inversions % 2 == 0 ? 1 : -1) * prod;
}

} // namespace

Multivector::Multivector(ModelFrame frame, unsigned degree)
    : frame_(frame), degree_(degree)
{
    if (frame.total_dim() > 30)
        throw DimensionMismatch("model frame too large for monomial masks");
}

Multivector Multivector::scalar(ModelFrame frame, const Rational& c)
{
    Multivector m(frame, 0);
    m.add_term(0, c);
    return m;
}

Multivector Multivector::monomial(ModelFrame frame, Monomial mask, const Rational& c)
{
    if ((mask >> frame.total_dim()) != 0)
        throw DimensionMismatch("monomial uses covectors outside the frame");
    Multivector m(frame, static_cast<unsigned>(std::popcount(mask)));
    m.add_term(mask, c);
    return m;
}

Multivector Multivector::from_indices(ModelFrame frame, std::vector<unsigned> labels, const Rational& c)
{
    Multivector result = scalar(frame, c);
    for (auto label : labels) {
        if (label == 0 || label > frame.total_dim())
            throw DimensionMismatch("covector label " + std::to_string(label) + " outside the frame");
        result = wedge(result, monomial(frame, Monomial{1} << (label - 1)));
    }
    return result;
}

bool Multivector::is_transverse() const noexcept
{
    for (const auto& [m, c] : terms_)
        if ((m & frame_.eta_mask()) != 0)
            return false;
    return true;
}

Rational Multivector::coefficient(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Monomial m, const Rational& c)
{
    if (static_cast<unsigned>(std::popcount(m)) != degree_)
        throw DimensionMismatch("term degree differs from multivector degree");
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& other)
{
    require_same_frame(*this, other, "add");
    if (other.degree_ != degree_ && !other.is_zero())
        throw DimensionMismatch("adding multivectors of different degree");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other)
{
    require_same_frame(*this, other, "subtract");
    if (other.degree_ != degree_ && !other.is_zero())
        throw DimensionMismatch("subtracting multivectors of different degree");
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(const Rational& c, Multivector a) { return a *= c; }

std::string to_string(const Multivector& a)
{
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const unsigned tdim = a.frame().transverse_dim();
    for (const auto& [m, c] : a.terms()) {
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (m == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1)
            os << to_string(mag) << " ";
        bool first_factor = true;
        for (auto b : bits_of(m)) {
            if (!first_factor)
                os << "^";
            first_factor = false;
            if (b < tdim)
                os << "e" << (b + 1);
            else
                os << "eta" << (b - tdim + 1);
        }
    }
    return os.str();
}

int wedge_sign(Monomial a, Monomial b)
{
    if ((a & b) != 0)
        return 0;
    // Count pairs (i in a, j in b) with i > j.
    int swaps = 0;
    Monomial bb = b;
    while (bb != 0) {
        unsigned j = static_cast<unsigned>(std::countr_zero(bb));
        bb &= bb - 1;
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 == 0 ? 1 : -1;
}

std::vector<Monomial> basis_monomials(unsigned dim, unsigned degree)
{
    std::vector<Monomial> out;
    if (degree > dim)
        return out;
    const Monomial limit = Monomial{1} << dim;
    for (Monomial m = 0; m < limit; ++m)
        if (static_cast<unsigned>(std::popcount(m)) == degree)
            out.push_back(m);
    return out;
}

Vector to_coordinates(const Multivector& a, const std::vector<Monomial>& basis)
{
    Vector v(basis.size());
    for (const auto& [m, c] : a.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || *it != m)
            throw DimensionMismatch("multivector term outside the coordinate basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Multivector from_coordinates(ModelFrame frame, unsigned degree,
                             const std::vector<Monomial>& basis, const Vector& v)
{
    if (v.size() != basis.size())
        throw DimensionMismatch("coordinate vector length mismatch");
    Multivector a(frame, degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
        a.add_term(basis[i], v[i]);
    return a;
}

Multivector wedge(const Multivector& a, const Multivector& b)
{
    require_same_frame(a, b, "wedge");
    Multivector out(a.frame(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int sign = wedge_sign(ma, mb);
            if (sign == 0)
                continue;
            out.add_term(ma | mb, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return out;
}

Multivector omega(ModelFrame frame)
{
    Multivector w(frame, 2);
    for (unsigned i = 0; i < frame.n; ++i)
        w.add_term((Monomial{1} << (2 * i)) | (Monomial{1} << (2 * i + 1)), 1);
    return w;
}

Multivector transverse_volume(ModelFrame frame)
{
    return Multivector::monomial(frame, frame.transverse_mask());
}

Multivector lefschetz_L(const Multivector& a)
{
    require_transverse(a, "L");
    return wedge(omega(a.frame()), a);
}

Multivector symplectic_star(const Multivector& a)
{
    require_transverse(a, "symplectic star");
    const auto& frame = a.frame();
    const unsigned tdim = frame.transverse_dim();
    if (a.degree() > tdim)
        return Multivector(frame, 0);
    const Monomial full = frame.transverse_mask();
    Multivector out(frame, tdim - a.degree());
    // b ^ *a = (omega^{-1})(b, a) vol for b the complement monomial of each output term.
    for (auto m : basis_monomials(tdim, tdim - a.degree())) {
        const Monomial c = full & ~m;
        Rational pairing = 0;
        for (const auto& [t, coeff] : a.terms()) {
            int det = poisson_det(c, t);
            if (det != 0)
                pairing += det * coeff;
        }
        if (sgn(pairing) != 0)
            out.add_term(m, wedge_sign(c, m) * pairing);
    }
    return out;
}

Multivector hodge_star_transverse(const Multivector& a)
{
    require_transverse(a, "basic Hodge star");
    const auto& frame = a.frame();
    const unsigned tdim = frame.transverse_dim();
    if (a.degree() > tdim)
        return Multivector(frame, 0);
    const Monomial full = frame.transverse_mask();
    Multivector out(frame, tdim - a.degree());
    for (const auto& [t, coeff] : a.terms())
        out.add_term(full & ~t, wedge_sign(t, full & ~t) * coeff);
    return out;
}

Multivector j_action(const Multivector& a)
{
    require_transverse(a, "J");
    const auto& frame = a.frame();
    Multivector out(frame, a.degree());
    for (const auto& [t, coeff] : a.terms()) {
        // Pullback is multiplicative: J e^{2i-1} = -e^{2i}, J e^{2i} = e^{2i-1}.
        Multivector term = Multivector::scalar(frame, coeff);
        for (auto b : bits_of(t)) {
            const Rational sign = (b % 2 == 0) ? -1 : 1;
            term = wedge(term, Multivector::monomial(frame, Monomial{1} << partner(b), sign));
        }
        out += term;
    }
    return out;
}

Multivector lambda_op(const Multivector& a)
{
    require_transverse(a, "Lambda");
    if (a.degree() < 2)
        return Multivector(a.frame(), 0);
    if (a.degree() > a.frame().transverse_dim())
        return Multivector(a.frame(), a.degree() - 2);
    return symplectic_star(lefschetz_L(symplectic_star(a)));
}

Multivector full_hodge_star(const Multivector& a)
{
    const auto& frame = a.frame();
    const unsigned dim = frame.total_dim();
    if (a.degree() > dim)
        return Multivector(frame, 0);
    const Monomial full = (Monomial{1} << dim) - 1;
    // eta_1^..^eta_s^e^1^..^e^{2n} = e^1^..^e^{2n}^eta_1^..^eta_s because 2n*s is even.
    Multivector out(frame, dim - a.degree());
    for (const auto& [t, coeff] : a.terms())
        out.add_term(full & ~t, wedge_sign(t, full & ~t) * coeff);
    return out;
}

Rational inner_product(const Multivector& a, const Multivector& b)
{
    require_same_frame(a, b, "inner product");
    if (a.degree() != b.degree())
        return 0;
    Rational sum = 0;
    for (const auto& [m, c] : a.terms())
        sum += c * b.coefficient(m);
    return sum;
}

std::vector<PrimitiveComponent> primitive_decompose(const Multivector& a)
{
    require_transverse(a, "primitive decomposition");
    const auto& frame = a.frame();
    const unsigned tdim = frame.transverse_dim();
    const unsigned r = a.degree();
    if (r > tdim || a.is_zero())
        return {};

    auto target = basis_monomials(tdim, r);
    struct Block {
        unsigned power;
        unsigned degree;
        Matrix prim;   // columns: primitive basis in degree-j coordinates
    };
    std::vector<Block> blocks;
    std::vector<Vector> columns;
    for (unsigned i = 0; 2 * i <= r; ++i) {
        const unsigned j = r - 2 * i;
        if (j + r > tdim)   // L^i kills primitives of degree j
            continue;
        Matrix lam = operator_matrix(frame, tdim, j, j >= 2 ? j - 2 : 0, [](const Multivector& x) {
            return x.degree() >= 2 ? lambda_op(x) : Multivector(x.frame(), 0);
        });
        Subspace prim = j >= 2 ? kernel_basis(lam) : Subspace::full(basis_monomials(tdim, j).size());
        if (prim.dim() == 0)
            continue;
        Matrix pb = prim.basis();
        auto src = basis_monomials(tdim, j);
        for (std::size_t c = 0; c < pb.cols(); ++c) {
            Multivector x = from_coordinates(frame, j, src, pb.column(c));
            for (unsigned k = 0; k < i; ++k)
                x = lefschetz_L(x);
            columns.push_back(to_coordinates(x, target));
        }
        blocks.push_back({i, j, std::move(pb)});
    }

    Matrix system = Matrix::from_columns(target.size(), columns);
    if (system.cols() != target.size())
        throw Error("primitive decomposition: Lefschetz blocks do not span the form space");
    Vector coeffs = inverse(system) * to_coordinates(a, target);

    std::vector<PrimitiveComponent> out;
    std::size_t offset = 0;
    for (const auto& blk : blocks) {
        Vector local(blk.prim.cols());
        for (std::size_t c = 0; c < local.size(); ++c)
            local[c] = coeffs[offset + c];
        offset += local.size();
        if (is_zero(local))
            continue;
        auto src = basis_monomials(tdim, blk.degree);
        out.push_back({blk.power, from_coordinates(frame, blk.degree, src, blk.prim * local)});
    }
    return out;
}

} // namespace ksseq
