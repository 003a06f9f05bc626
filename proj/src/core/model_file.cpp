#include "model_file.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace ksseq {

using json = nlohmann::ordered_json;

namespace {

std::string idx(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& obj, const std::string& key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

unsigned get_unsigned(const json& v, const std::string& path, unsigned max = 1u << 20)
{
    if (!v.is_number_integer())
        throw ParseError(path, "expected a non-negative integer");
    const auto x = v.get<long long>();
    if (x < 0 || x > static_cast<long long>(max))
        throw ParseError(path, "value " + std::to_string(x) + " out of range 0.." + std::to_string(max));
    return static_cast<unsigned>(x);
}

Rational get_rational(const json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (!v.is_string())
        throw ParseError(path, "expected a rational written as \"num/den\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path, e.what());
    }
}

std::string get_string(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& path)
{
    if (!v.is_array())
        throw ParseError(path, "expected an array");
    return v;
}

/// rows x cols matrix given as an array of rows of rationals.
Matrix get_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path)
{
    get_array(v, path);
    if (v.size() != rows)
        throw ParseError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto row_path = idx(path, i);
        const json& row = get_array(v[i], row_path);
        if (row.size() != cols)
            throw ParseError(row_path, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = get_rational(row[j], idx(row_path, j));
    }
    return m;
}

json matrix_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

LefschetzModule parse_base(const json& base, unsigned n, const std::string& path)
{
    if (!base.is_object())
        throw ParseError(path, "expected an object");
    const json& dims_json = get_array(require(base, "dims", path), join(path, "dims"));
    if (dims_json.size() != 2 * n + 1)
        throw ParseError(join(path, "dims"), "expected " + std::to_string(2 * n + 1) + " entries (degrees 0..2n)");
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p < dims_json.size(); ++p)
        dims.push_back(get_unsigned(dims_json[p], idx(join(path, "dims"), p), 4096));

    const std::string lpath = join(path, "L");
    const json& L_json = get_array(require(base, "L", path), lpath);
    if (L_json.size() != dims.size())
        throw ParseError(lpath, "expected one matrix per degree 0.." + std::to_string(2 * n));
    std::vector<Matrix> L;
    for (std::size_t p = 0; p < dims.size(); ++p) {
        const std::size_t rows = p + 2 < dims.size() ? dims[p + 2] : 0;
        L.push_back(get_matrix(L_json[p], rows, dims[p], idx(lpath, p)));
    }

    std::vector<std::vector<std::string>> labels;
    if (auto it = base.find("labels"); it != base.end()) {
        const std::string lab_path = join(path, "labels");
        get_array(*it, lab_path);
        if (it->size() != dims.size())
            throw ParseError(lab_path, "expected one label list per degree");
        for (std::size_t p = 0; p < dims.size(); ++p) {
            const json& row = get_array((*it)[p], idx(lab_path, p));
            if (row.size() != dims[p])
                throw ParseError(idx(lab_path, p), "expected " + std::to_string(dims[p]) + " labels");
            std::vector<std::string> names;
            for (std::size_t a = 0; a < row.size(); ++a)
                names.push_back(get_string(row[a], idx(idx(lab_path, p), a)));
            labels.push_back(std::move(names));
        }
    }
    try {
        return LefschetzModule(n, std::move(dims), std::move(L), std::move(labels));
    } catch (const DimensionMismatch& e) {
        throw ParseError(path, e.what());
    }
}

FilteredComplexData parse_raw(const json& doc)
{
    FilteredComplexData raw;
    const json& dims_json = get_array(require(doc, "chain_dims", ""), "chain_dims");
    if (dims_json.empty())
        throw ParseError("chain_dims", "expected at least one degree");
    for (std::size_t k = 0; k < dims_json.size(); ++k)
        raw.chain_dims.push_back(get_unsigned(dims_json[k], idx("chain_dims", k), 4096));
    const std::size_t K = raw.chain_dims.size();

    const json& d_json = get_array(require(doc, "d", ""), "d");
    if (d_json.size() != K)
        throw ParseError("d", "expected one matrix per degree");
    for (std::size_t k = 0; k < K; ++k) {
        const std::size_t rows = k + 1 < K ? raw.chain_dims[k + 1] : 0;
        raw.d.push_back(get_matrix(d_json[k], rows, raw.chain_dims[k], idx("d", k)));
    }

    const json& lv_json = get_array(require(doc, "levels", ""), "levels");
    if (lv_json.size() != K)
        throw ParseError("levels", "expected one level list per degree");
    for (std::size_t k = 0; k < K; ++k) {
        const json& row = get_array(lv_json[k], idx("levels", k));
        if (row.size() != raw.chain_dims[k])
            throw ParseError(idx("levels", k), "expected " + std::to_string(raw.chain_dims[k]) + " levels");
        std::vector<unsigned> lv;
        for (std::size_t i = 0; i < row.size(); ++i)
            lv.push_back(get_unsigned(row[i], idx(idx("levels", k), i), 1024));
        raw.levels.push_back(std::move(lv));
    }
    if (auto it = doc.find("length"); it != doc.end())
        raw.length = get_unsigned(*it, "length", 1024);
    return raw;
}

} // namespace

InvariantComplex Model::build_invariant() const
{
    if (kind != ModelKind::Invariant)
        throw DimensionMismatch("model is a bare filtered complex, not an invariant-forms model");
    return InvariantComplex::build(base, s, lambdas);
}

FilteredComplex Model::build_complex() const
{
    if (kind == ModelKind::Invariant)
        return build_invariant().complex();
    return FilteredComplex::from_levels(raw.chain_dims, raw.d, raw.levels, raw.length);
}

Model parse_model(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("", "model must be a JSON object");
    if (get_string(require(doc, "format", ""), "format") != kModelFormat)
        throw ParseError("format", std::string("expected \"") + kModelFormat + "\"");

    Model m;
    const std::string kind = doc.contains("kind") ? get_string(doc["kind"], "kind") : "invariant";
    if (kind == "invariant")
        m.kind = ModelKind::Invariant;
    else if (kind == "filtered-complex")
        m.kind = ModelKind::FilteredComplex;
    else
        throw ParseError("kind", "expected \"invariant\" or \"filtered-complex\"");

    if (auto it = doc.find("name"); it != doc.end())
        m.name = get_string(*it, "name");
    if (auto it = doc.find("description"); it != doc.end())
        m.description = get_string(*it, "description");
    if (auto it = doc.find("seed"); it != doc.end()) {
        if (!it->is_number_unsigned())
            throw ParseError("seed", "expected an unsigned 64-bit integer");
        m.seed = it->get<std::uint64_t>();
    }

    if (m.kind == ModelKind::FilteredComplex) {
        m.raw = parse_raw(doc);
        m.build_complex();
        return m;
    }

    const unsigned n = get_unsigned(require(doc, "n", ""), "n", 16);
    m.s = get_unsigned(require(doc, "s", ""), "s", 16);
    if (m.s == 0)
        throw ParseError("s", "s must be at least 1 (s = 0 has no eta directions)");
    const json& lam = get_array(require(doc, "lambdas", ""), "lambdas");
    if (lam.size() != m.s)
        throw ParseError("lambdas", "expected " + std::to_string(m.s) + " entries, got " + std::to_string(lam.size()));
    for (std::size_t i = 0; i < lam.size(); ++i)
        m.lambdas.push_back(get_rational(lam[i], idx("lambdas", i)));
    m.base = parse_base(require(doc, "base", ""), n, "base");
    return m;
}

Model load_model(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read " + path);
    return parse_model(buf.str());
}

std::string serialize_model(const Model& m)
{
    json doc;
    doc["format"] = kModelFormat;
    doc["kind"] = m.kind == ModelKind::Invariant ? "invariant" : "filtered-complex";
    doc["name"] = m.name;
    doc["description"] = m.description;
    if (m.seed)
        doc["seed"] = *m.seed;
    if (m.kind == ModelKind::Invariant) {
        doc["n"] = m.base.n();
        doc["s"] = m.s;
        json lam = json::array();
        for (const auto& l : m.lambdas)
            lam.push_back(to_string(l));
        doc["lambdas"] = std::move(lam);
        json base;
        base["dims"] = m.base.dims();
        json L = json::array();
        for (std::size_t p = 0; p < m.base.dims().size(); ++p)
            L.push_back(matrix_json(m.base.L(static_cast<int>(p))));
        base["L"] = std::move(L);
        if (!m.base.labels().empty())
            base["labels"] = m.base.labels();
        doc["base"] = std::move(base);
    } else {
        doc["chain_dims"] = m.raw.chain_dims;
        json d = json::array();
        for (const auto& mat : m.raw.d)
            d.push_back(matrix_json(mat));
        doc["d"] = std::move(d);
        doc["levels"] = m.raw.levels;
        if (m.raw.length)
            doc["length"] = *m.raw.length;
    }
    return doc.dump(2) + "\n";
}

namespace {

struct PresetSpec {
    const char* name;
    const char* description;
    unsigned n;
    std::vector<std::size_t> dims;
    std::vector<Matrix> L;
    std::vector<std::vector<std::string>> labels;
    std::vector<Rational> lambdas;
};

std::vector<PresetSpec> presets()
{
    auto zero_rows = [](std::size_t cols) { return Matrix(0, cols); };
    Matrix one{{1}};
    return {
        {"hopf-s3", "Hopf fibration S^3 -> CP^1: base H(CP^1), Sasakian (S-type, s = 1)", 1,
         {1, 0, 1}, {one, zero_rows(0), zero_rows(1)}, {{"1"}, {}, {"w"}}, {1}},
        {"s5", "Hopf fibration S^5 -> CP^2: base H(CP^2), S-type, s = 1", 2,
         {1, 0, 1, 0, 1}, {one, Matrix(0, 0), one, zero_rows(0), zero_rows(1)},
         {{"1"}, {}, {"w"}, {}, {"w^2"}}, {1}},
        {"s2xs3", "S^2 x S^3 as a circle bundle over S^2 x S^2 with class a + b: S-type, s = 1", 2,
         {1, 0, 2, 0, 1}, {Matrix{{1}, {1}}, Matrix(0, 0), Matrix{{1, 1}}, zero_rows(0), zero_rows(1)},
         {{"1"}, {}, {"a", "b"}, {}, {"ab"}}, {1}},
        {"torus-t3", "T^3 = T^2 x S^1 with the trivial circle action: base H(T^2), C-type, s = 1", 1,
         {1, 2, 1}, {one, zero_rows(2), zero_rows(1)}, {{"1"}, {"dx", "dy"}, {"dxdy"}}, {0}},
        {"torus-t4", "T^4 = T^2 x T^2 with the trivial torus action: base H(T^2), C-type, s = 2", 1,
         {1, 2, 1}, {one, zero_rows(2), zero_rows(1)}, {{"1"}, {"dx", "dy"}, {"dxdy"}}, {0, 0}},
        {"s3xs1", "S^3 x S^1 over CP^1 with d eta_1 = d eta_2 = omega: S-type, s = 2", 1,
         {1, 0, 1}, {one, zero_rows(0), zero_rows(1)}, {{"1"}, {}, {"w"}}, {1, 1}},
        {"nonhlp-s", "Negative example: base dims (1,0,1) with L = 0 (fails hard Lefschetz), S-type, s = 1", 1,
         {1, 0, 1}, {Matrix{{0}}, zero_rows(0), zero_rows(1)}, {{"1"}, {}, {"x"}}, {1}},
    };
}

} // namespace

std::vector<std::string> preset_names()
{
    std::vector<std::string> out;
    for (const auto& p : presets())
        out.emplace_back(p.name);
    return out;
}

Model preset_model(std::string_view name)
{
    for (auto& p : presets())
        if (name == p.name) {
            Model m;
            m.kind = ModelKind::Invariant;
            m.name = p.name;
            m.description = p.description;
            m.base = LefschetzModule(p.n, std::move(p.dims), std::move(p.L), std::move(p.labels));
            m.s = static_cast<unsigned>(p.lambdas.size());
            m.lambdas = std::move(p.lambdas);
            return m;
        }
    throw NotFound("unknown preset \"" + std::string(name) + "\"");
}

StructureType parse_structure_type(std::string_view text)
{
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (t == "s")
        return StructureType::S;
    if (t == "c")
        return StructureType::C;
    if (t == "mixed")
        return StructureType::Mixed;
    throw ParseError("type", "expected S, C or mixed");
}

Model generate_model(const GenerateOptions& opts)
{
    if (opts.n > kMaxGenerateN)
        throw DimensionMismatch("n must be at most " + std::to_string(kMaxGenerateN));
    if (opts.s < 1 || opts.s > kMaxGenerateS)
        throw DimensionMismatch("s must be in 1.." + std::to_string(kMaxGenerateS));
    if (opts.max_primitive_dim > kMaxGeneratePrimitiveDim)
        throw DimensionMismatch("max primitive dimension must be at most "
                                + std::to_string(kMaxGeneratePrimitiveDim));
    if (opts.lambdas && opts.lambdas->size() != opts.s)
        throw DimensionMismatch("expected " + std::to_string(opts.s) + " lambdas");

    std::mt19937_64 rng(opts.seed);
    std::vector<std::size_t> pdims(opts.n + 1, 0);
    pdims[0] = 1;
    for (unsigned j = 1; j <= opts.n; ++j)
        pdims[j] = static_cast<std::size_t>(rng() % (opts.max_primitive_dim + 1));
    const std::uint64_t module_seed = rng();

    Model m;
    m.kind = ModelKind::Invariant;
    m.seed = opts.seed;
    m.s = opts.s;
    bool hlp = true;
    if (opts.type == StructureType::C && opts.n >= 1 && rng() % 2 == 1) {
        hlp = false;
        m.base = generate_non_hlp_module(module_seed, opts.n, pdims);
    } else {
        m.base = generate_hlp_module(module_seed, opts.n, pdims);
    }

    switch (opts.type) {
    case StructureType::S:
        m.lambdas.assign(opts.s, Rational(1));
        break;
    case StructureType::C:
        m.lambdas.assign(opts.s, Rational(0));
        break;
    case StructureType::Mixed:
        for (;;) {
            m.lambdas.clear();
            bool all_zero = true, all_one = true;
            for (unsigned i = 0; i < opts.s; ++i) {
                const Rational l = ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3 + 1));
                all_zero = all_zero && sgn(l) == 0;
                all_one = all_one && l == 1;
                m.lambdas.push_back(l);
            }
            if (!all_zero && !all_one)
                break;
        }
        break;
    }
    if (opts.lambdas)
        m.lambdas = *opts.lambdas;

    std::ostringstream pd;
    for (std::size_t j = 0; j < pdims.size(); ++j)
        pd << (j ? "," : "") << pdims[j];
    m.name = std::string("generated-") + to_string(opts.type) + "-" + std::to_string(opts.seed);
    m.description = "seeded model: n=" + std::to_string(opts.n) + ", s=" + std::to_string(opts.s)
                    + ", primitive dims (" + pd.str() + ")" + (hlp ? "" : ", hard Lefschetz broken");
    return m;
}

} // namespace ksseq
