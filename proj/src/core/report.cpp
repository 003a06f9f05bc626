#include "report.hpp"

#include "errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ksseq {

using json = nlohmann::ordered_json;

long long PageTable::dim(int p, int q) const
{
    for (const auto& c : cells)
        if (c.p == p && c.q == q)
            return c.dim;
    return 0;
}

PageTable page_table(const SpectralPage& page)
{
    PageTable t;
    t.r = page.r();
    for (const auto& cell : page.cells())
        if (cell.dim() > 0)
            t.cells.push_back({cell.p, cell.q, static_cast<long long>(cell.dim())});
    t.differentials_vanish = page.differentials_vanish();
    return t;
}

bool RunReport::passed() const
{
    return std::none_of(verifications.begin(), verifications.end(),
                        [](const VerificationReport& v) { return v.outcome == Outcome::Fail; });
}

namespace {

json table_json(const DimTable& t)
{
    json out = json::array();
    for (const auto& [key, value] : t)
        out.push_back(json::array({key, value}));
    return out;
}

json verification_json(const VerificationReport& v)
{
    json out;
    out["theorem"] = v.theorem;
    out["outcome"] = to_string(v.outcome);
    out["expected"] = table_json(v.expected);
    out["actual"] = table_json(v.actual);
    json checks = json::array();
    for (const auto& [name, holds] : v.checks)
        checks.push_back(json::array({name, holds}));
    out["checks"] = std::move(checks);
    out["witnesses"] = v.witnesses;
    out["message"] = v.message;
    return out;
}

// Field access with path-aware errors.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const json& at(const std::string& key) const
    {
        if (!j_.is_object())
            throw ParseError(path_, "expected an object");
        auto it = j_.find(key);
        if (it == j_.end())
            throw ParseError(sub(key), "missing field");
        return *it;
    }
    std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    template <class T>
    T get(const std::string& key) const
    {
        try {
            return at(key).get<T>();
        } catch (const json::exception& e) {
            throw ParseError(sub(key), e.what());
        }
    }

private:
    const json& j_;
    std::string path_;
};

DimTable table_from_json(const json& j, const std::string& path)
{
    if (!j.is_array())
        throw ParseError(path, "expected an array");
    DimTable t;
    try {
        for (const auto& row : j)
            t.emplace_back(row.at(0).get<std::string>(), row.at(1).get<long long>());
    } catch (const json::exception& e) {
        throw ParseError(path, e.what());
    }
    return t;
}

Outcome outcome_from_string(const std::string& s, const std::string& path)
{
    for (Outcome o : {Outcome::Pass, Outcome::Fail, Outcome::HypothesisViolated})
        if (s == to_string(o))
            return o;
    throw ParseError(path, "unknown outcome \"" + s + "\"");
}

VerificationReport verification_from_json(const json& j, const std::string& path)
{
    Reader r(j, path);
    VerificationReport v;
    v.theorem = r.get<std::string>("theorem");
    v.outcome = outcome_from_string(r.get<std::string>("outcome"), r.sub("outcome"));
    v.expected = table_from_json(r.at("expected"), r.sub("expected"));
    v.actual = table_from_json(r.at("actual"), r.sub("actual"));
    try {
        for (const auto& c : r.at("checks"))
            v.checks.emplace_back(c.at(0).get<std::string>(), c.at(1).get<bool>());
    } catch (const json::exception& e) {
        throw ParseError(r.sub("checks"), e.what());
    }
    v.witnesses = r.get<std::vector<std::string>>("witnesses");
    v.message = r.get<std::string>("message");
    return v;
}

} // namespace

std::string report_to_json(const RunReport& r)
{
    json doc;
    doc["format"] = kReportFormat;
    json model;
    model["name"] = r.model_name;
    model["description"] = r.model_description;
    model["kind"] = r.kind;
    model["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    model["n"] = r.n;
    model["s"] = r.s;
    model["lambdas"] = r.lambdas;
    model["structure"] = r.structure;
    model["hlp"] = r.hlp ? json(*r.hlp) : json(nullptr);
    model["top_degree_one"] = r.top_degree_one ? json(*r.top_degree_one) : json(nullptr);
    doc["model"] = std::move(model);
    doc["filtration_length"] = r.filtration_length;
    json pages = json::array();
    for (const auto& page : r.pages) {
        json pj;
        pj["r"] = page.r;
        json cells = json::array();
        for (const auto& c : page.cells)
            cells.push_back(json::array({c.p, c.q, c.dim}));
        pj["cells"] = std::move(cells);
        pj["differentials_vanish"] = page.differentials_vanish;
        pages.push_back(std::move(pj));
    }
    doc["pages"] = std::move(pages);
    doc["stable_at"] = r.stable_at;
    doc["betti"] = r.betti;
    doc["cohomology"] = r.cohomology;
    json vs = json::array();
    for (const auto& v : r.verifications)
        vs.push_back(verification_json(v));
    doc["verifications"] = std::move(vs);
    doc["passed"] = r.passed();
    doc["timing_us"] = r.timing_us;
    return doc.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    Reader top(doc, "");
    if (top.get<std::string>("format") != kReportFormat)
        throw ParseError("format", std::string("expected \"") + kReportFormat + "\"");

    RunReport r;
    Reader model(top.at("model"), "model");
    r.model_name = model.get<std::string>("name");
    r.model_description = model.get<std::string>("description");
    r.kind = model.get<std::string>("kind");
    if (!model.at("seed").is_null())
        r.seed = model.get<std::uint64_t>("seed");
    r.n = model.get<unsigned>("n");
    r.s = model.get<unsigned>("s");
    r.lambdas = model.get<std::vector<std::string>>("lambdas");
    r.structure = model.get<std::string>("structure");
    if (!model.at("hlp").is_null())
        r.hlp = model.get<bool>("hlp");
    if (!model.at("top_degree_one").is_null())
        r.top_degree_one = model.get<bool>("top_degree_one");
    r.filtration_length = top.get<unsigned>("filtration_length");

    const json& pages = top.at("pages");
    if (!pages.is_array())
        throw ParseError("pages", "expected an array");
    for (std::size_t i = 0; i < pages.size(); ++i) {
        const std::string path = "pages[" + std::to_string(i) + "]";
        Reader pr(pages[i], path);
        PageTable t;
        t.r = pr.get<unsigned>("r");
        t.differentials_vanish = pr.get<bool>("differentials_vanish");
        try {
            for (const auto& c : pr.at("cells"))
                t.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<long long>()});
        } catch (const json::exception& e) {
            throw ParseError(pr.sub("cells"), e.what());
        }
        r.pages.push_back(std::move(t));
    }
    r.stable_at = top.get<unsigned>("stable_at");
    r.betti = top.get<std::vector<long long>>("betti");
    r.cohomology = top.get<std::vector<long long>>("cohomology");
    const json& vs = top.at("verifications");
    if (!vs.is_array())
        throw ParseError("verifications", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i)
        r.verifications.push_back(verification_from_json(vs[i], "verifications[" + std::to_string(i) + "]"));
    r.timing_us = top.get<long long>("timing_us");
    return r;
}

namespace {

std::string join_numbers(const std::vector<long long>& v)
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

void print_grid(std::ostream& out, const PageTable& page, unsigned length, int max_q)
{
    const int width = 4;
    out << "E_" << page.r << (page.differentials_vanish ? "" : "   (nonzero d_" + std::to_string(page.r) + ")") << "\n";
    for (int q = max_q; q >= 0; --q) {
        out << "  q=" << std::setw(2) << q << " |";
        for (int p = 0; p <= static_cast<int>(length); ++p) {
            const long long d = page.dim(p, q);
            out << std::setw(width) << (d == 0 ? std::string(".") : std::to_string(d));
        }
        out << "\n";
    }
    out << "       +" << std::string(static_cast<std::size_t>(width) * (length + 1), '-') << "\n";
    out << "        ";
    for (int p = 0; p <= static_cast<int>(length); ++p)
        out << std::setw(width) << ("p" + std::to_string(p));
    out << "\n";
}

} // namespace

std::string report_to_text(const RunReport& r)
{
    std::ostringstream out;
    out << "model: " << (r.model_name.empty() ? "(unnamed)" : r.model_name) << "\n";
    if (!r.model_description.empty())
        out << "  " << r.model_description << "\n";
    if (r.kind == "invariant") {
        out << "  n=" << r.n << " s=" << r.s << " lambdas=(";
        for (std::size_t i = 0; i < r.lambdas.size(); ++i)
            out << (i ? "," : "") << r.lambdas[i];
        out << ") type=" << r.structure;
        if (r.hlp)
            out << " hard-Lefschetz=" << (*r.hlp ? "yes" : "no");
        if (r.top_degree_one)
            out << " top-degree-1=" << (*r.top_degree_one ? "yes" : "no");
        out << "\n";
    } else {
        out << "  bare filtered complex, filtration length " << r.filtration_length << "\n";
    }
    if (r.seed)
        out << "  seed " << *r.seed << "\n";

    int max_q = 0;
    for (const auto& page : r.pages)
        for (const auto& c : page.cells)
            max_q = std::max(max_q, c.q);
    const unsigned shown = std::min<unsigned>(static_cast<unsigned>(r.pages.size()), std::max(r.stable_at, 2u) + 1);
    for (unsigned i = 0; i < shown; ++i)
        print_grid(out, r.pages[i], r.filtration_length, max_q);

    out << "stable at page " << r.stable_at << "\n";
    out << "E_inf totals " << join_numbers(r.betti) << "\n";
    out << "cohomology   " << join_numbers(r.cohomology) << "\n";
    for (const auto& v : r.verifications) {
        out << "[" << to_string(v.outcome) << "] " << v.theorem;
        if (!v.message.empty())
            out << ": " << v.message;
        out << "\n";
        for (const auto& w : v.witnesses)
            out << "    " << w << "\n";
    }
    out << (r.passed() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    if (r.timing_us > 0)
        out << "time " << r.timing_us << " us\n";
    return out.str();
}

} // namespace ksseq
