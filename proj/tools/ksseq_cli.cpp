// ksseq command-line front end. Talks to the engine only through the C API.
#include "ksseq/ksseq.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct ModelDeleter {
    void operator()(ksseq_model* m) const { ksseq_model_free(m); }
};
struct ReportDeleter {
    void operator()(ksseq_report* r) const { ksseq_report_free(r); }
};
using ModelPtr = std::unique_ptr<ksseq_model, ModelDeleter>;
using ReportPtr = std::unique_ptr<ksseq_report, ReportDeleter>;

struct CString {
    char* ptr = nullptr;
    ~CString() { ksseq_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

void print_error(ksseq_status status)
{
    std::cerr << "error (" << ksseq_status_name(status) << "): " << ksseq_last_error() << "\n";
}

/// Bad input of any kind.
int invalid_input(ksseq_status status)
{
    print_error(status);
    return kExitInvalid;
}

/// Failure while processing valid input: inconsistent data and internal errors are
/// failures, argument problems are invalid input.
int report_error(ksseq_status status)
{
    print_error(status);
    switch (status) {
    case KSSEQ_ERR_INCONSISTENT:
    case KSSEQ_ERR_HYPOTHESIS:
    case KSSEQ_ERR_INTERNAL:
        return kExitFail;
    default:
        return kExitInvalid;
    }
}

bool write_text(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

std::optional<std::vector<long long>> parse_betti(const std::string& text)
{
    std::vector<long long> out;
    for (const auto& item : split_commas(text)) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size())
                return std::nullopt;
            out.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (out.empty())
        return std::nullopt;
    return out;
}

std::string join(const std::vector<long long>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

struct Common {
    bool quiet = false;
};

struct AnalyzeArgs {
    std::string model_path;
    std::string preset;
    std::string json_path;
    std::string lambdas;
    bool timing = false;
};

int run_analyze(const AnalyzeArgs& a, const Common& common)
{
    if (a.model_path.empty() == a.preset.empty()) {
        std::cerr << "error: give exactly one of a model file or --preset\n";
        return kExitInvalid;
    }
    ksseq_model* raw = nullptr;
    ksseq_status st = a.preset.empty() ? ksseq_model_load(a.model_path.c_str(), &raw)
                                       : ksseq_model_preset(a.preset.c_str(), &raw);
    if (st != KSSEQ_OK)
        return invalid_input(st);
    ModelPtr model(raw);

    if (!a.lambdas.empty()) {
        auto items = split_commas(a.lambdas);
        std::vector<const char*> ptrs;
        for (const auto& s : items)
            ptrs.push_back(s.c_str());
        if ((st = ksseq_model_set_lambdas(model.get(), ptrs.data(), ptrs.size())) != KSSEQ_OK)
            return invalid_input(st);
    }

    ksseq_report* rep_raw = nullptr;
    if ((st = ksseq_analyze(model.get(), a.timing ? 1 : 0, &rep_raw)) != KSSEQ_OK)
        return report_error(st);
    ReportPtr report(rep_raw);

    if (!common.quiet && a.json_path != "-") {
        CString text;
        if ((st = ksseq_report_to_text(report.get(), &text.ptr)) != KSSEQ_OK)
            return report_error(st);
        std::cout << text.str();
    }
    if (!a.json_path.empty()) {
        CString json;
        if ((st = ksseq_report_to_json(report.get(), &json.ptr)) != KSSEQ_OK)
            return report_error(st);
        if (!write_text(a.json_path, json.str()))
            return kExitInvalid;
    }
    return ksseq_report_passed(report.get()) ? kExitPass : kExitFail;
}

struct GenerateArgs {
    std::uint64_t seed = 0;
    unsigned n = 1;
    unsigned s = 1;
    unsigned max_primitive_dim = 2;
    std::string type = "S";
    std::string lambdas;
    std::string out = "-";
};

int run_generate(const GenerateArgs& a, const Common& common)
{
    ksseq_model* raw = nullptr;
    ksseq_status st = ksseq_model_generate(a.seed, a.n, a.s, a.max_primitive_dim, a.type.c_str(), &raw);
    if (st != KSSEQ_OK)
        return invalid_input(st);
    ModelPtr model(raw);
    if (!a.lambdas.empty()) {
        auto items = split_commas(a.lambdas);
        std::vector<const char*> ptrs;
        for (const auto& s : items)
            ptrs.push_back(s.c_str());
        if ((st = ksseq_model_set_lambdas(model.get(), ptrs.data(), ptrs.size())) != KSSEQ_OK)
            return invalid_input(st);
    }
    CString text;
    if ((st = ksseq_model_to_string(model.get(), &text.ptr)) != KSSEQ_OK)
        return report_error(st);
    if (!write_text(a.out, text.str()))
        return kExitInvalid;
    if (!common.quiet && a.out != "-")
        std::cerr << "wrote " << a.out << "\n";
    return kExitPass;
}

struct RecursionArgs {
    std::string betti;
    unsigned s = 1;
    std::optional<unsigned> n;
    std::string structure = "S";
};

int run_recursion(const RecursionArgs& a, const Common& common)
{
    auto betti = parse_betti(a.betti);
    if (!betti) {
        std::cerr << "error: --betti must be a comma-separated list of integers\n";
        return kExitInvalid;
    }
    const std::size_t len = betti->size();
    if (a.s == 0 || len < a.s + 1 || (len - a.s - 1) % 2 != 0) {
        std::cerr << "error: Betti list length " << len << " is not 2n+s+1 for s=" << a.s << "\n";
        return kExitInvalid;
    }
    const unsigned n = static_cast<unsigned>((len - a.s - 1) / 2);
    if (a.n && *a.n != n) {
        std::cerr << "error: Betti list length " << len << " needs 2n+s+1 = " << (2 * *a.n + a.s + 1) << "\n";
        return kExitInvalid;
    }

    auto inconsistent = [&](ksseq_status st) {
        if (st == KSSEQ_ERR_INCONSISTENT) {
            std::cerr << "input is not the Betti sequence of such a manifold (degree "
                      << ksseq_last_error_degree() << "): " << ksseq_last_error() << "\n";
            return kExitFail;
        }
        return report_error(st);
    };

    if (a.structure == "S" || a.structure == "s") {
        std::vector<long long> prim(n + 1), basic(2 * n + 1);
        ksseq_status st = ksseq_primitive_betti(betti->data(), len, a.s, n, prim.data(), basic.data());
        if (st != KSSEQ_OK)
            return inconsistent(st);
        if (!common.quiet) {
            std::cout << "primitive Betti " << join(prim) << "\n";
            std::cout << "basic Betti     " << join(basic) << "\n";
        }
        return kExitPass;
    }
    if (a.structure == "C" || a.structure == "c") {
        std::vector<long long> basic(len - a.s);
        ksseq_status st = ksseq_basic_betti(betti->data(), len, a.s, basic.data());
        if (st != KSSEQ_OK)
            return inconsistent(st);
        if (!common.quiet)
            std::cout << "basic Betti " << join(basic) << "\n";
        return kExitPass;
    }
    std::cerr << "error: --structure must be S or C\n";
    return kExitInvalid;
}

int run_star_check(unsigned n, unsigned s, const Common& common)
{
    if (n > 3 || s > 4) {
        std::cerr << "error: star-check supports n <= 3 and s <= 4\n";
        return kExitInvalid;
    }
    std::size_t cases = 0;
    int passed = 0;
    CString counter;
    ksseq_status st = ksseq_star_check(n, s, &cases, &passed, &counter.ptr);
    if (st != KSSEQ_OK)
        return report_error(st);
    if (!common.quiet || !passed) {
        std::cout << "star-check n=" << n << " s=" << s << ": " << (passed ? "pass" : "FAIL") << ", "
                  << cases << " cases\n";
        if (!passed)
            std::cout << "counterexample: " << counter.str() << "\n";
    }
    return passed ? kExitPass : kExitFail;
}

int run_presets(const std::string& name, const std::string& out, const Common& common)
{
    if (name.empty()) {
        for (std::size_t i = 0; i < ksseq_preset_count(); ++i)
            std::cout << ksseq_preset_name(i) << "\n";
        return kExitPass;
    }
    ksseq_model* raw = nullptr;
    ksseq_status st = ksseq_model_preset(name.c_str(), &raw);
    if (st != KSSEQ_OK)
        return invalid_input(st);
    ModelPtr model(raw);
    CString text;
    if ((st = ksseq_model_to_string(model.get(), &text.ptr)) != KSSEQ_OK)
        return report_error(st);
    if (!write_text(out, text.str()))
        return kExitInvalid;
    if (!common.quiet && out != "-")
        std::cerr << "wrote " << out << "\n";
    return kExitPass;
}

int run_decompose(unsigned n, const std::string& form)
{
    CString text;
    ksseq_status st = ksseq_decompose(n, form.c_str(), &text.ptr);
    if (st != KSSEQ_OK)
        return invalid_input(st);
    std::cout << text.str();
    return kExitPass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ksseq: spectral sequences of invariant-forms models"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("-q,--quiet", common.quiet, "Suppress human-readable output");
    app.set_version_flag("--version", std::string(ksseq_version()));

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Run the spectral sequence and the applicable verifiers on a model");
    analyze->add_option("model", an.model_path, "Model file");
    analyze->add_option("--preset", an.preset, "Use a built-in preset instead of a file");
    analyze->add_option("--json", an.json_path, "Write the JSON report to this path (- for stdout, replacing the text report)");
    analyze->add_option("--lambdas", an.lambdas, "Override lambdas, comma-separated rationals");
    analyze->add_flag("--timing", an.timing, "Record wall-clock time in the report");
    analyze->add_flag("-q,--quiet", common.quiet, "Suppress human-readable output");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a seeded random model file");
    generate->add_option("--seed", gen.seed, "Random seed")->required();
    generate->add_option("--n", gen.n, "Complex transverse dimension (0..6)");
    generate->add_option("--s", gen.s, "Number of eta directions (1..4)");
    generate->add_option("--max-primitive-dim", gen.max_primitive_dim, "Largest primitive dimension per degree");
    generate->add_option("--type", gen.type, "S, C or mixed");
    generate->add_option("--lambdas", gen.lambdas, "Explicit lambdas, comma-separated rationals");
    generate->add_option("-o,--out", gen.out, "Output path (- for stdout)");
    generate->add_flag("-q,--quiet", common.quiet, "Suppress progress messages");

    RecursionArgs rec;
    unsigned rec_n = 0;
    auto* recursion = app.add_subcommand("recursion", "Recover primitive/basic Betti numbers from de Rham Betti numbers");
    recursion->add_option("--betti", rec.betti, "Comma-separated de Rham Betti numbers b_0..b_{2n+s}")->required();
    recursion->add_option("--s", rec.s, "Number of eta directions")->required();
    auto* rec_n_opt = recursion->add_option("--n", rec_n, "Complex transverse dimension");
    recursion->add_option("--structure,--type", rec.structure, "S or C");
    recursion->add_flag("-q,--quiet", common.quiet, "Suppress output");

    unsigned star_n = 1, star_s = 1;
    auto* star = app.add_subcommand("star-check", "Exhaustively check the full Hodge star against the eta sign rule");
    star->add_option("--n", star_n, "Complex transverse dimension (0..3)");
    star->add_option("--s", star_s, "Number of eta directions (0..4)");
    star->add_flag("-q,--quiet", common.quiet, "Print only failures");

    std::string preset_name, preset_out = "-";
    auto* presets = app.add_subcommand("presets", "List presets, or print one as a model file");
    presets->add_option("name", preset_name, "Preset to print");
    presets->add_option("-o,--out", preset_out, "Output path (- for stdout)");

    unsigned dec_n = 1;
    std::string dec_form;
    auto* decompose = app.add_subcommand("decompose", "Lefschetz decomposition of a transverse form");
    decompose->add_option("--n", dec_n, "Complex transverse dimension")->required();
    decompose->add_option("form", dec_form, "Form such as \"e1^e2 - 1/2 e3^e4\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    if (*analyze)
        return run_analyze(an, common);
    if (*generate)
        return run_generate(gen, common);
    if (*recursion) {
        if (rec_n_opt->count() > 0)
            rec.n = rec_n;
        return run_recursion(rec, common);
    }
    if (*star)
        return run_star_check(star_n, star_s, common);
    if (*presets)
        return run_presets(preset_name, preset_out, common);
    if (*decompose)
        return run_decompose(dec_n, dec_form);
    return kExitInvalid;
}
