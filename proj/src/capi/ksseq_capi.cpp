#include "ksseq/ksseq.h"

#include "analysis.hpp"
#include "errors.hpp"
#include "model_file.hpp"
#include "report.hpp"
#include "verifier.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct ksseq_model {
    ksseq::Model model;
};

struct ksseq_report {
    ksseq::RunReport report;
};

namespace {

thread_local std::string last_error;
thread_local int last_error_degree = -1;

ksseq_status fail(ksseq_status status, const std::string& message, int degree = -1)
{
    last_error = message;
    last_error_degree = degree;
    return status;
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
ksseq_status guarded(F&& body)
{
    try {
        return body();
    } catch (const ksseq::ParseError& e) {
        return fail(KSSEQ_ERR_PARSE, e.what());
    } catch (const ksseq::MalformedComplex& e) {
        return fail(KSSEQ_ERR_INVALID_MODEL, e.what());
    } catch (const ksseq::HypothesisViolation& e) {
        return fail(KSSEQ_ERR_HYPOTHESIS, e.what());
    } catch (const ksseq::InconsistentInput& e) {
        return fail(KSSEQ_ERR_INCONSISTENT, e.what(), e.degree());
    } catch (const ksseq::NotFound& e) {
        return fail(KSSEQ_ERR_NOT_FOUND, e.what());
    } catch (const ksseq::IoError& e) {
        return fail(KSSEQ_ERR_IO, e.what());
    } catch (const ksseq::DimensionMismatch& e) {
        return fail(KSSEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const ksseq::FrameMismatch& e) {
        return fail(KSSEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(KSSEQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(KSSEQ_ERR_INTERNAL, "unknown error");
    }
}

#define KSSEQ_REQUIRE(cond, what)                                                 \
    do {                                                                          \
        if (!(cond))                                                              \
            return fail(KSSEQ_ERR_INVALID_ARGUMENT, what);                        \
    } while (0)

} // namespace

extern "C" {

const char* ksseq_version(void)
{
    return "0.1.0";
}

const char* ksseq_status_name(ksseq_status status)
{
    switch (status) {
    case KSSEQ_OK:
        return "ok";
    case KSSEQ_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case KSSEQ_ERR_PARSE:
        return "parse error";
    case KSSEQ_ERR_INVALID_MODEL:
        return "invalid model";
    case KSSEQ_ERR_HYPOTHESIS:
        return "hypothesis violated";
    case KSSEQ_ERR_INCONSISTENT:
        return "inconsistent input";
    case KSSEQ_ERR_NOT_FOUND:
        return "not found";
    case KSSEQ_ERR_IO:
        return "i/o error";
    case KSSEQ_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* ksseq_last_error(void)
{
    return last_error.c_str();
}

int ksseq_last_error_degree(void)
{
    return last_error_degree;
}

void ksseq_string_free(char* s)
{
    std::free(s);
}

ksseq_status ksseq_model_parse(const char* text, ksseq_model** out)
{
    KSSEQ_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = new ksseq_model{ksseq::parse_model(text)};
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_model_load(const char* path, ksseq_model** out)
{
    KSSEQ_REQUIRE(path && out, "null argument");
    return guarded([&] {
        *out = new ksseq_model{ksseq::load_model(path)};
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_model_preset(const char* name, ksseq_model** out)
{
    KSSEQ_REQUIRE(name && out, "null argument");
    return guarded([&] {
        *out = new ksseq_model{ksseq::preset_model(name)};
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_model_generate(uint64_t seed, unsigned n, unsigned s, unsigned max_primitive_dim,
                                  const char* type, ksseq_model** out)
{
    KSSEQ_REQUIRE(type && out, "null argument");
    return guarded([&] {
        ksseq::GenerateOptions opts;
        opts.seed = seed;
        opts.n = n;
        opts.s = s;
        opts.max_primitive_dim = max_primitive_dim;
        opts.type = ksseq::parse_structure_type(type);
        *out = new ksseq_model{ksseq::generate_model(opts)};
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_model_set_lambdas(ksseq_model* model, const char* const* lambdas, size_t count)
{
    KSSEQ_REQUIRE(model && (lambdas || count == 0), "null argument");
    return guarded([&] {
        if (model->model.kind != ksseq::ModelKind::Invariant)
            return fail(KSSEQ_ERR_INVALID_ARGUMENT, "lambdas apply to invariant models only");
        if (count != model->model.s)
            return fail(KSSEQ_ERR_INVALID_ARGUMENT,
                        "expected " + std::to_string(model->model.s) + " lambdas, got " + std::to_string(count));
        std::vector<ksseq::Rational> values;
        for (size_t i = 0; i < count; ++i) {
            KSSEQ_REQUIRE(lambdas[i], "null lambda");
            try {
                values.push_back(ksseq::parse_rational(lambdas[i]));
            } catch (const ksseq::ParseError& e) {
                throw ksseq::ParseError("lambdas[" + std::to_string(i) + "]", e.what());
            }
        }
        model->model.lambdas = std::move(values);
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_model_to_string(const ksseq_model* model, char** out)
{
    KSSEQ_REQUIRE(model && out, "null argument");
    return guarded([&] {
        *out = duplicate(ksseq::serialize_model(model->model));
        return KSSEQ_OK;
    });
}

void ksseq_model_free(ksseq_model* model)
{
    delete model;
}

size_t ksseq_preset_count(void)
{
    static const size_t count = ksseq::preset_names().size();
    return count;
}

const char* ksseq_preset_name(size_t index)
{
    static const std::vector<std::string> names = ksseq::preset_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

ksseq_status ksseq_analyze(const ksseq_model* model, int record_timing, ksseq_report** out)
{
    KSSEQ_REQUIRE(model && out, "null argument");
    return guarded([&] {
        ksseq::AnalyzeOptions opts;
        opts.timing = record_timing != 0;
        *out = new ksseq_report{ksseq::analyze(model->model, opts)};
        return KSSEQ_OK;
    });
}

int ksseq_report_passed(const ksseq_report* report)
{
    return report != nullptr && report->report.passed() ? 1 : 0;
}

unsigned ksseq_report_stable_at(const ksseq_report* report)
{
    return report != nullptr ? report->report.stable_at : 0;
}

ksseq_status ksseq_report_betti(const ksseq_report* report, long long* out, size_t capacity, size_t* count)
{
    KSSEQ_REQUIRE(report && count && (out || capacity == 0), "null argument");
    const auto& b = report->report.betti;
    for (size_t i = 0; i < b.size() && i < capacity; ++i)
        out[i] = b[i];
    *count = b.size();
    return KSSEQ_OK;
}

ksseq_status ksseq_report_to_json(const ksseq_report* report, char** out)
{
    KSSEQ_REQUIRE(report && out, "null argument");
    return guarded([&] {
        *out = duplicate(ksseq::report_to_json(report->report));
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_report_to_text(const ksseq_report* report, char** out)
{
    KSSEQ_REQUIRE(report && out, "null argument");
    return guarded([&] {
        *out = duplicate(ksseq::report_to_text(report->report));
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_report_parse_json(const char* text, ksseq_report** out)
{
    KSSEQ_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = new ksseq_report{ksseq::report_from_json(text)};
        return KSSEQ_OK;
    });
}

int ksseq_report_equal(const ksseq_report* a, const ksseq_report* b)
{
    return a != nullptr && b != nullptr && a->report == b->report ? 1 : 0;
}

void ksseq_report_free(ksseq_report* report)
{
    delete report;
}

ksseq_status ksseq_primitive_betti(const long long* betti, size_t count, unsigned s, unsigned n,
                                   long long* primitive_out, long long* basic_out)
{
    KSSEQ_REQUIRE((betti || count == 0) && primitive_out && basic_out, "null argument");
    return guarded([&] {
        auto r = ksseq::primitive_betti_from_deRham(std::vector<long long>(betti, betti + count), s, n);
        std::copy(r.primitive.begin(), r.primitive.end(), primitive_out);
        std::copy(r.basic.begin(), r.basic.end(), basic_out);
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_basic_betti(const long long* betti, size_t count, unsigned s, long long* basic_out)
{
    KSSEQ_REQUIRE((betti || count == 0) && basic_out, "null argument");
    return guarded([&] {
        auto b = ksseq::basic_betti_from_deRham(std::vector<long long>(betti, betti + count), s);
        std::copy(b.begin(), b.end(), basic_out);
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_star_check(unsigned n, unsigned s, size_t* cases, int* passed, char** counterexample)
{
    KSSEQ_REQUIRE(cases && passed, "null argument");
    return guarded([&] {
        auto r = ksseq::star_check(n, s);
        *cases = r.cases;
        *passed = r.passed() ? 1 : 0;
        if (counterexample)
            *counterexample = r.passed() ? nullptr : duplicate(r.counterexamples.front());
        return KSSEQ_OK;
    });
}

ksseq_status ksseq_decompose(unsigned n, const char* form, char** out)
{
    KSSEQ_REQUIRE(form && out, "null argument");
    KSSEQ_REQUIRE(n <= 8, "n must be at most 8");
    return guarded([&] {
        const auto a = ksseq::parse_form(n, form);
        const auto parts = ksseq::primitive_decompose(a);
        std::ostringstream text;
        for (const auto& part : parts)
            text << "L^" << part.power << " (primitive degree " << part.beta.degree()
                 << "): " << ksseq::to_string(part.beta) << "\n";
        if (parts.empty())
            text << "zero form\n";
        *out = duplicate(text.str());
        return KSSEQ_OK;
    });
}

} // extern "C"
