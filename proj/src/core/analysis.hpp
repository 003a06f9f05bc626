#pragma once

#include "model_file.hpp"
#include "multivector.hpp"
#include "report.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ksseq {

struct AnalyzeOptions {
    bool timing = false;
};

/// Runs the engine and the verifiers applicable to the model's lambda pattern:
/// every invariant model gets E2 and abutment; S-type adds kernel_d2, mainS,
/// harmonic_S and star_duality; C-type adds mainC and harmonic_C. A bare filtered
/// complex gets abutment only.
RunReport analyze(const Model& model, const AnalyzeOptions& opts = {});

struct StarCheckResult {
    unsigned n = 0;
    unsigned s = 0;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// *(eta_I ^ a) = (-1)^{inv(I,I^c) + (s-|I|) r} eta_{I^c} ^ *_b a for every subset I of
/// {1..s} and every transverse basis monomial a of degree r.
StarCheckResult star_check(unsigned n, unsigned s);

struct IdentityCheck {
    std::string name;
    unsigned n = 0;
    std::size_t cases = 0;
    std::vector<std::string> counterexamples;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// Exhaustive pointwise identities on R^{2n}: *s*s = id, *b*b = (-1)^{r(2n-r)},
/// J*s = *b, <La,b> = <a,Lambda b>, and [Lambda, L] = (n-r) on primitive r-forms.
std::vector<IdentityCheck> operator_identities(unsigned n);

/// Parses a transverse form such as "e1^e2 - 1/2 e3^e4" or "3/2" over R^{2n}.
/// Every term must have the same degree. Throws ParseError.
Multivector parse_form(unsigned n, std::string_view text);

} // namespace ksseq
