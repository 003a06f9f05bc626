#pragma once

#include "spectral.hpp"
#include "verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ksseq {

inline constexpr const char* kReportFormat = "ksseq-report/1";

struct PageCellDim {
    int p = 0;
    int q = 0;
    long long dim = 0;

    friend bool operator==(const PageCellDim&, const PageCellDim&) = default;
};

/// Nonzero cell dimensions of one page, ordered by (p+q, p).
struct PageTable {
    unsigned r = 0;
    std::vector<PageCellDim> cells;
    bool differentials_vanish = true;

    long long dim(int p, int q) const;
    friend bool operator==(const PageTable&, const PageTable&) = default;
};

PageTable page_table(const SpectralPage& page);

struct RunReport {
    std::string model_name;
    std::string model_description;
    std::string kind;                       // "invariant" or "filtered-complex"
    std::optional<std::uint64_t> seed;
    unsigned n = 0;
    unsigned s = 0;
    std::vector<std::string> lambdas;
    std::string structure;                  // "S", "C", "mixed", or "" for a bare complex
    std::optional<bool> hlp;
    std::optional<bool> top_degree_one;     // dims[2n] == 1
    unsigned filtration_length = 0;
    std::vector<PageTable> pages;
    unsigned stable_at = 0;
    std::vector<long long> betti;           // E_infinity totals per degree
    std::vector<long long> cohomology;      // ranks of d, computed directly
    std::vector<VerificationReport> verifications;
    long long timing_us = 0;                // 0 unless timing was requested

    /// No verification failed (hypothesis violations do not count as failures).
    bool passed() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string report_to_json(const RunReport& r);
/// Throws ParseError naming the offending field.
RunReport report_from_json(std::string_view text);
/// Human-readable summary with E_r page grids (q rows descending, p columns).
std::string report_to_text(const RunReport& r);

} // namespace ksseq
