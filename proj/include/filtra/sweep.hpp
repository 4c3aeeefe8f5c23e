#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string_view>
#include <vector>

#include "filtra/checks.hpp"
#include "filtra/report.hpp"

namespace filtra {

enum class CheckKind { stab2, stab3, lemmas, minimality };

std::string_view check_kind_name(CheckKind k);

struct SweepConfig {
    int n = 0;
    /// ν for the slight-set lemmas.
    std::uint64_t nu = 2;
    std::set<CheckKind> checks{CheckKind::stab2, CheckKind::stab3, CheckKind::lemmas, CheckKind::minimality};
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned jobs = 1;
    /// Required for n = 5 and for lemma/minimality checks beyond n = 3.
    bool allow_large = false;
    bool timing = false;
    /// Receives a coarse progress line per finished tau when set.
    std::ostream* progress = nullptr;
};

struct SweepResult {
    /// Sorted by report_order.
    std::vector<CheckReport> reports;
    nlohmann::json summary;
};

/// Runs the configured checks over every pair σ ⊆ τ of topologies on n
/// points.  Reports and summary do not depend on the number of jobs.
SweepResult sweep(const SweepConfig& config);

/// Evaluates the theorem conclusions with `dropped` removed from the
/// hypotheses over every pair σ ⊆ τ and keeps only failing reports.
SweepResult search_counterexample(const SweepConfig& config, Hypothesis dropped);

/// Largest n for lemma and minimality sweeps without allow_large.
inline constexpr int kMaxLemmaSweep = 3;

} // namespace filtra
