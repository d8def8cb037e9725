#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "deduct/engine.hpp"

namespace deduct {

/// The sequence L, L*, L**, ... of repeated terminal layouts, stopped at
/// the first repeat (cycle found), the first unsuccessful layout, or the
/// iteration cap. When a cycle is found the sequence ends with the repeat
/// of sequence[pre_period], and period is the cycle length.
struct OrbitReport {
    std::vector<Layout> sequence;
    std::optional<int> pre_period;
    std::optional<int> period;
    bool all_successful = true;
    std::optional<int> failure_index;  // position of the unsuccessful layout
};

/// Default iteration cap for orbit walks: 4n.
int default_orbit_iterations(const Graph& g);

OrbitReport orbit(const Graph& g, const Layout& layout, int max_iter);

struct ReversibilityCheck {
    bool reversible = false;
    bool intermediate_successful = false;  // is L* itself successful?
};

/// L is reversible when L** is multiset-equal to L. An unsuccessful L* makes
/// the check false rather than an error; the initial layout must be
/// successful.
ReversibilityCheck check_reversibility(const Graph& g, const Layout& layout);
bool is_reversible(const Graph& g, const Layout& layout);

struct OrbitCounterexample {
    enum class Reason { UnsuccessfulLayout, LongPeriod, Truncated };
    Layout layout;  // the starting layout whose orbit misbehaved
    Reason reason = Reason::UnsuccessfulLayout;
    std::optional<int> period;
    std::optional<int> failure_index;
};

/// Aggregate orbit behaviour over every standard layout of a given size.
/// Orbits that reach an unsuccessful layout, close with period > 2, or hit
/// the cap are collected as counterexamples; the expected picture (period
/// 1 or 2 everywhere) leaves the list empty.
struct OrbitSurvey {
    int n = 0;
    int k = 0;
    int max_iter = 0;
    std::uint64_t layouts_enumerated = 0;
    std::uint64_t successful_layout_count = 0;
    int max_pre_period = 0;
    std::map<int, std::uint64_t> periods_observed;  // period -> orbit count
    std::vector<OrbitCounterexample> counterexamples;
};

struct SurveyOptions {
    int threads = 0;  // 0: DEDUCT_THREADS env, else all available
    int chunk = 1024;
};

/// Run orbit from every successful k-subset layout and aggregate. The
/// result, including counterexample order, is independent of the thread
/// count: layouts are evaluated in batches and merged in enumeration order.
OrbitSurvey survey_orbits(const Graph& g, int k, int max_iter,
                          const SurveyOptions& options = {});

namespace reference {

/// Single-threaded counterpart of deduct::survey_orbits; equal results.
OrbitSurvey survey_orbits(const Graph& g, int k, int max_iter);

}  // namespace reference

}  // namespace deduct
