#include "deduct/dynamics.hpp"

#include <algorithm>

#include "deduct/solver.hpp"

namespace deduct {

int default_orbit_iterations(const Graph& g) { return 4 * g.order(); }

OrbitReport orbit(const Graph& g, const Layout& layout, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("orbit requires max_iter >= 1");
    GameTrace trace = simulate(g, layout);
    if (!trace.success)
        throw UnsuccessfulLayoutError("orbit requires a successful starting layout");

    OrbitReport report;
    report.sequence.push_back(layout);
    std::map<Layout, int> seen{{layout, 0}};

    for (int step = 1; step <= max_iter; ++step) {
        Layout next = trace.terminal;
        report.sequence.push_back(next);
        const int at = static_cast<int>(report.sequence.size()) - 1;
        if (auto it = seen.find(next); it != seen.end()) {
            report.pre_period = it->second;
            report.period = at - it->second;
            return report;
        }
        seen.emplace(next, at);
        trace = simulate(g, next);
        if (!trace.success) {
            report.all_successful = false;
            report.failure_index = at;
            return report;
        }
    }
    return report;  // truncated: no period, no failure
}

ReversibilityCheck check_reversibility(const Graph& g, const Layout& layout) {
    GameTrace first = simulate(g, layout);
    if (!first.success)
        throw UnsuccessfulLayoutError("reversibility requires a successful starting layout");
    GameTrace second = simulate(g, first.terminal);
    ReversibilityCheck check;
    check.intermediate_successful = second.success;
    check.reversible = second.success && second.terminal == layout;
    return check;
}

bool is_reversible(const Graph& g, const Layout& layout) {
    return check_reversibility(g, layout).reversible;
}

namespace {

struct OrbitOutcome {
    bool successful = false;  // of the starting layout
    std::optional<int> pre_period;
    std::optional<int> period;
    std::optional<int> failure_index;
};

OrbitOutcome classify(const Graph& g, Simulator& sim, const Vertex* vs, int k, int max_iter) {
    OrbitOutcome out;
    if (!sim.subset_succeeds(vs, k)) return out;
    out.successful = true;
    Layout start;
    for (int i = 0; i < k; ++i) start.add(vs[i]);
    const OrbitReport report = orbit(g, start, max_iter);
    out.pre_period = report.pre_period;
    out.period = report.period;
    out.failure_index = report.failure_index;
    return out;
}

void merge(OrbitSurvey& survey, const OrbitOutcome& outcome, const Vertex* vs, int k) {
    ++survey.layouts_enumerated;
    if (!outcome.successful) return;
    ++survey.successful_layout_count;
    auto start_layout = [&] {
        Layout l;
        for (int i = 0; i < k; ++i) l.add(vs[i]);
        return l;
    };
    if (outcome.period) {
        ++survey.periods_observed[*outcome.period];
        survey.max_pre_period = std::max(survey.max_pre_period, *outcome.pre_period);
        if (*outcome.period > 2)
            survey.counterexamples.push_back({start_layout(),
                                              OrbitCounterexample::Reason::LongPeriod,
                                              outcome.period, std::nullopt});
    } else if (outcome.failure_index) {
        survey.counterexamples.push_back({start_layout(),
                                          OrbitCounterexample::Reason::UnsuccessfulLayout,
                                          std::nullopt, outcome.failure_index});
    } else {
        survey.counterexamples.push_back({start_layout(),
                                          OrbitCounterexample::Reason::Truncated,
                                          std::nullopt, std::nullopt});
    }
}

OrbitSurvey survey_init(const Graph& g, int k, int max_iter) {
    if (k < 0) throw std::invalid_argument("survey requires k >= 0");
    if (max_iter < 1) throw std::invalid_argument("survey requires max_iter >= 1");
    OrbitSurvey survey;
    survey.n = g.order();
    survey.k = k;
    survey.max_iter = max_iter;
    return survey;
}

}  // namespace

OrbitSurvey survey_orbits(const Graph& g, int k, int max_iter, const SurveyOptions& options) {
    OrbitSurvey survey = survey_init(g, k, max_iter);
    const int n = g.order();
    if (k > n) return survey;

    const int threads = effective_thread_count(options.threads);
    const int chunk = std::max(options.chunk, 1);
    std::vector<Vertex> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;

    std::vector<Vertex> buf;
    buf.reserve(static_cast<size_t>(chunk) * std::max(k, 1));
    std::vector<OrbitOutcome> outcomes(chunk);
    bool exhausted = false;
    while (!exhausted) {
        buf.clear();
        int count = 0;
        while (count < chunk) {
            buf.insert(buf.end(), cur.begin(), cur.end());
            ++count;
            if (k == 0 || !next_combination(cur, n)) {
                exhausted = true;
                break;
            }
        }
        const Vertex* base = buf.data();
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
        {
            Simulator sim(g);
#pragma omp for schedule(dynamic, 8)
            for (int i = 0; i < count; ++i)
                outcomes[i] = classify(g, sim, base + static_cast<size_t>(i) * k, k, max_iter);
        }
#else
        (void)threads;
        {
            Simulator sim(g);
            for (int i = 0; i < count; ++i)
                outcomes[i] = classify(g, sim, base + static_cast<size_t>(i) * k, k, max_iter);
        }
#endif
        for (int i = 0; i < count; ++i)
            merge(survey, outcomes[i], base + static_cast<size_t>(i) * k, k);
    }
    return survey;
}

namespace reference {

OrbitSurvey survey_orbits(const Graph& g, int k, int max_iter) {
    OrbitSurvey survey = survey_init(g, k, max_iter);
    const int n = g.order();
    if (k > n) return survey;

    Simulator sim(g);
    std::vector<Vertex> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        merge(survey, classify(g, sim, cur.data(), k, max_iter), cur.data(), k);
        if (k == 0 || !next_combination(cur, n)) break;
    }
    return survey;
}

}  // namespace reference

}  // namespace deduct
