#include "deduct/json_io.hpp"

namespace deduct {

ordered_json layout_json(const Layout& layout) {
    ordered_json j = ordered_json::object();
    for (auto& [v, k] : layout.counts()) j[std::to_string(v)] = k;
    return j;
}

ordered_json layout_vertex_array(const Layout& layout) {
    ordered_json j = ordered_json::array();
    for (auto& [v, k] : layout.counts())
        for (int i = 0; i < k; ++i) j.push_back(v);
    return j;
}

ordered_json trace_json(const GameTrace& trace) {
    ordered_json j;
    j["n"] = trace.n;
    j["layout"] = layout_json(trace.layout);
    j["success"] = trace.success;
    j["stages"] = ordered_json::array();
    for (const auto& rec : trace.stages) {
        ordered_json stage;
        stage["index"] = rec.index;
        stage["moves"] = ordered_json::array();
        for (const auto& mv : rec.moves)
            stage["moves"].push_back({{"from", mv.from}, {"to", mv.to}});
        stage["flummoxed"] = rec.flummoxed;
        j["stages"].push_back(std::move(stage));
    }
    j["terminal"] = layout_json(trace.terminal);
    j["protected_final"] = trace.protected_final;
    j["motionless"] = trace.motionless;
    return j;
}

ordered_json bounds_json(const BoundsReport& bounds) {
    ordered_json j;
    j["half_ceil"] = bounds.half_ceil;
    j["min_degree"] = bounds.min_degree;
    j["leaf_bound"] = bounds.leaf_bound ? ordered_json(*bounds.leaf_bound) : ordered_json();
    j["clique_bound"] = bounds.clique_bound;
    j["edge_cover_bound"] = bounds.edge_cover_bound;
    j["lower"] = bounds.lower;
    j["upper"] = bounds.upper;
    return j;
}

ordered_json solve_json(const SolveResult& result, const BoundsReport& bounds) {
    ordered_json j;
    j["d"] = result.d;
    j["witness"] = layout_vertex_array(result.witness);
    j["bounds"] = bounds_json(bounds);
    j["layouts_tested"] = result.layouts_tested;
    return j;
}

ordered_json prune_json(int n, const PruneResult& result) {
    ordered_json j;
    j["n"] = n;
    j["p"] = result.p;
    j["layout"] = layout_json(result.layout);
    j["iterations"] = result.iterations;
    return j;
}

ordered_json orbit_json(int n, const Layout& start, const OrbitReport& report) {
    ordered_json j;
    j["n"] = n;
    j["layout"] = layout_json(start);
    j["sequence"] = ordered_json::array();
    for (const auto& l : report.sequence) j["sequence"].push_back(layout_json(l));
    j["pre_period"] = report.pre_period ? ordered_json(*report.pre_period) : ordered_json();
    j["period"] = report.period ? ordered_json(*report.period) : ordered_json();
    j["all_successful"] = report.all_successful;
    j["failure_index"] =
        report.failure_index ? ordered_json(*report.failure_index) : ordered_json();
    return j;
}

namespace {

const char* reason_name(OrbitCounterexample::Reason reason) {
    switch (reason) {
        case OrbitCounterexample::Reason::UnsuccessfulLayout: return "unsuccessful_layout";
        case OrbitCounterexample::Reason::LongPeriod: return "long_period";
        case OrbitCounterexample::Reason::Truncated: return "truncated";
    }
    return "unknown";
}

}  // namespace

ordered_json survey_json(const OrbitSurvey& survey) {
    ordered_json j;
    j["n"] = survey.n;
    j["k"] = survey.k;
    j["max_iter"] = survey.max_iter;
    j["layouts_enumerated"] = survey.layouts_enumerated;
    j["successful_layout_count"] = survey.successful_layout_count;
    j["max_pre_period"] = survey.max_pre_period;
    j["periods_observed"] = ordered_json::object();
    for (auto& [period, count] : survey.periods_observed)
        j["periods_observed"][std::to_string(period)] = count;
    j["counterexamples"] = ordered_json::array();
    for (const auto& cx : survey.counterexamples) {
        ordered_json c;
        c["layout"] = layout_json(cx.layout);
        c["reason"] = reason_name(cx.reason);
        c["period"] = cx.period ? ordered_json(*cx.period) : ordered_json();
        c["failure_index"] = cx.failure_index ? ordered_json(*cx.failure_index) : ordered_json();
        j["counterexamples"].push_back(std::move(c));
    }
    return j;
}

ordered_json family_json(const FamilyAnswer& answer, int order) {
    static const char* names[] = {"path",         "cycle",     "wheel", "complete",
                                  "star",         "multipartite", "hypercube",
                                  "random-tree"};
    ordered_json j;
    j["family"] = names[static_cast<int>(answer.spec.kind)];
    if (answer.spec.kind == FamilySpec::Kind::Multipartite)
        j["parts"] = answer.spec.parts;
    else if (answer.spec.kind == FamilySpec::Kind::Hypercube)
        j["k"] = answer.spec.k;
    j["n"] = order;
    j["d"] = answer.d;
    j["witness"] = layout_vertex_array(answer.witness);
    return j;
}

}  // namespace deduct
