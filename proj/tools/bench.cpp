// Timing comparison between the parallel kernels and their serial
// reference counterparts. Checks agreement on every case before reporting.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "deduct/dynamics.hpp"
#include "deduct/graph.hpp"
#include "deduct/json_io.hpp"
#include "deduct/solver.hpp"

using namespace deduct;

namespace {

template <class F>
double best_ms(F&& f, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Balanced complete bipartite graphs K_{m,m} have d = 2m-2 but a lower
// bound of only m, so the search exhausts every level in between with no
// early exit. These are the cases where the parallel kernel earns its keep;
// the family graphs above find their witnesses almost immediately.

void bench_solve(const char* name, const Graph& g, int threads, int reps) {
    SolveResult serial, parallel;
    const double t_serial = best_ms([&] { serial = reference::solve(g); }, reps);
    const double t_parallel = best_ms([&] { parallel = solve(g, {threads, 2048}); }, reps);
    const bool same = serial.d == parallel.d && serial.witness == parallel.witness &&
                      serial.layouts_tested == parallel.layouts_tested;
    std::printf("%-28s %10.2f %10.2f %8.2fx   %s\n", name, t_serial, t_parallel,
                t_serial / t_parallel, same ? "match" : "MISMATCH");
    if (!same) std::exit(1);
}

void bench_survey(const char* name, const Graph& g, int k, int threads, int reps) {
    const int cap = default_orbit_iterations(g);
    OrbitSurvey serial, parallel;
    const double t_serial = best_ms([&] { serial = reference::survey_orbits(g, k, cap); }, reps);
    const double t_parallel =
        best_ms([&] { parallel = survey_orbits(g, k, cap, {threads, 1024}); }, reps);
    const bool same = survey_json(serial) == survey_json(parallel);
    std::printf("%-28s %10.2f %10.2f %8.2fx   %s\n", name, t_serial, t_parallel,
                t_serial / t_parallel, same ? "match" : "MISMATCH");
    if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    std::printf("threads: %d (0 = library default)\n\n", threads);
    std::printf("%-28s %10s %10s %9s\n", "case", "serial/ms", "parallel/ms", "speedup");

    bench_solve("solve hypercube Q4", generate(FamilySpec::hypercube(4)), threads, 3);
    bench_solve("solve cycle C18", generate(FamilySpec::cycle(18)), threads, 3);
    bench_solve("solve P4 x P4 grid",
                cartesian_product(generate(FamilySpec::path(4)), generate(FamilySpec::path(4))),
                threads, 3);
    bench_solve("solve P2 x C9",
                cartesian_product(generate(FamilySpec::path(2)), generate(FamilySpec::cycle(9))),
                threads, 3);
    bench_solve("solve Petersen", petersen(), threads, 3);
    bench_solve("solve K9,9", generate(FamilySpec::multipartite({9, 9})), threads, 3);
    bench_solve("solve K11,11", generate(FamilySpec::multipartite({11, 11})), threads, 3);

    bench_survey("survey C12 k=6", generate(FamilySpec::cycle(12)), 6, threads, 3);
    bench_survey("survey P18 k=9", generate(FamilySpec::path(18)), 9, threads, 3);
    bench_survey("survey P20 k=10", generate(FamilySpec::path(20)), 10, threads, 3);
    return 0;
}
