// Serial reference vs OpenMP kernels: overlay recursion, juggling DP, and the
// cross-check sweep.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "barcount/crosscheck.hpp"
#include "barcount/fiber.hpp"
#include "barcount/juggling.hpp"

using namespace barcount;

namespace {

double time_ms(const std::function<void()>& work, int runs) {
    const auto t0 = std::chrono::high_resolution_clock::now();
    for (int r = 0; r < runs; ++r) work();
    const auto t1 = std::chrono::high_resolution_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / runs;
}

void compare(const std::string& name, const std::function<std::string(Execution)>& kernel, int runs) {
    std::string serial_result, parallel_result;
    const double serial = time_ms([&] { serial_result = kernel(Execution::serial); }, runs);
    const double parallel = time_ms([&] { parallel_result = kernel(Execution::parallel); }, runs);
    std::cout << name << "\n  serial   " << serial << " ms\n  parallel " << parallel << " ms ("
              << omp_get_max_threads() << " threads, speedup " << serial / parallel << ")\n"
              << "  result   " << serial_result << (serial_result == parallel_result ? "" : "  MISMATCH")
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const int runs = argc > 1 ? std::atoi(argv[1]) : 3;

    const BettiCurve wide{6, 9, 11, 12, 12, 11, 9, 6};
    compare("count_barcodes " + to_string(wide),
            [&](Execution e) { return count_barcodes(wide, {.execution = e}).str(); }, runs);

    const BettiCurve tall{14, 20, 22, 20, 14};
    compare("count_barcodes " + to_string(tall),
            [&](Execution e) { return count_barcodes(tall, {.execution = e}).str(); }, runs);

    const BettiCurve juggled{4, 6, 7, 6, 4};
    const JugglingState start(differential(juggled).entries);
    compare("count_sequences " + to_string(juggled),
            [&](Execution e) { return count_sequences(start, JugglingState{}, juggled.size(), e).str(); },
            runs);

    const auto grid = curve_grid(1, 4, 3);
    compare("crosscheck sweep n<=4 entries<=3 (" + std::to_string(grid.size()) + " curves)",
            [&](Execution e) {
                std::size_t ok = 0;
                for (const auto& row : crosscheck_grid(grid, e)) ok += row.passed();
                return std::to_string(ok) + " passed";
            },
            1);
    return 0;
}
