#include <chrono>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "legdef/jetspace.hpp"

using namespace legdef;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

std::vector<QVec> random_rows(int n, int cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<QVec> rows;
    for (int r = 0; r < n; ++r) {
        QVec row(size_t(cols), Rat(0));
        for (auto& x : row) x = Rat(coef(rng)) / Rat(den(rng));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"row reduction benchmark: serial reference vs OpenMP kernel"};
    int rows = 220, cols = 260, reps = 3;
    unsigned seed = 7;
    app.add_option("--rows", rows, "matrix rows");
    app.add_option("--cols", cols, "matrix columns");
    app.add_option("--reps", reps, "repetitions");
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    std::vector<QVec> m = random_rows(rows, cols, seed);

    double ts = 0, tp = 0;
    Echelon es, ep;
    for (int r = 0; r < reps; ++r) {
        auto a = clk::now();
        es = echelon_serial(m, size_t(cols));
        auto b = clk::now();
        ep = echelon_parallel(m, size_t(cols));
        auto c = clk::now();
        ts += seconds(a, b);
        tp += seconds(b, c);
    }

    bool same = es.rows == ep.rows && es.pivots == ep.pivots;
    std::cout << rows << "x" << cols << " rank " << es.rank() << "\n";
    std::cout << "serial   " << ts / reps << " s/rep\n";
    std::cout << "parallel " << tp / reps << " s/rep\n";
    std::cout << "speedup  " << (tp > 0 ? ts / tp : 0.0) << "\n";
    std::cout << (same ? "results identical" : "MISMATCH between kernels") << "\n";
    return same ? 0 : 1;
}
