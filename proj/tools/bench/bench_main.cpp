// Compares the OpenMP elimination/multiplication kernels against their
// serial reference twins on random exact matrices, checking that both give
// identical results while timing them.

#include <nw/exact/linalg.hpp>
#include <nw/exact/matrix.hpp>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <iostream>
#include <random>

using nw::exact::CycNumber;
using nw::exact::Matrix;
using nw::exact::make_rational;

namespace {

Matrix random_matrix(size_t n, unsigned root_order, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<long> pow(0, root_order - 1);
    Matrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            CycNumber v(make_rational(num(rng), den(rng)));
            if (root_order > 1) v *= CycNumber::zeta(root_order, pow(rng));
            m.at(r, c) = v;
        }
    return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int k = 0; k < reps; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, size_t n, double par_ms, double ser_ms, bool match) {
    std::cout << name << "  n=" << n << "  parallel " << par_ms << " ms  serial " << ser_ms << " ms  speedup "
              << (par_ms > 0 ? ser_ms / par_ms : 0.0) << "x  results " << (match ? "match" : "DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel benchmark: OpenMP vs serial reference"};
    size_t mul_n = 64;
    size_t elim_n = 40;
    unsigned root = 4;
    int reps = 3;
    app.add_option("--mul-size", mul_n, "matrix side for the multiplication kernel");
    app.add_option("--elim-size", elim_n, "matrix side for the elimination kernel");
    app.add_option("--root", root, "cyclotomic order of the random entries (1 = rational)");
    app.add_option("--reps", reps, "repetitions; the best time is reported");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n";
#endif

    std::mt19937_64 rng(20260816);

    {
        const Matrix a = random_matrix(mul_n, root, rng);
        const Matrix b = random_matrix(mul_n, root, rng);
        Matrix par(1, 1), ser(1, 1);
        const double par_ms = time_ms([&] { par = a * b; }, reps);
        const double ser_ms = time_ms([&] { ser = nw::exact::ref::multiply(a, b); }, reps);
        report("multiply   ", mul_n, par_ms, ser_ms, par == ser);
    }

    {
        Matrix m = random_matrix(elim_n, root, rng);
        // Plant a rank deficiency so the kernel extraction path is exercised.
        for (size_t c = 0; c < elim_n; ++c) m.at(elim_n - 1, c) = m.at(0, c) + m.at(1, c);
        nw::exact::RankKernel par, ser;
        const double par_ms = time_ms([&] { par = nw::exact::rank_kernel(m); }, reps);
        const double ser_ms = time_ms([&] { ser = nw::exact::ref::rank_kernel(m); }, reps);
        report("rank_kernel", elim_n, par_ms, ser_ms,
               par.rank == ser.rank && par.kernel == ser.kernel && par.pivot_cols == ser.pivot_cols);
    }

    return 0;
}
