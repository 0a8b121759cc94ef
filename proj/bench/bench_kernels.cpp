// Benchmark of the OpenMP kernels against the serial reference
// implementations. Every pair is checked for equal output before timing
// is reported, so this doubles as a coarse end-to-end consistency run.
//
//   qrd_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "qrd/reference.hpp"
#include "qrd/subsets.hpp"
#include "qrd/threads.hpp"

using namespace qrd;

namespace {

double seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

double time_best(int repeats, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double start = seconds();
        body();
        best = std::min(best, seconds() - start);
    }
    return best;
}

void report(const char* name, double reference, double serial, double parallel, int threads) {
    std::printf("%-28s reference %9.3fms   kernel(1T) %9.3fms (%5.1fx)   kernel(%dT) %9.3fms (%5.1fx)\n",
                name, reference * 1e3, serial * 1e3, reference / serial, threads, parallel * 1e3,
                reference / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const int threads = max_threads();
    std::printf("repeats: %d, hardware threads: %d\n\n", repeats, threads);

    LinearCode code = build_extended_qr_code(4, 17);

    // --- codeword enumeration -------------------------------------------
    CodewordTable table = enumerate_codewords(code);
    {
        CodewordTable ref = reference::enumerate_codewords(code);
        if (ref.entries() != table.entries()) {
            std::printf("enumeration mismatch\n");
            return 1;
        }
        const double t_ref = time_best(repeats, [&] { reference::enumerate_codewords(code); });
        set_threads(1);
        const double t1 = time_best(repeats, [&] { enumerate_codewords(code); });
        set_threads(threads);
        const double tn = time_best(repeats, [&] { enumerate_codewords(code); });
        report("enumerate 4^9 codewords", t_ref, t1, tn, threads);
    }

    // --- jacobi accumulation --------------------------------------------
    {
        const auto subsets = all_k_subsets(code.n, 3);
        // the reference synthesizes every codeword per subset; time one
        // subset and scale
        const std::uint32_t probe = subsets[subsets.size() / 2];
        if (!(jacobi_polynomial(table, probe) == reference::jacobi_polynomial(code, probe))) {
            std::printf("jacobi mismatch\n");
            return 1;
        }
        const double t_ref_one = time_best(repeats, [&] { reference::jacobi_polynomial(code, probe); });
        set_threads(1);
        const double t1 = time_best(repeats, [&] { jacobi_distinct(table, 3, SubsetMode::AllSubsets); });
        set_threads(threads);
        const double tn = time_best(repeats, [&] { jacobi_distinct(table, 3, SubsetMode::AllSubsets); });
        report("jacobi t=3, 816 subsets", t_ref_one * static_cast<double>(subsets.size()), t1, tn, threads);
    }

    // --- design counting -------------------------------------------------
    {
        BlockMultiset blocks = shell_blocks(table, 13, false);
        DesignVerdict a = verify_design(blocks, 4);
        DesignVerdict b = reference::verify_design(blocks, 4);
        if (a.count_min != b.count_min || a.count_max != b.count_max) {
            std::printf("design counting mismatch\n");
            return 1;
        }
        const double t_ref = time_best(repeats, [&] { reference::verify_design(blocks, 4); });
        set_threads(1);
        const double t1 = time_best(repeats, [&] { verify_design(blocks, 4); });
        set_threads(threads);
        const double tn = time_best(repeats, [&] { verify_design(blocks, 4); });
        report("design count C_13 at t=4", t_ref, t1, tn, threads);
    }

    // --- harmonic enumerator ----------------------------------------------
    {
        auto orbits = orbits_on_k_subsets(psl2(17), 3);
        InvariantHarmonicBasis basis = invariant_harmonic_basis(orbits);
        const SubsetFunction& f = basis.functions.front();
        HarmonicEnumerator a = harmonic_weight_enumerator(table, f);
        HarmonicEnumerator b = reference::harmonic_weight_enumerator(table, f);
        if (a.coefficients != b.coefficients) {
            std::printf("harmonic enumerator mismatch\n");
            return 1;
        }
        const double t_ref = time_best(repeats, [&] { reference::harmonic_weight_enumerator(table, f); });
        set_threads(1);
        const double t1 = time_best(repeats, [&] { harmonic_weight_enumerator(table, f); });
        set_threads(threads);
        const double tn = time_best(repeats, [&] { harmonic_weight_enumerator(table, f); });
        report("harmonic enumerator k=3", t_ref, t1, tn, threads);
    }

    return 0;
}
