#include "nck3/counting.hpp"
#include "nck3/cubic.hpp"
#include "nck3/field.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double seconds(F&& f) {
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    // x1^3 + ... + x6^3 + x1 x2 x3 + x4 x5 x6 unless a cubic file is given.
    const std::string text = "p=2\n1 3 0 0 0 0 0\n1 0 3 0 0 0 0\n1 0 0 3 0 0 0\n1 0 0 0 3 0 0\n"
                             "1 0 0 0 0 3 0\n1 0 0 0 0 0 3\n1 1 1 1 0 0 0\n1 0 0 0 1 1 1\n";
    const nck3::CubicForm form = argc > 1 ? nck3::read_cubic_file(argv[1]) : nck3::parse_cubic(text);
    const int workers = nck3::default_workers();
    std::printf("# workers=%d\n", workers);
    std::printf("# %4s %12s %12s %10s %s\n", "q", "reference_s", "parallel_s", "speedup", "agree");
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const nck3::FieldSpec field = nck3::make_field(form.base_p(), k);
        nck3::BigInt ref, par;
        const double tr = seconds([&] { ref = nck3::count_affine_reference(form, field); });
        const double tp = seconds([&] { par = nck3::count_affine(form, field, workers); });
        std::printf("  %4u %12.4f %12.4f %10.1f %s\n", field.q(), tr, tp, tp > 0 ? tr / tp : 0.0,
                    ref == par ? "yes" : "NO");
        if (ref != par) return EXIT_FAILURE;
    }
    return EXIT_SUCCESS;
}
