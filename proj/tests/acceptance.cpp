/* Acceptance runner: one criterion per invocation.
 *
 *   acceptance <1..8|7x>
 *
 * Each criterion maps to one verification suite from sl2cv/verify.hpp and
 * prints a single PASS/FAIL line (informational notes first).  Exit status:
 * 0 on pass, 1 on failure, 2 on unknown arguments.
 *
 * Criterion 7 is split: `7` runs the attainable assertions about the
 * order-two example's end components; `7x` runs the recorded dimension claim
 * for its tenth component literally, which the computation refutes — that
 * invocation fails by design and is registered in ctest as WILL_FAIL.
 */

#include "sl2cv/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

namespace {

int run(const std::string& which) {
    using clock = std::chrono::steady_clock;
    sl2cv::VerifyResult r;
    const auto t0 = clock::now();

    if (which == "1")
        r = sl2cv::verify_cheb(40, 24);
    else if (which == "2")
        r = sl2cv::verify_oracle(200);
    else if (which == "3")
        r = sl2cv::verify_ideals();
    else if (which == "4")
        r = sl2cv::verify_gamma_census();
    else if (which == "5")
        r = sl2cv::verify_point_consistency();
    else if (which == "6")
        r = sl2cv::verify_classifier_oracle(200);
    else if (which == "7")
        r = sl2cv::verify_gamma2_edge();
    else if (which == "7x")
        r = sl2cv::verify_gamma2_printed_dim_claim();
    else if (which == "8")
        r = sl2cv::verify_newton_vs_norm();
    else {
        std::fprintf(stderr, "usage: acceptance <1..8|7x>\n");
        return 2;
    }

    const double secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - t0).count();

    for (const std::string& note : r.notes) std::printf("  note: %s\n", note.c_str());
    if (r.pass)
        std::printf("criterion %s: PASS (%s; %lld checks, %.2f s)\n", which.c_str(),
                    r.name.c_str(), r.checks, secs);
    else
        std::printf("criterion %s: FAIL (%s) — %s\n", which.c_str(), r.name.c_str(),
                    r.detail.c_str());
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <1..8|7x>\n");
        return 2;
    }
    try {
        return run(argv[1]);
    } catch (const std::exception& e) {
        std::printf("criterion %s: FAIL (uncaught exception) — %s\n", argv[1], e.what());
        return 1;
    }
}
