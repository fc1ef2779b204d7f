#include "effalg/reference_suite.hpp"

#include <cstdio>

// One line per acceptance criterion; a criterion passes only when its check
// succeeds inside the time budget.
int main()
{
    effalg::SuiteOptions options;
    int failed = 0;
    for (int id = 1; id <= effalg::kCheckCount; ++id) {
        auto c = effalg::run_check(id, options);
        bool pass = c.passed && c.within_limit();
        if (!pass)
            ++failed;
        std::printf("%s criterion %2d: %s [%.3f s, limit %.0f s] %s\n", pass ? "PASS" : "FAIL", c.id,
            c.title.c_str(), c.seconds, c.limit_seconds, c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", effalg::kCheckCount - failed, effalg::kCheckCount);
    return failed == 0 ? 0 : 1;
}
