// Standalone property-test runner: one line per suite, nonzero exit on any
// failure.  Exhaustive at rank <= 4, seeded-random at rank 5..8.
#include <cstdio>

#include "property_suites.hpp"

int main() {
    bool ok = true;
    for (auto& [name, fn] : cdv::props::all_suites()) {
        cdv::props::Outcome o = fn();
        std::printf("%-24s %s  (%ld checks)%s%s\n", name, o.pass ? "PASS" : "FAIL", o.checks,
                    o.pass ? "" : "  ", o.pass ? "" : o.detail.c_str());
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
