#include "corfun/errors.hpp"

#include <cstdlib>

namespace corfun {

long long budget_limit() {
    static long long limit = [] {
        const char* env = std::getenv("CORFUN_BUDGET");
        if (env) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return 2'000'000LL;
    }();
    return limit;
}

long long checked_power(long long base, int exp, const std::string& what) {
    long long limit = budget_limit();
    long long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && acc > limit / base) {
            throw budget_error(what + ": " + std::to_string(base) + "^" +
                               std::to_string(exp) + " exceeds the budget of " +
                               std::to_string(limit));
        }
        acc *= base;
    }
    if (acc > limit) {
        throw budget_error(what + ": " + std::to_string(acc) +
                           " exceeds the budget of " + std::to_string(limit));
    }
    return acc;
}

}  // namespace corfun
