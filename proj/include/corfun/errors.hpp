#ifndef CORFUN_ERRORS_HPP
#define CORFUN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corfun {

// Error categories, aligned with the CLI exit codes:
//   usage (1) is handled by the argument parser itself;
//   validation_error (2): the input violates a documented precondition;
//   budget_error (3): the requested computation exceeds the work budget;
//   invariant_error (4): an internal law failed -- always a bug, never
//   a consequence of bad user input.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check; failure means a theorem we rely on broke.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

// Input/precondition check.
inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

// Work budget for enumeration-heavy operations (number of map tuples,
// matrix cells, ...).  Overridable via the CORFUN_BUDGET environment
// variable; defaults to 2'000'000.
long long budget_limit();

// Checks that base^exp stays within the budget; throws budget_error
// naming the offending quantity otherwise.  Returns base^exp.
long long checked_power(long long base, int exp, const std::string& what);

}  // namespace corfun

#endif
