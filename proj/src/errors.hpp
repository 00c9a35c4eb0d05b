#ifndef TRG_ERRORS_HPP
#define TRG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trg {

// Error taxonomy shared by the whole library.  The C boundary maps each class
// onto a status code.
struct invalid_argument_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search ran out of its node budget: the answer is unknown, not negative.
struct budget_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller invoked an operation outside its contract (e.g. discharging a
// collage that contains K4).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural guarantee the construction relies on failed on a concrete
// instance.  The message carries the serialized instance; this must never be
// swallowed.
struct falsification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace trg

#endif
