#include "polardisc/errors.hpp"

namespace polardisc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::invalid_descriptor: return "invalid-descriptor";
        case ErrorKind::precision_exhausted: return "precision-exhausted";
        case ErrorKind::insufficient_truncation: return "insufficient-truncation";
        case ErrorKind::infinite_intersection: return "infinite-intersection";
        case ErrorKind::incomplete_semigroup: return "incomplete-semigroup";
        case ErrorKind::internal_error: return "internal-error";
    }
    return "internal-error";
}

int error_exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse_error: return 2;
        case ErrorKind::invalid_descriptor: return 3;
        case ErrorKind::precision_exhausted: return 4;
        case ErrorKind::insufficient_truncation: return 5;
        default: return 1;
    }
}

}  // namespace polardisc
