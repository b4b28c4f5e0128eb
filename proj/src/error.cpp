#include "frontal/error.hpp"

namespace frontal {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::spec: return "spec";
        case ErrorKind::unsupported_order: return "unsupported_order";
        case ErrorKind::unsupported_singularity: return "unsupported_singularity";
        case ErrorKind::degenerate_curve: return "degenerate_curve";
        case ErrorKind::dimension: return "dimension";
        case ErrorKind::domain: return "domain";
        case ErrorKind::accuracy: return "accuracy";
        case ErrorKind::frame_construction: return "frame_construction";
        case ErrorKind::pathological_curve: return "pathological_curve";
        case ErrorKind::lift_inconsistency: return "lift_inconsistency";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::endpoint_singular: return "endpoint_singular";
        case ErrorKind::generation: return "generation";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace frontal
