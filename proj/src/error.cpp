#include "cuboid/error.hpp"

namespace cuboid {

const char* kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::MalformedInput: return "malformed-input";
        case ErrorKind::UnsupportedDegree: return "unsupported-degree";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Conflict: return "conflict";
        case ErrorKind::UnboundAngle: return "unbound-angle";
        case ErrorKind::NonRationalizable: return "non-rationalizable";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Inapplicable: return "inapplicable";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace cuboid
