#include "wradius/enclosure.hpp"

namespace wradius {

const char* kind_name(EnclosureKind kind) {
    switch (kind) {
        case EnclosureKind::exact:
            return "exact";
        case EnclosureKind::swept:
            return "swept";
        case EnclosureKind::fastpath:
            return "fastpath";
    }
    return "exact";
}

Enclosure Enclosure::around(double value, double half_width, EnclosureKind kind) {
    Enclosure e;
    e.lo = std::max(value - half_width, 0.0);
    e.hi = value + half_width;
    e.kind = kind;
    return e;
}

bool overlap(const Enclosure& a, const Enclosure& b) {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

}  // namespace wradius
