#include "combilab/guards.hpp"

#include <cstdlib>
#include <string>

namespace combilab {

EnumGuards EnumGuards::from_env() {
    EnumGuards g;
    if (const char* raw = std::getenv("COMBILAB_MAX_ENUM")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(raw, &used);
            if (used == std::string(raw).size() && v >= 0) {
                g = g.with_size_limit(v);
            }
        } catch (const std::exception&) {
            // unparsable: keep defaults
        }
    }
    return g;
}

EnumGuards EnumGuards::with_size_limit(int limit) const {
    EnumGuards g = *this;
    g.inset_ground = limit;
    g.minpart_total = limit;
    g.marked_total = limit;
    g.exact_large_total = limit;
    return g;
}

}  // namespace combilab
