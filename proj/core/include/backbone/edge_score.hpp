#pragma once

#include <string>
#include <vector>

#include "backbone/types.hpp"

namespace backbone {

/// Per-edge scores indexed by canonical edge id. Higher means the edge is
/// considered more important by the method named in `method`.
struct EdgeScore {
    std::vector<double> values;
    std::string method;

    double operator[](EdgeId e) const { return values[e]; }
    std::size_t size() const { return values.size(); }
};

}  // namespace backbone
