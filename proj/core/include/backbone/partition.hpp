#pragma once

#include <cstdint>
#include <vector>

#include "backbone/types.hpp"

namespace backbone {

/// Disjoint partition of the node set [0, n) into k non-empty subsets with
/// dense ids [0, k).
class Partition {
public:
    Partition() = default;

    /// Compacts arbitrary subset labels to dense ids in order of first
    /// appearance.
    explicit Partition(const std::vector<std::uint32_t>& assignment);

    std::uint32_t operator[](NodeId v) const { return assignment_[v]; }
    NodeId num_nodes() const { return static_cast<NodeId>(assignment_.size()); }
    std::uint32_t num_subsets() const { return k_; }

    const std::vector<std::uint32_t>& assignment() const { return assignment_; }
    std::vector<NodeId> subset_sizes() const;
    std::vector<std::vector<NodeId>> members() const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::uint32_t k_ = 0;
};

}  // namespace backbone
