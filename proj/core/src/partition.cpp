#include "backbone/partition.hpp"

#include <unordered_map>

namespace backbone {

Partition::Partition(const std::vector<std::uint32_t>& assignment) {
    assignment_.resize(assignment.size());
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    dense.reserve(64);
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        auto [it, inserted] = dense.try_emplace(assignment[v], k_);
        if (inserted) ++k_;
        assignment_[v] = it->second;
    }
}

std::vector<NodeId> Partition::subset_sizes() const {
    std::vector<NodeId> sizes(k_, 0);
    for (auto c : assignment_) ++sizes[c];
    return sizes;
}

std::vector<std::vector<NodeId>> Partition::members() const {
    std::vector<std::vector<NodeId>> out(k_);
    for (NodeId v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

}  // namespace backbone
