#ifndef RUMOR_NETWORK_HPP
#define RUMOR_NETWORK_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace rumor {

/// A finite k-regular simple graph. Adjacency is stored flat: node v's
/// neighbors occupy adj[v*k .. v*k+k).
struct Network {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> adj;

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {adj.data() + static_cast<std::size_t>(v) * k, k};
    }
};

/// Generate a random k-regular simple graph by stub pairing: stubs are paired
/// uniformly at random, a draw that would create a self-loop or duplicate
/// edge is put back and redrawn, and if no valid pair can be found the whole
/// pairing restarts from scratch. Throws ConstructionError when n*k is odd,
/// k >= n, or the restart budget is exhausted.
Network generate_regular(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Check the Network invariants (degree, symmetry, simplicity); used by tests
/// and after construction in debug paths.
bool is_valid_regular(const Network& net);

} // namespace rumor

#endif
