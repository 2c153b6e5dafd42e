#include "rumor/network.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "rumor/errors.hpp"
#include "rumor/rng.hpp"

namespace rumor {

namespace {

constexpr int kMaxRestarts = 100;
constexpr int kMaxRedrawsPerEdge = 1000;

// Packed undirected edge key for the duplicate check.
inline std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

Network generate_regular(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (k >= n && !(k == 0 && n > 0)) {
        std::ostringstream os;
        os << "cannot build a " << k << "-regular graph on " << n << " nodes";
        throw ConstructionError(os.str());
    }
    if ((static_cast<std::uint64_t>(n) * k) % 2 != 0) {
        std::ostringstream os;
        os << "n*k = " << n << "*" << k << " is odd; degree sum must be even";
        throw ConstructionError(os.str());
    }

    Network net;
    net.n = n;
    net.k = k;
    net.adj.assign(static_cast<std::size_t>(n) * k, 0);
    if (k == 0) return net;

    Rng rng(seed);
    std::vector<std::uint32_t> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * k);
    std::vector<std::uint32_t> degree(n, 0);
    std::unordered_set<std::uint64_t> edges;
    edges.reserve(static_cast<std::size_t>(n) * k / 2);

    for (int restart = 0; restart < kMaxRestarts; ++restart) {
        stubs.clear();
        for (std::uint32_t v = 0; v < n; ++v) {
            for (std::uint32_t j = 0; j < k; ++j) stubs.push_back(v);
        }
        std::fill(degree.begin(), degree.end(), 0u);
        edges.clear();

        bool dead_end = false;
        while (!stubs.empty()) {
            int redraws = 0;
            while (true) {
                if (++redraws > kMaxRedrawsPerEdge) {
                    dead_end = true;
                    break;
                }
                const std::size_t ia = rng.below(stubs.size());
                const std::uint32_t a = stubs[ia];
                stubs[ia] = stubs.back();
                stubs.pop_back();
                const std::size_t ib = rng.below(stubs.size());
                const std::uint32_t b = stubs[ib];
                stubs[ib] = stubs.back();
                stubs.pop_back();

                if (a == b || !edges.insert(edge_key(a, b)).second) {
                    stubs.push_back(a);
                    stubs.push_back(b);
                    continue;
                }
                net.adj[static_cast<std::size_t>(a) * k + degree[a]++] = b;
                net.adj[static_cast<std::size_t>(b) * k + degree[b]++] = a;
                break;
            }
            if (dead_end) break;
        }
        if (!dead_end) return net;
    }
    throw ConstructionError("stub pairing restart budget exhausted");
}

bool is_valid_regular(const Network& net) {
    if (net.adj.size() != static_cast<std::size_t>(net.n) * net.k) return false;
    std::unordered_set<std::uint64_t> edges;
    for (std::uint32_t v = 0; v < net.n; ++v) {
        auto nb = net.neighbors(v);
        for (std::uint32_t u : nb) {
            if (u == v || u >= net.n) return false;
            // duplicate neighbor check within v's list
        }
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (nb[a] == nb[b]) return false;
            }
        }
        for (std::uint32_t u : nb) {
            edges.insert(edge_key(v, u));
        }
    }
    // symmetry: every edge must have been seen from both endpoints, so the
    // number of distinct keys equals n*k/2 only if adjacency is symmetric.
    if (edges.size() != static_cast<std::size_t>(net.n) * net.k / 2) return false;
    for (std::uint32_t v = 0; v < net.n; ++v) {
        for (std::uint32_t u : net.neighbors(v)) {
            auto back = net.neighbors(u);
            if (std::find(back.begin(), back.end(), v) == back.end()) return false;
        }
    }
    return true;
}

} // namespace rumor
