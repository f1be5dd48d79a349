#include "besforge/generators.hpp"
#include "besforge/random.hpp"

#include <vector>

namespace besforge {

TripartiteLinearSystem group_system(int m)
{
    if (m < 1)
        throw ParameterError("group_system needs m >= 1");
    std::vector<Hyperedge> edges;
    edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            edges.push_back({a, b, (a + b) % m});
    return TripartiteLinearSystem(m, m, m, std::move(edges));
}

RandomLinearResult random_linear(int na, int nb, int nc, int target_edges, std::uint64_t seed)
{
    if (na < 1 || nb < 1 || nc < 1)
        throw ParameterError("random_linear needs positive part sizes");
    if (target_edges < 0)
        throw ParameterError("random_linear needs target_edges >= 0");

    const auto sa = static_cast<std::size_t>(na), sb = static_cast<std::size_t>(nb), sc = static_cast<std::size_t>(nc);
    std::vector<char> ab(sa * sb, 0), ac(sa * sc, 0), bc(sb * sc, 0);
    std::vector<Hyperedge> edges;
    Rng rng(seed);
    int rejections = 0;
    while (static_cast<int>(edges.size()) < target_edges && rejections < random_linear_rejection_limit) {
        const auto a = rng.below(sa), b = rng.below(sb), c = rng.below(sc);
        char & pab = ab[a * sb + b];
        char & pac = ac[a * sc + c];
        char & pbc = bc[b * sc + c];
        if (pab || pac || pbc) {
            ++rejections;
            continue;
        }
        pab = pac = pbc = 1;
        rejections = 0;
        edges.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
    }

    RandomLinearResult result;
    result.requested = target_edges;
    result.achieved = static_cast<int>(edges.size());
    result.system = TripartiteLinearSystem(na, nb, nc, std::move(edges));
    return result;
}

} // namespace besforge
