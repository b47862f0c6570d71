#include "qaoa.hpp"

#include <cmath>
#include <map>

#include "parallel.hpp"

namespace qx {

std::vector<double> grid_points(double lo, double hi, int n) {
    if (n <= 0) throw Error(ErrorKind::parameter, "grid needs at least one point");
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = lo + i * (hi - lo) / n;
    return pts;
}

EnergyReport energy(const Graph& g, const ParamPoint& theta, Backend backend,
                    int jobs) {
    if (theta.gamma.size() != theta.beta.size())
        throw Error(ErrorKind::parameter, "gamma and beta must have equal length");
    if (theta.p() < 1)
        throw Error(ErrorKind::parameter, "at least one layer required");

    EnergyReport rep;
    rep.m = g.num_edges();
    rep.edge_terms.resize(rep.m);

    if (backend == Backend::fast) {
        if (theta.p() != 1)
            throw Error(ErrorKind::unsupported_depth,
                        "fast backend is defined for p = 1 only");
        std::map<LightconeClass, EdgeExpectation> cache;
        for (int i = 0; i < rep.m; ++i) {
            LightconeClass c = classify_edge(g, g.edges()[i]);
            auto it = cache.find(c);
            if (it == cache.end())
                it = cache.emplace(c, edge_expectation_fast(c, theta)).first;
            rep.edge_terms[i] = it->second;
        }
    } else {
        parallel_for(rep.m, jobs, [&](int i) {
            const Edge e = g.edges()[i];
            Lightcone lc = extract(g, e, theta.p());
            try {
                rep.edge_terms[i] = backend == Backend::statevector
                                        ? edge_expectation_sv(lc, theta)
                                        : edge_expectation_tn(lc, theta,
                                                              derive(Seed{0x746e}, i));
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::capacity)
                    throw Error(ErrorKind::capacity,
                                "edge (" + std::to_string(e.first) + ", " +
                                    std::to_string(e.second) + "): " + err.what());
                throw;
            }
        });
    }

    double sum = 0.0;
    for (const auto& term : rep.edge_terms) sum += term.e;
    rep.energy = rep.m / 2.0 - sum / 2.0;
    return rep;
}

LandscapeGrid landscape(const LightconeClass& c, std::vector<double> gammas,
                        std::vector<double> betas) {
    if (gammas.empty() || betas.empty())
        throw Error(ErrorKind::parameter, "landscape grids must be nonempty");
    for (std::size_t i = 1; i < gammas.size(); ++i)
        if (gammas[i] <= gammas[i - 1])
            throw Error(ErrorKind::parameter, "gamma grid must be ascending");
    for (std::size_t i = 1; i < betas.size(); ++i)
        if (betas[i] <= betas[i - 1])
            throw Error(ErrorKind::parameter, "beta grid must be ascending");

    LandscapeGrid grid;
    grid.values.assign(gammas.size(), std::vector<double>(betas.size(), 0.0));
    for (std::size_t gi = 0; gi < gammas.size(); ++gi)
        for (std::size_t bi = 0; bi < betas.size(); ++bi)
            grid.values[gi][bi] = contribution_fast(c, gammas[gi], betas[bi]);
    grid.gammas = std::move(gammas);
    grid.betas = std::move(betas);
    return grid;
}

}  // namespace qx
