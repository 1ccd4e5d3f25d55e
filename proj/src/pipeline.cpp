#include "phee/pipeline.hpp"

namespace phee {

PheeResult run_phee(const Graph& g, const PheeParams& params) {
    const VertexOrdering svet = rank_vertices(g, params.ranking);

    Rng rde_rng = Rng::stream(params.master_seed, 0);
    PheeResult result;
    result.csset = rand_rde(g, svet, params.rde, rde_rng);

    Rng saa_rng = Rng::stream(params.master_seed, 1);
    result.saa = adap_saa(g, result.csset, params.rde.seed_set_size, params.saa,
                          params.rde.activation_probability, saa_rng);
    return result;
}

} // namespace phee
