#ifndef PGRAPHON_RANDOM_INSTANCES_HPP
#define PGRAPHON_RANDOM_INSTANCES_HPP

#include "pgraphon/rng.hpp"
#include "pgraphon/step_graphon.hpp"

namespace pgraphon {

/// Random m-point metric space: symmetric entries drawn in [0.2, 2] and
/// closed under shortest paths, so the triangle inequality holds exactly.
WeightSpacePtr random_space(CounterRng& rng, int points,
                            std::optional<int> cemetery = std::nullopt);

/// Mass vector with entries uniform in [0, scale].
SignedMeasure random_measure(CounterRng& rng, const WeightSpacePtr& space, double scale = 1.0);

/// Entries uniform in [-scale, scale].
SignedMeasure random_signed_measure(CounterRng& rng, const WeightSpacePtr& space,
                                    double scale = 1.0);

/// Normalized random measure.
SignedMeasure random_probability_measure(CounterRng& rng, const WeightSpacePtr& space);

/// Probability graphon with `blocks` equal blocks and i.i.d. random
/// probability cells.
StepGraphon random_probability_graphon(CounterRng& rng, const WeightSpacePtr& space, int blocks);

/// Signed kernel with equal blocks and cells uniform in [-scale, scale].
StepGraphon random_signed_kernel(CounterRng& rng, const WeightSpacePtr& space, int blocks,
                                 double scale = 1.0);

/// Two-community stochastic block model over {0,1}: within-community
/// edge intensity p, across q.
StepGraphon sbm2_graphon(double p, double q);

/// Same model on a space whose point "0" doubles as the cemetery, so the
/// graph samplers accept it.
StepGraphon sbm2_graphon_sampleable(double p, double q);

}  // namespace pgraphon

#endif
