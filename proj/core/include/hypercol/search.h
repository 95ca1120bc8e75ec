// Minimum colour-change antipodal geodesics.
//
// From a fixed start v, a geodesic to the antipode is an ordering of all n
// directions, so the minimum over the n! orderings is a shortest path over
// states (set of directions already flipped, colour of the last edge). The
// state space has 2^(n+1) entries with n transitions each.

#ifndef HYPERCOL_SEARCH_H_
#define HYPERCOL_SEARCH_H_

#include <cstdint>

#include "hypercol/hypercube.h"

namespace hypercol {

struct MinChangesResult {
  Vertex from = 0;
  Vertex to = 0;
  int changes = 0;
  Geodesic witness;  // from -> to with exactly `changes` colour changes
};

// Exact minimum over all geodesics from v to its antipode. The witness is the
// lexicographically smallest optimal direction order.
MinChangesResult MinChangesFrom(const EdgeColouring& c, Vertex v);

// Minimum over all 2^(n-1) antipodal pairs, each searched from its endpoint
// with bit n-1 clear; ties go to the smallest such endpoint.
MinChangesResult MinAntipodalChanges(const EdgeColouring& c);

// Enumerates every pair and every ordering. Same contract and tie-breaks as
// MinAntipodalChanges. Throws std::invalid_argument for n > 7.
MinChangesResult BruteForceMin(const EdgeColouring& c);

struct AdversaryResult {
  EdgeColouring best;
  int value = 0;  // MinAntipodalChanges(best).changes
  int restarts = 0;
};

// Hill climbing over colourings that maximises MinAntipodalChanges: each step
// flips one uniformly chosen edge and keeps the flip unless the score drops.
// The score is the minimum, then the number of antipodal pairs attaining it
// (fewer is better). Restarts from a fresh random colouring after n * 2^n
// steps without a strict score improvement. Deterministic in (n, seed,
// iterations). Requires 3 <= n <= 12.
AdversaryResult AdversarySearch(int n, std::uint64_t seed, std::int64_t iterations);

}  // namespace hypercol

#endif  // HYPERCOL_SEARCH_H_
