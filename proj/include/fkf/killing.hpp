#pragma once

#include "fkf/derivations.hpp"
#include "fkf/loop_matrix.hpp"

namespace fkf {

/**
 * KillingState: a truncated canonical formal Killing field.
 *
 * Populated lambda-degrees follow the period-6 ladder of the ansatz;
 * explicit zero entries mark the vanishing seeds (g at lambda^0 for X(p^4),
 * p at lambda^0 for X(a^5)).
 */
struct KillingState {
    KillingComponents comps;
    int cycles_done = 0;
    int tower_high_water = 3;

    bool operator==(const KillingState&) const = default;
};

// heuristic floor on the tower bound needed for a run
inline int required_tower(int cycles) { return 6 * cycles + 12; }

// the canonical initial data: s^3, t^3 with g^2 = 0 for X(p^4);
// b^3, c^3 with p^2 = 0 for X(a^5)
KillingState seed(Ansatz);

// One period-6 cycle. X(p^4) order: p, (b,c), f, a, g, (s,t); X(a^5) order:
// f, a, g, (s,t), p, (b,c). The two-unknown rungs solve an exact 2x2 linear
// system pairing the structure equation with the vanishing of one
// determinant / sigma2 lambda-coefficient. Rungs already filled are skipped.
KillingState step(const KillingState&, const Prolongation&);

// seed + `cycles` full cycles + the trailing rungs up to the payload
// coefficient (p@6n+2 for X(p^4); f@6n+2, a@6n+3 for X(a^5)).
// run(ansatz, 0) returns just the seed.
KillingState run(Ansatz, int cycles, const Prolongation&);

} // namespace fkf
