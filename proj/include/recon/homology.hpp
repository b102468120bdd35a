#pragma once

#include "recon/complex.hpp"

namespace recon {

struct PersistenceInterval {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;  // +inf for essential classes
};

struct PersistenceDiagram {
    std::vector<PersistenceInterval> intervals;  // sorted by (dim, birth, death)
    double max_scale = 0.0;                      // largest queryable scale
};

struct BettiQuery {
    int dim = 0;
    double s = 0.0;
    double t = 0.0;  // s <= t
};

// Z/2 persistence by standard column reduction. Intervals are reported for
// dimensions 0..cap-1 (cap-dimensional simplices act only as killers) and
// zero-length pairs are dropped.
PersistenceDiagram compute_persistence(const Filtration& f);

// Rank of H_k(K_s) -> H_k(K_t): intervals with dim k, birth <= s, death > t.
int persistent_betti(const PersistenceDiagram& d, const BettiQuery& q);

// Betti number of a single complex: dim ker d_k - rank d_{k+1} over Z/2.
int betti(const SimplicialComplex& k, int dim);

// Rank of H_k(K) -> H_k(L) for K a subcomplex of L, computed directly from
// a cycle basis of K reduced against the boundaries of L. Independent of
// the persistence reduction by construction; used as its oracle.
int image_rank_oracle(const SimplicialComplex& k, const SimplicialComplex& l, int dim);

}  // namespace recon
