#pragma once

#include <array>
#include <string>
#include <vector>

#include "detrees/polynomial.hpp"
#include "detrees/shape.hpp"
#include "detrees/weighting.hpp"

namespace detrees {

/// A presentation relation: linear l(u;i,j,k) = x[u,i]y[j,k] - x[u,j]y[i,k] +
/// x[u,k]y[i,j], or Plucker p(i,j,k,l) = y[i,j]y[k,l] - y[i,k]y[j,l] +
/// y[i,l]y[j,k], with the structural zeros of the shape substituted.
struct Relation {
    enum class Kind { Linear, Plucker } kind;
    int u = 0;               // 1 or 2 for linear relations
    std::array<int, 4> idx;  // i<j<k (linear, idx[3] unused) or i<j<k<l
    Polynomial poly;

    std::string name() const;
};

/// All nonzero l(u;i,j,k), u in {1,2}, i<j<k, deduplicated up to sign.
std::vector<Relation> linear_relations(const Shape& sh);
/// All nonzero p(i,j,k,l), i<j<k<l, deduplicated up to sign.
std::vector<Relation> plucker_relations(const Shape& sh);

/// omega on R[t]: x[1,j] -> 1, x[2,j] -> j, t -> 1.
/// pi on S: x[1,j] -> 1, x[2,j] -> j, y[i,j] -> j+2.
struct ShapeWeights {
    Weighting omega;
    Weighting pi;
};
ShapeWeights weights(const Shape& sh);

}  // namespace detrees
