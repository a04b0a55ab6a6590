#pragma once

// The augmented Hessian W = D^2 z + sigma Dz (x) Dz and its determinant by two
// independent routes: LU on the assembled n x n matrix, and the reduction to
// the 3 x 3 matrix of the profile u(x1, x2, eta),
//
//   det W = (u3/eta)^(n-3) det(u_ij + sigma u_i u_j)          (eta > 0)
//   det W = det(top 2x2 block) (alpha P eps^(alpha-2))^(n-2)   (eta = 0).

#include "amcx/family.hpp"
#include "amcx/matkit.hpp"

namespace amcx {

enum class DetRoute { Generic, EtaZeroBlock };

struct AugmentedEval {
  SymMatrix W;
  double det_direct = 0.0;
  double det_reduced = 0.0;
  Jet2 u_jet;
  DetRoute route = DetRoute::Generic;
};

SymMatrix assemble_W(const FamilyParams& params, const EvalPoint& p);

/// The 3 x 3 profile matrix u_ij + sigma u_i u_j at (x1, x2, eta).
SymMatrix profile_matrix(const FamilyParams& params, double x1, double x2, double eta);

double det_reduced(const FamilyParams& params, const EvalPoint& p);
DetRoute reduction_route(const EvalPoint& p);

AugmentedEval evaluate_augmented(const FamilyParams& params, const EvalPoint& p);

/// Scaled matrix obtained from the profile matrix by factoring r^alpha from
/// rows 1-2, eta r^(alpha-2) from row 3 and eta / r^2 from column 3, written
/// out entry by entry. Requires eta > 0.
SymMatrix scaled_matrix(const FamilyParams& params, const EvalPoint& p);

/// (alpha P)^(n-3) eta^2 r^(n alpha - 2n + 2) det(scaled_matrix). Equals
/// det_reduced for eta > 0. The smooth positive factor (alpha P)^(n-3) is 1
/// for n = 3 and is carried by the coefficient functions in general.
double scaled_determinant(const FamilyParams& params, const EvalPoint& p);

/// (u3/eta)^(n-3) (u33 + sigma u3^2): closed form of det of the radial block.
double radial_block_det_formula(const FamilyParams& params, const EvalPoint& p);

/// [(u22 + s u2^2)(u33 + s u3^2) - (u23 + s u2 u3)^2] (u3/eta)^(n-3): closed
/// form of the trailing (n-1) x (n-1) principal minor of W.
double trailing_minor_formula(const FamilyParams& params, const EvalPoint& p);

/// Closed form of det(M_i), the i-th leading minor of the radial block
/// (i = 1 .. n-2): (u3/eta)^i [1 + c sum_{j<i} x_{3+j}^2 eta/u3] with c the
/// rank-one coefficient. Evaluated without dividing by eta.
double radial_leading_minor_formula(const FamilyParams& params, const EvalPoint& p,
                                    std::size_t i);

}  // namespace amcx
