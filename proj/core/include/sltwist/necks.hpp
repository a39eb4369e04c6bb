#pragma once

#include "sltwist/immersion.hpp"
#include "sltwist/periods.hpp"

namespace sltwist {

struct NeckComparison {
    int waist_index;
    int waist_type;       // 2: second factor pinches (and every p = 1 waist), 1: first factor
    int catenoid_dim;     // n - 1 for p = 1, q for type 2, p for type 1
    double t_waist;
    double beta;          // |w_c(t_waist)| from the trajectory
    double beta_extrema;  // sqrt(y_min) or sqrt(1 - y_max) from the extrema solver
    CMat rescale_frame;   // W
    double det_W;         // real part; W has determinant -1
    double window;
    double max_error;     // sup over [-b, b] of |z(t~) - z_0(t~)|
};

// z(t~) = e^{i pi / 2m} w_c(t_w + s beta^{2-m} t~) / w_c(t_w), compared with the unit catenoid in C^m.
// s = +1 at waists of the second factor, -1 at waists of the first (where the rescaled
// time runs backwards). Waist indices follow waists_and_bulges.
NeckComparison neck_rescale(const AdmissiblePair& pr, double tau, int waist_index, double b, int samples = 401,
                            const Tolerances& tol = {});

}  // namespace sltwist
