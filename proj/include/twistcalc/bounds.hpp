#pragma once

// Closed-form constants from the length and systole estimates.  All inputs
// are checked; a value outside its range raises DomainError.

#include <utility>

namespace twistcalc {

/// e^(2d): length distortion after Teichmueller distance d >= 0.
double wolpert_factor(double d);

/// log 2 / (12h - 12), h >= 2.
double penner_bound(long h);

/// 2 log 2 / (12h - 12), h >= 2.
double eppa_systole_bound(long h);

/// 63 (h - 1) (1 + e^(16 mu)), h >= 2, mu >= 1.
double lmax(long h, long mu);

/// 2 asinh(1 / sinh(l / 2)), l > 0.
double collar_partner(double l);

/// (K_{5,1,2}, K_{5,2,1}) with
/// K_{5,1,2} = 1/2 log(K1 mu1 / asinh(1 / sinh(K1 mu2))).
std::pair<double, double> k5_constants(double k1, long mu1, long mu2);

/// (max(|log(eps1/eps2)| - 4, 0), |log(eps1/eps2)| + 4), eps in (0, 2].
std::pair<double, double> cusp_distance_bracket(double eps1, double eps2);

}  // namespace twistcalc
