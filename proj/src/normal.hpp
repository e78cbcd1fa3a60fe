#pragma once

namespace dart2 {

/// Standard normal density.
double std_normal_pdf(double x);

/// Upper tail probability P(Z > c) for Z ~ N(0,1), computed via erfc.
/// Absolute error below 1e-15 for |c| <= 8.
double std_normal_sf(double c);

/// Inverse of std_normal_sf on (0,1).
///
/// Uses Acklam's rational approximation for the normal quantile (max
/// relative error about 1.15e-9) followed by two Newton corrections
/// against the erfc-based survival function, which brings the result to
/// full double precision away from the extreme tails.
/// Throws DomainError for q outside (0,1).
double std_normal_sf_inv(double q);

}  // namespace dart2
