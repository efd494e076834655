#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace schwarzkit::plain {

// Second, independently coded route for every inequality family: plain loops,
// textbook formulas, no compensated summation, no cancellation-avoiding
// rearrangements. Inputs are raw entry arrays on purpose so this code shares
// nothing with the main evaluation path. Each function returns the gap
// lhs - rhs of its inequality; callers decide what a violation means.

using Cx = std::complex<double>;
using Vec = std::vector<Cx>;

Cx dot(const Vec& x, const Vec& y);  // sum x_k conj(y_k), naive accumulation
double nrm(const Vec& x);

double schwarz_gap(const Vec& x, const Vec& y);
double projection_gap(const Vec& x, const Vec& y, const std::vector<Vec>& family);
double projection_chain_gap(const Vec& x, const Vec& y, const std::vector<Vec>& family);
double quad_gap(const Vec& x, const Vec& y, const Vec& z);
double chain_upper_gap(const Vec& x, const Vec& y, const Vec& e);
double chain_lower_gap(const Vec& x, const Vec& y, const Vec& e);
double detp_gap(const Vec& x, const Vec& y, const Vec& e, double p, bool real_part);
double det2_gap(const Vec& x, const Vec& y, const Vec& e, bool real_part);

double cos_lower_gap(const Vec& x, const Vec& y, const Vec& z);
double psi_triangle_gap(const Vec& x, const Vec& y, const Vec& z);
double phi_triangle_gap(const Vec& x, const Vec& y, const Vec& z);
double sin_psi_triangle_gap(const Vec& x, const Vec& y, const Vec& z);
double sin_phi_triangle_gap(const Vec& x, const Vec& y, const Vec& z);
double dp_triangle_gap(const Vec& x, const Vec& y, const Vec& z, double p);
double deltap_triangle_gap(const Vec& x, const Vec& y, const Vec& z, double p);

double ntuple_general_p_gap(const Vec& x, const Vec& y, const Vec& e, double p);
double ntuple_general_quad_gap(const Vec& x, const Vec& y, const Vec& e);
double ntuple_basis_p_gap(const Vec& x, const Vec& y, double p);
double ntuple_basis_quad_gap(const Vec& x, const Vec& y);
double ntuple_basis_p2_gap(const Vec& x, const Vec& y);
double ntuple_mean_p_gap(const Vec& x, const Vec& y, double p);
double ntuple_mean_quad_gap(const Vec& x, const Vec& y);

}  // namespace schwarzkit::plain
