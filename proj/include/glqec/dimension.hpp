#pragma once

#include <Eigen/Core>

#include "glqec/bigint.hpp"

namespace glqec {

/// Flux-configuration adjacency matrix A(d), (2d-1) x (2d-1).
///
/// Nodes are the Gauss's-law-allowed (incoming, outgoing) flux pairs around an
/// electron site, ordered by (incoming, outgoing) ascending; entry (row, col)
/// is 1 when the positron site between them admits (col.outgoing,
/// row.incoming). A(2) is written out explicitly and A(d+1) is grown from A(d)
/// by appending the two configurations of the new top flux value.
Eigen::MatrixXi adjacency_matrix(int d);

/// Same construction with d-modular Gauss's law on fluxes 0..d-1.
Eigen::MatrixXi modular_adjacency_matrix(int d);

/// Exact trace of a^power.
BigInt trace_of_power(const Eigen::MatrixXi& a, int power);

enum class DimensionLaw { NonPeriodicInteger, Modular };

/// Dimension of the physical subspace for n physical sites and gauge-field
/// dimension d.
BigInt physical_dimension(int n, int d, DimensionLaw law);

/// Lucas number L(k): L(0)=2, L(1)=1.
BigInt lucas(int k);

/// Ratio of periodic to non-periodic physical dimensions (binary gauge
/// field), 2^{2n} / L(2n). The log form stays finite for any n.
double log_dimension_gap_ratio(int n);
double dimension_gap_ratio(int n);
/// ratio^{1/n}; tends to 8/(3+sqrt 5).
double dimension_gap_growth_per_site(int n);

/// True when value = m^k for integers m >= 2, k >= 2 (1 counts as 1^k).
bool is_perfect_power(const BigInt& value);

}  // namespace glqec
