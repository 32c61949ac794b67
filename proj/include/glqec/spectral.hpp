#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "glqec/decoders.hpp"

namespace glqec {

/// Counts N(tau, w) of errors of weight w whose residual error after decoding
/// lies in kernel class tau (packed link coordinates).
class ErrorClassTable {
 public:
  ErrorClassTable(int n, DecoderKind decoder);

  int n() const { return n_; }
  DecoderKind decoder() const { return decoder_; }
  std::uint64_t classes() const { return std::uint64_t{1} << (2 * n_); }
  int max_weight() const { return 4 * n_; }

  std::uint64_t count(std::uint64_t tau, int weight) const {
    return counts_[tau * static_cast<std::uint64_t>(max_weight() + 1) + static_cast<unsigned>(weight)];
  }
  std::uint64_t& count(std::uint64_t tau, int weight) {
    return counts_[tau * static_cast<std::uint64_t>(max_weight() + 1) + static_cast<unsigned>(weight)];
  }

  std::uint64_t total() const;
  ErrorClassTable& operator+=(const ErrorClassTable& other);
  friend bool operator==(const ErrorClassTable&, const ErrorClassTable&) = default;

 private:
  int n_;
  DecoderKind decoder_;
  std::vector<std::uint64_t> counts_;
};

/// Decodes all 2^{4n} errors (2 <= n <= 6), split over `workers` threads.
ErrorClassTable build_error_class_table(int n, DecoderKind decoder, int workers = 1);

/// CSV rows "tau_coords_hex,weight,count" for nonzero counts, after a
/// "# n=<n> decoder=<name>" line.
void save_error_class_table(const ErrorClassTable& table, std::ostream& out);
ErrorClassTable load_error_class_table(std::istream& in);

/// p(tau) = sum_w N(tau,w) p^w (1-p)^{4n-w}.
Eigen::VectorXd transition_probs(const ErrorClassTable& table, double p);

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of 2.
void walsh_hadamard(Eigen::Ref<Eigen::VectorXd> v);

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // indexed by character u
  double lambda2 = 0;
  std::uint64_t lambda2_index = 0;
  bool all_nonnegative = true;
};

/// lambda(u) = sum_tau p(tau) (-1)^{tau.u} by fast transform.
SpectrumResult fourier_spectrum(const Eigen::VectorXd& probs);
/// Same by the O(N^2) character sum.
SpectrumResult fourier_spectrum_direct(const Eigen::VectorXd& probs);

/// Explicit random-walk matrix P_ij = p(tau_i xor tau_j).
Eigen::MatrixXd transition_matrix(const Eigen::VectorXd& probs);
/// Eigenvalues of transition_matrix(probs), ascending. Limited to 2^12 classes.
Eigen::VectorXd dense_eigenvalues(const Eigen::VectorXd& probs);

enum class BitflipVariant { NoQEC, UQEC };

/// (1-2p)^weight, the bitflip eigenvalue of a character of that weight.
double bitflip_character(double p, int weight);
double bitflip_lambda2(double p, BitflipVariant variant);

/// lambda2 of the decoded channel from a table.
double glqec_lambda2(const ErrorClassTable& table, double p);

/// Weight <= 2 truncation of the decoded process (n >= 3).
struct TruncatedLambda2 {
  double raw = 0;          // substochastic second eigenvalue
  double lambda0 = 0;      // 1 - missing_mass
  double value = 0;        // raw / lambda0
  double missing_mass = 0; // exact binomial tail, weight >= 3
  double missing_mass_bound = 0;  // C(4n,3) p^3
};

TruncatedLambda2 truncated_lambda2(int n, double p);

/// Largest n*p with 4np <= (6 eps)^{1/3}.
double truncation_validity_np(double eps);

struct ThresholdResult {
  std::optional<double> p_th;
  double uncertainty = 0;
};

/// 100 points on [0, 0.1) and 100 on [0.1, 0.5].
std::vector<double> reference_grid();

/// First +/- sign change of lambda2(p) - (1-2p) on the grid, linearly
/// interpolated, with half the bracketing spacing as uncertainty.
ThresholdResult mixing_threshold(std::span<const double> grid,
                                 const std::function<double(double)>& lambda2_of_p);
ThresholdResult mixing_threshold(const ErrorClassTable& table, std::span<const double> grid);

/// v(r) = steady + lambda2^r (initial - steady), r = 0..steps.
std::vector<double> estimator_curve(double lambda2, double initial, double steady, int steps);
/// D(r) = D0 lambda2^r, r = 0..steps.
std::vector<double> trace_distance_estimator(double lambda2, double initial_distance, int steps);

}  // namespace glqec
