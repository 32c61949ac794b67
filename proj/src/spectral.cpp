#include "glqec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "glqec/combinatorics.hpp"
#include "glqec/errors.hpp"
#include "glqec/lattice.hpp"

namespace glqec {

ErrorClassTable::ErrorClassTable(int n, DecoderKind decoder) : n_(n), decoder_(decoder) {
  if (n < 2 || n > 6) {
    throw std::invalid_argument("error-class tables need 2 <= n <= 6, got " + std::to_string(n));
  }
  counts_.assign(classes() * static_cast<std::uint64_t>(max_weight() + 1), 0);
}

std::uint64_t ErrorClassTable::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

ErrorClassTable& ErrorClassTable::operator+=(const ErrorClassTable& other) {
  if (other.n_ != n_ || other.decoder_ != decoder_) {
    throw std::invalid_argument("cannot merge error-class tables of different shape");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

ErrorClassTable build_error_class_table(int n, DecoderKind decoder, int workers) {
  if (n < 2 || n > 6) {
    throw SizeLimitError("error-class enumeration is limited to 2 <= n <= 6");
  }
  workers = std::max(1, workers);
  const std::vector<std::uint64_t> recoveries = recovery_table(decoder, n);
  const KernelBasis kernel(build_parity_check(LatticeSpec(n)));
  const std::uint64_t errors = std::uint64_t{1} << (4 * n);

  std::vector<ErrorClassTable> partial(static_cast<std::size_t>(workers), ErrorClassTable(n, decoder));
  auto work = [&](int w) {
    ErrorClassTable& table = partial[static_cast<std::size_t>(w)];
    const std::uint64_t begin = errors * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t end = errors * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    for (std::uint64_t e = begin; e < end; ++e) {
      const std::uint64_t residual = e ^ recoveries[packed_syndrome(n, e)];
      if (packed_syndrome(n, residual) != 0) {
        throw std::logic_error("decoder returned a recovery with the wrong syndrome");
      }
      ++table.count(kernel.packed_coordinates(residual), std::popcount(e));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  ErrorClassTable out(n, decoder);
  for (const auto& t : partial) out += t;
  return out;
}

void save_error_class_table(const ErrorClassTable& table, std::ostream& out) {
  out << "# n=" << table.n() << " decoder=" << decoder_name(table.decoder()) << "\n";
  out << "tau_coords_hex,weight,count\n";
  for (std::uint64_t tau = 0; tau < table.classes(); ++tau) {
    for (int w = 0; w <= table.max_weight(); ++w) {
      if (const auto c = table.count(tau, w); c != 0) {
        out << std::hex << tau << std::dec << "," << w << "," << c << "\n";
      }
    }
  }
}

ErrorClassTable load_error_class_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# n=", 0) != 0) {
    throw std::invalid_argument("error-class table: missing '# n=... decoder=...' header");
  }
  std::istringstream head(line.substr(4));
  int n = 0;
  std::string decoder_field;
  head >> n >> decoder_field;
  if (decoder_field.rfind("decoder=", 0) != 0) {
    throw std::invalid_argument("error-class table: malformed header");
  }
  ErrorClassTable table(n, parse_decoder(decoder_field.substr(8)));
  std::getline(in, line);  // column names
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tau_hex, weight, count;
    std::getline(row, tau_hex, ',');
    std::getline(row, weight, ',');
    std::getline(row, count, ',');
    const std::uint64_t tau = std::stoull(tau_hex, nullptr, 16);
    const int w = std::stoi(weight);
    if (tau >= table.classes() || w < 0 || w > table.max_weight()) {
      throw std::invalid_argument("error-class table: row out of range: " + line);
    }
    table.count(tau, w) = std::stoull(count);
  }
  return table;
}

Eigen::VectorXd transition_probs(const ErrorClassTable& table, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("transition_probs: p out of [0,1]");
  const int qubits = table.max_weight();
  Eigen::VectorXd weight_prob(qubits + 1);
  for (int w = 0; w <= qubits; ++w) {
    weight_prob(w) = std::pow(p, w) * std::pow(1.0 - p, qubits - w);
  }
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(table.classes()));
  for (std::uint64_t tau = 0; tau < table.classes(); ++tau) {
    double acc = 0;
    for (int w = 0; w <= qubits; ++w) acc += static_cast<double>(table.count(tau, w)) * weight_prob(w);
    probs(static_cast<Eigen::Index>(tau)) = acc;
  }
  return probs;
}

void walsh_hadamard(Eigen::Ref<Eigen::VectorXd> v) {
  const auto size = static_cast<std::uint64_t>(v.size());
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("Walsh-Hadamard transform needs a power-of-two length");
  }
  for (std::uint64_t half = 1; half < size; half <<= 1) {
    for (std::uint64_t block = 0; block < size; block += 2 * half) {
      for (std::uint64_t i = block; i < block + half; ++i) {
        const double a = v(static_cast<Eigen::Index>(i));
        const double b = v(static_cast<Eigen::Index>(i + half));
        v(static_cast<Eigen::Index>(i)) = a + b;
        v(static_cast<Eigen::Index>(i + half)) = a - b;
      }
    }
  }
}

namespace {

SpectrumResult summarize(Eigen::VectorXd eigenvalues) {
  SpectrumResult out;
  for (Eigen::Index u = 1; u < eigenvalues.size(); ++u) {
    const double modulus = std::abs(eigenvalues(u));
    if (modulus > out.lambda2) {
      out.lambda2 = modulus;
      out.lambda2_index = static_cast<std::uint64_t>(u);
    }
  }
  out.all_nonnegative = (eigenvalues.array() >= -1e-15).all();
  out.eigenvalues = std::move(eigenvalues);
  return out;
}

}  // namespace

SpectrumResult fourier_spectrum(const Eigen::VectorXd& probs) {
  Eigen::VectorXd v = probs;
  walsh_hadamard(v);
  return summarize(std::move(v));
}

SpectrumResult fourier_spectrum_direct(const Eigen::VectorXd& probs) {
  const Eigen::Index size = probs.size();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
  for (Eigen::Index u = 0; u < size; ++u) {
    for (Eigen::Index tau = 0; tau < size; ++tau) {
      const bool odd = std::popcount(static_cast<std::uint64_t>(u & tau)) & 1;
      v(u) += odd ? -probs(tau) : probs(tau);
    }
  }
  return summarize(std::move(v));
}

Eigen::MatrixXd transition_matrix(const Eigen::VectorXd& probs) {
  const Eigen::Index size = probs.size();
  Eigen::MatrixXd m(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) m(i, j) = probs(i ^ j);
  }
  return m;
}

Eigen::VectorXd dense_eigenvalues(const Eigen::VectorXd& probs) {
  if (probs.size() > 4096) throw SizeLimitError("dense spectrum limited to 4096 classes");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(transition_matrix(probs),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double bitflip_character(double p, int weight) { return std::pow(1.0 - 2.0 * p, weight); }

double bitflip_lambda2(double p, BitflipVariant variant) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("bitflip_lambda2 needs 0 <= p <= 0.5");
  return 1.0 - 2.0 * (variant == BitflipVariant::NoQEC ? p : p3(p));
}

double glqec_lambda2(const ErrorClassTable& table, double p) {
  return fourier_spectrum(transition_probs(table, p)).lambda2;
}

TruncatedLambda2 truncated_lambda2(int n, double p) {
  if (n < 3) throw std::invalid_argument("truncated lambda2 assumes n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("truncated_lambda2: p out of [0,1]");
  const int qubits = 4 * n;
  auto w = [&](int k) { return std::pow(p, k) * std::pow(1.0 - p, qubits - k); };
  const double pairs = static_cast<double>(binomial(qubits, 2));
  TruncatedLambda2 out;
  out.lambda0 = w(0) + qubits * w(1) + pairs * w(2);
  // 10n weight-2 errors land on 2n classes of mass 3*w2 and 2n of mass 2*w2.
  // The slowest character is -1 on one of the former and two of the latter.
  out.raw = w(0) + qubits * w(1) + (pairs - 10.0 * n) * w(2) + (2.0 * n - 2.0) * 3.0 * w(2) +
            (2.0 * n - 4.0) * 2.0 * w(2);
  out.value = out.raw / out.lambda0;
  double tail = 0;
  for (int k = 3; k <= qubits; ++k) tail += static_cast<double>(binomial(qubits, k)) * w(k);
  out.missing_mass = tail;
  out.missing_mass_bound = static_cast<double>(binomial(qubits, 3)) * p * p * p;
  return out;
}

double truncation_validity_np(double eps) { return std::cbrt(6.0 * eps) / 4.0; }

std::vector<double> reference_grid() {
  std::vector<double> grid;
  grid.reserve(200);
  for (int i = 0; i < 100; ++i) grid.push_back(0.1 * i / 100.0);
  for (int i = 0; i < 100; ++i) grid.push_back(0.1 + 0.4 * i / 99.0);
  return grid;
}

ThresholdResult mixing_threshold(std::span<const double> grid,
                                 const std::function<double(double)>& lambda2_of_p) {
  constexpr double kZero = 1e-12;
  auto sign = [&](double p) {
    const double d = lambda2_of_p(p) - (1.0 - 2.0 * p);
    return std::pair{d > kZero ? 1 : (d < -kZero ? -1 : 0), d};
  };
  std::optional<std::size_t> last_positive;
  double last_positive_gap = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [s, d] = sign(grid[i]);
    if (s > 0) {
      last_positive = i;
      last_positive_gap = d;
    } else if (s < 0 && last_positive) {
      const std::size_t a = *last_positive;
      if (a + 1 == i) {
        const double t = last_positive_gap / (last_positive_gap - d);
        return {grid[a] + t * (grid[i] - grid[a]), (grid[i] - grid[a]) / 2.0};
      }
      // Exact zeros between the bracketing points: report the first one.
      return {grid[a + 1], (grid[a + 2] - grid[a]) / 2.0};
    }
  }
  return {};
}

ThresholdResult mixing_threshold(const ErrorClassTable& table, std::span<const double> grid) {
  return mixing_threshold(grid, [&](double p) { return glqec_lambda2(table, p); });
}

std::vector<double> estimator_curve(double lambda2, double initial, double steady, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(steps, 0)) + 1);
  double power = 1.0;
  for (int r = 0; r <= steps; ++r) {
    out.push_back(steady + power * (initial - steady));
    power *= lambda2;
  }
  return out;
}

std::vector<double> trace_distance_estimator(double lambda2, double initial_distance, int steps) {
  return estimator_curve(lambda2, initial_distance, 0.0, steps);
}

}  // namespace glqec
