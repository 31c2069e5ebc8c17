#include "eqlines/search.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace eqlines {

namespace {

constexpr std::size_t kPatternChunks = 256;
constexpr std::size_t kSubsetChunks = 512;

class ProgressCounter {
 public:
  ProgressCounter(const SearchOptions& options, std::uint64_t total) : callback_(options.progress), total_(total) {}

  void add(std::uint64_t n) {
    const auto done = done_.fetch_add(n) + n;
    if (callback_) {
      std::lock_guard lock(mutex_);
      callback_(done, total_);
    }
  }

 private:
  const std::function<void(std::uint64_t, std::uint64_t)>& callback_;
  std::uint64_t total_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mutex_;
};

// Everything the per-pattern test needs, all in exact integers.
//
// For a sign vector s on the basis, the candidate has basis coordinates
// x = 16 A s / D (A = adj(Gram(B)), D = det). Then
//   <w, w>   = 256 s^T A s / D          must equal 80   <=> 16 q = 5 D
//   <w, v_j> = 16 (M_j A s) / D         must equal +-16 <=> y_j = +-D
// with q = s^T A s and y = C s, C = M A, M the Gram block (others x basis).
struct PatternSystem {
  std::size_t r = 0;
  std::size_t others = 0;
  Integer det;
  Integer five_det;
  std::vector<Integer> adj;          // r x r
  std::vector<Integer> twice_adj;    // r x r, column-major for updates
  std::vector<Integer> coupled;      // others x r
  std::vector<Integer> twice_coupled;  // r x others, column-major for updates
  bool exact_norm = true;            // false: allow a component orthogonal to the span
};

bool accepts(const PatternSystem& ps, const std::vector<Integer>& y, const Integer& q) {
  for (const auto& yj : y) {
    if (mpz_cmpabs(yj.get_mpz_t(), ps.det.get_mpz_t()) != 0) return false;
  }
  const Integer sixteen_q = 16 * q;
  return ps.exact_norm ? sixteen_q == ps.five_det : sixteen_q <= ps.five_det;
}

ExtendibilityWitness make_witness(const LineSystem& system, const std::vector<std::size_t>& basis, const PatternSystem& ps,
                                  std::uint64_t pattern, const std::vector<int>& signs) {
  ExtendibilityWitness w;
  w.pattern = pattern;
  w.signs = signs;
  w.basis_coords.assign(ps.r, Rational(0));
  for (std::size_t i = 0; i < ps.r; ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < ps.r; ++k) acc += ps.adj[i * ps.r + k] * signs[k];
    w.basis_coords[i] = Rational(16 * acc, ps.det);
    w.basis_coords[i].canonicalize();
  }
  w.coords.assign(kCodeLength, Rational(0));
  for (std::size_t i = 0; i < ps.r; ++i) {
    for (std::size_t c = 0; c < kCodeLength; ++c) w.coords[c] += w.basis_coords[i] * system.vectors[basis[i]].coords[c];
  }
  w.span_norm_sq = 0;
  for (const auto& c : w.coords) w.span_norm_sq += c * c;
  w.orthogonal_norm_sq = Rational(kScaledNorm) - w.span_norm_sq;

  // Re-check from the coordinates, independently of the adjugate bookkeeping.
  if (sgn(w.orthogonal_norm_sq) < 0 || (ps.exact_norm && sgn(w.orthogonal_norm_sq) != 0)) {
    throw std::logic_error("check_extendibility: accepted pattern has the wrong norm");
  }
  for (const auto& v : system.vectors) {
    Rational ip = 0;
    for (std::size_t c = 0; c < kCodeLength; ++c) ip += w.coords[c] * v.coords[c];
    if (abs(ip) != kScaledAngle) throw std::logic_error("check_extendibility: accepted pattern is not at angle 1/5");
  }
  return w;
}

std::vector<int> signs_of(std::uint64_t pattern, std::size_t r) {
  const std::uint64_t gray = pattern ^ (pattern >> 1);
  std::vector<int> s(r);
  for (std::size_t k = 0; k < r; ++k) s[k] = ((gray >> k) & 1U) != 0 ? -1 : 1;
  return s;
}

}  // namespace

std::vector<std::size_t> greedy_basis(const LineSystem& system) {
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < system.size(); ++i) {
    IntMatrix trial(basis.size() + 1, kCodeLength);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t c = 0; c < kCodeLength; ++c) trial(b, c) = system.vectors[basis[b]].coords[c];
    }
    for (std::size_t c = 0; c < kCodeLength; ++c) trial(basis.size(), c) = system.vectors[i].coords[c];
    if (rank(trial) == basis.size() + 1) basis.push_back(i);
  }
  return basis;
}

ExtendibilityReport check_extendibility(const LineSystem& system, const SearchOptions& options,
                                        std::optional<std::size_t> ambient_dim) {
  ExtendibilityReport report;
  report.basis = greedy_basis(system);
  const std::size_t r = report.basis.size();
  report.ambient_dim = ambient_dim.value_or(r);
  if (report.ambient_dim < r) throw std::invalid_argument("check_extendibility: ambient dimension below the rank of the system");
  if (r == 0) throw std::invalid_argument("check_extendibility: empty system");
  if (r > 40) throw std::invalid_argument("check_extendibility: 2^rank patterns is out of reach");
  for (const auto& v : system.vectors) {
    if (dot(v.coords, v.coords) != kScaledNorm) throw std::invalid_argument("check_extendibility: member norm is not 80");
  }

  IntMatrix gram(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) gram(a, b) = scaled_inner(system.vectors[report.basis[a]], system.vectors[report.basis[b]]);
  }

  PatternSystem ps;
  ps.r = r;
  ps.exact_norm = report.ambient_dim == r;
  Adjugate adj;
  try {
    adj = adjugate(gram);
  } catch (const SingularMatrixError&) {
    throw std::logic_error("check_extendibility: Gram matrix of the basis is singular");
  }
  // adj must invert the Gram matrix; multiply back against exact solves.
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Rational> unit(r, Rational(0));
    unit[k] = 1;
    const auto col = solve_rational(gram, unit);
    for (std::size_t i = 0; i < r; ++i) {
      if (col[i] * adj.determinant != adj.adjugate(i, k)) throw std::logic_error("check_extendibility: adjugate mismatch");
    }
  }
  ps.det = adj.determinant;
  ps.five_det = 5 * ps.det;
  report.gram_determinant = ps.det;
  ps.adj.resize(r * r);
  ps.twice_adj.resize(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      ps.adj[i * r + k] = adj.adjugate(i, k);
      ps.twice_adj[k * r + i] = 2 * adj.adjugate(i, k);
    }
  }

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (std::find(report.basis.begin(), report.basis.end(), i) == report.basis.end()) others.push_back(i);
  }
  ps.others = others.size();
  ps.coupled.assign(ps.others * r, Integer(0));
  ps.twice_coupled.assign(ps.others * r, Integer(0));
  for (std::size_t j = 0; j < ps.others; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      Integer acc = 0;
      for (std::size_t b = 0; b < r; ++b) {
        acc += scaled_inner(system.vectors[others[j]], system.vectors[report.basis[b]]) * ps.adj[b * r + k];
      }
      ps.coupled[j * r + k] = acc;
      ps.twice_coupled[k * ps.others + j] = 2 * acc;
    }
  }

  const std::uint64_t total = std::uint64_t{1} << r;
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kPatternChunks, total));
  std::vector<std::vector<ExtendibilityWitness>> found(chunks);
  ProgressCounter progress(options, total);

  detail::run_chunks(chunks, options.jobs, [&](std::size_t chunk) {
    const auto [lo, hi] = detail::chunk_bounds(total, chunks, chunk);
    if (lo == hi) return;
    std::vector<int> s = signs_of(lo, r);
    std::vector<Integer> z(r), y(ps.others);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) z[i] += ps.adj[i * r + k] * s[k];
    }
    for (std::size_t j = 0; j < ps.others; ++j) {
      for (std::size_t k = 0; k < r; ++k) y[j] += ps.coupled[j * r + k] * s[k];
    }
    Integer q = 0;
    for (std::size_t k = 0; k < r; ++k) q += z[k] * s[k];

    for (std::uint64_t p = lo; p < hi; ++p) {
      if (p != lo) {
        // Gray code: pattern p differs from p-1 in exactly one sign.
        const auto k = static_cast<std::size_t>(std::countr_zero(p));
        const int old = s[k];
        // q' = q + 2 delta z_k + delta^2 A_kk with delta = -2 old
        q -= 4 * old * z[k];
        q += 4 * ps.adj[k * r + k];
        const Integer* dz = &ps.twice_adj[k * r];
        const Integer* dy = &ps.twice_coupled[k * ps.others];
        if (old > 0) {
          for (std::size_t i = 0; i < r; ++i) mpz_sub(z[i].get_mpz_t(), z[i].get_mpz_t(), dz[i].get_mpz_t());
          for (std::size_t j = 0; j < ps.others; ++j) mpz_sub(y[j].get_mpz_t(), y[j].get_mpz_t(), dy[j].get_mpz_t());
        } else {
          for (std::size_t i = 0; i < r; ++i) mpz_add(z[i].get_mpz_t(), z[i].get_mpz_t(), dz[i].get_mpz_t());
          for (std::size_t j = 0; j < ps.others; ++j) mpz_add(y[j].get_mpz_t(), y[j].get_mpz_t(), dy[j].get_mpz_t());
        }
        s[k] = -old;
      }
      if (accepts(ps, y, q)) found[chunk].push_back(make_witness(system, report.basis, ps, p, s));
    }
    progress.add(hi - lo);
  });

  report.patterns_examined = total;
  for (auto& chunk : found) {
    for (auto& w : chunk) report.witnesses.push_back(std::move(w));
  }
  report.extendible = !report.witnesses.empty();
  return report;
}

// ------------------------------------------------------------ subset scan

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Integer acc;
  mpz_bin_uiui(acc.get_mpz_t(), n, k);
  if (!acc.fits_ulong_p()) throw std::overflow_error("binomial: result exceeds 64 bits");
  return acc.get_ui();
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  if (rank >= binomial(n, k)) throw std::out_of_range("unrank_combination: rank out of range");
  std::vector<std::size_t> combo;
  combo.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (;; ++next) {
      // Subsets starting with `next` at this slot.
      const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
    }
    combo.push_back(next++);
  }
  return combo;
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double screen_deviation(const SeidelMatrix& s) {
  const auto n = static_cast<Eigen::Index>(s.order());
  if (n == 0) return 0.0;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = s(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double e = solver.eigenvalues()[i];
    worst = std::max(worst, std::abs(e - std::round(e)));
  }
  return worst;
}

SubScanResult subseidel_scan(const SeidelMatrix& s, const std::set<std::size_t>& orders, const SearchOptions& options) {
  const std::size_t n = s.order();
  for (auto k : orders) {
    if (k == 0 || k > n) throw std::invalid_argument("subseidel_scan: order " + std::to_string(k) + " out of range");
  }

  struct Candidate {
    std::size_t order;
    std::vector<std::size_t> removed;
    double deviation;
    bool ambiguous;
  };

  SubScanResult result;
  std::uint64_t grand_total = 0;
  for (auto k : orders) grand_total += binomial(n, n - k);
  ProgressCounter progress(options, grand_total);

  std::vector<Candidate> candidates;
  for (auto k : orders) {
    const std::size_t drop = n - k;
    const std::uint64_t total = binomial(n, drop);
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kSubsetChunks, total));
    std::vector<std::vector<Candidate>> per_chunk(chunks);

    detail::run_chunks(chunks, options.jobs, [&](std::size_t chunk) {
      const auto [lo, hi] = detail::chunk_bounds(total, chunks, chunk);
      if (lo == hi) return;
      const auto size = static_cast<Eigen::Index>(k);
      Eigen::MatrixXd sub(size, size);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(size);
      std::vector<std::size_t> removed = drop == 0 ? std::vector<std::size_t>{} : unrank_combination(lo, n, drop);
      std::vector<std::size_t> keep;
      keep.reserve(k);
      for (std::uint64_t rank = lo; rank < hi; ++rank) {
        if (rank != lo) next_combination(removed, n);
        keep.clear();
        for (std::size_t i = 0, r = 0; i < n; ++i) {
          if (r < removed.size() && removed[r] == i) {
            ++r;
            continue;
          }
          keep.push_back(i);
        }
        for (Eigen::Index a = 0; a < size; ++a) {
          for (Eigen::Index b = 0; b < size; ++b) {
            sub(a, b) = s(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
          }
        }
        solver.compute(sub, Eigen::EigenvaluesOnly);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < size; ++i) {
          const double e = solver.eigenvalues()[i];
          worst = std::max(worst, std::abs(e - std::round(e)));
        }
        if (worst <= kScreenIntegerTolerance + kScreenAmbiguityBand) {
          per_chunk[chunk].push_back({k, removed, worst, worst > kScreenIntegerTolerance});
        }
      }
      progress.add(hi - lo);
    });

    auto& stats = result.stats[k];
    stats.examined = total;
    for (auto& chunk : per_chunk) {
      for (auto& c : chunk) {
        if (c.ambiguous) {
          ++stats.ambiguous;
        } else {
          ++stats.screen_passed;
        }
        candidates.push_back(std::move(c));
      }
    }
  }

  // Exact certification of every screen survivor.
  std::vector<std::optional<SubScanHit>> certified(candidates.size());
  detail::run_chunks(candidates.size(), options.jobs, [&](std::size_t i) {
    const auto& c = candidates[i];
    const SeidelMatrix sub = s.without(c.removed);
    SpectrumClaim spectrum;
    try {
      spectrum = compute_spectrum(sub);
    } catch (const UnrepresentableSpectrumError&) {
      return;
    }
    if (!spectrum.integral()) return;
    const auto k = static_cast<long>(c.order);
    if (spectrum.eigenvalue_sum() != 0 || spectrum.eigenvalue_square_sum() != k * (k - 1) ||
        spectrum.order() != c.order) {
      throw std::logic_error("subseidel_scan: certified spectrum violates the trace identities");
    }
    certified[i] = SubScanHit{c.order, c.removed, std::move(spectrum), c.deviation, switching_canonical_form(sub)};
  });

  for (auto& hit : certified) {
    if (!hit) continue;
    ++result.stats[hit->order].certified_hits;
    result.hits.push_back(std::move(*hit));
  }
  std::sort(result.hits.begin(), result.hits.end(), [](const SubScanHit& a, const SubScanHit& b) {
    return std::tie(a.order, a.removed) < std::tie(b.order, b.removed);
  });
  for (std::size_t i = 0; i < result.hits.size(); ++i) {
    auto it = std::find_if(result.equivalence_classes.begin(), result.equivalence_classes.end(),
                           [&](const EquivalenceClass& c) { return c.canonical_form == result.hits[i].canonical_form; });
    if (it == result.equivalence_classes.end()) {
      result.equivalence_classes.push_back({result.hits[i].canonical_form, {i}});
    } else {
      it->members.push_back(i);
    }
  }
  return result;
}

}  // namespace eqlines
