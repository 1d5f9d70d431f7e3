#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <thread>

#include "univgate/errors.h"
#include "univgate/spectra.h"

namespace univgate {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAngles = 16;

// Minimal n with the spectrum e^{i n φ} inside some ball; angles are the
// free parameters described in spectra.h.
class LandingEvaluator {
 public:
  LandingEvaluator(Group group, int d, std::int64_t max_power,
                   const Tolerances& tol)
      : group_(group), d_(d), max_power_(max_power) {
    const double r = ball_radius(tol);
    if (group == Group::kSU) {
      count_ = d;
      threshold_ = d - 0.5 * r * r;
      for (int m = 0; m < d; ++m) {
        centers_[m] = std::polar(1.0, -2.0 * kPi * m / d);
      }
    } else {
      count_ = d / 2;
      threshold_ = count_ - 0.25 * r * r;
    }
  }

  int free_count() const { return group_ == Group::kSU ? d_ - 1 : d_ / 2; }

  std::int64_t operator()(const double* free) const {
    std::array<double, kMaxAngles> phi{};
    double sum = 0.0;
    for (int i = 0; i < free_count(); ++i) {
      phi[i] = free[i];
      sum += free[i];
    }
    if (group_ == Group::kSU) phi[d_ - 1] = -sum;
    std::array<Complex, kMaxAngles> z{}, w{};
    for (int i = 0; i < count_; ++i) z[i] = w[i] = std::polar(1.0, phi[i]);
    const bool even_so = group_ == Group::kSO && d_ % 2 == 0;
    for (std::int64_t n = 1; n <= max_power_; ++n) {
      if (n % 64 == 0) {
        for (int i = 0; i < count_; ++i) {
          w[i] = std::polar(1.0, std::fmod(n * phi[i], 2.0 * kPi));
        }
      }
      if (group_ == Group::kSU) {
        Complex tr = 0.0;
        for (int i = 0; i < count_; ++i) tr += w[i];
        for (int m = 0; m < d_; ++m) {
          if ((centers_[m] * tr).real() > threshold_) return n;
        }
      } else {
        double s = 0.0;
        for (int i = 0; i < count_; ++i) s += w[i].real();
        if (s > threshold_) return n;
        if (even_so && -s > threshold_) return n;
      }
      for (int i = 0; i < count_; ++i) w[i] *= z[i];
    }
    return max_power_ + 1;
  }

 private:
  Group group_;
  int d_;
  std::int64_t max_power_;
  int count_ = 0;
  double threshold_ = 0.0;
  std::array<Complex, kMaxAngles> centers_{};
};

struct GridPoint {
  std::int64_t value;
  std::vector<int> index;
};

// Enumerates the grid in lexicographic order of the index tuple. SO tuples
// are nondecreasing in [0, divisions]; SU tuples range over [0, 2·divisions).
class GridWalker {
 public:
  GridWalker(bool sorted, int dims, int upper)
      : sorted_(sorted), dims_(dims), upper_(upper) {}

  // Calls f(index) for all tuples whose first coordinate is `first`.
  template <typename F>
  void for_first(int first, F&& f) const {
    std::vector<int> idx(dims_, 0);
    idx[0] = first;
    recurse(idx, 1, f);
  }

  int first_count() const { return upper_; }

 private:
  template <typename F>
  void recurse(std::vector<int>& idx, int pos, F& f) const {
    if (pos == dims_) {
      f(idx);
      return;
    }
    const int start = sorted_ ? idx[pos - 1] : 0;
    for (int j = start; j < upper_; ++j) {
      idx[pos] = j;
      recurse(idx, pos + 1, f);
    }
  }

  bool sorted_;
  int dims_;
  int upper_;
};

}  // namespace

std::int64_t landing_power(Group group, int d, const std::vector<double>& free,
                           std::int64_t max_power, const Tolerances& tol) {
  LandingEvaluator eval(group, d, max_power, tol);
  if (static_cast<int>(free.size()) != eval.free_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "wrong number of free angles");
  }
  return eval(free.data());
}

NumericEstimate estimate_ng(Group group, int d,
                            const NumericEstimateOptions& options) {
  if (d < min_dimension(group) || (group == Group::kSU ? d : d / 2) > kMaxAngles) {
    throw Error(ErrorCode::kBadDimension, "unsupported dimension for the grid");
  }
  if (options.divisions < 1 || options.refine_factor < 1) {
    throw Error(ErrorCode::kBadArgument, "grid parameters must be positive");
  }
  LandingEvaluator eval(group, d, options.max_power, options.tol);
  const int dims = eval.free_count();
  const double h = kPi / options.divisions;
  const bool so = group == Group::kSO;
  GridWalker walker(so, dims, so ? options.divisions + 1 : 2 * options.divisions);

  // Pass 1: grid values. Each worker keeps its own running best and seeds;
  // merging in worker order keeps the result deterministic.
  const int jobs = std::max(1, options.jobs);
  struct Partial {
    std::int64_t best = 0;
    std::size_t evaluations = 0;
    std::vector<GridPoint> points;  // value ≥ provisional seed threshold
  };
  std::vector<Partial> partials(jobs);
  auto run_grid = [&](int worker, std::int64_t floor_value) {
    Partial& part = partials[worker];
    std::vector<double> angles(dims);
    for (int first = worker; first < walker.first_count(); first += jobs) {
      walker.for_first(first, [&](const std::vector<int>& idx) {
        for (int i = 0; i < dims; ++i) angles[i] = idx[i] * h;
        const std::int64_t v = eval(angles.data());
        ++part.evaluations;
        part.best = std::max(part.best, v);
        if (v >= floor_value) part.points.push_back({v, idx});
      });
    }
  };
  auto run_all = [&](std::int64_t floor_value) {
    for (auto& p : partials) p = Partial{};
    std::vector<std::thread> threads;
    for (int w = 1; w < jobs; ++w) threads.emplace_back(run_grid, w, floor_value);
    run_grid(0, floor_value);
    for (auto& t : threads) t.join();
  };

  // A coarse pass fixes the seed threshold so pass 2 stores few points.
  NumericEstimate result;
  {
    
    std::int64_t coarse_best = 0;
    const int stride = std::max(1, options.divisions / 200);
    std::vector<double> angles(dims);
    GridWalker coarse_walker(so, dims, walker.first_count());
    for (int first = 0; first < walker.first_count(); first += stride) {
      coarse_walker.for_first(first, [&](const std::vector<int>& idx) {
        for (int i = 1; i < dims; ++i) {
          if (idx[i] % stride != 0) return;
        }
        for (int i = 0; i < dims; ++i) angles[i] = idx[i] * h;
        coarse_best = std::max(coarse_best, eval(angles.data()));
      });
    }
    const auto floor_value = static_cast<std::int64_t>(
        std::ceil(options.seed_fraction * coarse_best));
    run_all(floor_value);
  }

  std::vector<GridPoint> points;
  for (auto& part : partials) {
    result.grid_value = std::max(result.grid_value, part.best);
    result.evaluations += part.evaluations;
    points.insert(points.end(), std::make_move_iterator(part.points.begin()),
                  std::make_move_iterator(part.points.end()));
  }
  const auto seed_floor = static_cast<std::int64_t>(
      std::ceil(options.seed_fraction * result.grid_value));
  std::erase_if(points, [&](const GridPoint& p) { return p.value < seed_floor; });
  std::sort(points.begin(), points.end(), [](const GridPoint& a, const GridPoint& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.index < b.index;
  });
  if (points.size() > options.max_seeds) points.resize(options.max_seeds);
  result.seeds = points.size();
  result.value = result.grid_value;
  if (!points.empty()) {
    for (int i = 0; i < dims; ++i) result.argmax.push_back(points[0].index[i] * h);
  }

  // Pass 2: refinement patches around the seeds.
  const int rf = options.refine_factor;
  const double step = h / rf;
  const int side = 2 * rf + 1;
  std::int64_t patch_points = 1;
  for (int i = 0; i < dims; ++i) patch_points *= side;
  std::vector<double> angles(dims);
  for (const GridPoint& seed : points) {
    for (std::int64_t t = 0; t < patch_points; ++t) {
      std::int64_t rem = t;
      for (int i = 0; i < dims; ++i) {
        const int offset = static_cast<int>(rem % side) - rf;
        rem /= side;
        angles[i] = seed.index[i] * h + offset * step;
      }
      const std::int64_t v = eval(angles.data());
      ++result.evaluations;
      if (v > result.value) {
        result.value = v;
        result.argmax = angles;
      }
    }
  }
  return result;
}

}  // namespace univgate
