#include "qwit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwit {

OptimumResult nelder_mead_maximize(const Objective& f, std::vector<double> start, double step,
                                   double tolerance, std::size_t max_evaluations) {
  const std::size_t dim = start.size();
  OptimumResult out;
  auto eval = [&](const std::vector<double>& x) {
    ++out.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  auto point = [&](double t, const std::vector<double>& worst, std::vector<double>& dst) {
    for (std::size_t j = 0; j < dim; ++j) dst[j] = centroid[j] + t * (worst[j] - centroid[j]);
  };

  while (out.evaluations < max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim >= 1 ? dim - 1 : 0];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      double d = 0.0;
      for (std::size_t j = 0; j < dim; ++j) d = std::max(d, std::abs(simplex[i][j] - simplex[best][j]));
      diameter = std::max(diameter, d);
    }
    if (values[best] - values[worst] <= tolerance && diameter <= std::sqrt(tolerance)) {
      out.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / double(dim);
    }

    point(-1.0, simplex[worst], trial);
    const double reflected = eval(trial);
    if (reflected > values[best]) {
      point(-2.0, simplex[worst], trial2);
      const double expanded = eval(trial2);
      if (expanded > reflected) {
        simplex[worst] = trial2;
        values[worst] = expanded;
      } else {
        simplex[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected > values[second]) {
      simplex[worst] = trial;
      values[worst] = reflected;
      continue;
    }
    const bool outside = reflected > values[worst];
    point(outside ? -0.5 : 0.5, simplex[worst], trial2);
    const double contracted = eval(trial2);
    if (contracted > std::max(reflected, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::distance(values.begin(), std::max_element(values.begin(), values.end())));
  out.x = simplex[best];
  out.value = values[best];
  return out;
}

OptimumResult grid_refine_maximize(const std::function<double(double, double)>& f,
                                   const GridRefineOptions& o) {
  struct Sample {
    double value, a, b;
  };
  std::vector<Sample> grid;
  grid.reserve(o.steps * o.steps);
  const double da = (o.hi0 - o.lo0) / double(o.steps);
  const double db = (o.hi1 - o.lo1) / double(o.steps);
  for (std::size_t i = 0; i < o.steps; ++i) {
    for (std::size_t j = 0; j < o.steps; ++j) {
      const double a = o.lo0 + da * double(i);
      const double b = o.lo1 + db * double(j);
      grid.push_back({f(a, b), a, b});
    }
  }
  const std::size_t starts = std::min(o.refine_starts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Sample& x, const Sample& y) { return x.value > y.value; });

  OptimumResult best;
  best.x = {grid.front().a, grid.front().b};
  best.value = grid.front().value;
  best.evaluations = grid.size();
  const Objective wrapped = [&](std::span<const double> x) { return f(x[0], x[1]); };
  const double step = 0.5 * std::max(da, db);
  bool any_converged = false;
  for (std::size_t s = 0; s < starts; ++s) {
    auto r = nelder_mead_maximize(wrapped, {grid[s].a, grid[s].b}, step, o.tolerance);
    best.evaluations += r.evaluations;
    any_converged = any_converged || r.converged;
    if (r.value > best.value) {
      best.value = r.value;
      best.x = r.x;
    }
  }
  best.converged = any_converged;
  return best;
}

}  // namespace qwit
