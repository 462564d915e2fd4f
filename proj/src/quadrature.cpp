#include "hpgrowth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hpgrowth {

namespace {

// Kronrod abscissae (positive half) and weights; Gauss weights for the
// 7-point rule sit on the odd Kronrod nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxPanels = 1 << 16;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double sum = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= h;
  gauss *= h;
  double err = std::abs(kronrod - gauss);
  if (!std::isfinite(kronrod)) err = std::numeric_limits<double>::infinity();
  return {a, b, kronrod, err, depth};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    std::span<const double> breakpoints, double abs_tol, double rel_tol,
                                    int max_depth) {
  if (!(hi > lo)) return {};
  std::vector<double> cuts{lo, hi};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> frozen;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    open.push(gauss_kronrod(f, cuts[i], cuts[i + 1], 0));
  }

  auto totals = [&]() {
    // Summed from scratch so the stopping test never sees drift.
    std::vector<Panel> all;
    all.reserve(open.size() + frozen.size());
    auto copy = open;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    all.insert(all.end(), frozen.begin(), frozen.end());
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    QuadratureResult r;
    for (const Panel& p : all) {
      r.value += p.value;
      r.error += p.error;
    }
    r.panels = static_cast<int>(all.size());
    return r;
  };

  double value = 0.0;
  double error = 0.0;
  {
    const QuadratureResult r = totals();
    value = r.value;
    error = r.error;
  }

  int panels = static_cast<int>(open.size());
  while (true) {
    const double target = std::max(abs_tol, rel_tol * std::abs(value));
    if (error <= target) {
      const QuadratureResult r = totals();
      if (r.error <= std::max(abs_tol, rel_tol * std::abs(r.value))) return r;
      value = r.value;
      error = r.error;
    }
    if (open.empty() || panels >= kMaxPanels) {
      const QuadratureResult r = totals();
      throw NumericalFailure("adaptive quadrature missed tolerance: error estimate " + std::to_string(r.error) +
                                 " after " + std::to_string(r.panels) + " panels",
                             r.value, r.error);
    }
    Panel worst = open.top();
    open.pop();
    if (worst.depth >= max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      frozen.push_back(worst);
      continue;
    }
    const Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    ++panels;
    if (!std::isfinite(error) || !std::isfinite(value)) {
      const QuadratureResult r = totals();
      value = r.value;
      error = r.error;
    }
  }
}

}  // namespace hpgrowth
