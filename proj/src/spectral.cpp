#include "isograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "isograph/linalg.hpp"

namespace isograph {

int Spectrum::count() const {
  int n = 0;
  for (const SpectrumEntry& e : entries)
    n += e.multiplicity;
  return n;
}

std::vector<double> Spectrum::flat() const {
  std::vector<double> out;
  for (const SpectrumEntry& e : entries)
    out.insert(out.end(), e.multiplicity, e.k);
  return out;
}

Spectrum Spectrum::first(int n) const {
  Spectrum s = *this;
  if (static_cast<int>(s.entries.size()) > n)
    s.entries.resize(n);
  return s;
}

int scan_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ISOGRAPH_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0)
      n = std::min(n, cap);
  }
  return std::max(n, 1);
}

namespace {

enum class Basis { trig, scan, exponential, entire };

// Value and outgoing derivative of the two basis functions at an edge end.
struct EndRows {
  cplx v1, v2, d1, d2;
};

template <class K>
EndRows end_rows(Basis basis, K k, double l, Side side) {
  using std::cos, std::sin, std::exp;
  if (basis == Basis::exponential) {
    K e = exp(-k * l);
    if (side == Side::tail)
      return {1.0, e, -k, k * e};
    return {e, 1.0, k * e, -k};
  }
  if (basis == Basis::trig) {
    if (side == Side::tail)
      return {1.0, 0.0, 0.0, k};
    return {cos(k * l), sin(k * l), k * sin(k * l), -k * cos(k * l)};
  }
  if (basis == Basis::entire) {
    // cos(kx) and sin(kx)/k, analytic in k with no zero at k = 0
    if (side == Side::tail)
      return {1.0, 0.0, 0.0, 1.0};
    cplx kc = k, z = kc * l;
    cplx sinc = std::abs(z) < 1e-4 ? l * (1.0 - z * z / 6.0) : std::sin(z) / kc;
    return {std::cos(z), sinc, kc * std::sin(z), -std::cos(z)};
  }
  // scan basis: cos(kx) and sin(kx)/min(k, 1), continuous down to {1, x}
  double kr = std::real(cplx(k));
  if (side == Side::tail)
    return {1.0, 0.0, 0.0, kr < 1.0 ? 1.0 : kr};
  if (kr == 0.0)
    return {1.0, l, 0.0, -1.0};
  if (kr < 1.0)
    return {std::cos(kr * l), std::sin(kr * l) / kr, kr * std::sin(kr * l), -std::cos(kr * l)};
  return {std::cos(kr * l), std::sin(kr * l), kr * std::sin(kr * l), -kr * std::cos(kr * l)};
}

// Rows are normalized with max(1, |k|) unless a fixed scale is given; the
// argument principle needs the fixed one to keep det M analytic.
template <class K>
CMatrix assemble(const MetricGraph& g, Basis basis, K k, bool normalize, double fixed_scale = 0.0) {
  int rows = 0;
  for (const Vertex& v : g.vertices)
    rows += static_cast<int>(v.A.rows());
  CMatrix m = CMatrix::Zero(rows, 2 * g.edge_count());
  const double kscale = fixed_scale > 0 ? fixed_scale : std::max(1.0, std::abs(cplx(k)));
  int r0 = 0;
  for (const Vertex& v : g.vertices) {
    for (int j = 0; j < v.degree(); ++j) {
      const EdgeEnd& end = v.ends[j];
      EndRows er = end_rows(basis, k, g.edges[end.edge].length, end.side);
      for (int r = 0; r < v.A.rows(); ++r) {
        m(r0 + r, 2 * end.edge) += v.A(r, j) * er.v1 + v.B(r, j) * er.d1;
        m(r0 + r, 2 * end.edge + 1) += v.A(r, j) * er.v2 + v.B(r, j) * er.d2;
      }
    }
    if (normalize)
      for (int r = 0; r < v.A.rows(); ++r) {
        double n = std::sqrt(v.A.row(r).squaredNorm() + kscale * kscale * v.B.row(r).squaredNorm());
        if (n > 0)
          m.row(r0 + r) /= n;
      }
    r0 += static_cast<int>(v.A.rows());
  }
  return m;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0)
    return Eigen::VectorXd();
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double sigma_min(const CMatrix& m) {
  Eigen::VectorXd s = singular_values(m);
  if (m.rows() < m.cols())
    return 0.0;
  return s.size() ? s(s.size() - 1) : 0.0;
}

struct Root {
  double k;
  int multiplicity;
};

class Scanner {
public:
  Scanner(const MetricGraph& g, Basis basis, const SpectralOptions& opts)
      : g_(g), basis_(basis), opts_(opts) {}

  CMatrix matrix(double k) const { return assemble(g_, basis_, k, true); }
  double sigma(double k) const { return sigma_min(matrix(k)); }

  // Accepts the root near the minimum of sigma on [a, b], if there is one.
  std::optional<Root> refine(double a, double b) const {
    const double tol = 1e-12 * std::max(1.0, b);
    double k = 0.5 * (a + b);
    if (!v_fit(k, 0.125 * (b - a), tol)) {
      k = golden(a, b, 1e-7 * std::max(1.0, b));
      double w = 1e-7 * std::max(1.0, b);
      if (!v_fit(k, 0.25 * w, tol))
        k = golden(k - w, k + w, tol);
    }
    CMatrix m = matrix(k);
    Eigen::VectorXd s = singular_values(m);
    double thr = opts_.tol_null * std::max(max_norm(m), 1e-300);
    int mult = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) < thr)
        ++mult;
    if (mult == 0)
      return std::nullopt;
    return Root{k, mult};
  }

  // Golden-section search for the minimum of sigma on [a, b].
  double golden(double a, double b, double width) const {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = sigma(x1), f2 = sigma(x2);
    while (b - a > width) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = sigma(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = sigma(x2);
      }
    }
    return f1 < f2 ? x1 : x2;
  }

  // sigma is V-shaped at a root: intersect lines through two points on
  // each flank and shrink the stencil with the step. Returns false (with k
  // unchanged since the last good step) when the flanks are not linear.
  bool v_fit(double& k, double delta, double tol) const {
    for (int round = 0; round < 12; ++round) {
      double fl2 = sigma(k - 2 * delta), fl1 = sigma(k - delta);
      double fr1 = sigma(k + delta), fr2 = sigma(k + 2 * delta);
      double sl = (fl1 - fl2) / delta, sr = (fr2 - fr1) / delta;
      if (!(sl < 0 && sr > 0))
        return false;
      double t = ((fr1 - sr * (k + delta)) - (fl1 - sl * (k - delta))) / (sl - sr);
      if (!(std::abs(t - k) < delta) || sigma(t) > std::min(fl1, fr1))
        return false;
      double step = std::abs(t - k);
      k = t;
      if (delta <= tol)
        return true;
      delta = std::max(std::min(8 * step, 0.01 * delta), 0.5 * tol);
    }
    return false;
  }

  std::vector<double> grid_sigma(const std::vector<double>& ks) const {
    std::vector<double> out(ks.size());
    const int nt = std::min<int>(scan_threads(opts_.threads), std::max<int>(1, ks.size() / 16));
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < ks.size(); i += nt)
          out[i] = sigma(ks[i]);
      });
    for (auto& th : pool)
      th.join();
    return out;
  }

  std::vector<Root> roots_on_grid(const std::vector<double>& ks, const std::vector<double>& sig,
                                  double lower) const {
    std::vector<Root> roots;
    for (size_t i = 1; i + 1 < ks.size(); ++i) {
      if (!(sig[i] < sig[i - 1] && sig[i] <= sig[i + 1]))
        continue;
      auto r = refine(std::max(ks[i - 1], lower), ks[i + 1]);
      if (r && r->k > lower)
        roots.push_back(*r);
    }
    return roots;
  }

private:
  const MetricGraph& g_;
  Basis basis_;
  SpectralOptions opts_;
};

// Phase of det M(k) for complex k in a basis that is entire in k.
std::optional<cplx> det_phase(const MetricGraph& g, cplx k, double scale) {
  CMatrix m = assemble(g, Basis::entire, k, true, scale);
  if (m.rows() != m.cols())
    return std::nullopt;
  Eigen::PartialPivLU<CMatrix> lu(m);
  const auto& d = lu.matrixLU().diagonal();
  double big = d.cwiseAbs().maxCoeff(), small = d.cwiseAbs().minCoeff();
  if (!(small > 1e-13 * big))
    return std::nullopt;
  cplx p = static_cast<double>(lu.permutationP().determinant());
  for (int i = 0; i < d.size(); ++i)
    p *= d(i) / std::abs(d(i));
  return p;
}

// Number of zeros of det M inside the rectangle [a, b] x [-eps, eps].
std::optional<int> winding_count(const MetricGraph& g, double a, double b, double eps, double step) {
  std::vector<cplx> corners{{a, -eps}, {b, -eps}, {b, eps}, {a, eps}, {a, -eps}};
  const double scale = std::max(1.0, b);
  double total = 0.0;
  std::function<std::optional<double>(cplx, cplx, cplx, cplx, int)> segment =
      [&](cplx z0, cplx p0, cplx z1, cplx p1, int depth) -> std::optional<double> {
    double d = std::arg(p1 / p0);
    if (std::abs(d) < 0.5)
      return d;
    if (depth > 24)
      return std::nullopt;
    cplx zm = 0.5 * (z0 + z1);
    auto pm = det_phase(g, zm, scale);
    if (!pm)
      return std::nullopt;
    auto l = segment(z0, p0, zm, *pm, depth + 1);
    if (!l)
      return std::nullopt;
    auto r = segment(zm, *pm, z1, p1, depth + 1);
    if (!r)
      return std::nullopt;
    return *l + *r;
  };
  for (int s = 0; s < 4; ++s) {
    cplx z0 = corners[s], z1 = corners[s + 1];
    int n = std::max(2, static_cast<int>(std::ceil(std::abs(z1 - z0) / step)));
    auto prev = det_phase(g, z0, scale);
    if (!prev)
      return std::nullopt;
    cplx zprev = z0;
    for (int i = 1; i <= n; ++i) {
      cplx z = z0 + (z1 - z0) * (static_cast<double>(i) / n);
      auto p = det_phase(g, z, scale);
      if (!p)
        return std::nullopt;
      auto d = segment(zprev, *prev, z, *p, 0);
      if (!d)
        return std::nullopt;
      total += *d;
      prev = p;
      zprev = z;
    }
  }
  double w = total / (2.0 * std::numbers::pi);
  if (std::abs(w - std::round(w)) > 0.1)
    return std::nullopt;
  return static_cast<int>(std::lround(w));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

int found_in(const std::vector<Root>& roots, double a, double b) {
  int n = 0;
  for (const Root& r : roots)
    if (r.k > a && r.k < b)
      n += r.multiplicity;
  return n;
}

void add_unique(std::vector<Root>& roots, const Root& r) {
  for (const Root& q : roots)
    if (std::abs(q.k - r.k) < 1e-9)
      return;
  roots.push_back(r);
}

// Zooms into [a, b] until the scan accounts for all wc roots the argument
// principle counts there, or the window is below the resolution.
void resolve_window(const MetricGraph& g, const Scanner& sc, double a, double b, int wc, double h,
                    double resolution, std::vector<Root>& roots, std::vector<std::string>& warnings) {
  int have = found_in(roots, a, b);
  if (wc <= have)
    return;
  const int n = 32;
  std::vector<double> fine(n + 1);
  for (int i = 0; i <= n; ++i)
    fine[i] = a + (b - a) * i / n;
  std::vector<double> fs = sc.grid_sigma(fine);
  for (const Root& r : sc.roots_on_grid(fine, fs, 0.0))
    add_unique(roots, r);
  have = found_in(roots, a, b);
  if (wc <= have)
    return;
  std::optional<int> left;
  int m = n / 2;
  if (b - a > resolution) {
    for (int i = n / 4; i <= 3 * n / 4; ++i)
      if (fs[i] > fs[m])
        m = i;
    left = winding_count(g, a, fine[m], std::min(h, b - a), (b - a) / n);
  }
  if (!left) {
    Root* near = nullptr;
    for (Root& r : roots)
      if (r.k > a && r.k < b && (!near || std::abs(r.k - 0.5 * (a + b)) < std::abs(near->k - 0.5 * (a + b))))
        near = &r;
    if (near) {
      warnings.push_back("near-degenerate roots merged at k=" + fmt(near->k));
      near->multiplicity += wc - have;
    } else {
      warnings.push_back("argument principle finds " + std::to_string(wc) + " roots in [" + fmt(a) + ", " +
                         fmt(b) + "] that the scan missed");
    }
    return;
  }
  resolve_window(g, sc, a, fine[m], *left, h, resolution, roots, warnings);
  resolve_window(g, sc, fine[m], b, wc - *left, h, resolution, roots, warnings);
}

// Cross-checks the roots between consecutive grid maxima of sigma with the
// argument principle and rescans windows where roots are missing.
void winding_audit(const MetricGraph& g, const Scanner& sc, const std::vector<double>& ks,
                   const std::vector<double>& sig, double h, double resolution, std::vector<Root>& roots,
                   std::vector<std::string>& warnings) {
  std::vector<size_t> cuts;
  for (size_t i = 1; i + 1 < ks.size(); ++i)
    if (sig[i] >= sig[i - 1] && sig[i] > sig[i + 1])
      cuts.push_back(i);
  if (cuts.empty())
    return;
  const double eps = h, step = 0.5 * h;
  const double a0 = 0.5 * h, b0 = ks[cuts.back()];
  auto global = winding_count(g, a0, b0, eps, step);
  if (global && *global == found_in(roots, a0, b0))
    return;
  std::vector<double> edges{a0};
  for (size_t c : cuts)
    if (ks[c] > a0)
      edges.push_back(ks[c]);
  for (size_t w = 0; w + 1 < edges.size(); ++w) {
    const double a = edges[w], b = edges[w + 1];
    auto wc = winding_count(g, a, b, eps, step);
    if (!wc) {
      warnings.push_back("winding count unavailable on [" + fmt(a) + ", " + fmt(b) + "]");
      continue;
    }
    resolve_window(g, sc, a, b, *wc, h, resolution, roots, warnings);
    if (*wc < found_in(roots, a, b))
      warnings.push_back("scan found more roots than the argument principle in [" + fmt(a) + ", " +
                         fmt(b) + "]");
  }
}

std::vector<Root> merge(std::vector<Root> roots, double resolution, std::vector<std::string>& warnings) {
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.k < y.k; });
  std::vector<Root> out;
  for (const Root& r : roots) {
    if (!out.empty() && std::abs(r.k - out.back().k) < resolution) {
      if (std::abs(r.k - out.back().k) < 1e-9) {
        out.back().multiplicity = std::max(out.back().multiplicity, r.multiplicity);
      } else {
        warnings.push_back("roots at k=" + fmt(out.back().k) + " and k=" + fmt(r.k) +
                           " merged within the resolution");
        out.back().multiplicity += r.multiplicity;
      }
      continue;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<double> make_grid(double from, double to, double h) {
  std::vector<double> ks;
  int n = static_cast<int>(std::ceil((to - from) / h));
  for (int i = 0; i <= n; ++i)
    ks.push_back(from + i * h);
  return ks;
}

}  // namespace

CMatrix secular_matrix(const MetricGraph& g, double k) {
  if (k < 0)
    throw InputError("secular_matrix: k must be nonnegative");
  if (k == 0.0)
    return assemble(g, Basis::scan, 0.0, false);
  return assemble(g, Basis::trig, k, false);
}

CMatrix secular_matrix(const MetricGraph& g, cplx k) { return assemble(g, Basis::trig, k, false); }

Spectrum eigenvalues(const MetricGraph& g, double k_max, const SpectralOptions& opts) {
  if (!(k_max > 0))
    throw InputError("k_max must be positive");
  if (opts.oversample < 1)
    throw InputError("oversample must be at least 1");
  Spectrum spec;
  spec.k_max = k_max;
  spec.tol_null = opts.tol_null;
  spec.resolution = opts.resolution;
  if (g.edge_count() == 0)
    return spec;
  const double h = std::numbers::pi / (opts.oversample * g.total_length());

  Scanner sc(g, Basis::scan, opts);
  std::vector<double> ks = make_grid(0.0, k_max + 2 * h, h);
  std::vector<double> sig = sc.grid_sigma(ks);
  // extend until sigma turns down past k_max so the last window is closed
  for (int extra = 0; extra < 64; ++extra) {
    size_t n = sig.size();
    if (sig[n - 2] > sig[n - 1] && sig[n - 2] >= sig[n - 3])
      break;
    ks.push_back(ks.back() + h);
    sig.push_back(sc.sigma(ks.back()));
  }
  std::vector<Root> roots = sc.roots_on_grid(ks, sig, 0.5 * opts.resolution);
  if (opts.winding_check)
    winding_audit(g, sc, ks, sig, h, opts.resolution, roots, spec.warnings);
  roots = merge(std::move(roots), opts.resolution, spec.warnings);

  std::vector<SpectrumEntry> entries;
  if (opts.negative) {
    Scanner neg(g, Basis::exponential, opts);
    std::vector<double> kn = make_grid(h, k_max + 2 * h, h);
    std::vector<double> sn = neg.grid_sigma(kn);
    std::vector<Root> nr = merge(neg.roots_on_grid(kn, sn, 0.0), opts.resolution, spec.warnings);
    for (auto it = nr.rbegin(); it != nr.rend(); ++it)
      if (it->k <= k_max)
        entries.push_back({-it->k, it->multiplicity});
  }
  {
    CMatrix m0 = sc.matrix(0.0);
    Eigen::VectorXd s = singular_values(m0);
    double thr = opts.tol_null * std::max(max_norm(m0), 1e-300);
    int mult = static_cast<int>(m0.cols()) - static_cast<int>(s.size());
    for (int i = 0; i < s.size(); ++i)
      if (s(i) < thr)
        ++mult;
    if (mult > 0)
      entries.push_back({0.0, mult});
  }
  for (const Root& r : roots)
    if (r.k <= k_max)
      entries.push_back({r.k, r.multiplicity});
  spec.entries = std::move(entries);
  return spec;
}

namespace {

// Gram weights of the basis pair on one edge.
std::array<double, 3> weights(double k, double l) {
  if (k > 0) {
    double s2 = std::sin(2 * k * l) / (4 * k), s = std::sin(k * l);
    return {l / 2 + s2, l / 2 - s2, s * s / (2 * k)};
  }
  if (k == 0)
    return {l, l * l * l / 3, l * l / 2};
  double kap = -k, e = std::exp(-kap * l);
  double w = -std::expm1(-2 * kap * l) / (2 * kap);
  return {w, w, l * e};
}

Eigen::Matrix2d weight_matrix(double k, double l) {
  auto w = weights(k, l);
  Eigen::Matrix2d m;
  m << w[0], w[2], w[2], w[1];
  return m;
}

CMatrix gram(const MetricGraph& g, double k, const CMatrix& c) {
  CMatrix out = CMatrix::Zero(c.cols(), c.cols());
  for (int e = 0; e < g.edge_count(); ++e) {
    CMatrix w = weight_matrix(k, g.edges[e].length).cast<cplx>();
    CMatrix block = c.middleRows(2 * e, 2);
    out += block.adjoint() * w * block;
  }
  return out;
}

CVector as_vector(const Eigenfunction& f) {
  CVector v(2 * f.coeffs.size());
  for (size_t e = 0; e < f.coeffs.size(); ++e) {
    v(2 * e) = f.coeffs[e][0];
    v(2 * e + 1) = f.coeffs[e][1];
  }
  return v;
}

Eigenfunction from_vector(double k, const CVector& v) {
  Eigenfunction f;
  f.k = k;
  f.coeffs.resize(v.size() / 2);
  for (size_t e = 0; e < f.coeffs.size(); ++e)
    f.coeffs[e] = {v(2 * e), v(2 * e + 1)};
  return f;
}

}  // namespace

std::vector<Eigenfunction> eigenfunctions(const MetricGraph& g, double k, int expected, double tol_null) {
  const Basis basis = k < 0 ? Basis::exponential : Basis::scan;
  const double kk = std::abs(k);
  CMatrix m = assemble(g, basis, kk, true);
  const int n = static_cast<int>(m.cols());
  if (n == 0)
    return {};
  CMatrix padded = m;
  if (m.rows() < n) {
    padded = CMatrix::Zero(n, n);
    padded.topRows(m.rows()) = m;
  }
  Eigen::BDCSVD<CMatrix> svd(padded, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  double thr = tol_null * std::max(max_norm(m), 1e-300);
  int take = 0;
  if (expected > 0) {
    take = std::min(expected, n);
    if (s(n - take) > 1e-6 * std::max(max_norm(m), 1e-300))
      throw InputError("k=" + fmt(k) + " does not carry " + std::to_string(expected) + " eigenfunctions");
  } else {
    for (int i = 0; i < n; ++i)
      if (s(i) < thr)
        ++take;
    if (take == 0)
      throw InputError("k=" + fmt(k) + " is not an eigenvalue");
  }
  CMatrix c = svd.matrixV().rightCols(take);
  if (basis == Basis::scan && kk > 0 && kk < 1)
    for (int e = 0; e < g.edge_count(); ++e)
      c.row(2 * e + 1) /= kk;
  CMatrix gm = gram(g, k, c);
  c = c * inverse_sqrt_hermitian(0.5 * (gm + gm.adjoint()));
  std::vector<Eigenfunction> out;
  for (int j = 0; j < take; ++j)
    out.push_back(from_vector(k, c.col(j)));
  return out;
}

cplx inner_product(const MetricGraph& g, const Eigenfunction& f1, const Eigenfunction& f2) {
  if (std::abs(f1.k - f2.k) > 1e-12 * std::max(1.0, std::abs(f1.k)))
    throw InputError("inner_product: eigenfunctions use different k");
  CMatrix a = as_vector(f1), b = as_vector(f2);
  cplx s = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    CMatrix w = weight_matrix(f1.k, g.edges[e].length).cast<cplx>();
    s += (a.middleRows(2 * e, 2).adjoint() * w * b.middleRows(2 * e, 2))(0, 0);
  }
  return s;
}

double residual(const MetricGraph& g, const Eigenfunction& f) {
  CMatrix m = f.k < 0 ? assemble(g, Basis::exponential, -f.k, true)
              : f.k == 0 ? assemble(g, Basis::scan, 0.0, true)
                         : assemble(g, Basis::trig, f.k, true);
  CVector v = as_vector(f);
  return (m * v).norm() / std::max(v.norm(), 1e-300);
}

std::array<cplx, 2> reverse_coefficients(const std::array<cplx, 2>& c, double k, double l) {
  if (k > 0)
    return {c[0] * std::cos(k * l) + c[1] * std::sin(k * l), c[0] * std::sin(k * l) - c[1] * std::cos(k * l)};
  if (k == 0)
    return {c[0] + c[1] * l, -c[1]};
  return {c[1], c[0]};
}

Eigenfunction transport(const MetricGraph& g, const GraphAction& a, int element, const Eigenfunction& f) {
  Eigenfunction out = f;
  const double k = f.k;
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeImage& im = a.edge_map[element][e];
    out.coeffs[im.edge] = im.sign < 0 ? reverse_coefficients(f.coeffs[e], k, g.edges[e].length) : f.coeffs[e];
  }
  return out;
}

Spectrum r_spectrum(const MetricGraph& g, const GraphAction& a, const MatrixRep& rep,
                    const Spectrum& parent) {
  if (!same_group(rep.group(), a.group))
    throw InputError("representation and action use different groups");
  Spectrum out;
  out.k_max = parent.k_max;
  out.tol_null = parent.tol_null;
  out.resolution = parent.resolution;
  out.warnings = parent.warnings;
  const Subgroup& h = rep.domain();
  for (const SpectrumEntry& entry : parent.entries) {
    std::vector<Eigenfunction> fs = eigenfunctions(g, entry.k, entry.multiplicity, parent.tol_null);
    cplx total = 0.0;
    for (int x : h.elements) {
      cplx chi = 0.0;
      for (const Eigenfunction& f : fs)
        chi += inner_product(g, f, transport(g, a, x, f));
      total += std::conj(rep(x).trace()) * chi;
    }
    total /= static_cast<double>(h.order());
    long m = std::lround(total.real());
    if (std::abs(total - cplx(static_cast<double>(m), 0.0)) > 1e-6)
      out.warnings.push_back("non-integral multiplicity " + fmt(total.real()) + " at k=" + fmt(entry.k));
    if (m > 0)
      out.entries.push_back({entry.k, static_cast<int>(m)});
  }
  return out;
}

Spectrum r_spectrum(const MetricGraph& g, const GraphAction& a, const MatrixRep& rep, double k_max,
                    const SpectralOptions& opts) {
  return r_spectrum(g, a, rep, eigenvalues(g, k_max, opts));
}

Spectrum merge_spectra(const std::vector<Spectrum>& parts, double tol) {
  Spectrum out;
  out.k_max = std::numeric_limits<double>::infinity();
  std::vector<SpectrumEntry> all;
  for (const Spectrum& s : parts) {
    if (s.k_max > 0)
      out.k_max = std::min(out.k_max, s.k_max);
    all.insert(all.end(), s.entries.begin(), s.entries.end());
    out.warnings.insert(out.warnings.end(), s.warnings.begin(), s.warnings.end());
    out.tol_null = s.tol_null;
    out.resolution = s.resolution;
  }
  if (!std::isfinite(out.k_max))
    out.k_max = 0.0;
  std::stable_sort(all.begin(), all.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.lambda() < b.lambda(); });
  for (const SpectrumEntry& e : all) {
    if (out.k_max > 0 && e.k > out.k_max)
      continue;
    if (!out.entries.empty() && std::abs(out.entries.back().k - e.k) < tol)
      out.entries.back().multiplicity += e.multiplicity;
    else
      out.entries.push_back(e);
  }
  return out;
}

SpectrumComparison compare_spectra(const Spectrum& s1, const Spectrum& s2, double tol, int max_entries) {
  double limit = std::numeric_limits<double>::infinity();
  if (s1.k_max > 0 && s2.k_max > 0)
    limit = std::min(s1.k_max, s2.k_max) - tol;
  auto prep = [&](const Spectrum& s) {
    std::vector<SpectrumEntry> v;
    for (const SpectrumEntry& e : s.entries)
      if (e.k <= limit)
        v.push_back(e);
    if (max_entries > 0 && static_cast<int>(v.size()) > max_entries)
      v.resize(max_entries);
    return v;
  };
  std::vector<SpectrumEntry> a = prep(s1), b = prep(s2);
  SpectrumComparison rep;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && std::abs(a[i].k - b[j].k) < tol) {
      rep.max_dk = std::max(rep.max_dk, std::abs(a[i].k - b[j].k));
      if (a[i].multiplicity != b[j].multiplicity)
        rep.mismatches.push_back("k=" + fmt(a[i].k) + ": multiplicity " + std::to_string(a[i].multiplicity) +
                                 " vs " + std::to_string(b[j].multiplicity));
      ++rep.compared;
      ++i;
      ++j;
    } else if (j >= b.size() || (i < a.size() && a[i].k < b[j].k)) {
      rep.mismatches.push_back("k=" + fmt(a[i].k) + " only in the first spectrum");
      ++i;
    } else {
      rep.mismatches.push_back("k=" + fmt(b[j].k) + " only in the second spectrum");
      ++j;
    }
  }
  rep.match = rep.mismatches.empty();
  return rep;
}

WeylReport weyl_check(const MetricGraph& g, const Spectrum& s) {
  WeylReport r;
  for (const SpectrumEntry& e : s.entries)
    if (e.k >= 0)
      r.counted += e.multiplicity;
  r.predicted = g.total_length() * s.k_max / std::numbers::pi;
  r.allowance = g.edge_count() + g.vertex_count();
  r.ok = std::abs(r.counted - r.predicted) <= r.allowance;
  return r;
}

}  // namespace isograph
