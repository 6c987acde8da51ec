#pragma once

#include <array>
#include <string>
#include <vector>

#include "isograph/action.hpp"
#include "isograph/graph.hpp"
#include "isograph/rep.hpp"

namespace isograph {

// An entry with k < 0 stands for the negative eigenvalue lambda = -k^2.
struct SpectrumEntry {
  double k = 0.0;
  int multiplicity = 1;
  double lambda() const { return k >= 0 ? k * k : -k * k; }
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;  // ascending in lambda
  double k_max = 0.0;
  double tol_null = 1e-9;
  double resolution = 1e-6;
  std::vector<std::string> warnings;

  int count() const;  // eigenvalues with multiplicity
  // Eigenvalues with multiplicity, one value of k per copy.
  std::vector<double> flat() const;
  Spectrum first(int n) const;  // the first n entries
};

struct SpectralOptions {
  int oversample = 8;
  double tol_null = 1e-9;
  double resolution = 1e-6;
  bool negative = false;      // also scan lambda < 0 down to -k_max^2
  int threads = 0;            // 0: hardware, capped by ISOGRAPH_THREADS
  bool winding_check = true;  // argument-principle count of missed roots
};

// Coefficients on each edge: f(x) = c1 cos(kx) + c2 sin(kx) for k > 0,
// c1 + c2 x for k = 0, c1 exp(-kx) + c2 exp(-k(l - x)) with k = |k| for
// negative eigenvalues.
struct Eigenfunction {
  double k = 0.0;
  std::vector<std::array<cplx, 2>> coeffs;
  double norm = 1.0;
};

// Coefficients of x -> f(length - x) in the same edge basis.
std::array<cplx, 2> reverse_coefficients(const std::array<cplx, 2>& c, double k, double length);

// Rows are the vertex conditions stacked in vertex order, columns the
// coefficient pairs edge by edge.
CMatrix secular_matrix(const MetricGraph& g, double k);
CMatrix secular_matrix(const MetricGraph& g, cplx k);

Spectrum eigenvalues(const MetricGraph& g, double k_max, const SpectralOptions& opts = {});

// Orthonormal eigenbasis at k. With expected > 0 exactly that many of the
// smallest singular directions are taken; otherwise the numerical nullspace.
// Throws InputError if k is not an eigenvalue.
std::vector<Eigenfunction> eigenfunctions(const MetricGraph& g, double k, int expected = 0,
                                          double tol_null = 1e-9);

cplx inner_product(const MetricGraph& g, const Eigenfunction& f1, const Eigenfunction& f2);
// Relative residual of the vertex conditions.
double residual(const MetricGraph& g, const Eigenfunction& f);
Eigenfunction transport(const MetricGraph& g, const GraphAction& a, int element, const Eigenfunction& f);

// Multiplicities of rep inside every eigenspace of g below k_max.
Spectrum r_spectrum(const MetricGraph& g, const GraphAction& a, const MatrixRep& rep, double k_max,
                    const SpectralOptions& opts = {});
// Same, reusing an already computed parent spectrum.
Spectrum r_spectrum(const MetricGraph& g, const GraphAction& a, const MatrixRep& rep,
                    const Spectrum& parent);

// Spectrum of a disjoint union: entries closer than tol are merged and
// their multiplicities added; k_max is the smallest of the inputs.
Spectrum merge_spectra(const std::vector<Spectrum>& parts, double tol = 1e-7);

struct SpectrumComparison {
  bool match = true;
  int compared = 0;
  double max_dk = 0.0;
  std::vector<std::string> mismatches;
};

// Entries beyond the smaller k_max (less tol) are ignored; with
// max_entries > 0 only that many leading entries of each list are compared.
SpectrumComparison compare_spectra(const Spectrum& s1, const Spectrum& s2, double tol = 1e-7,
                                   int max_entries = 0);

struct WeylReport {
  int counted = 0;
  double predicted = 0.0;
  double allowance = 0.0;
  bool ok = true;
};

WeylReport weyl_check(const MetricGraph& g, const Spectrum& s);

int scan_threads(int requested);

}  // namespace isograph
