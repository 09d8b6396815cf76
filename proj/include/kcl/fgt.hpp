#pragma once

#include <cstddef>

// One-dimensional fast Gauss transform
//   G(t) = Σ_j q_j exp(-(t - s_j)² / h²)
// using Taylor expansions about box centres (boxes of width h).
namespace kcl::fgt {

struct Options {
  int order = 26;        // expansion terms
  double cutoff = 7.0;   // sources farther than cutoff·h from a box are ignored
  std::size_t max_boxes = 4096;
};

// value and/or deriv (dG/dt) may be null. Returns false, leaving the outputs
// untouched, when the point spread needs more than max_boxes boxes.
bool gauss_transform(const double* src, const double* q, std::size_t ns, const double* tgt,
                     std::size_t nt, double h, double* value, double* deriv,
                     const Options& opt = {});

// Reference O(ns·nt) evaluation.
void gauss_transform_direct(const double* src, const double* q, std::size_t ns, const double* tgt,
                            std::size_t nt, double h, double* value, double* deriv);

}  // namespace kcl::fgt
