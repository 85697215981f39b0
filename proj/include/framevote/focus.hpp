#pragma once

#include <vector>

#include "framevote/image.hpp"

namespace framevote {

// Absolute directional gradients of an image. Diagonal entries carry the
// 1/sqrt(2) distance scale. Counts: vertical (h-1)*w, horizontal h*(w-1),
// each diagonal (h-1)*(w-1).
struct Gradients {
    std::vector<double> vertical;
    std::vector<double> horizontal;
    std::vector<double> diag_down;  // (i,j) vs (i+1,j+1)
    std::vector<double> diag_up;    // (i+1,j) vs (i,j+1)
};

// Requires at least a 2x2 image so that all four sets are non-empty.
Gradients gradients(const GrayImage& img);

// Nearest-rank 0.95-quantile: the element at 1-based index ceil(0.95*n) of
// the ascending sort. Throws on an empty sample.
double quantile95(std::vector<double> values);

// Focus measure: minimum over the four directional gradient quantiles.
// Higher is sharper; a constant image scores 0.
double focus_estimate(const GrayImage& img);

}  // namespace framevote
