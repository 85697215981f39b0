#pragma once

#include <string>

#include "framevote/core.hpp"

namespace framevote {

// Elementary costs of the generalized Levenshtein distance. alpha() is the
// maximal elementary cost, the normalization constant of ngld.
struct MetricConfig {
    double insertion_cost = 1.0;
    double deletion_cost = 1.0;
    double substitution_cost = 1.0;

    double alpha() const;
};

// Generalized Levenshtein distance; equals the classic edit distance with
// unit costs.
double gld(const std::string& a, const std::string& b, const MetricConfig& cfg = {});

// Normalized GLD: 2*g / (alpha*(|a|+|b|) + g), a metric bounded in [0,1].
// Inputs are canonicalized first; two empty strings give 0.
double ngld(const std::string& a, const std::string& b, const MetricConfig& cfg = {});

// Total variation distance between two distributions over the same alphabet
// (EMPTY included). Throws on dimension mismatch.
double cell_distance(const Distribution& p, const Distribution& q);

}  // namespace framevote
