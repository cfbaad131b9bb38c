#pragma once

#include <optional>
#include <vector>

#include "shapemetric/body.hpp"
#include "shapemetric/grid.hpp"

namespace shapemetric {

// Sampled support function: one value per grid node, plus (optionally)
// the spherical gradient, which for sampled bodies is the tangential
// part of the maximizing point.
struct SupportField {
    GridPtr grid;
    std::vector<double> values;
    std::vector<Vec> gradients;
    bool has_gradients = false;
    std::optional<BodyDescriptor> source;
};

SupportField sample_body(const BodyDescriptor& body, const GridPtr& grid);

// max_i |f_i - g_i|; the discrete sup distance (Hausdorff distance up
// to grid resolution). Throws on grid mismatch.
double sup_diff(const SupportField& f, const SupportField& g);

// L2 and H1 distances on the same grid.
double dist_l2(const SupportField& f, const SupportField& g);
double dist_h1(const SupportField& f, const SupportField& g);

// a*f + b*g as a field; gradients combine linearly when both carry
// them. The symbolic source is dropped.
SupportField combine_fields(double a, const SupportField& f, double b, const SupportField& g);

SupportField scale_field(double a, const SupportField& f);

void require_same_grid(const SupportField& f, const SupportField& g, const char* who);

}  // namespace shapemetric
