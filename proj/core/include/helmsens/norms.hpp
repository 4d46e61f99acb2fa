#ifndef HELMSENS_NORMS_HPP
#define HELMSENS_NORMS_HPP

#include <functional>
#include <vector>

#include "helmsens/curve.hpp"
#include "helmsens/geom.hpp"

namespace helmsens {

struct Annulus {
  double r0 = 0.0;
  double r1 = 0.0;
};

// Tensor-product quadrature on an annulus: Gauss-Legendre radially (weight
// includes the r of the area element), trapezoid in angle.
struct VolumeGrid {
  std::vector<Vec2> points;
  std::vector<double> weights;
  Annulus region;
};

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

VolumeGrid make_annulus_grid(const Annulus& region, std::size_t n_radial,
                             std::size_t n_angular);

// Guard for the compact-subset rule: the annulus must stay clear of every
// perturbed boundary in the study, estimated via the radial sweep
// [rho_min - margin, rho_max + margin].
void require_region_clear(const Annulus& region, const StarCurve& curve,
                          double margin);

using ScalarField = std::function<Complex(Vec2)>;
using GradField = std::function<CVec2(Vec2)>;

double volume_l2(const ScalarField& f, const VolumeGrid& grid);
double volume_h1(const ScalarField& f, const GradField& grad,
                 const VolumeGrid& grid);

}  // namespace helmsens

#endif
