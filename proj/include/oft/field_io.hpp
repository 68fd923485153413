#pragma once

#include <string>

#include "oft/grid.hpp"
#include "oft/quadrature.hpp"

namespace oft {

/// Binary field container: magic "OFTF", version u32, dim u32, per-axis
/// (point count u64, lower f64, upper f64), then the samples as interleaved
/// (re, im) f64 pairs in linear-index order. All numbers little-endian.
void write_oftf(const std::string& path, const ComplexField& field);
ComplexField read_oftf(const std::string& path);

/// Plain-text export for plotting: "x,re,im" rows in 1D, "x,y,re,im" in 2D.
/// Higher dimensions have no CSV layout here and are rejected.
void write_field_csv(const std::string& path, const ComplexField& field);

/// Quadrature weight dump, one "n,t_n,re,im" row per schedule node.
void write_weights_csv(const std::string& path, const QuadratureWeights& weights);

} // namespace oft
