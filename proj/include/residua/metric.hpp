#pragma once

/**
 * @file metric.hpp
 * @brief Generalized Hilbert projective metric d_H(x, y) = (x\y)(y\x).
 *
 * Over rmax with finite vectors this is min_{i,j}(x_i - y_i + y_j - x_j), the
 * additive Hilbert metric with its sign flipped: it is e exactly on scalar
 * multiples and decreases as the points move apart. Projection onto a
 * subsemimodule maximizes it.
 */

#include "residua/freemod.hpp"

#include <vector>

namespace residua {

Scalar d_h(const Vector& x, const Vector& y);

/// True iff d_H(x, v) ≤ d_H(x, P_V(x)) for every sample (each sample must lie
/// in span(W)).
bool hilbert_check_projection(const GeneratingFamily& w, const Vector& x, const std::vector<Vector>& v_samples);

} // namespace residua
