// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "coembed/coarse.hpp"
#include "coembed/matrix.hpp"
#include "coembed/metrics.hpp"

namespace coembed::cli {

// Matrix CSV: n rows of n comma-separated decimals, no header.
// Points CSV: first row "n dim", then n comma-separated coordinate rows.
// Decimals are written with 17 significant digits for round-trip fidelity.
// Parse failures raise input_error with the offending line number.

Matrix read_matrix_csv(const std::string& path);
PointCloud read_points_csv(const std::string& path);

void write_matrix_csv(const std::string& path, const Matrix& m);
void write_points_csv(const std::string& path, const Matrix& coords);

// Plot-ready rows "t,compression,expansion", no header.
void write_moduli_csv(std::ostream& out, const ModuliReport& r);

// Breakpoint CSV: rows "t,v", loaded as a bound function.
MonotoneStepFunction read_breakpoints_csv(const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace coembed::cli
