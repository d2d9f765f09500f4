#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "subfn/bernstein.hpp"
#include "subfn/measure.hpp"
#include "subfn/state.hpp"

// Plain-text formats. All numbers are written with 17 significant digits so
// a write/read round trip is value-exact.

namespace subfn::io {

/// CSV `location,weight`, rows ascending.
void write_measure_csv(std::ostream& os, const DiscreteMeasure& m);
DiscreteMeasure read_measure_csv(std::istream& is);

/// finite: `value`; grid1d: `x,value`; grid2d: `x,y,value`.
/// Grid spacing must be uniform within 1e-9 * h on load.
void write_state_csv(std::ostream& os, const StateVector& x);
StateVector read_state_csv(std::istream& is, Extension ext);

/// Square matrix, one CSV row per matrix row.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& A);
Eigen::MatrixXd read_matrix_csv(std::istream& is);

/// {"a": ..., "b": ..., "measure": {"kind": "zero"|"power"|"atomic", ...}}
std::string triplet_to_json(const LevyTriplet& f);
LevyTriplet triplet_from_json(const std::string& text);

// File helpers; throw DomainError on unreadable paths.
DiscreteMeasure read_measure_file(const std::string& path);
StateVector read_state_file(const std::string& path, Extension ext);
Eigen::MatrixXd read_matrix_file(const std::string& path);
LevyTriplet read_triplet_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace subfn::io
