#pragma once

// Export formats for sampled grids.
//
// CSV numbers use the shortest representation that round-trips to the same
// double, so identical inputs always produce identical bytes.
//
// Binary grids ("RDG1" density, "WIG1" Wigner) are little-endian with a
// 32-byte header:
//
//   offset  size  field
//   0       4     magic, "RDG1" or "WIG1"
//   4       8     u64  position grid length Nx
//   12      8     f64  time g*t
//   20      8     u64  scenario hash
//   28      4     u32  RDG1: 0, WIG1: momentum grid length Np
//
// RDG1 payload: Nx positions, then the Nx x Nx matrix column-major with each
// entry stored as (re, im). WIG1 payload: Nx positions, Np momenta, then the
// Nx x Np matrix column-major.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "ringcav/spatial.hpp"
#include "ringcav/wigner.hpp"

namespace ringcav::io {

std::string format_double(double v);
void append_double(std::string& out, double v);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

inline constexpr std::size_t kBinaryHeaderSize = 32;

struct BinaryHeader {
    std::string magic;
    std::uint64_t length = 0;
    double time = 0.0;
    std::uint64_t scenario_hash = 0;
    std::uint32_t extra = 0;
};

void write_density_binary(std::ostream& os, const RelativeDensityGrid& grid, std::uint64_t scenario_hash);
void write_wigner_binary(std::ostream& os, const WignerGrid& grid, std::uint64_t scenario_hash);

struct DensityFile {
    BinaryHeader header;
    std::vector<double> xs;
    Eigen::MatrixXcd values;
};

struct WignerFile {
    BinaryHeader header;
    std::vector<double> xs;
    std::vector<double> ps;
    Eigen::MatrixXd values;
};

/// Throw IoError on a truncated stream or wrong magic.
DensityFile read_density_binary(std::istream& is);
WignerFile read_wigner_binary(std::istream& is);

/// Rows "gt,x,xp,re,im" for every grid entry (no header line).
void write_density_rows(std::ostream& os, const RelativeDensityGrid& grid);
/// Rows "gt,x,p,W" (no header line).
void write_wigner_rows(std::ostream& os, const WignerGrid& grid);
/// Four rows of "re,im,re,im,re,im,re,im".
void write_matrix_csv(std::ostream& os, const Eigen::Matrix4cd& m);

}  // namespace ringcav::io
