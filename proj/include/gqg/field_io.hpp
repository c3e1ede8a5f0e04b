#pragma once

#include <string>

#include "gqg/field.hpp"

namespace gqg {

// Snapshot files: one ASCII header line "GQG1 <N> <M> <time>\n", then
// little-endian 64-bit floats. The physical variant stores the M x M samples
// row-major; the ".spec" variant stores interleaved (re,im) coefficients in
// lexicographic (k1,k2) order over the square lattice.

struct PhysicalSnapshot {
    PhysicalField field;
    double time = 0.0;
};

struct SpectralSnapshot {
    SpectralField field;
    double time = 0.0;
};

void write_snapshot(const std::string& path, const PhysicalField& f, double time);
void write_snapshot(const std::string& path, const SpectralField& f, double time);

PhysicalSnapshot read_physical_snapshot(const std::string& path);
SpectralSnapshot read_spectral_snapshot(const std::string& path);

// Variant is chosen by the ".spec" extension.
bool is_spectral_path(const std::string& path);

struct SnapshotInfo {
    int N = 0, M = 0;
    double time = 0.0;
    bool spectral = false;
    double max_abs = 0.0;
};

SnapshotInfo read_snapshot_info(const std::string& path);

}  // namespace gqg
