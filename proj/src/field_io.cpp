#include "gqg/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gqg {
namespace {

void put_doubles(std::ostream& os, const double* p, size_t n) {
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(p), std::streamsize(n * sizeof(double)));
    } else {
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t u;
            std::memcpy(&u, p + i, 8);
            char b[8];
            for (int k = 0; k < 8; ++k) b[k] = char(u >> (8 * k));
            os.write(b, 8);
        }
    }
}

void get_doubles(std::istream& is, double* p, size_t n) {
    if constexpr (std::endian::native == std::endian::little) {
        is.read(reinterpret_cast<char*>(p), std::streamsize(n * sizeof(double)));
    } else {
        for (size_t i = 0; i < n; ++i) {
            char b[8];
            is.read(b, 8);
            std::uint64_t u = 0;
            for (int k = 0; k < 8; ++k) u |= std::uint64_t(std::uint8_t(b[k])) << (8 * k);
            std::memcpy(p + i, &u, 8);
        }
    }
    if (!is) throw std::runtime_error("snapshot: truncated payload");
}

struct Header {
    int N, M;
    double time;
};

Header read_header(std::istream& is, const std::string& path) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("snapshot: cannot read " + path);
    std::istringstream ss(line);
    std::string magic;
    Header h{};
    ss >> magic >> h.N >> h.M >> h.time;
    if (!ss || magic != "GQG1")
        throw std::runtime_error("snapshot: bad header in " + path);
    if (h.N < 1 || h.M < 2 * h.N + 2)
        throw std::runtime_error("snapshot: inconsistent sizes in " + path);
    return h;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("snapshot: cannot write " + path);
    return os;
}

void write_header(std::ostream& os, const Grid& g, double time) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "GQG1 %d %d %.17g\n", g.N, g.M, time);
    os << buf;
}

}  // namespace

void write_snapshot(const std::string& path, const PhysicalField& f, double time) {
    auto os = open_out(path);
    write_header(os, f.grid(), time);
    put_doubles(os, f.values().data(), f.values().size());
    if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

void write_snapshot(const std::string& path, const SpectralField& f, double time) {
    auto os = open_out(path);
    write_header(os, f.grid(), time);
    // interleaved (re,im); std::complex<double> has exactly that layout
    put_doubles(os, reinterpret_cast<const double*>(f.coeffs().data()), 2 * f.coeffs().size());
    if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

PhysicalSnapshot read_physical_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    Header h = read_header(is, path);
    PhysicalSnapshot snap{PhysicalField(Grid(h.N, h.M)), h.time};
    get_doubles(is, snap.field.values().data(), snap.field.values().size());
    return snap;
}

SpectralSnapshot read_spectral_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    Header h = read_header(is, path);
    SpectralSnapshot snap{SpectralField(Grid(h.N, h.M)), h.time};
    get_doubles(is, reinterpret_cast<double*>(snap.field.coeffs().data()),
                2 * snap.field.coeffs().size());
    return snap;
}

bool is_spectral_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".spec") == 0;
}

SnapshotInfo read_snapshot_info(const std::string& path) {
    SnapshotInfo info;
    info.spectral = is_spectral_path(path);
    if (info.spectral) {
        auto s = read_spectral_snapshot(path);
        info.N = s.field.grid().N;
        info.M = s.field.grid().M;
        info.time = s.time;
        info.max_abs = s.field.max_abs();
    } else {
        auto s = read_physical_snapshot(path);
        info.N = s.field.grid().N;
        info.M = s.field.grid().M;
        info.time = s.time;
        info.max_abs = s.field.max_abs();
    }
    return info;
}

}  // namespace gqg
