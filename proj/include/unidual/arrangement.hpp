#pragma once

#include "unidual/rootsys.hpp"

#include <optional>
#include <vector>

namespace unidual {

// A linear subspace of simple coordinates x_i = <alpha_i, chi>, cut out by u . x = 0.
struct Slice {
  std::vector<Vec> equations;
  bool full() const { return equations.empty(); }
};

// The hermitian slice {w0 chi = -chi}, obtained from minus_one_eigenspace.
Slice hermitian_slice(const RootSystem& rs);
bool in_slice(const Slice& s, const Vec& x);

struct Region {
  std::vector<int> delta;        // maximal roots with <beta,chi> < 1
  std::vector<int> delta_prime;  // minimal roots with <beta,chi> > 1
  Vec x;                         // interior sample, simple coordinates
  Vec sample;                    // the same sample in ambient coordinates
  Q margin;                      // the LP optimum epsilon at the sample
  bool bounded = true;
  std::vector<int> zero_walls;   // simple indices i whose wall alpha_i = 0 bounds the region
};

std::vector<std::vector<int>> enumerate_antichains(const RootSystem& rs);
// Minimal roots outside the down-closure of delta.
std::vector<int> complement_antichain(const RootSystem& rs, const std::vector<int>& delta);

struct SamplePoint {
  Vec x;
  Q margin;
};
std::optional<SamplePoint> sample_point(const RootSystem& rs, const std::vector<int>& delta,
                                        const std::vector<int>& delta_prime, const Slice& slice);
// Further interior points of the region, distinct from each other and from region.x.
std::vector<Vec> extra_samples(const RootSystem& rs, const Region& region, const Slice& slice, size_t count);

std::vector<int> zero_walls(const RootSystem& rs, const Region& region, const Slice& slice);
// Root-combinatorial wall test for simply-laced systems on the full space.
std::vector<int> zero_walls_combinatorial(const RootSystem& rs, const Region& region);

int max_orthogonal_antichain(const RootSystem& rs);

// Sign data of a point: delta/delta' of its region, or nullopt on a hyperplane <beta,chi> = 1.
struct Location {
  std::vector<int> delta, delta_prime;
};
std::optional<Location> locate(const RootSystem& rs, const Vec& x);

struct Arrangement {
  std::vector<Region> regions;  // in antichain enumeration order
  size_t dropped = 0;           // antichains whose region misses the slice
};

Arrangement build_regions(const RootSystem& rs, const Slice& slice, unsigned threads = 1);

}  // namespace unidual
