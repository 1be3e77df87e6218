#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pyrofuse {

struct LatticeSpec {
  int nx = 1;
  int ny = 1;
  int nz = 1;

  void validate() const;  // throws std::invalid_argument unless all >= 1
  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Closed-form site count 16 n_x n_y n_z + 8 (n_x n_y + n_y n_z + n_x n_z)
/// + 4 (n_x + n_y + n_z) - 12.
std::int64_t expected_site_count(const LatticeSpec& spec);

/// The twelve (n_x, n_y, n_z) rows of the lattice-scaling table.
std::vector<LatticeSpec> table1_specs();
/// Published site count for each row of table1_specs().
std::vector<std::int64_t> table1_site_counts();

enum class Parity : std::uint8_t { A, B };

struct Site {
  int id = 0;
  std::array<int, 3> eighths{};  // position in units of 1/8 cell
  int sublattice = 0;            // 0..3, bond direction in the diamond parent

  double x() const { return eighths[0] / 8.0; }
  double y() const { return eighths[1] / 8.0; }
  double z() const { return eighths[2] / 8.0; }
  friend bool operator==(const Site&, const Site&) = default;
};

struct Tetrahedron {
  int id = 0;
  std::array<int, 4> corners{};  // corners[k] has sublattice k
  Parity parity = Parity::A;
  friend bool operator==(const Tetrahedron&, const Tetrahedron&) = default;
};

/// Finite open-boundary pyrochlore lattice.  Immutable once built.
struct Lattice {
  LatticeSpec spec;
  std::vector<Site> sites;
  std::vector<Tetrahedron> tetrahedra;
  std::vector<std::array<int, 2>> site_tets;  // second entry -1 on the boundary
  std::vector<int> source_sites;
  std::vector<int> target_sites;

  std::size_t site_count() const { return sites.size(); }
  int tets_of(int site) const { return site_tets[site][1] < 0 ? 1 : 2; }

  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Builds the lattice from its diamond parent: tetrahedra sit on diamond
/// vertices inside the closed box [0, n_x] x [0, n_y] x [0, n_z] (FCC origin
/// at the corner), sites on the midpoints of their bonds.  Tetrahedra that
/// share no corner with any other tetrahedron (the four box corners) are
/// dropped, which yields exactly expected_site_count(spec) sites.
Lattice build_lattice(const LatticeSpec& spec);

/// Sites closer than half a cell to the x = 0 face, and to the x = n_x face.
std::pair<std::vector<int>, std::vector<int>> face_sets(const Lattice& lat);

std::string dump_lattice(const Lattice& lat);
Lattice load_lattice(std::string_view json);

}  // namespace pyrofuse
