#include "pyrofuse/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <stdexcept>

#include "json.hpp"

namespace pyrofuse {
namespace {

// Quarter-cell units.  FCC basis of the diamond A sublattice; B = A + (1,1,1).
constexpr std::array<std::array<int, 3>, 4> kFcc = {{{0, 0, 0}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0}}};
// Bond k from an A vertex.  Pairs {0,1} and {2,3} differ only in x and y.
constexpr std::array<std::array<int, 3>, 4> kBond = {{{1, 1, 1}, {-1, -1, 1}, {1, -1, -1}, {-1, 1, -1}}};

struct RawTet {
  std::array<int, 3> centre;  // quarter units
  Parity parity;
  std::array<std::array<int, 3>, 4> corners;  // eighth units
};

}  // namespace

void LatticeSpec::validate() const {
  if (nx < 1 || ny < 1 || nz < 1)
    throw std::invalid_argument("lattice dimensions must be positive integers");
}

std::int64_t expected_site_count(const LatticeSpec& s) {
  const std::int64_t x = s.nx, y = s.ny, z = s.nz;
  return 16 * x * y * z + 8 * (x * y + y * z + x * z) + 4 * (x + y + z) - 12;
}

std::vector<LatticeSpec> table1_specs() {
  return {{4, 4, 4},  {5, 5, 3},  {6, 6, 3},  {7, 7, 3},  {8, 7, 3},  {9, 7, 3},
          {10, 8, 3}, {11, 8, 3}, {12, 9, 3}, {13, 9, 3}, {14, 9, 3}, {15, 9, 3}};
}

std::vector<std::int64_t> table1_site_counts() {
  return {1444, 1680, 2352, 3136, 3556, 3976, 4984, 5460, 6636, 7168, 7700, 8232};
}

Lattice build_lattice(const LatticeSpec& spec) {
  spec.validate();
  const std::array<int, 3> n{spec.nx, spec.ny, spec.nz};
  auto inside = [&](const std::array<int, 3>& p) {
    for (int a = 0; a < 3; ++a)
      if (p[a] < 0 || p[a] > 4 * n[a]) return false;
    return true;
  };

  std::vector<RawTet> raw;
  for (int i = -1; i <= n[0]; ++i)
    for (int j = -1; j <= n[1]; ++j)
      for (int k = -1; k <= n[2]; ++k)
        for (const auto& f : kFcc)
          for (Parity par : {Parity::A, Parity::B}) {
            const int shift = par == Parity::A ? 0 : 1;
            const std::array<int, 3> c{4 * i + f[0] + shift, 4 * j + f[1] + shift, 4 * k + f[2] + shift};
            if (!inside(c)) continue;
            RawTet t{c, par, {}};
            const int dir = par == Parity::A ? 1 : -1;
            for (int s = 0; s < 4; ++s)
              for (int a = 0; a < 3; ++a) t.corners[s][a] = 2 * c[a] + dir * kBond[s][a];
            raw.push_back(t);
          }

  std::map<std::array<int, 3>, int> multiplicity;
  for (const auto& t : raw)
    for (const auto& c : t.corners) ++multiplicity[c];
  std::erase_if(raw, [&](const RawTet& t) {
    return std::none_of(t.corners.begin(), t.corners.end(),
                        [&](const auto& c) { return multiplicity.at(c) > 1; });
  });

  // Sublattice of each site position; map order is (x, y, z) lexicographic.
  std::map<std::array<int, 3>, int> sublattice;
  for (const auto& t : raw)
    for (int s = 0; s < 4; ++s) sublattice[t.corners[s]] = s;

  Lattice lat;
  lat.spec = spec;
  std::map<std::array<int, 3>, int> id_of;
  for (const auto& [pos, sub] : sublattice) {
    const int id = static_cast<int>(lat.sites.size());
    id_of[pos] = id;
    lat.sites.push_back({id, pos, sub});
  }

  std::sort(raw.begin(), raw.end(), [](const RawTet& a, const RawTet& b) { return a.centre < b.centre; });
  lat.site_tets.assign(lat.sites.size(), {-1, -1});
  for (const auto& t : raw) {
    Tetrahedron tet;
    tet.id = static_cast<int>(lat.tetrahedra.size());
    tet.parity = t.parity;
    for (int s = 0; s < 4; ++s) {
      const int sid = id_of.at(t.corners[s]);
      tet.corners[s] = sid;
      auto& slot = lat.site_tets[sid];
      (slot[0] < 0 ? slot[0] : slot[1]) = tet.id;
    }
    lat.tetrahedra.push_back(tet);
  }
  std::tie(lat.source_sites, lat.target_sites) = face_sets(lat);
  return lat;
}

std::pair<std::vector<int>, std::vector<int>> face_sets(const Lattice& lat) {
  // Half a cell is 4 eighths.
  const int far = 8 * lat.spec.nx;
  std::vector<int> source, target;
  for (const auto& s : lat.sites) {
    if (s.eighths[0] < 4) source.push_back(s.id);
    if (s.eighths[0] > far - 4) target.push_back(s.id);
  }
  return {source, target};
}

std::string dump_lattice(const Lattice& lat) {
  nlohmann::ordered_json j;
  j["schema"] = "pyrofuse.lattice/1";
  j["nx"] = lat.spec.nx;
  j["ny"] = lat.spec.ny;
  j["nz"] = lat.spec.nz;
  j["site_count"] = lat.sites.size();
  j["tetrahedron_count"] = lat.tetrahedra.size();
  auto& sites = j["sites"] = nlohmann::ordered_json::array();
  for (const auto& s : lat.sites) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["x"] = s.x();
    e["y"] = s.y();
    e["z"] = s.z();
    e["sublattice"] = s.sublattice;
    sites.push_back(std::move(e));
  }
  auto& tets = j["tetrahedra"] = nlohmann::ordered_json::array();
  for (const auto& t : lat.tetrahedra) {
    nlohmann::ordered_json e;
    e["id"] = t.id;
    e["corners"] = t.corners;
    e["parity"] = t.parity == Parity::A ? "A" : "B";
    tets.push_back(std::move(e));
  }
  j["source_sites"] = lat.source_sites;
  j["target_sites"] = lat.target_sites;
  return j.dump() + "\n";
}

Lattice load_lattice(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema") != "pyrofuse.lattice/1") throw std::invalid_argument("not a lattice dump");
  Lattice lat;
  lat.spec = {j.at("nx").get<int>(), j.at("ny").get<int>(), j.at("nz").get<int>()};
  lat.spec.validate();
  for (const auto& e : j.at("sites")) {
    Site s;
    s.id = e.at("id").get<int>();
    if (s.id != static_cast<int>(lat.sites.size())) throw std::invalid_argument("site ids must be dense");
    const std::array<double, 3> pos{e.at("x").get<double>(), e.at("y").get<double>(), e.at("z").get<double>()};
    for (int a = 0; a < 3; ++a) s.eighths[a] = static_cast<int>(std::lround(pos[a] * 8.0));
    s.sublattice = e.at("sublattice").get<int>();
    lat.sites.push_back(s);
  }
  lat.site_tets.assign(lat.sites.size(), {-1, -1});
  for (const auto& e : j.at("tetrahedra")) {
    Tetrahedron t;
    t.id = e.at("id").get<int>();
    if (t.id != static_cast<int>(lat.tetrahedra.size()))
      throw std::invalid_argument("tetrahedron ids must be dense");
    t.corners = e.at("corners").get<std::array<int, 4>>();
    t.parity = e.at("parity").get<std::string>() == "A" ? Parity::A : Parity::B;
    for (int sid : t.corners) {
      if (sid < 0 || sid >= static_cast<int>(lat.sites.size()))
        throw std::invalid_argument("corner refers to a missing site");
      auto& slot = lat.site_tets[sid];
      if (slot[1] >= 0) throw std::invalid_argument("site shared by more than two tetrahedra");
      (slot[0] < 0 ? slot[0] : slot[1]) = t.id;
    }
    lat.tetrahedra.push_back(t);
  }
  lat.source_sites = j.at("source_sites").get<std::vector<int>>();
  lat.target_sites = j.at("target_sites").get<std::vector<int>>();
  return lat;
}

}  // namespace pyrofuse
