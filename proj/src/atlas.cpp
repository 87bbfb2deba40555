#include "polycells/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace polycells {

std::vector<AtlasRecord> build_atlas(int n, int k) {
  std::vector<AtlasRecord> out;
  for (auto& cls : enumerate_classes(n, k)) {
    auto iso = isotropy_group(cls.representative);
    auto check = kappa_from_isotropy(n, k, iso);
    out.push_back({std::move(cls), std::move(iso), std::move(check)});
  }
  return out;
}

std::string diagonal_list(const Dissection& D) {
  std::string s;
  for (const auto& d : D.diagonals()) {
    if (!s.empty()) s += ' ';
    s += '(' + std::to_string(d.a) + ' ' + std::to_string(d.b) + ')';
  }
  return s;
}

void write_atlas_csv(std::ostream& out, const std::vector<AtlasRecord>& atlas) {
  out << "n,k,i,label,code,kappa,signature,diagonals,z2Count,dihedralOrder,order,kappaCheck\n";
  for (const auto& r : atlas) {
    const auto& c = r.cls;
    out << c.n << ',' << c.k << ',' << c.index << ',' << c.label() << ',' << c.code.str() << ','
        << c.kappa.get_str() << ',' << c.signature.to_string() << ',' << diagonal_list(c.representative)
        << ',' << r.isotropy.z2_count << ','
        << (r.isotropy.dihedral_order ? std::to_string(*r.isotropy.dihedral_order) : "") << ','
        << r.isotropy.order.get_str() << ',' << r.kappa_check.get_str() << '\n';
  }
}

nlohmann::json atlas_json(int n, int k, const std::vector<AtlasRecord>& atlas) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& r : atlas) {
    const auto& c = r.cls;
    nlohmann::json diagonals = nlohmann::json::array();
    for (const auto& d : c.representative.diagonals()) diagonals.push_back({d.a, d.b});
    nlohmann::json iso{{"z2Count", r.isotropy.z2_count},
                       {"dihedralOrder", nullptr},
                       {"order", json_integer(r.isotropy.order)},
                       {"group", r.isotropy.to_string()},
                       {"kappaCheck", json_integer(r.kappa_check)}};
    if (r.isotropy.dihedral_order) iso["dihedralOrder"] = *r.isotropy.dihedral_order;
    classes.push_back({{"n", c.n},
                       {"k", c.k},
                       {"i", c.index},
                       {"label", c.label()},
                       {"code", c.code.str()},
                       {"kappa", json_integer(c.kappa)},
                       {"signature", c.signature.to_string()},
                       {"diagonals", diagonals},
                       {"isotropy", iso}});
  }
  return {{"schemaVersion", 1}, {"n", n}, {"k", k}, {"classes", classes}};
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

void write_atlas_svg(std::ostream& out, int n, int k, const std::vector<AtlasRecord>& atlas) {
  constexpr int kCell = 160;
  constexpr int kColumns = 6;
  constexpr double kRadius = 56.0;
  const int count = static_cast<int>(atlas.size());
  const int columns = std::max(1, std::min(kColumns, count));
  const int rows = std::max(1, (count + kColumns - 1) / kColumns);
  const int width = columns * kCell;
  const int height = rows * kCell + 30;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>classes of the " << n << "-gon with " << k << " diagonals</title>\n"
      << "<text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">n = " << n
      << ", k = " << k << ", " << count << " classes</text>\n";

  for (int idx = 0; idx < count; ++idx) {
    const auto& c = atlas[idx].cls;
    const double cx = (idx % kColumns) * kCell + kCell / 2.0;
    const double cy = 30 + (idx / kColumns) * kCell + kCell / 2.0 - 8;
    std::vector<std::pair<double, double>> pts;
    for (int v = 0; v < n; ++v) {
      // Vertex 0 at the bottom, counterclockwise on screen.
      const double theta = -std::numbers::pi / 2 - 2 * std::numbers::pi * v / n;
      pts.emplace_back(cx + kRadius * std::cos(theta), cy - kRadius * std::sin(theta));
    }
    out << "<g id=\"class-" << c.label() << "\">\n<polygon points=\"";
    for (int v = 0; v < n; ++v) out << (v ? " " : "") << fmt(pts[v].first) << ',' << fmt(pts[v].second);
    out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const auto& d : c.representative.diagonals())
      out << "<line x1=\"" << fmt(pts[d.a].first) << "\" y1=\"" << fmt(pts[d.a].second) << "\" x2=\""
          << fmt(pts[d.b].first) << "\" y2=\"" << fmt(pts[d.b].second)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy + kRadius + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << c.label()
        << "  &#954; = " << c.kappa.get_str() << "</text>\n</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace polycells
