#include "unfolder/report.hpp"

#include <sstream>

#include "unfolder/diagnostics.hpp"
#include "unfolder/error.hpp"

namespace unfolder {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_name(const PseudoComplex& p, int cls) {
  const auto& names = p.vertex_names();
  auto i = static_cast<std::size_t>(cls);
  if (i < names.size() && !names[i].empty()) return names[i];
  return "v" + std::to_string(cls);
}

}  // namespace

std::string analyze_report(const Document& doc, int base) {
  PseudoComplex p = doc.pseudo();
  const auto& fc = p.faces();
  std::ostringstream out;
  out << "kind: " << (doc.is_pseudo() ? "pseudo" : "simplicial") << "\n";
  out << "dim: " << p.dim() << "\n";
  out << "facets: " << p.facet_count() << "\n";
  out << "face counts:";
  for (long c : fc.counts()) out << " " << c;
  out << "\n";
  out << "simplicial: " << yes_no(is_simplicial(p).simplicial) << "\n";

  int components = 0;
  p.dual_graph().components(&components);
  bool sc = is_strongly_connected(p);
  out << "strongly connected: " << yes_no(sc) << " (" << components << " dual graph component"
      << (components == 1 ? "" : "s") << ")\n";
  auto lsc = is_locally_strongly_connected(p);
  out << "locally strongly connected: " << yes_no(lsc.connected);
  if (!lsc.connected) out << " (star of face class " << lsc.witness << " splits)";
  out << "\n";
  bool balanced = p.facet_count() > 0 && balanced_coloring(p, base).has_value();
  out << "balanced: " << yes_no(balanced) << "\n";

  if (sc) {
    auto pg = projectivity_group(p, base);
    out << "Pi order: " << pg.group.order() << "\n";
    out << "Pi generators:";
    bool any = false;
    for (const auto& g : pg.group.generators()) {
      if (g.perm.is_identity()) continue;
      out << (any ? ", " : " ") << g.perm.cycles() << " (gluing " << g.source << ")";
      any = true;
    }
    if (!any) out << " none";
    out << "\n";
    out << "Pi orbits:";
    for (const auto& orbit : pg.group.orbits()) {
      out << " {";
      for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? "," : "") << orbit[i];
      out << "}";
    }
    out << "\n";
  } else {
    out << "Pi order: undefined (not strongly connected)\n";
  }

  if (lsc.connected && p.dim() >= 2) {
    auto odd = odd_subcomplex(p);
    out << "odd faces: " << odd.odd_faces.size();
    for (int cls : odd.odd_faces) {
      out << " {";
      auto vs = fc.vertex_set(cls);
      for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vertex_name(p, vs[i]);
      out << "}";
    }
    out << "\n";
  } else if (p.dim() < 2) {
    out << "odd faces: 0\n";
  } else {
    out << "odd faces: undefined (not locally strongly connected)\n";
  }

  out << "pseudo-manifold: " << to_string(pseudo_manifold_kind(p)) << "\n";
  out << "orientable: " << yes_no(is_orientable(p)) << "\n";
  out << "euler characteristic: " << euler_characteristic(p) << "\n";
  if (!doc.projection.empty()) out << "projection: " << doc.projection.size() << " facets mapped\n";
  return out.str();
}

}  // namespace unfolder
