#include "report.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "choice.hpp"
#include "coxeter.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "spectral.hpp"
#include "springer_tables.hpp"
#include "strata.hpp"

namespace finlang {

using nlohmann::ordered_json;

namespace {

using Breakdown = std::map<std::pair<std::string, std::string>, Int>;

ordered_json group_json(GroupSpec const& g, CoxeterGroup const& w0) {
  ordered_json j;
  j["name"] = g.name;
  j["type"] = g.type_label;
  j["isogeny"] = g.isogeny;
  j["q"] = g.q;
  j["p"] = g.p;
  j["twist"] = g.twist;
  j["connected"] = g.connected;
  j["rank"] = g.datum.rank;
  j["component_group"] = extended_weyl(g, w0).size() / w0.size();
  return j;
}

ordered_json conventions_json(GroupSpec const& g) {
  ordered_json j;
  j["q_sqrt"] = "positive square root of q, fixed once in Qlbar";
  j["whittaker"] = "counts do not depend on the Whittaker datum; packets are labelled relative to one fixed datum";
  j["whittaker_torsor_size"] = whittaker_torsor_size(g);
  j["table_version"] = table_version();
  return j;
}

ordered_json spectral_json(SpectralResult const& r, Breakdown& agg) {
  std::vector<std::pair<std::tuple<TorsionPoint, std::string, std::string>, ordered_json>> rows;
  for (auto const& st : r.strata) {
    auto const& ss = r.classes[st.ss];
    ordered_json j;
    j["ss"] = ss.label();
    j["orbit_size"] = ss.orbit_size;
    j["pseudo_levi"] = dual_levi_label(ss.pseudo_levi.datum);
    j["unipotent"] = st.pair.label;
    j["abar"] = describe_group(st.ext.abar);
    j["count"] = st.count;

    std::vector<std::tuple<int, int, int, std::string>> packets;
    for (auto const& m : st.mbar)
      packets.emplace_back(m.irr_count, m.x_class_size, static_cast<int>(m.centralizer.size()),
                           describe_group(st.ext.abar.subgroup(m.centralizer)));
    std::sort(packets.begin(), packets.end());
    ordered_json list = ordered_json::array();
    for (std::size_t k = 0; k < packets.size(); ++k) {
      auto const& [size, cls, cent, group] = packets[k];
      ordered_json pj;
      pj["x"] = "x" + std::to_string(k);
      pj["class_size"] = cls;
      pj["packet_group"] = group;
      pj["packet_group_order"] = cent;
      pj["packet_size"] = size;
      list.push_back(pj);
    }
    j["packets"] = list;
    agg[{ss.label(), st.pair.label}] += st.count;
    rows.emplace_back(std::make_tuple(ss.canonical, st.pair.label, j.dump()), std::move(j));
  }
  std::sort(rows.begin(), rows.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
  ordered_json out = ordered_json::array();
  for (auto& row : rows) out.push_back(std::move(row.second));
  return out;
}

ordered_json stratified_json(StratifiedResult const& r, Breakdown& agg) {
  ordered_json out = ordered_json::array();
  // Strata come out grouped by orbit (sorted), then by unipotent label and beta.
  for (auto const& st : r.strata) {
    auto const& o = r.orbits[st.orbit];
    ordered_json j;
    j["ss"] = o.label();
    j["orbit_size"] = o.orbit_size;
    j["pseudo_levi"] = st.pseudo_levi;
    j["unipotent"] = st.unipotent;
    j["cell_size"] = st.cell_size;
    j["family_group"] = st.family_group;
    j["omega_order"] = st.omega_order;
    j["beta"] = st.beta;
    j["count"] = st.count;
    agg[{o.label(), st.unipotent}] += st.count;
    out.push_back(std::move(j));
  }
  return out;
}

Pipeline resolve(GroupSpec const& g, Pipeline p, bool comparing) {
  if (p != Pipeline::kAuto) return p;
  if (!g.connected) return Pipeline::kStratified;
  return comparing ? Pipeline::kBoth : Pipeline::kSpectral;
}

CountReport build(GroupSpec const& g, Pipeline requested, std::optional<std::uint64_t> seed, bool comparing) {
  Pipeline const p = resolve(g, requested, comparing);
  Chooser choose = seed ? Chooser(*seed) : Chooser();
  CoxeterGroup const w0 = CoxeterGroup::from_datum(g.datum);

  CountReport rep;
  ordered_json& d = rep.doc;
  d["report"] = comparing ? "compare" : "count";
  d["group"] = group_json(g, w0);
  d["q"] = g.q;
  d["pipeline"] = pipeline_name(p);

  Breakdown spectral_agg, stratified_agg;
  std::optional<Int> spectral_total, stratified_total;
  if (p == Pipeline::kSpectral || p == Pipeline::kBoth) {
    SpectralResult const r = run_spectral(g, choose);
    d["strata"] = spectral_json(r, spectral_agg);
    spectral_total = r.total;
  }
  if (p == Pipeline::kStratified || p == Pipeline::kBoth) {
    StratifiedResult const r = run_stratified(g, choose);
    d["stratified_strata"] = stratified_json(r, stratified_agg);
    stratified_total = r.total;
  }
  rep.total = spectral_total ? *spectral_total : *stratified_total;
  d["total"] = rep.total;
  if (spectral_total && stratified_total) {
    d["stratified_total"] = *stratified_total;
    rep.pipelines_agree = *spectral_total == *stratified_total && spectral_agg == stratified_agg;
    d["pipelines_agree"] = rep.pipelines_agree;
  }
  if (comparing) {
    if (g.oracle.empty()) throw_unsupported("group '" + g.name + "' has no brute-force oracle");
    FiniteMatrixGroup const og = build_group(g.oracle, static_cast<int>(g.q));
    Int const oracle_total = static_cast<Int>(class_count(og));
    rep.has_match = true;
    rep.match = oracle_total == rep.total && rep.pipelines_agree;
    d["oracle_total"] = oracle_total;
    d["match"] = rep.match;
  }
  d["conventions"] = conventions_json(g);
  return rep;
}

}  // namespace

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::kAuto: return "auto";
    case Pipeline::kSpectral: return "spectral";
    case Pipeline::kStratified: return "stratified";
    case Pipeline::kBoth: return "both";
  }
  return "auto";
}

std::string CountReport::text() const { return doc.dump(2) + "\n"; }

CountReport count_report(GroupSpec const& g, Pipeline p, std::optional<std::uint64_t> seed) {
  return build(g, p, seed, false);
}

CountReport compare_report(GroupSpec const& g, Pipeline p, std::optional<std::uint64_t> seed) {
  return build(g, p, seed, true);
}

std::string cells_report(std::string const& type) {
  CoxeterGroup const w = standard_weyl(type);
  KLTable const kl(w);
  CellPartition const cp = cells(w, kl);
  auto const& recs = special_classes(type);

  ordered_json d;
  d["report"] = "cells";
  d["type"] = type;
  d["weyl_order"] = w.size();
  d["left_cells"] = cp.left_cells.size();
  d["right_cells"] = cp.right_cells.size();
  ordered_json list = ordered_json::array();
  for (std::size_t id = 0; id < cp.two_sided_cells.size(); ++id) {
    ordered_json c;
    c["id"] = id;
    c["size"] = cp.two_sided_cells[id].size();
    std::vector<std::string> names;
    for (int x : cp.two_sided_cells[id]) names.push_back(w.name(x));
    c["elements"] = names;
    for (auto const& r : recs)
      if (r.cell_id == static_cast<int>(id)) {
        c["special_class"] = r.class_label;
        c["family_group"] = describe_group(family_group(type, r.cell_id).group);
      }
    list.push_back(std::move(c));
  }
  d["two_sided_cells"] = list;
  return d.dump(2) + "\n";
}

std::string tables_report(std::string const& type) {
  CoxeterGroup const w = standard_weyl(type);
  KLTable const kl(w);
  CellPartition const cp = cells(w, kl);

  ordered_json d;
  d["report"] = "tables";
  d["type"] = type;
  d["table_version"] = table_version();
  ordered_json list = ordered_json::array();
  for (auto const& r : special_classes(type)) {
    auto const fam = family_group(type, r.cell_id);
    ordered_json c;
    c["class"] = r.class_label;
    c["dim"] = r.dim;
    c["a_of_u"] = describe_group(r.a_of_u);
    c["abar_of_u"] = describe_group(r.abar_of_u);
    c["dual"] = r.dual_class;
    c["cell"] = r.cell_id;
    c["cell_size"] = cp.two_sided_cells[r.cell_id].size();
    c["family_group"] = describe_group(fam.group);
    c["exceptional"] = fam.is_exceptional;
    list.push_back(std::move(c));
  }
  d["classes"] = list;
  return d.dump(2) + "\n";
}

std::string oracle_report(std::string const& name, Int q) {
  auto const names = oracle_group_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw_unsupported("no oracle for group '" + name + "'");
  FiniteMatrixGroup const g = build_group(name, static_cast<int>(q));
  ordered_json d;
  d["report"] = "oracle";
  d["group"] = name;
  d["q"] = q;
  d["order"] = g.order();
  d["expected_order"] = expected_order(name, static_cast<std::uint64_t>(q));
  d["class_count"] = class_count(g);
  return d.dump(2) + "\n";
}

}  // namespace finlang
