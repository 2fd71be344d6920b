#include "ladder/run.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ladder/errors.hpp"
#include "ladder/invariants.hpp"
#include "ladder/lattice.hpp"
#include "ladder/minors.hpp"
#include "ladder/poset.hpp"

namespace ladder {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0, kInternal = 1, kBadInput = 2, kCap = 3, kDisagree = 4;

struct LoadedShape {
  LadderShape raw;
  LadderShape shape;  // normalized (or equal to raw in strict mode)
  NormalizationTrace trace;
  int r = 1;
  bool polynomial_ring = false;  // shape reduced away entirely
};

Json shape_to_json(const LadderShape& s) {
  Json arr = Json::array();
  for (const Interval& iv : s.intervals()) arr.push_back({iv.lo, iv.hi});
  return arr;
}

LadderShape shape_from_json(const Json& j) {
  if (!j.contains("intervals") || !j["intervals"].is_array())
    throw std::invalid_argument("shape file needs an \"intervals\" array");
  std::vector<Interval> rows;
  for (const Json& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw std::invalid_argument("intervals entries must be [u, v] integer pairs");
    rows.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  if (rows.empty()) throw std::invalid_argument("intervals array is empty");
  return LadderShape(rows);
}

// shape + optional copy count straight from the flags or file, unrepaired
std::pair<LadderShape, int> load_raw(const RunConfig& config) {
  if (!config.shape_text.empty()) return {parse_shape(config.shape_text), 0};
  if (config.shape_file.empty())
    throw std::invalid_argument("no shape given (use --shape or --file)");
  std::ifstream in(config.shape_file);
  if (!in) throw std::invalid_argument("cannot read shape file " + config.shape_file);
  Json j;
  try {
    j = Json::parse(in, nullptr, true, true);
  } catch (const Json::exception& e) {
    throw std::invalid_argument("shape file " + config.shape_file + ": " + e.what());
  }
  int file_r = j.contains("r") && j["r"].is_number_integer() ? j["r"].get<int>() : 0;
  return {shape_from_json(j), file_r};
}

LoadedShape load_shape(const RunConfig& config) {
  LoadedShape loaded;
  auto [raw, file_r] = load_raw(config);
  loaded.raw = std::move(raw);
  loaded.r = config.r > 0 ? config.r : (file_r > 0 ? file_r : 1);
  if (loaded.r < 1) throw std::invalid_argument("copy count r must be >= 1");

  if (config.strict) {
    require_normalized(loaded.raw);
    loaded.shape = loaded.raw;
  } else {
    NormalizeResult norm = normalize(loaded.raw);
    loaded.shape = norm.shape;
    loaded.polynomial_ring = norm.reduced_away();
    loaded.trace = std::move(norm.trace);
  }
  return loaded;
}

OracleSet resolve_oracles(const RunConfig& config, bool default_purity) {
  OracleSet set;
  if (!config.oracles_given) {
    set.purity = default_purity;
    return set;
  }
  for (const std::string& name : config.oracles) {
    if (name == "purity") set.purity = true;
    else if (name == "hvector") set.hvector = true;
    else if (name == "joinirr") set.joinirr = true;
    else if (name == "direct-hilbert") set.direct_hilbert = true;
    else if (name == "none") set = OracleSet{};
    else throw std::invalid_argument("unknown oracle '" + name + "'");
  }
  return set;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string tuple_text(const ColumnTuple& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string chain_text(const FinitePoset& poset, const Chain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += poset.at(chain[i]).to_text();
  }
  return out;
}

Json chain_json(const FinitePoset& poset, const Chain& chain) {
  Json arr = Json::array();
  for (int idx : chain) {
    const JoinIrr& e = poset.at(idx);
    arr.push_back({e.row, e.col});
  }
  return arr;
}

// ---- per-section renderers; each fills both the text and structured form

void render_trace(const LoadedShape& loaded, std::ostream& text, Json& json) {
  Json steps = Json::array();
  for (const NormalizationStep& step : loaded.trace) {
    text << "normalization: " << step.to_text() << "\n";
    steps.push_back(step.to_text());
  }
  if (!loaded.trace.empty()) json["normalization"] = steps;
}

void render_gaps_blocks(const LadderShape& shape, std::ostream& text, Json& json) {
  const GapProfile g = gaps(shape);
  std::string delta, eps, theta;
  for (std::size_t i = 0; i < g.delta.size(); ++i)
    delta += (i ? "," : "") + std::to_string(g.delta[i]);
  for (std::size_t i = 0; i < g.eps.size(); ++i) eps += (i ? "," : "") + g.eps[i].to_text();
  for (std::size_t i = 0; i < g.theta.size(); ++i) theta += (i ? "," : "") + g.theta[i].to_text();
  text << "delta: (" << delta << ")\n";
  text << "epsilon: (" << eps << ")  indexed 1.." << g.eps.size() << "\n";
  text << "theta: (" << theta << ")  indexed 0.." << g.theta.size() - 1 << "\n";
  Json jg;
  jg["delta"] = g.delta;
  Json je = Json::array(), jt = Json::array();
  for (const Gap& e : g.eps) je.push_back(e.to_text());
  for (const Gap& t : g.theta) jt.push_back(t.to_text());
  jg["epsilon"] = je;
  jg["theta"] = jt;
  json["gaps"] = jg;

  const BlockDecomposition dec = blocks(shape);
  text << "blocks:";
  Json jb = Json::array();
  for (const Block& b : dec.blocks) {
    text << " [" << b.p << "," << b.q << "] (imin " << b.i_min << ")";
    jb.push_back({{"p", b.p}, {"q", b.q}, {"imin", b.i_min}});
  }
  text << "\n";
  json["blocks"] = jb;
  json["cuts"] = dec.cuts;
}

void render_poset(const FinitePoset& poset, const Caps& caps, std::ostream& text, Json& json) {
  PurityResult pur = purity(poset, caps.max_chains);
  text << "elements: " << poset.size() << "\n";
  text << "covers: " << poset.covers().size() << "\n";
  text << "components: " << poset.component_count() << "\n";
  text << "minimal:";
  for (int i : poset.minimal_indices()) text << ' ' << poset.at(i).to_text();
  text << "\nmaximal:";
  for (int i : poset.maximal_indices()) text << ' ' << poset.at(i).to_text();
  text << "\nrank: " << pur.rank << "\n";
  text << "pure: " << yesno(pur.pure);
  if (!pur.pure)
    text << " (chains of lengths " << pur.shortest << " and " << pur.rank << ")";
  text << "\n";

  Json elements = Json::array(), covers = Json::array();
  for (const JoinIrr& e : poset.elements()) elements.push_back({e.row, e.col});
  for (auto [lo, up] : poset.covers()) covers.push_back({lo, up});
  json["elements"] = elements;
  json["covers"] = covers;
  json["components"] = poset.component_count();
  Json mins = Json::array(), maxs = Json::array();
  for (int i : poset.minimal_indices()) mins.push_back({poset.at(i).row, poset.at(i).col});
  for (int i : poset.maximal_indices()) maxs.push_back({poset.at(i).row, poset.at(i).col});
  json["minimal"] = mins;
  json["maximal"] = maxs;
  json["rank"] = pur.rank;
  json["pure"] = pur.pure;
  if (pur.witness) {
    json["witnessChains"] = {chain_json(poset, pur.witness->first),
                             chain_json(poset, pur.witness->second)};
  }
}

void render_gorenstein(const FinitePoset& poset, const GorensteinReport& rep,
                       std::ostream& text, Json& json) {
  text << "verdict: " << (rep.verdict ? "Gorenstein" : "not Gorenstein") << "\n";
  text << "method: " << to_text(rep.method) << "\n";
  for (const Witness& w : rep.witnesses)
    text << "witness: " << w.detail << " [" << w.kind << "]\n";
  if (rep.oracle_purity) {
    text << "oracle purity: " << (*rep.oracle_purity ? "Gorenstein" : "not Gorenstein")
         << (*rep.oracle_purity == rep.verdict ? " (agrees)" : " (DISAGREES)") << "\n";
    if (rep.purity_detail && rep.purity_detail->witness) {
      text << "  chain of length " << rep.purity_detail->shortest << ": "
           << chain_text(poset, rep.purity_detail->witness->first) << "\n";
      text << "  chain of length " << rep.purity_detail->rank << ": "
           << chain_text(poset, rep.purity_detail->witness->second) << "\n";
    }
  }
  if (rep.oracle_hvector)
    text << "oracle hvector: " << (*rep.oracle_hvector ? "Gorenstein" : "not Gorenstein")
         << (*rep.oracle_hvector == rep.verdict ? " (agrees)" : " (DISAGREES)") << "\n";
  if (rep.oracle_joinirr)
    text << "oracle joinirr: " << (*rep.oracle_joinirr ? "pass" : "FAIL") << "\n";
  if (rep.oracle_direct_hilbert)
    text << "oracle direct-hilbert: " << (*rep.oracle_direct_hilbert ? "pass" : "FAIL") << "\n";
  text << "f-regular: " << yesno(rep.f_regular) << "\n";
  text << "consistent: " << yesno(rep.consistent) << "\n";

  json["verdict"] = rep.verdict;
  json["method"] = to_text(rep.method);
  Json jw = Json::array();
  for (const Witness& w : rep.witnesses)
    jw.push_back({{"kind", w.kind}, {"indices", w.indices}, {"detail", w.detail}});
  json["witnesses"] = jw;
  Json oracles = Json::object();
  if (rep.oracle_purity) oracles["purity"] = *rep.oracle_purity;
  if (rep.oracle_hvector) oracles["hvector"] = *rep.oracle_hvector;
  if (rep.oracle_joinirr) oracles["joinirr"] = *rep.oracle_joinirr;
  if (rep.oracle_direct_hilbert) oracles["directHilbert"] = *rep.oracle_direct_hilbert;
  json["oracles"] = oracles;
  if (rep.purity_detail && rep.purity_detail->witness)
    json["witnessChains"] = {chain_json(poset, rep.purity_detail->witness->first),
                             chain_json(poset, rep.purity_detail->witness->second)};
  json["fRegular"] = rep.f_regular;
  json["consistent"] = rep.consistent;
}

void render_invariants(const InvariantReport& rep, std::ostream& text, Json& json) {
  text << "|P|: " << rep.p_size << "\n";
  text << "rank: " << rep.rank << "\n";
  text << "regularity: " << rep.reg << "\n";
  text << "reduction number: " << rep.reduction_number << "\n";
  text << "dimension: " << rep.dim << "\n";
  text << "a-invariant: " << rep.a_invariant << "\n";
  text << "gorenstein: " << yesno(rep.gorenstein) << "\n";
  if (rep.closed_forms)
    text << "closed forms: regularity " << rep.closed_forms->reg << ", a-invariant "
         << rep.closed_forms->a_invariant << "\n";
  json["pSize"] = rep.p_size;
  json["rank"] = rep.rank;
  json["reg"] = rep.reg;
  json["redNumber"] = rep.reduction_number;
  json["dim"] = rep.dim;
  json["aInv"] = rep.a_invariant;
  json["gorenstein"] = rep.gorenstein;
  if (rep.closed_forms)
    json["closedForms"] = {{"reg", rep.closed_forms->reg},
                           {"aInv", rep.closed_forms->a_invariant}};
}

void render_hvector(const HVector& h, std::ostream& text, Json& json) {
  text << "h-vector: " << h.to_text() << "\n";
  text << "dimension: " << h.dim << "\n";
  text << "degree: " << h.degree() << "\n";
  text << "symmetric: " << yesno(h.symmetric()) << "\n";
  Json coeffs = Json::array();
  for (const BigInt& c : h.coeffs) coeffs.push_back(c.str());
  json["coeffs"] = coeffs;
  json["dim"] = h.dim;
  json["degree"] = h.degree();
  json["symmetric"] = h.symmetric();
}

struct Sections {
  std::ostringstream text;
  Json json;
  int status = kOk;
};

const char* kPolynomialRingNote = "shape reduced away entirely: fiber is a polynomial ring";

int run_subcommand(const std::string& sub, const RunConfig& config, Sections& out) {
  if (sub == "validate") {
    LadderShape raw = load_raw(config).first;
    ValidationReport rep = validate(raw);
    out.text << "shape: " << raw.to_text() << "\n";
    out.json["shape"] = raw.to_text();
    out.json["intervals"] = shape_to_json(raw);
    Json viol = Json::array();
    if (rep.ok()) {
      out.text << "ok\n";
    } else {
      for (const std::string& v : rep.violations) {
        out.text << "violation: " << v << "\n";
        viol.push_back(v);
      }
    }
    out.json["ok"] = rep.ok();
    out.json["violations"] = viol;
    return rep.ok() ? kOk : kBadInput;
  }

  LoadedShape loaded = load_shape(config);
  render_trace(loaded, out.text, out.json);
  out.json["shape"] = loaded.shape.to_text();
  out.json["intervals"] = shape_to_json(loaded.shape);
  out.json["r"] = loaded.r;

  if (loaded.polynomial_ring && sub != "normalize" && sub != "poset") {
    out.text << kPolynomialRingNote << "\n";
    if (sub == "gorenstein" || sub == "all") out.text << "verdict: Gorenstein\n";
    out.json["polynomialRing"] = true;
    if (sub == "gorenstein" || sub == "all") out.json["verdict"] = true;
    return kOk;
  }

  if (sub == "normalize") {
    if (loaded.polynomial_ring) {
      out.text << kPolynomialRingNote << "\n";
      out.json["polynomialRing"] = true;
    } else {
      out.text << "normalized: " << loaded.shape.to_text() << "\n";
      if (loaded.trace.empty()) out.text << "trace: (empty)\n";
    }
    return kOk;
  }

  if (sub == "lattice") {
    BigInt count = count_lattice(loaded.shape);
    out.text << "count: " << count << "\n";
    out.json["count"] = count.str();
    if (count > config.caps.max_lattice) {
      out.text << "elements: skipped (count exceeds --max-lattice "
               << config.caps.max_lattice << ")\n";
      return kCap;
    }
    out.text << "elements:\n";
    Json els = Json::array();
    for (const ColumnTuple& c : enumerate_lattice(loaded.shape, config.caps.max_lattice)) {
      out.text << tuple_text(c) << "\n";
      els.push_back(c);
    }
    out.json["elements"] = els;
    return kOk;
  }

  if (sub == "poset") {
    FinitePoset poset(loaded.shape, loaded.r);
    if (config.format == "dot") {
      out.text.str("");
      out.text << to_dot(poset);
      return kOk;
    }
    render_poset(poset, config.caps, out.text, out.json);
    out.text << "grid:\n" << to_grid(poset, loaded.shape);
    out.json["dot"] = to_dot(poset);
    out.json["grid"] = to_grid(poset, loaded.shape);
    return kOk;
  }

  if (sub == "gorenstein") {
    FinitePoset poset(loaded.shape, loaded.r);
    GorensteinReport rep =
        decide_gorenstein(loaded.shape, loaded.r, resolve_oracles(config, true), config.caps);
    render_gorenstein(poset, rep, out.text, out.json);
    return rep.consistent ? kOk : kDisagree;
  }

  if (sub == "invariants") {
    render_invariants(invariants(loaded.shape, loaded.r, config.caps), out.text, out.json);
    return kOk;
  }

  if (sub == "hvector") {
    render_hvector(h_vector(loaded.shape, loaded.r, config.caps), out.text, out.json);
    return kOk;
  }

  if (sub == "relations") {
    std::vector<HibiRelation> rels = hibi_relations(loaded.shape, loaded.r, config.caps);
    out.text << "relations: " << rels.size() << "\n";
    Json arr = Json::array();
    for (const HibiRelation& rel : rels) {
      out.text << rel.to_text() << "\n";
      arr.push_back({{"a", rel.a.to_text()},
                     {"b", rel.b.to_text()},
                     {"meet", rel.meet.to_text()},
                     {"join", rel.join.to_text()}});
    }
    out.json["relations"] = arr;
    return kOk;
  }

  if (sub == "minors") {
    BigInt count = count_lattice(loaded.shape);
    out.text << "generators: " << count << "\n";
    out.json["generators"] = count.str();
    DiagonalCheck check = diagonal_leading_check(loaded.shape, config.caps);
    out.text << "diagonal leading terms: " << (check.ok ? "ok" : "FAIL") << "\n";
    out.json["diagonalLeading"] = check.ok;
    if (check.counterexample) {
      out.text << "counterexample: " << tuple_text(*check.counterexample) << "\n";
      out.json["counterexample"] = *check.counterexample;
    }
    if (count <= 100) {
      Json arr = Json::array();
      for (const ColumnTuple& c : enumerate_lattice(loaded.shape, config.caps.max_lattice)) {
        Polynomial det = minor_det(loaded.shape, c, config.caps);
        out.text << "det[" << tuple_text(c) << "] = " << det.to_text() << "\n";
        arr.push_back({{"tuple", c}, {"poly", det.to_text()}});
      }
      out.json["minors"] = arr;
    } else {
      out.text << "minors: skipped (more than 100 generators)\n";
    }
    return check.ok ? kOk : kInternal;
  }

  if (sub == "all") {
    out.text << "shape: " << loaded.shape.to_text() << "  (r = " << loaded.r << ")\n";
    render_gaps_blocks(loaded.shape, out.text, out.json);
    BigInt count = count_lattice(loaded.shape);
    out.text << "lattice count: " << count << "\n";
    out.json["count"] = count.str();

    FinitePoset poset(loaded.shape, loaded.r);
    out.text << "--- poset ---\n";
    Json jposet;
    render_poset(poset, config.caps, out.text, jposet);
    out.json["poset"] = jposet;

    out.text << "--- gorenstein ---\n";
    GorensteinReport rep =
        decide_gorenstein(loaded.shape, loaded.r, resolve_oracles(config, true), config.caps);
    Json jgor;
    render_gorenstein(poset, rep, out.text, jgor);
    out.json["gorenstein"] = jgor;

    out.text << "--- invariants ---\n";
    Json jinv;
    render_invariants(invariants(loaded.shape, loaded.r, config.caps), out.text, jinv);
    out.json["invariants"] = jinv;

    out.text << "--- hilbert ---\n";
    try {
      Json jh;
      render_hvector(h_vector(loaded.shape, loaded.r, config.caps), out.text, jh);
      out.json["hvector"] = jh;
    } catch (const CapExceeded& e) {
      out.text << "h-vector: skipped (" << e.what() << ")\n";
      out.json["hvector"] = nullptr;
    }
    return rep.consistent ? kOk : kDisagree;
  }

  throw std::invalid_argument("unknown subcommand '" + sub + "'");
}

}  // namespace

RunResult run(const std::string& subcommand, const RunConfig& config) {
  if (config.format != "text" && config.format != "structured" && config.format != "dot")
    return {kBadInput, "unknown format '" + config.format + "'\n"};
  if (config.format == "dot" && subcommand != "poset")
    return {kBadInput, "dot format only applies to the poset subcommand\n"};
  Sections out;
  int status = kOk;
  try {
    status = run_subcommand(subcommand, config, out);
  } catch (const CapExceeded& e) {
    return {kCap, std::string("cap exceeded: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kBadInput, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInternal, std::string("internal error: ") + e.what() + "\n"};
  }
  out.json["status"] = status;
  if (config.format == "structured") return {status, out.json.dump(2) + "\n"};
  return {status, out.text.str()};
}

RunResult run_batch(const std::string& manifest_path, const RunConfig& config) {
  Json manifest;
  try {
    std::ifstream in(manifest_path);
    if (!in) throw std::invalid_argument("cannot read manifest " + manifest_path);
    manifest = Json::parse(in, nullptr, true, true);
  } catch (const std::exception& e) {
    return {kBadInput, std::string("error: ") + e.what() + "\n"};
  }
  if (!manifest.is_array()) return {kBadInput, "error: manifest must be a JSON array\n"};

  std::ostringstream text;
  Json jrows = Json::array();
  int status = kOk;
  long long gorenstein_count = 0, other_count = 0;
  for (const Json& entry : manifest) {
    RunConfig entry_config = config;
    entry_config.shape_file.clear();
    try {
      if (entry.is_string()) {
        entry_config.shape_text = entry.get<std::string>();
      } else if (entry.is_object()) {
        if (entry.contains("shape")) {
          entry_config.shape_text = entry["shape"].get<std::string>();
        } else {
          entry_config.shape_text = shape_from_json(entry).to_text();
        }
        if (entry.contains("r") && config.r == 0) entry_config.r = entry["r"].get<int>();
      } else {
        throw std::invalid_argument("manifest entries must be strings or objects");
      }
      LoadedShape loaded = load_shape(entry_config);
      Json row;
      row["shape"] = loaded.shape.to_text();
      row["r"] = loaded.r;
      if (loaded.polynomial_ring) {
        text << entry_config.shape_text << "  r=" << loaded.r << "  polynomial ring\n";
        row["polynomialRing"] = true;
        ++gorenstein_count;
        jrows.push_back(row);
        continue;
      }
      GorensteinReport rep = decide_gorenstein(loaded.shape, loaded.r,
                                               resolve_oracles(entry_config, true),
                                               entry_config.caps);
      BigInt count = count_lattice(loaded.shape);
      text << loaded.shape.to_text() << "  r=" << loaded.r << "  |L|=" << count << "  "
           << (rep.verdict ? "Gorenstein" : "not Gorenstein") << "  [" << to_text(rep.method)
           << "]" << (rep.consistent ? "" : "  INCONSISTENT") << "\n";
      row["count"] = count.str();
      row["verdict"] = rep.verdict;
      row["method"] = to_text(rep.method);
      row["consistent"] = rep.consistent;
      jrows.push_back(row);
      (rep.verdict ? gorenstein_count : other_count)++;
      if (!rep.consistent) status = std::max(status, kDisagree);
    } catch (const CapExceeded& e) {
      text << "entry failed (cap): " << e.what() << "\n";
      status = std::max(status, kCap);
    } catch (const std::exception& e) {
      text << "entry failed: " << e.what() << "\n";
      status = std::max(status, kBadInput);
    }
  }
  text << "total: " << manifest.size() << "  gorenstein: " << gorenstein_count
       << "  non-gorenstein: " << other_count << "\n";
  Json jout;
  jout["rows"] = jrows;
  jout["total"] = manifest.size();
  jout["gorenstein"] = gorenstein_count;
  jout["nonGorenstein"] = other_count;
  jout["status"] = status;
  if (config.format == "structured") return {status, jout.dump(2) + "\n"};
  return {status, text.str()};
}

}  // namespace ladder
