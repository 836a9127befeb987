#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spcob/checks.hpp"
#include "spcob/hgr_ring.hpp"
#include "spcob/json_io.hpp"
#include "spcob/partition.hpp"
#include "spcob/pclass.hpp"
#include "spcob/report.hpp"
#include "spcob/spmat.hpp"
#include "spcob/stable.hpp"
#include "spcob/symfun.hpp"

using namespace spcob;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  bool pass = true;
};

Output from_report(const Report& r) { return {to_json(r), r.pass}; }

// Inline JSON wins; otherwise --file is read and, when it is an object with
// the requested key, that member is used.
Json read_input(const std::string& inline_json, const std::string& file, const std::string& key) {
  std::string text = inline_json;
  bool from_file = false;
  if (text.empty()) {
    if (file.empty()) throw UsageError("missing --" + key + " (inline JSON or --file)");
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    from_file = true;
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON for --" + key + ": " + e.what());
  }
  if (from_file && doc.is_object() && doc.contains(key)) return doc[key];
  return doc;
}

EPoly as_epoly(const SymPoly& p) {
  if (p.basis == "e") return p.e;
  if (p.basis == "schur") return schur_to_epoly(p.schur);
  return schur_to_epoly(xpoly_to_schur(p.x));
}

SchurVector as_schur(const SymPoly& p) {
  if (p.basis == "schur") return p.schur;
  if (p.basis == "e") return epoly_to_schur(p.e);
  return xpoly_to_schur(p.x);
}

// Elements of a ring may be given with their ring descriptor or as plain
// symmetric polynomials, which are reduced into `ring`.
GrassElem as_grass(const Json& j, const GrassRing& ring) {
  if (j.is_object() && j.contains("ring")) {
    GrassElem x = grass_elem_from_json(j);
    if (!(x.ring() == ring)) throw UsageError("element lives in " + x.ring().to_string());
    return x;
  }
  return normal_form(as_epoly(sympoly_from_json(j)), ring);
}

// ---------------------------------------------------------------- text output

std::string render_scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::optional<std::string> render_poly(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  try {
    if (j.contains("text")) return j["text"].get<std::string>();
    if (j.contains("basis") && j.contains("terms")) {
      const SymPoly p = sympoly_from_json(j);
      std::string s = p.basis == "e" ? p.e.to_string()
                      : p.basis == "x" ? p.x.to_string()
                                       : p.schur.to_string();
      if (j.contains("ring")) s += "  in " + GrassRing(j["ring"]["r"], j["ring"]["n"]).to_string();
      return s;
    }
    if (j.contains("vars") && j.contains("trunc") && j.contains("terms")) {
      return homseries_from_json(j).to_string();
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (auto poly = render_poly(j)) {
    rows.emplace_back(path, *poly);
  } else if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j[0].is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, render_scalar(j));
  }
}

std::string render_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (j.is_object() && !render_poly(j)) {
    for (const auto& [k, v] : j.items()) flatten(v, k, rows);
  } else {
    flatten(j, "result", rows);
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- commands

struct Cli {
  CLI::App app{"Exact cohomology computations for quaternionic Grassmannians and symplectic Thom spectra",
               "spcob"};
  std::string format;
  std::function<Output()> action;

  // Shared option storage.
  std::string lambda;
  int vars = 1;
  std::string basis = "e";
  std::string poly_a, poly_b, poly, file, to = "schur";
  int r = 1, s = 1, n = 1, m = 0, trunc = 4, size = 4, blocks = 5, factors = 4, roots = 2;
  int max_r = 3, max_n = 6, max_deg = 8, max_roots = 5;
  std::vector<int> ns;
  std::string split = "1,1";
  std::string opaque;
  bool want_rank = false, want_basis = false, want_multiply = false, want_matrix = false;
  std::string normal_form_input;
  std::optional<int> target_n;

  Cli() {
    app.require_subcommand(1);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    add_schur();
    add_ring();
    add_map();
    add_verify();
    add_stable();
    add_pclass();
    add_spmat();
    add_suite();
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<Output()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([this, body = std::move(body)] { action = body; });
    return sub;
  }

  void add_schur() {
    auto* g = app.add_subcommand("schur", "Symmetric functions")->require_subcommand(1);
    auto* expand = leaf(g, "expand", "Schur polynomial s_lambda in the e, h-determinant or x basis", [this] {
      const Partition l = parse_partition(lambda);
      if (basis == "e") return Output{to_json(schur_jt_e(l, vars))};
      if (basis == "h") return Output{to_json(schur_jt_h(l, vars))};
      return Output{to_json(schur_alternant(l, vars))};
    });
    expand->add_option("--lambda", lambda, "Partition, e.g. 2,1")->required();
    expand->add_option("--vars", vars, "Number of variables r")->required()->check(CLI::PositiveNumber);
    expand->add_option("--basis", basis, "e | h | x")->check(CLI::IsMember({"e", "h", "x"}));

    auto* mult = leaf(g, "multiply", "Product of two symmetric polynomials in the Schur basis", [this] {
      const SchurVector a = as_schur(sympoly_from_json(read_input(poly_a, file, "a")));
      const SchurVector b = as_schur(sympoly_from_json(read_input(poly_b, file, "b")));
      return Output{to_json(multiply_schur(a, b))};
    });
    mult->add_option("--a", poly_a, "First factor (JSON)");
    mult->add_option("--b", poly_b, "Second factor (JSON)");
    mult->add_option("--file", file, "JSON file with members a and b");

    auto* conv = leaf(g, "convert", "Change of basis between e, x and schur", [this] {
      const SymPoly p = sympoly_from_json(read_input(poly, file, "poly"));
      if (to == "schur") return Output{to_json(as_schur(p))};
      if (to == "e") return Output{to_json(as_epoly(p))};
      return Output{to_json(epoly_to_x(as_epoly(p)))};
    });
    conv->add_option("--poly", poly, "Polynomial (JSON)");
    conv->add_option("--file", file, "JSON file holding the polynomial");
    conv->add_option("--to", to, "e | x | schur")->check(CLI::IsMember({"e", "x", "schur"}));

    auto* h = leaf(g, "h", "Complete symmetric polynomial h_m", [this] {
      if (basis == "x") return Output{to_json(h_expand_x(m, vars))};
      return Output{to_json(h_poly(m, vars))};
    });
    h->add_option("--m", m, "Degree")->required();
    h->add_option("--vars", vars, "Number of variables r")->required()->check(CLI::PositiveNumber);
    h->add_option("--basis", basis, "e | x")->check(CLI::IsMember({"e", "x"}));

    auto* part = leaf(g, "partition", "Conjugate and weight of a partition", [this] {
      const Partition l = parse_partition(lambda);
      return Output{Json{{"partition", to_json(l)},
                         {"conjugate", to_json(conjugate(l))},
                         {"weight", weight(l)},
                         {"plus_column", to_json(add_full_column(l, std::max(vars, l.length())))}}};
    });
    part->add_option("--lambda", lambda, "Partition, e.g. 3,1")->required();
    part->add_option("--vars", vars, "Column height for plus_column (default l(lambda))");

    auto* box = leaf(g, "box", "Partitions in an r x m box", [this] {
      Json list = Json::array();
      for (const auto& l : enumerate_box(r, m)) list.push_back(to_json(l));
      return Output{Json{{"r", r}, {"m", m}, {"count", list.size()}, {"partitions", list}}};
    });
    box->add_option("--r", r, "Rows")->required()->check(CLI::NonNegativeNumber);
    box->add_option("--m", m, "Columns")->required()->check(CLI::NonNegativeNumber);
  }

  void add_ring() {
    auto* g = app.add_subcommand("ring", "Quaternionic Grassmannian cohomology rings")->require_subcommand(1);
    auto* hgr = leaf(g, "hgr", "Queries on HGr(r, n)", [this] {
      const GrassRing ring(r, n);
      if (want_rank) return Output{Json{{"rank", rank(ring).get_si()}}};
      if (want_basis) {
        Json list = Json::array();
        for (const auto& l : ring.basis()) list.push_back(to_json(l));
        return Output{Json{{"ring", to_json(ring)}, {"basis", list}}};
      }
      if (!want_multiply) {
        const std::string inline_json = normal_form_input == "-" ? "" : normal_form_input;
        return Output{to_json(as_grass(read_input(inline_json, file, "poly"), ring))};
      }
      const GrassElem a = as_grass(read_input(poly_a, file, "a"), ring);
      const GrassElem b = as_grass(read_input(poly_b, file, "b"), ring);
      return Output{to_json(multiply(a, b))};
    });
    hgr->add_option("--r", r, "Rank r")->required()->check(CLI::NonNegativeNumber);
    hgr->add_option("--n", n, "Ambient n")->required()->check(CLI::NonNegativeNumber);
    auto* mode = hgr->add_option_group("mode");
    mode->add_flag("--rank", want_rank, "Print the rank C(n, r)");
    mode->add_flag("--basis", want_basis, "List the Schur basis");
    mode->add_option("--normal-form", normal_form_input, "Reduce a polynomial (JSON; '-' for --file)");
    mode->add_flag("--multiply", want_multiply, "Multiply --a and --b");
    mode->require_option(1);
    hgr->add_option("--a", poly_a, "First factor (JSON)");
    hgr->add_option("--b", poly_b, "Second factor (JSON)");
    hgr->add_option("--file", file, "JSON input file");
  }

  void add_map() {
    auto* g = app.add_subcommand("map", "Maps between Grassmannian rings")->require_subcommand(1);
    auto elem = [this] { return grass_elem_from_json(read_input(poly, file, "elem")); };
    auto* alpha = leaf(g, "alpha", "Restriction (r, n+1) -> (r, n)", [this, elem] {
      return Output{to_json(alpha_map(elem()))};
    });
    auto* beta = leaf(g, "beta", "Restriction (r+1, n+1) -> (r, n)", [this, elem] {
      return Output{to_json(beta_map(elem()))};
    });
    auto* thom = leaf(g, "thom", "Multiplication by e_r from (r, n-1) into (r, n)", [this, elem] {
      const GrassElem x = elem();
      const int target = target_n ? *target_n : x.ring().n() + 1;
      return Output{to_json(thom_inclusion(x, GrassRing(x.ring().r(), target)))};
    });
    thom->add_option("--n", target_n, "Target n (default source n + 1)");
    for (auto* sub : {alpha, beta, thom}) {
      sub->add_option("--elem", poly, "Ring element (JSON with ring descriptor)");
      sub->add_option("--file", file, "JSON input file");
    }
  }

  void add_verify() {
    auto* g = app.add_subcommand("verify", "Finite verifications")->require_subcommand(1);
    auto* p1 = leaf(g, "prop1", "Outside-box Schur classes vanish; box classes form a basis", [this] {
      return from_report(run_check("prop1", {{"max_r", max_r}, {"max_n", max_n}},
                                   [this] { return check_prop1(max_r, max_n); }));
    });
    auto* p2 = leaf(g, "prop2", "Multiplication by e_r adds a full column", [this] {
      return from_report(run_check("prop2", {{"max_r", max_r}, {"max_n", max_n}},
                                   [this] { return check_prop2(max_r, max_n); }));
    });
    auto* ex = leaf(g, "exact-seq", "0 -> (r,n-1) -> (r,n) -> (r-1,n-1) -> 0", [this] {
      return from_report(run_check("exact-seq", {{"max_r", max_r}, {"max_n", max_n}},
                                   [this] { return check_exact_sequence(max_r, max_n); }));
    });
    for (auto* sub : {p1, p2, ex}) {
      sub->add_option("--max-r", max_r)->check(CLI::PositiveNumber);
      sub->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    }
    auto* cartan = leaf(g, "cartan", "Cartan formula over all root splits", [this] {
      return from_report(run_check("cartan", {{"max_roots", max_roots}},
                                   [this] { return check_cartan(max_roots); }));
    });
    cartan->add_option("--max-roots", max_roots)->check(CLI::Range(0, 12));
    auto* jt = leaf(g, "jacobi-trudi", "e-determinant, h-determinant and alternant agree", [this] {
      return from_report(run_check("jacobi-trudi", {{"max_r", max_r}, {"max_deg", max_deg}}, [this] {
        CheckOutcome out = check_jacobi_trudi(max_r, max_deg);
        out.absorb(check_h_recurrence(max_r, max_deg));
        return out;
      }));
    });
    jt->add_option("--max-r", max_r)->check(CLI::PositiveNumber);
    jt->add_option("--max-deg", max_deg)->check(CLI::NonNegativeNumber);
    auto* hp = leaf(g, "hp-ring", "Ranks C(n, r) and HP^n = Z[zeta]/(zeta^{n+1})", [this] {
      return from_report(run_check("hp-ring", {{"max_n", max_n}}, [this] {
        CheckOutcome out = check_hp_ring(max_n);
        out.absorb(check_grass_ranks(max_n + 2));
        return out;
      }));
    });
    hp->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  }

  void add_stable() {
    auto* g = app.add_subcommand("stable", "Stable cohomology of BSp and MSp")->require_subcommand(1);
    auto* tower = leaf(g, "tower", "Truncations of Z[p_1..p_r] inside the Grassmannian tower", [this] {
      Json params = {{"r", r}, {"trunc", trunc}};
      if (!ns.empty()) params["n"] = ns;
      return from_report(run_check("tower", params, [this] {
        return ns.empty() ? limit_from_tower(r, trunc) : tower_check(r, trunc, ns);
      }));
    });
    tower->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    tower->add_option("--trunc,--deg", trunc, "Degree bound D")->check(CLI::NonNegativeNumber);
    tower->add_option("--n", ns, "Explicit n values (default r+D .. r+D+2)");

    auto* cop = leaf(g, "coproduct", "Whitney coproduct of a series or of the generators", [this] {
      if (!poly.empty() || !file.empty()) {
        const HomSeries x = homseries_from_json(read_input(poly, file, "series"));
        return Output{Json{{"r", r}, {"s", s}, {"image", to_json(coproduct(x, r, s, trunc))}}};
      }
      Json images = Json::array();
      for (int i = 1; i <= r + s; ++i) {
        images.push_back({{"p", i}, {"image", to_json(coproduct_generator(i, r, s, trunc))}});
      }
      return Output{Json{{"r", r}, {"s", s}, {"trunc", trunc}, {"generators", images}}};
    });
    cop->add_option("--series", poly, "Series in r+s variables (JSON)");
    cop->add_option("--file", file, "JSON input file");

    auto* inj = leaf(g, "injectivity", "Exact kernel of the coproduct in each degree", [this] {
      return from_report(run_check("coproduct-injectivity", {{"r", r}, {"s", s}, {"trunc", trunc}},
                                   [this] { return coproduct_injectivity(r, s, trunc); }));
    });
    for (auto* sub : {cop, inj}) {
      sub->add_option("--r", r)->required()->check(CLI::PositiveNumber);
      sub->add_option("--s", s)->required()->check(CLI::PositiveNumber);
      sub->add_option("--trunc,--deg", trunc, "Degree bound D")->check(CLI::NonNegativeNumber);
    }

    auto* thom = leaf(g, "thom-ideal", "Multiplication by p_r and the kernel of p_r -> 0", [this] {
      if (!poly.empty() || !file.empty()) {
        const HomSeries x = homseries_from_json(read_input(poly, file, "series"));
        return Output{Json{{"image", to_json(thom_ideal_embed(x).series())}}};
      }
      return from_report(run_check("thom-ideal", {{"r", r}, {"trunc", trunc}},
                                   [this] { return thom_ideal_check(r, trunc); }));
    });
    thom->add_option("--r", r)->check(CLI::PositiveNumber);
    thom->add_option("--trunc,--deg", trunc, "Degree bound D")->check(CLI::NonNegativeNumber);
    thom->add_option("--series", poly, "Series to multiply by p_r (JSON)");
    thom->add_option("--file", file, "JSON input file");

    auto* sand = leaf(g, "sandwich", "Vanishing and injectivity ranges in HGr(r, n)", [this] {
      return from_report(run_check("sandwich", {{"r", r}, {"n", n}}, [this] { return sandwich_check(r, n); }));
    });
    sand->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    sand->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* msp = leaf(g, "msp-basis", "Monomial basis of the degree-<= D truncation", [this] {
      const MspRing ring = msp_ring(trunc);
      Json degrees = Json::array();
      for (std::size_t d = 0; d < ring.basis_by_degree.size(); ++d) {
        Json monos = Json::array();
        for (const auto& e : ring.basis_by_degree[d]) monos.push_back(e);
        degrees.push_back({{"degree", d}, {"rank", monos.size()}, {"monomials", monos}});
      }
      return Output{Json{{"trunc", ring.trunc}, {"vars", ring.vars}, {"degrees", degrees}}};
    });
    msp->add_option("--trunc,--deg", trunc, "Degree bound D")->check(CLI::NonNegativeNumber);
  }

  PontVector bundle(const std::string& prefix, int count) const {
    if (!opaque.empty()) return PontVector::opaque(opaque, count);
    return pont_from_roots(FormalBundle::with_roots(prefix, count));
  }

  void add_pclass() {
    auto* g = app.add_subcommand("pclass", "Pontryagin classes by the splitting principle")->require_subcommand(1);
    const Symbol zeta{"zeta", 1};
    auto* roots_cmd = leaf(g, "roots", "p_i as elementary symmetric functions of the roots", [this] {
      return Output{to_json(bundle("x", roots))};
    });
    auto* sum = leaf(g, "sum", "Cartan sum of two root bundles", [this] {
      const Partition sizes = parse_partition(split);
      std::vector<int> parts(sizes.parts().begin(), sizes.parts().end());
      if (parts.size() != 2) throw UsageError("--split needs two positive sizes, e.g. 2,1");
      const PontVector a = pont_from_roots(FormalBundle::with_roots("x", parts[0]));
      const PontVector b = pont_from_roots(FormalBundle::with_roots("x", parts[1], parts[0] + 1));
      const PontVector total = cartan_sum(a, b);
      const bool agrees = total == pont_from_roots(FormalBundle::with_roots("x", parts[0] + parts[1]));
      return Output{Json{{"sum", to_json(total)}, {"matches_union", agrees}}, agrees};
    });
    sum->add_option("--split", split, "Root counts of the summands, e.g. 2,1");
    auto* rel = leaf(g, "relation", "Projective bundle relation in zeta", [this, zeta] {
      return Output{to_json(hp_relation(bundle("x", roots), zeta))};
    });
    auto* perp = leaf(g, "perp", "Classes of the complement of the tautological subbundle", [this, zeta] {
      const PontVector pv = bundle("x", roots);
      const CheckOutcome outcome = perp_check(pv, zeta);
      Json j = {{"perp", to_json(perp_classes(pv, zeta))},
                {"top_residue", to_json(perp_top_residue(pv, zeta))},
                {"pass", outcome.pass}};
      if (!outcome.pass) j["failure"] = outcome.witness;
      return Output{j, outcome.pass};
    });
    for (auto* sub : {roots_cmd, rel, perp}) {
      sub->add_option("--roots,--rank", roots, "Quaternionic rank n (number of roots)")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--opaque", opaque, "Keep classes opaque, named after this bundle");
    }
    auto* sign = leaf(g, "thom-sign", "Sign relating p_r to the pulled-back Thom class", [this] {
      return Output{Json{{"r", r}, {"sign", thom_top_sign(r)}}};
    });
    sign->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  }

  void add_spmat() {
    auto* g = app.add_subcommand("spmat", "Symplectic matrices over Z[t]")->require_subcommand(1);
    auto* om = leaf(g, "omega", "Standard symplectic form", [this] { return Output{to_json(omega(size))}; });
    om->add_option("--size", size, "Even matrix size")->check(CLI::PositiveNumber);

    auto* chk = leaf(g, "check", "Check M^T omega M = omega identically in t", [this] {
      const TMatrix mat = tmatrix_from_json(read_input(poly, file, "matrix"));
      return from_report(run_check("symplectic", {{"size", mat.size()}}, [&mat] {
        CheckOutcome out;
        for (const auto& d : symplectic_defect(mat)) {
          out.fail("entry (" + std::to_string(d.row) + "," + std::to_string(d.col) +
                   ") of M^T omega M - omega is " + d.value.to_string());
        }
        return out;
      }));
    });
    chk->add_option("--matrix", poly, "Matrix (JSON)");
    chk->add_option("--file", file, "JSON input file");

    leaf(g, "verify-paper-matrix", "Endpoints and symplecticity of the printed homotopy", [] {
      return from_report(run_check("paper-matrix", Json::object(), [] { return check_paper_matrix(); }));
    });

    auto* shift = leaf(g, "shift-product", "Product of embedded homotopies and the block shift", [this] {
      Report rep = run_check("shift-product", {{"N", blocks}, {"K", factors}},
                             [this] { return shift_product_check(blocks, factors, paper_homotopy_matrix()); });
      Output out = from_report(rep);
      if (want_matrix) out.json["matrix"] = to_json(shift_homotopy_product(blocks, factors));
      return out;
    });
    shift->add_option("--N", blocks, "Block count")->check(CLI::PositiveNumber);
    shift->add_option("--K", factors, "Number of factors")->check(CLI::PositiveNumber);
    shift->add_flag("--show-matrix", want_matrix, "Include the product matrix");

    auto* embed = leaf(g, "embed", "Place the homotopy on blocks n, n+1 of a size-2N matrix", [this] {
      return Output{to_json(block_embed(n, blocks, paper_homotopy_matrix()))};
    });
    embed->add_option("--n", n, "First block (1-based)")->required()->check(CLI::PositiveNumber);
    embed->add_option("--N", blocks, "Block count")->check(CLI::PositiveNumber);
  }

  void add_suite() {
    auto* g = app.add_subcommand("suite", "Batteries of checks")->require_subcommand(1);
    auto* all = leaf(g, "all", "Run every verification", [this] {
      const std::vector<Report> reports = run_suite({max_r, max_n, max_deg});
      Json list = Json::array();
      bool pass = true;
      for (const auto& rep : reports) {
        list.push_back(to_json(rep));
        pass = pass && rep.pass;
      }
      return Output{Json{{"pass", pass}, {"reports", list}}, pass};
    });
    all->add_option("--max-r", max_r)->check(CLI::PositiveNumber);
    all->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    all->add_option("--max-deg", max_deg)->check(CLI::Range(2, 40));
  }
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  if (const char* env = std::getenv("SPCOB_FORMAT")) cli.format = env;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "spcob: " << e.what() << "\n";
    return 2;
  }
  if (cli.format.empty()) cli.format = "json";
  if (cli.format != "json" && cli.format != "text") {
    std::cerr << "spcob: unknown format '" << cli.format << "'\n";
    return 2;
  }
  Output out;
  try {
    out = cli.action();
  } catch (const UsageError& e) {
    std::cerr << "spcob: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "spcob: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "spcob: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "spcob: " << e.what() << "\n";
    return 1;
  }
  if (cli.format == "text") {
    std::cout << render_text(out.json);
  } else {
    std::cout << out.json.dump() << "\n";
  }
  return out.pass ? 0 : 1;
}
