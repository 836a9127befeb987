#include "spcob/json_io.hpp"

#include <limits>

namespace spcob {

Json coeff_to_json(const Integer& c) { return to_decimal(c); }

Integer coeff_from_json(const Json& j) {
  if (j.is_string()) return from_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw DomainError("coefficient must be a decimal string or integer: " + j.dump());
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array: " + j.dump());
  return Partition(j.get<std::vector<int>>());
}

namespace {

Json terms_json(const MPoly& p) {
  Json terms = Json::array();
  // Lex-descending so leading terms print first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"key", it->first}, {"coeff", coeff_to_json(it->second)}});
  }
  return terms;
}

MPoly mpoly_from_terms(const Json& terms, int r) {
  MPoly p(r);
  if (!terms.is_array()) throw DomainError("\"terms\" must be an array");
  for (const auto& t : terms) {
    auto key = t.at("key").get<std::vector<int>>();
    if (static_cast<int>(key.size()) != r) {
      throw DomainError("exponent key " + t.at("key").dump() + " must have length " + std::to_string(r));
    }
    for (int e : key) {
      if (e < 0) throw DomainError("negative exponent in " + t.at("key").dump());
    }
    p.add_term(key, coeff_from_json(t.at("coeff")));
  }
  return p;
}

Json basis_poly(const std::string& basis, const MPoly& p) {
  return {{"basis", basis}, {"r", p.num_vars()}, {"terms", terms_json(p)}};
}

}  // namespace

Json to_json(const EPoly& p) { return basis_poly("e", p.raw()); }
Json to_json(const XPoly& p) { return basis_poly("x", p.raw()); }

Json to_json(const SchurVector& v) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : v.terms()) {
    terms.push_back({{"key", to_json(lambda)}, {"coeff", coeff_to_json(c)}});
  }
  return {{"basis", "schur"}, {"r", v.num_vars()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j) {
  try {
    SymPoly out;
    out.basis = j.at("basis").get<std::string>();
    const int r = j.at("r").get<int>();
    if (r < 0) throw DomainError("\"r\" must be nonnegative");
    if (out.basis == "e") {
      out.e = EPoly(mpoly_from_terms(j.at("terms"), r));
    } else if (out.basis == "x") {
      out.x = XPoly(mpoly_from_terms(j.at("terms"), r));
    } else if (out.basis == "schur") {
      out.schur = SchurVector(r);
      for (const auto& t : j.at("terms")) {
        out.schur.add_term(partition_from_json(t.at("key")), coeff_from_json(t.at("coeff")));
      }
    } else {
      throw DomainError("unknown basis '" + out.basis + "'");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

EPoly epoly_from_json(const Json& j) {
  SymPoly p = sympoly_from_json(j);
  if (p.basis != "e") throw DomainError("expected an e-basis polynomial");
  return p.e;
}

SchurVector schur_from_json(const Json& j) {
  SymPoly p = sympoly_from_json(j);
  if (p.basis != "schur") throw DomainError("expected a Schur-basis vector");
  return p.schur;
}

Json to_json(const GrassRing& ring) { return {{"r", ring.r()}, {"n", ring.n()}}; }

Json to_json(const GrassElem& x) {
  Json j = to_json(x.vec());
  j["ring"] = to_json(x.ring());
  return j;
}

GrassElem grass_elem_from_json(const Json& j) {
  try {
    const GrassRing ring(j.at("ring").at("r").get<int>(), j.at("ring").at("n").get<int>());
    return GrassElem(ring, schur_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ring element JSON: ") + e.what());
  }
}

Json to_json(const HomSeries& x) {
  Json j = {{"vars", x.num_vars()}, {"trunc", x.trunc()}};
  if (x.weights() != graded_weights(x.num_vars())) j["weights"] = x.weights();
  j["terms"] = terms_json(x.poly());
  return j;
}

HomSeries homseries_from_json(const Json& j) {
  try {
    const int vars = j.at("vars").get<int>();
    const int trunc = j.at("trunc").get<int>();
    std::vector<int> weights = j.contains("weights") ? j.at("weights").get<std::vector<int>>()
                                                      : graded_weights(vars);
    if (static_cast<int>(weights.size()) != vars) throw DomainError("\"weights\" length must equal \"vars\"");
    return HomSeries(weights, trunc, mpoly_from_terms(j.at("terms"), vars));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const NamedPoly& p) {
  const std::vector<Symbol> symbols = p.symbols();
  Json syms = Json::array();
  for (const auto& s : symbols) syms.push_back({{"name", s.name}, {"degree", s.degree}});
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> key;
    for (const auto& s : symbols) {
      auto it = m.find(s);
      key.push_back(it == m.end() ? 0 : it->second);
    }
    terms.push_back({{"key", key}, {"coeff", coeff_to_json(c)}});
  }
  return {{"basis", "named"}, {"symbols", syms}, {"terms", terms}, {"text", p.to_string()}};
}

NamedPoly named_from_json(const Json& j) {
  try {
    std::vector<Symbol> symbols;
    for (const auto& s : j.at("symbols")) {
      symbols.push_back(Symbol{s.at("name").get<std::string>(), s.value("degree", 1)});
    }
    NamedPoly out;
    for (const auto& t : j.at("terms")) {
      const auto key = t.at("key").get<std::vector<int>>();
      if (key.size() != symbols.size()) throw DomainError("named term key length mismatch");
      NamedPoly::Monomial m;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 0) throw DomainError("negative exponent");
        if (key[i] > 0) m.emplace(symbols[i], key[i]);
      }
      out.add_term(m, coeff_from_json(t.at("coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed named polynomial JSON: ") + e.what());
  }
}

Json to_json(const PontVector& pv) {
  Json classes = Json::array();
  for (const auto& c : pv.classes()) classes.push_back(to_json(c));
  return {{"quaternionic_rank", pv.quaternionic_rank()}, {"rank", 2 * pv.quaternionic_rank()},
          {"classes", classes}};
}

Json to_json(const ZetaRelation& rel) {
  Json j = to_json(rel.as_poly());
  j["zeta"] = rel.zeta.name;
  j["degree"] = rel.degree();
  return j;
}

Json to_json(const TMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) {
      Json coeffs = Json::array();
      for (const auto& c : m.at(i, j).coeffs()) {
        if (c.fits_slong_p()) {
          coeffs.push_back(c.get_si());
        } else {
          coeffs.push_back(to_decimal(c));
        }
      }
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return {{"size", m.size()}, {"entries", rows}};
}

TMatrix tmatrix_from_json(const Json& j) {
  try {
    const int size = j.at("size").get<int>();
    const Json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != size) {
      throw DomainError("\"entries\" must have " + std::to_string(size) + " rows");
    }
    TMatrix m(size);
    for (int i = 0; i < size; ++i) {
      const Json& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != size) {
        throw DomainError("matrix row " + std::to_string(i) + " has the wrong length");
      }
      for (int k = 0; k < size; ++k) {
        std::vector<Integer> coeffs;
        for (const auto& c : row.at(static_cast<std::size_t>(k))) coeffs.push_back(coeff_from_json(c));
        m.at(i, k) = TPoly(std::move(coeffs));
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed matrix JSON: ") + e.what());
  }
}

}  // namespace spcob
