#include "hivekit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hivekit {

json ring_to_json(const RingConfig& cfg) {
  if (cfg.kind == RingKind::padic) return {{"kind", "padic-rational"}, {"p", cfg.p}};
  return {{"kind", "tadic-ratfunc"}};
}

RingConfig ring_from_json(const json& j) {
  if (j.is_string()) return parse_ring(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw InputError("ring must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "tadic-ratfunc") return RingConfig::tadic();
  if (kind == "padic-rational") {
    if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw InputError("padic ring needs a positive p");
    return RingConfig::padic(j.at("p").get<unsigned long>());
  }
  throw InputError("unknown ring kind '" + kind + "'");
}

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    data.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j, const RingConfig& cfg) {
  try {
    const json& data = j.is_array() ? j : j.at("data");
    if (!data.is_array() || data.empty()) throw InputError("matrix data must be a nonempty array");
    const std::size_t r = data.size(), c = data[0].size();
    if (j.is_object()) {
      if (j.contains("rows") && j.at("rows").get<std::size_t>() != r) throw InputError("matrix rows mismatch");
      if (j.contains("cols") && j.at("cols").get<std::size_t>() != c) throw InputError("matrix cols mismatch");
    }
    if (c == 0) throw InputError("matrix has no columns");
    Matrix m(cfg, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!data[i].is_array() || data[i].size() != c) throw InputError("ragged matrix data");
      for (std::size_t k = 0; k < c; ++k) {
        const json& x = data[i][k];
        if (x.is_number_integer())
          m(i, k) = Scalar(cfg, x.get<long>());
        else if (x.is_string())
          m(i, k) = Scalar::parse(cfg, x.get<std::string>());
        else
          throw InputError("matrix entries must be strings or integers");
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad matrix JSON: ") + e.what());
  }
}

json lattice_to_json(const Lattice& L) { return {{"n", L.n()}, {"gens", matrix_to_json(L.gens)}}; }

Lattice lattice_from_json(const json& j, const RingConfig& cfg) {
  if (j.is_object() && j.contains("gens")) {
    Matrix g = matrix_from_json(j.at("gens"), cfg);
    if (j.contains("n") && j.at("n").get<std::size_t>() != g.rows()) throw InputError("lattice n mismatch");
    return Lattice(g);
  }
  return Lattice(matrix_from_json(j, cfg));
}

json submodule_to_json(const Submodule& V) {
  return {{"n", V.n()}, {"rank", V.rank()}, {"gens", matrix_to_json(V.gens)}};
}

json hive_to_json(const Hive& H) { return {{"n", H.n}, {"rows", H.rows}}; }

Hive hive_from_json(const json& j) {
  try {
    Hive h = Hive::from_rows(j.at("rows").get<std::vector<std::vector<std::int64_t>>>());
    if (j.contains("n") && j.at("n").get<std::size_t>() != h.n) throw InputError("hive n does not match its rows");
    return h;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad hive JSON: ") + e.what());
  }
}

json type_to_json(const HiveType& t) { return {{"mu", t.mu}, {"nu", t.nu}, {"lambda", t.lambda}}; }

json lr_to_json(const LRFilling& f) {
  return {{"n", f.n}, {"shape", f.shape}, {"inner", f.inner}, {"content", f.content}, {"counts", f.counts}};
}

LRFilling lr_from_json(const json& j) {
  try {
    LRFilling f;
    f.n = j.at("n").get<std::size_t>();
    f.shape = j.at("shape").get<Partition>();
    f.inner = j.at("inner").get<Partition>();
    f.content = j.at("content").get<Partition>();
    f.counts = j.at("counts").get<std::vector<std::vector<std::int64_t>>>();
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad filling JSON: ") + e.what());
  }
}

json oracle_to_json(const OracleResult& r) {
  json mins = json::array();
  for (const auto& w : r.witnesses) mins.push_back({{"a", matrix_to_json(w.a_gens)}, {"c", matrix_to_json(w.c_gens)}});
  return {{"value", r.value}, {"minimizers", mins}, {"boundary_warning", r.boundary_warning}};
}

json instance_to_json(const InstanceSpec& spec, const RandomPair& pair) {
  json s = {{"n", spec.n},
            {"ring", ring_to_json(spec.ring)},
            {"exponent_range", {spec.lo, spec.hi}},
            {"seed", spec.seed},
            {"unimodular_mix_steps", spec.mix_steps}};
  return {{"spec", s},
          {"ring", ring_to_json(spec.ring)},
          {"N", matrix_to_json(pair.N.gens)},
          {"Lambda", matrix_to_json(pair.L.gens)},
          {"M", matrix_to_json(pair.M.gens)}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace hivekit
