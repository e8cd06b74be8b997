#include "ncmetric/document.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ncmetric/commutative.hpp"

namespace ncmetric {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

Complex to_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(where, "expected a number or a [re, im] pair");
}

ComplexMatrix to_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty()) fail(where, "expected a non-empty list of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::Index cols = -1;
  ComplexMatrix m;
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    const std::string rw = where + "/" + std::to_string(i);
    if (!row.is_array()) fail(rw, "expected a row");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(n, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      fail(rw, "rows have different lengths");
    }
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = to_complex(row[static_cast<std::size_t>(j)], rw + "/" + std::to_string(j));
  }
  return m;
}

json complex_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

BlockKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "real") return BlockKind::RealLine;
  if (s == "complex") return BlockKind::ComplexLine;
  if (s == "quaternion") return BlockKind::Quaternions;
  if (s == "matrix") return BlockKind::MatrixBlock;
  fail(where, "unknown block kind \"" + s + "\"");
}

SlotMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "fundamental") return SlotMode::Fundamental;
  if (s == "conjugate") return SlotMode::Conjugate;
  if (s == "scalar") return SlotMode::Scalar;
  if (s == "scalar_conjugate") return SlotMode::ScalarConjugate;
  if (s == "quaternion_2x2") return SlotMode::Quaternion2x2;
  fail(where, "unknown slot mode \"" + s + "\"");
}

HermitianMatrix dirac_from_lengths(const json& rows) {
  if (!rows.is_array() || rows.empty()) fail("/lengths", "expected a square matrix");
  const auto n = static_cast<Eigen::Index>(rows.size());
  RealMatrix d = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    const std::string rw = "/lengths/" + std::to_string(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) fail(rw, "expected a row of length n");
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      const std::string w = rw + "/" + std::to_string(j);
      if (i == j) continue;
      if (v.is_null() || (v.is_string() && v.get<std::string>() == "inf")) continue;
      if (!v.is_number() || !(v.get<double>() > 0.0)) fail(w, "lengths must be positive numbers or \"inf\"");
      d(i, j) = 1.0 / v.get<double>();
    }
  }
  try {
    return HermitianMatrix(d);
  } catch (const DomainError& e) {
    fail("/lengths", e.what());
  }
}

}  // namespace

const PureState& TripleDocument::state(const std::string& name) const {
  for (const auto& s : states)
    if (s.name == name) return s;
  throw StateError("unknown state \"" + name + "\"");
}

TripleDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("/", "expected an object");

  std::optional<SpectralTriple> triple;
  try {
    if (doc.contains("lengths") && !doc.contains("algebra")) {
      triple = commutative_triple(dirac_from_lengths(doc["lengths"]));
    } else {
      FiniteAlgebra alg;
      const json& blocks = require(doc, "algebra", "/");
      if (!blocks.is_array() || blocks.empty()) fail("/algebra", "expected a non-empty list");
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        const std::string w = "/algebra/" + std::to_string(k);
        const json& b = blocks[k];
        const json& kind = require(b, "kind", w);
        if (!kind.is_string()) fail(w + "/kind", "expected a string");
        AlgebraBlock blk{parse_kind(kind.get<std::string>(), w + "/kind"), 1};
        if (blk.kind == BlockKind::MatrixBlock) {
          const json& size = require(b, "size", w);
          if (!size.is_number_integer() || size.get<int>() < 1) fail(w + "/size", "expected a positive integer");
          blk.size = size.get<int>();
        }
        alg.blocks.push_back(blk);
      }

      std::vector<RepresentationSlot> slots;
      const json& js = require(doc, "slots", "/");
      if (!js.is_array()) fail("/slots", "expected a list");
      for (std::size_t k = 0; k < js.size(); ++k) {
        const std::string w = "/slots/" + std::to_string(k);
        const json& s = js[k];
        RepresentationSlot slot;
        const json& block = require(s, "block", w);
        if (!block.is_number_unsigned() || block.get<std::size_t>() >= alg.blocks.size())
          fail(w + "/block", "expected the index of a declared block");
        slot.block_index = block.get<std::size_t>();
        const json& mode = require(s, "mode", w);
        if (!mode.is_string()) fail(w + "/mode", "expected a string");
        slot.mode = parse_mode(mode.get<std::string>(), w + "/mode");
        if (s.contains("multiplicity")) {
          if (!s["multiplicity"].is_number_integer() || s["multiplicity"].get<int>() < 1)
            fail(w + "/multiplicity", "expected a positive integer");
          slot.multiplicity = s["multiplicity"].get<int>();
        }
        if (s.contains("layout")) {
          const std::string l = s["layout"].is_string() ? s["layout"].get<std::string>() : "";
          if (l == "copies")
            slot.layout = SlotLayout::Copies;
          else if (l == "action_first")
            slot.layout = SlotLayout::ActionFirst;
          else
            fail(w + "/layout", "expected \"copies\" or \"action_first\"");
        }
        slots.push_back(slot);
      }

      HermitianMatrix d;
      if (doc.contains("dirac")) {
        const ComplexMatrix m = to_matrix(doc["dirac"], "/dirac");
        if (m.rows() != m.cols()) fail("/dirac", "expected a square matrix");
        try {
          d = HermitianMatrix(m);
        } catch (const Error& e) {
          fail("/dirac", e.what());
        }
      } else if (doc.contains("lengths")) {
        d = dirac_from_lengths(doc["lengths"]);
      } else {
        fail("/", "missing key \"dirac\"");
      }

      std::optional<std::vector<int>> grading;
      if (doc.contains("grading") && !doc["grading"].is_null()) {
        const json& g = doc["grading"];
        if (!g.is_array()) fail("/grading", "expected a list of +1/-1");
        std::vector<int> gv;
        for (std::size_t k = 0; k < g.size(); ++k) {
          if (!g[k].is_number_integer()) fail("/grading/" + std::to_string(k), "expected +1 or -1");
          gv.push_back(g[k].get<int>());
        }
        grading = std::move(gv);
      }
      triple = SpectralTriple(std::move(alg), std::move(slots), d, std::move(grading));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("/: ") + e.what());
  }

  TripleDocument out{*triple, {}};
  const auto& blocks = out.triple.algebra().blocks;
  if (doc.contains("states")) {
    const json& js = doc["states"];
    if (!js.is_array()) fail("/states", "expected a list");
    for (std::size_t k = 0; k < js.size(); ++k) {
      const std::string w = "/states/" + std::to_string(k);
      const json& s = js[k];
      const json& name = require(s, "name", w);
      if (!name.is_string()) fail(w + "/name", "expected a string");
      const json& block = require(s, "block", w);
      if (!block.is_number_unsigned() || block.get<std::size_t>() >= blocks.size())
        fail(w + "/block", "expected the index of a declared block");
      const std::size_t b = block.get<std::size_t>();
      try {
        if (s.contains("vector")) {
          const json& v = s["vector"];
          if (!v.is_array()) fail(w + "/vector", "expected a list");
          ComplexVector vec(static_cast<Eigen::Index>(v.size()));
          for (std::size_t i = 0; i < v.size(); ++i)
            vec(static_cast<Eigen::Index>(i)) = to_complex(v[i], w + "/vector/" + std::to_string(i));
          const double n = vec.norm();
          if (!(n > 0.0)) fail(w + "/vector", "zero vector");
          out.states.push_back(PureState::vector_state(b, vec / n, name.get<std::string>()));
        } else {
          out.states.push_back(PureState::canonical(b, name.get<std::string>()));
        }
        validate_state(out.triple.algebra(), out.states.back());
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(w, e.what());
      }
      for (std::size_t j = 0; j + 1 < out.states.size(); ++j)
        if (out.states[j].name == out.states.back().name) fail(w + "/name", "duplicate state name");
    }
  } else {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].kind != BlockKind::MatrixBlock) out.states.push_back(PureState::canonical(b, std::to_string(b + 1)));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TripleDocument load_document(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + " " + e.what());
  }
}

std::string serialize_document(const SpectralTriple& triple, const std::vector<PureState>& states) {
  json doc;
  json blocks = json::array();
  for (const auto& b : triple.algebra().blocks) {
    json jb{{"kind", to_string(b.kind)}};
    if (b.kind == BlockKind::MatrixBlock) jb["size"] = b.size;
    blocks.push_back(jb);
  }
  doc["algebra"] = blocks;
  json slots = json::array();
  for (const auto& s : triple.slots())
    slots.push_back({{"block", s.block_index},
                     {"mode", to_string(s.mode)},
                     {"multiplicity", s.multiplicity},
                     {"layout", s.layout == SlotLayout::Copies ? "copies" : "action_first"}});
  doc["slots"] = slots;
  json rows = json::array();
  const ComplexMatrix& d = triple.dirac().matrix();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d.cols(); ++j) row.push_back(complex_json(d(i, j)));
    rows.push_back(row);
  }
  doc["dirac"] = rows;
  if (triple.grading()) doc["grading"] = *triple.grading();
  json js = json::array();
  for (const auto& s : states) {
    json e{{"name", s.name}, {"block", s.block_index}};
    if (s.vector) {
      json v = json::array();
      for (Eigen::Index i = 0; i < s.vector->size(); ++i) v.push_back(complex_json((*s.vector)(i)));
      e["vector"] = v;
    }
    js.push_back(e);
  }
  doc["states"] = js;
  return doc.dump(2) + "\n";
}

FermionMasses parse_masses(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  FermionMasses m;
  auto family = [&](const char* key) {
    const json& v = require(doc, key, "/");
    if (!v.is_array() || v.empty()) fail(std::string("/") + key, "expected a list of masses");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(std::string("/") + key + "/" + std::to_string(i), "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  };
  m.up = family("up");
  m.down = family("down");
  m.lepton = family("lepton");
  const auto n = static_cast<Eigen::Index>(m.up.size());
  m.ckm = doc.contains("ckm") ? to_matrix(doc["ckm"], "/ckm") : ComplexMatrix(ComplexMatrix::Identity(n, n));
  if (doc.contains("generations") && doc["generations"].get<Eigen::Index>() != n)
    fail("/generations", "does not match the number of masses per family");
  try {
    m.validate();
  } catch (const Error& e) {
    fail("/", e.what());
  }
  return m;
}

FermionMasses load_masses(const std::string& path) {
  try {
    return parse_masses(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + " " + e.what());
  }
}

RealMatrix parse_metric_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    int col = 0;
    while (std::getline(cells, cell, ',')) {
      ++col;
      const auto a = cell.find_first_not_of(" \t");
      const std::string c = a == std::string::npos ? "" : cell.substr(a, cell.find_last_not_of(" \t") - a + 1);
      if (c.empty() || c == "inf" || c == "Inf" || c == "INF") {
        row.push_back(std::numeric_limits<double>::infinity());
        continue;
      }
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": not a number");
      }
    }
    if (!line.empty() && line.back() == ',') row.push_back(std::numeric_limits<double>::infinity());
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw ParseError("metric: no rows");
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw ParseError("metric: row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace ncmetric
