#include "ncmetric/commands.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "ncmetric/commutative.hpp"
#include "ncmetric/document.hpp"

namespace ncmetric {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitParse;
  } catch (const StateError& e) {
    err << "error: state: " << e.what() << "\n";
    return kExitState;
  } catch (const ConstraintViolation& e) {
    err << "error: constraint: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

std::string format_complex(Complex c) {
  if (std::abs(c.imag()) <= 1e-15 * std::max(1.0, std::abs(c.real()))) return format_value(c.real());
  std::ostringstream os;
  os << "[" << format_value(c.real()) << ", " << format_value(c.imag()) << "]";
  return os.str();
}

void print_witness(std::ostream& out, const AlgebraElement& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    out << "witness[" << k << "]";
    const ComplexMatrix& m = w[k];
    if (m.rows() == 1) {
      out << " " << format_complex(m(0, 0)) << "\n";
      continue;
    }
    out << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << " ";
      for (Eigen::Index j = 0; j < m.cols(); ++j) out << " " << format_complex(m(i, j));
      out << "\n";
    }
  }
}

std::ostream& target(const CommandFlags& flags, std::ostream& out, std::ofstream& file) {
  if (flags.out.empty()) return out;
  file.open(flags.out);
  if (!file) throw Error("cannot write " + flags.out);
  return file;
}

}  // namespace

OracleOptions CommandFlags::oracle() const {
  OracleOptions o;
  o.rel_tol = tol;
  o.seed = seed;
  o.dim_cap = dim_cap;
  o.threads = parallel;
  return o;
}

std::string format_value(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << std::setprecision(12) << v;
  std::string s = os.str();
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

int cmd_distance(const std::string& file, const std::string& a, const std::string& b, const CommandFlags& flags,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TripleDocument doc = load_document(file);
    const PureState& s1 = doc.state(a);
    const PureState& s2 = doc.state(b);
    const DistanceOracle oracle(doc.triple, flags.oracle());
    MethodResult r = dispatch_distance(oracle, s1, s2, flags.method);
    out << "distance " << format_value(r.value.value) << "\n";
    out << "method " << r.method << "\n";
    if (r.method == "oracle") {
      out << "converged " << (r.value.converged ? "yes" : "no") << "\n";
      if (!r.value.is_infinite()) out << "upper_bound " << format_value(r.value.upper_bound) << "\n";
    }
    if (flags.witness && !r.value.is_infinite()) {
      if (!r.value.witness) r.value.witness = oracle.distance(s1, s2).witness;
      if (r.value.witness) print_witness(out, *r.value.witness);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_matrix(const std::string& file, const CommandFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (flags.format != "table" && flags.format != "csv") throw Error("unknown format \"" + flags.format + "\"");
    const TripleDocument doc = load_document(file);
    if (doc.states.empty()) throw StateError("the document declares no states");
    const DistanceOracle oracle(doc.triple, flags.oracle());
    const std::size_t n = doc.states.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<MethodResult> results(pairs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t k = next++; k < pairs.size(); k = next++) {
        try {
          results[k] = dispatch_distance(oracle, doc.states[pairs[k].first], doc.states[pairs[k].second], flags.method);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, flags.parallel); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    RealMatrix dist = RealMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::map<std::string, int> methods;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = results[k].value.value;
      dist(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = results[k].value.value;
      ++methods[results[k].method];
    }

    std::ofstream file_out;
    std::ostream& os = target(flags, out, file_out);
    if (flags.format == "csv") {
      os << "state";
      for (const auto& s : doc.states) os << "," << s.name;
      os << "\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << doc.states[i].name;
        for (std::size_t j = 0; j < n; ++j) {
          const double v = dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          os << ",";
          if (!std::isinf(v)) os << format_value(v);
        }
        os << "\n";
      }
      if (!flags.out.empty()) {
        std::ofstream mask(flags.out + ".mask");
        if (!mask) throw Error("cannot write " + flags.out + ".mask");
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            mask << (j ? "," : "") << (std::isinf(dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) ? 1 : 0);
          mask << "\n";
        }
      }
    } else {
      std::size_t width = 5;
      for (const auto& s : doc.states) width = std::max(width, s.name.size());
      std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          cells[i][j] = format_value(dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
          width = std::max(width, cells[i][j].size());
        }
      os << std::setw(static_cast<int>(width)) << "";
      for (const auto& s : doc.states) os << "  " << std::setw(static_cast<int>(width)) << s.name;
      os << "\n";
      for (std::size_t i = 0; i < n; ++i) {
        os << std::setw(static_cast<int>(width)) << doc.states[i].name;
        for (std::size_t j = 0; j < n; ++j) os << "  " << std::setw(static_cast<int>(width)) << cells[i][j];
        os << "\n";
      }
      os << "methods";
      for (const auto& [m, count] : methods) os << " " << m << "=" << count;
      os << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_invert3(double a, double b, double c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ThreePointCouplings k = three_point_inverse(a, b, c);
    const std::pair<const char*, double> rows[] = {{"D12", k.d12}, {"D13", k.d13}, {"D23", k.d23}};
    for (const auto& [name, v] : rows) {
      out << name << " " << format_value(v);
      if (v == 0.0) out << " (deleted-link)";
      out << "\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_realize(const std::string& metric_csv, const CommandFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RealMatrix dist = parse_metric_csv(read_file(metric_csv));
    const SpectralTriple triple = metric_to_triple(dist);
    std::ofstream file_out;
    target(flags, out, file_out) << serialize_document(triple, point_states(static_cast<int>(dist.rows())));
    return static_cast<int>(kExitOk);
  });
}

int cmd_sm(const std::string& config, const HiggsDoublet& h, bool verify, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FermionMasses masses = load_masses(config);
    const GttResult g = sm_gtt(h, masses);
    out << "gtt " << format_value(g.gtt) << "\n";
    out << "distance " << format_value(sm_fiber_distance(h, masses).value) << "\n";
    if (!g.closed_form) out << "note " << g.diagnostic << "\n";
    if (verify) {
      const double direct = sm_gtt_direct(h, masses);
      const double residual = std::abs(g.gtt - direct) / std::max(1.0, std::abs(direct));
      out << "direct " << format_value(direct) << "\n";
      out << "residual " << std::setprecision(3) << residual << "\n";
      if (residual > 1e-10) {
        err << "error: closed form and direct norm disagree\n";
        return static_cast<int>(kExitFailure);
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_graph(const std::string& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TripleDocument doc = load_document(file);
    for (const auto& b : doc.triple.algebra().blocks)
      if (b.kind != BlockKind::ComplexLine) throw Error("graph needs a commutative triple (complex lines only)");
    if (doc.triple.slots().size() != doc.triple.algebra().blocks.size())
      throw Error("graph needs one scalar slot per point");
    for (std::size_t k = 0; k < doc.triple.slots().size(); ++k) {
      const auto& s = doc.triple.slots()[k];
      if (s.block_index != k || s.mode != SlotMode::Scalar || s.multiplicity != 1)
        throw Error("graph needs one scalar slot per point");
    }
    const DiracGraph g = graph_from_dirac(doc.triple.dirac());
    auto label = [&](int i) {
      for (const auto& s : doc.states)
        if (s.block_index == static_cast<std::size_t>(i)) return s.name;
      return std::to_string(i + 1);
    };
    out << "points " << g.n << "\n";
    for (const auto& e : g.edges) out << "edge " << label(e.i) << " " << label(e.j) << " " << format_value(e.length) << "\n";
    const RealMatrix geo = geodesic_matrix(g);
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        out << "bound " << label(i) << " " << label(j) << " " << format_value(geo(i, j)) << "\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace ncmetric
