#include "semigraph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semigraph/charpoly.hpp"
#include "semigraph/generators.hpp"
#include "semigraph/identities.hpp"
#include "semigraph/io.hpp"
#include "semigraph/recognition.hpp"
#include "semigraph/spectra.hpp"

namespace semigraph::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidFamily:
    case ErrorCode::InvalidArgument:
      return kUsage;
    default:
      return kRejected;
  }
}

std::string exact_text(const Exact& x) {
  std::ostringstream s;
  s << x;
  return format_real(x.convert_to<double>()) + " (" + s.str() + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string file;
  std::string emit;
  bool skeleton = false;
  bool excess = false;
  bool check = false;
  double tol = 1e-12;
  double cluster = 1e-7;
  bool paper_trace = false;
  bool allow_isolated = false;
  std::string family;
  std::size_t n = 0;
  bool qmat = false;
  RandomSpec random;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const Semigraph g = parse_smg(read_file(o.file));
  const EdgeCounts c = edge_counts(g);
  out << "valid semigraph\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "edges " << g.edge_count() << "\n";
  if (g.edge_count() > 0) out << "rank " << rank(g) << "\n";
  out << "connected " << yes_no(is_connected(g)) << "\n";
  out << "edge classes full " << c.m1 << " quarter " << c.m2 << " half-one-partial " << c.m3
      << " half-two-partial " << c.m4 << "\n";
  const auto classes = classify_vertices(g);
  for (std::size_t v = 0; v < classes.size(); ++v) out << "v" << v + 1 << " " << to_string(classes[v]) << "\n";
  return kSuccess;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const Semigraph g = parse_smg(read_file(o.file));
  if (o.check) {
    const SymMatrix a = adjacency(g);
    const SymMatrix s = skeleton_adjacency(g);
    const SymMatrix e = excess(g);
    if (!(s + e == a)) {
      out << "decomposition mismatch: A != A^S + A^E\n";
      return kRejected;
    }
    out << "decomposition ok: A = A^S + A^E\n";
    return kSuccess;
  }
  if (o.skeleton) {
    out << emit_qmat(skeleton_adjacency(g));
  } else if (o.excess) {
    out << emit_qmat(excess(g));
  } else {
    out << emit_qmat(adjacency(g));
  }
  return kSuccess;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  if (!(o.cluster > 0)) throw UsageError("--cluster must be positive");
  const Semigraph g = parse_smg(read_file(o.file));
  Spectrum sp = eigenvalues(adjacency(g), o.tol);
  sp.cluster_tolerance = o.cluster;
  out << "eigenvalues " << sp.size() << "\n";
  for (double v : sp.values) out << format_real(v) << "\n";
  out << "clusters\n";
  for (const EigenCluster& c : sp.clusters()) out << format_real(c.value) << " x" << c.multiplicity << "\n";
  return kSuccess;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream& err) {
  const Semigraph g = parse_smg(read_file(o.file));
  const BoundsReport b = bounds(g, eigenvalues(adjacency(g)));
  if (!b.connected) err << "warning: semigraph is not connected; the bounds are stated for connected ones\n";
  auto verdict = [](bool holds) { return holds ? "holds" : "VIOLATED"; };
  out << "lambda1 " << format_real(b.lambda1) << "\n";
  out << "r(r-1)/2*max_skeleton_degree " << format_real(b.bound_skeleton) << " " << verdict(b.holds_skeleton)
      << "\n";
  out << "min_degree " << format_real(b.bound_delta) << " " << verdict(b.holds_delta) << "\n";
  const char* trace_label = b.is_graph ? "sqrt(2m(n-1)/n) " : "sqrt(trace(A^2)(n-1)/n) ";
  out << trace_label << format_real(b.bound_trace) << " " << verdict(b.holds_trace) << "\n";
  if (o.paper_trace) out << "closed-form trace bound " << format_real(b.bound_trace_published) << "\n";
  return b.all_hold() ? kSuccess : kRejected;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const SquareMatrix m = parse_qmat_raw(read_file(o.file));
  RecognitionOptions opts;
  opts.allow_isolated = o.allow_isolated;
  const RecognitionOutcome res = reconstruct(m, opts);
  if (!res.accepted()) {
    const Rejected& r = res.rejected_value();
    out << "not semigraphical: " << to_string(r.reason) << ": " << r.witness.detail << "\n";
    return kRejected;
  }
  const Accepted& a = res.accepted_value();
  const std::string text = emit_smg(a.semigraph);
  out << "semigraphical\n";
  out << "edges " << a.semigraph.edge_count() << "\n";
  out << "unique " << (a.alternative ? "no" : a.uniqueness_checked ? "yes" : "unknown") << "\n";
  if (o.emit.empty()) {
    out << text;
  } else {
    write_file(o.emit, text);
  }
  if (a.alternative) out << "alternative\n" << emit_smg(*a.alternative);
  return kSuccess;
}

int cmd_star(const Options& o, std::ostream& out) {
  const Semigraph g = star(parse_star_family(o.family), o.n);
  const std::string text = o.qmat ? emit_qmat(adjacency(g)) : emit_smg(g);
  if (o.emit.empty()) {
    out << text;
  } else {
    write_file(o.emit, text);
  }
  return kSuccess;
}

int cmd_random(const Options& o, std::ostream& out) {
  out << emit_smg(random_semigraph(o.random));
  return kSuccess;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const Semigraph g = parse_smg(read_file(o.file));
  const IdentityReport r = sum_identities(g);
  out << "edge classes full " << r.counts.m1 << " quarter " << r.counts.m2 << " half-one-partial "
      << r.counts.m3 << " half-two-partial " << r.counts.m4 << "\n";
  out << "degree sum direct    " << exact_text(r.degree_sum_direct) << "\n";
  out << "degree sum corrected " << exact_text(r.degree_sum_corrected) << "\n";
  out << "degree sum published " << exact_text(r.degree_sum_published) << "\n";
  out << "degree sum published - direct " << exact_text(r.degree_sum_published_excess()) << "\n";
  out << "trace A^2 direct    " << exact_text(r.trace_sq_direct) << "\n";
  out << "trace A^2 corrected " << exact_text(r.trace_sq_corrected) << "\n";
  out << "trace A^2 published " << exact_text(r.trace_sq_published) << "\n";
  out << "trace A^2 published - direct " << exact_text(r.trace_sq_published_excess()) << "\n";
  return kSuccess;
}

}  // namespace

std::string format_real(double x) {
  if (std::abs(x) < 5e-11) x = 0;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.9e", x);
  const char* e = std::strchr(buf, 'e');
  const int exponent = e ? std::atoi(e + 1) : 0;
  const int decimals = std::max(0, 9 - exponent);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semigraph adjacency matrices, recognition and spectra", "smg"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a .smg file and print vertex classes");
  validate->add_option("file", o.file, ".smg file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(o, out); }; });

  auto* matrix = app.add_subcommand("matrix", "Print the adjacency matrix of a .smg file");
  matrix->add_option("file", o.file, ".smg file")->required();
  auto* f_skel = matrix->add_flag("--skeleton", o.skeleton, "Skeleton matrix A^S");
  auto* f_exc = matrix->add_flag("--excess", o.excess, "Excess matrix A^E = A - A^S");
  auto* f_chk = matrix->add_flag("--check-decomposition", o.check, "Verify A = A^S + A^E");
  f_skel->excludes(f_exc)->excludes(f_chk);
  f_exc->excludes(f_chk);
  matrix->callback([&] { action = [&] { return cmd_matrix(o, out); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the adjacency matrix");
  spectrum->add_option("file", o.file, ".smg file")->required();
  spectrum->add_option("--tol", o.tol, "Jacobi convergence tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--cluster", o.cluster, "Relative merge radius for multiplicities");
  spectrum->callback([&] { action = [&] { return cmd_spectrum(o, out); }; });

  auto* bnds = app.add_subcommand("bounds", "Check the three bounds on the largest eigenvalue");
  bnds->add_option("file", o.file, ".smg file")->required();
  bnds->add_flag("--paper-trace", o.paper_trace, "Also print the trace bound from the closed form");
  bnds->callback([&] { action = [&] { return cmd_bounds(o, out, err); }; });

  auto* recognize = app.add_subcommand("recognize", "Reconstruct a semigraph from a .qmat matrix");
  recognize->add_option("file", o.file, ".qmat file")->required();
  recognize->add_option("--emit", o.emit, "Write the semigraph to this .smg file");
  recognize->add_flag("--allow-isolated", o.allow_isolated, "Accept zero rows as isolated vertices");
  recognize->callback([&] { action = [&] { return cmd_recognize(o, out); }; });

  auto* st = app.add_subcommand("star", "Generate a star family member");
  st->add_option("--family", o.family, "I or II")->required();
  st->add_option("--n", o.n, "Family parameter")->required();
  auto* st_emit = st->add_option("--emit", o.emit, "Write the .smg to this file");
  st->add_flag("--qmat", o.qmat, "Print the adjacency matrix instead")->excludes(st_emit);
  st->callback([&] { action = [&] { return cmd_star(o, out); }; });

  auto* rnd = app.add_subcommand("random", "Seeded random semigraph");
  rnd->add_option("--vertices", o.random.vertices, "Vertex count")->required();
  rnd->add_option("--edges", o.random.target_edges, "Target edge count")->required();
  rnd->add_option("--max-size", o.random.max_edge_size, "Largest edge size")->required();
  rnd->add_option("--seed", o.random.seed, "Generator seed")->required();
  rnd->callback([&] { action = [&] { return cmd_random(o, out); }; });

  auto* ids = app.add_subcommand("identities", "Degree-sum and trace identities");
  ids->add_option("file", o.file, ".smg file")->required();
  ids->callback([&] { action = [&] { return cmd_identities(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace semigraph::cli
