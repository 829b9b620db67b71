#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgq/hgq.hpp"
#include "json_io.hpp"

namespace hgq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kGuardExceeded = 3,
};

inline const std::vector<std::string> kCommands = {
    "psi", "fpoly", "fpoly-oracle", "vertices", "faces", "coproduct",
    "antipode", "verify-theorem", "verify-hopf", "family"};

struct JobSpec {
  std::string command;
  std::string input = "-";  // file path, "-" for stdin; family name for `family`
  bool strict = false;
  std::optional<int> guard_n;
  unsigned threads = 1;
  std::optional<std::int64_t> q;
  std::uint64_t seed = kDefaultSeed;
  std::string output = "-";
  // family descriptor
  int n = 0;
  int k = 0;
  std::string edges_json;
  std::string then = "";
  // verification suites
  std::optional<int> exhaustive;
  int random_count = 0;
};

class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(io::Json report) : std::runtime_error("verification failed"), report_(std::move(report)) {}
  const io::Json& report() const { return report_; }

 private:
  io::Json report_;
};

inline std::vector<std::vector<int>> parse_int_lists(const std::string& text) {
  io::Json doc;
  try {
    doc = io::Json::parse(text.empty() ? "[]" : text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("malformed document: expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : doc) {
    if (!row.is_array()) throw InputError("malformed document: expected an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("malformed document: vertices must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline Hypergraph materialize_family(const JobSpec& job) {
  const std::string& name = job.input;
  if (name == "complete") return complete(job.n, job.guard_n.value_or(kFamilyGuard));
  if (name == "uniform") return uniform(job.n, job.k, job.guard_n.value_or(kFamilyGuard));
  // --n is the polytope dimension here: PS^n lives on n + 1 vertices.
  if (name == "pitman-stanley") {
    if (job.n < 0) throw InputError("pitman-stanley: n must be nonnegative");
    return pitman_stanley(job.n + 1);
  }
  if (name == "graph") {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : parse_int_lists(job.edges_json)) {
      if (e.size() != 2) throw InputError("graph edges must be pairs");
      pairs.emplace_back(e[0], e[1]);
    }
    return from_graph(job.n, pairs);
  }
  if (name == "complex") return simplicial_complex(job.n, parse_int_lists(job.edges_json));
  throw InputError("unknown family '" + name + "' (complete|uniform|pitman-stanley|graph|complex)");
}

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Hypergraph load_input(const JobSpec& job, std::istream& in) {
  if (job.input == "-") return io::parse_input(read_all(in), job.strict);
  std::ifstream file(job.input);
  if (!file) throw InputError("cannot open input file '" + job.input + "'");
  return io::parse_input(read_all(file), job.strict);
}

/// The hypergraphs a verification command runs over.
template <class Visitor>
void for_each_subject(const JobSpec& job, std::istream& in, Visitor&& visit) {
  if (job.exhaustive) {
    for_each_hypergraph(*job.exhaustive, visit);
  } else if (job.random_count > 0) {
    Rng rng(job.seed);
    for (int i = 0; i < job.random_count; ++i) visit(random_hypergraph(job.n, rng));
  } else {
    visit(load_input(job, in));
  }
}

inline io::Json run_on(const std::string& command, const Hypergraph& h, const JobSpec& job) {
  const auto q = job.q;
  if (command == "psi") {
    return io::qsym_json(psi_q(h, job.guard_n.value_or(kPsiGuard), job.threads), q);
  }
  if (command == "fpoly") {
    return io::Json{{"f", io::poly_json(f_polynomial_from_enumerator(
                                            psi_q(h, job.guard_n.value_or(kPsiGuard), job.threads)),
                                        q)}};
  }
  if (command == "fpoly-oracle") {
    return io::Json{{"f", io::poly_json(f_polynomial_geometric(h, job.guard_n.value_or(kOracleGuard),
                                                               job.threads),
                                        q)}};
  }
  if (command == "vertices") {
    return io::Json{{"n", h.n()}, {"vertices", minkowski_vertices(h, job.guard_n.value_or(kOracleGuard))}};
  }
  if (command == "faces") {
    HypergraphicPolytope poly(h, job.guard_n.value_or(kOracleGuard));
    io::Json faces = io::Json::array();
    for (const auto& f : poly.faces(job.threads)) {
      faces.push_back(io::Json{{"vertex_ids", f.vertex_ids}, {"dim", f.dim}});
    }
    return io::Json{{"n", h.n()}, {"vertices", poly.vertices()}, {"faces", std::move(faces)}};
  }
  if (command == "coproduct") return io::tensor_json(coproduct(hopf_basis(h)), q);
  if (command == "antipode") {
    return io::hopf_json(antipode(hopf_basis(h), job.guard_n.value_or(kAntipodeGuard)), q);
  }
  throw InputError("command '" + command + "' cannot be applied to a single hypergraph");
}

inline io::Json verify_theorem_job(const JobSpec& job, std::istream& in) {
  std::size_t checked = 0;
  io::Json details = io::Json::array();
  for_each_subject(job, in, [&](const Hypergraph& h) {
    const TheoremReport r = verify_theorem(h, job.guard_n.value_or(kOracleGuard));
    checked += r.checked;
    for (const auto& m : r.mismatches) {
      details.push_back(io::Json{{"hypergraph", io::hypergraph_json(h)},
                                 {"flag", io::flag_json(m.flag)},
                                 {"geometric_rank", m.geometric_rank},
                                 {"split_rank", m.split_rank}});
    }
  });
  io::Json report{{"checked", checked}, {"mismatches", details.size()}};
  if (!details.empty()) {
    report["details"] = std::move(details);
    throw VerificationFailure(std::move(report));
  }
  return report;
}

inline io::Json verify_hopf_job(const JobSpec& job, std::istream& in) {
  std::size_t checked = 0;
  io::Json details = io::Json::array();
  for_each_subject(job, in, [&](const Hypergraph& h) {
    const HopfReport r = verify_hopf(h, job.guard_n.value_or(kAntipodeGuard));
    checked += r.checked;
    for (const auto& f : r.failures) {
      details.push_back(io::Json{{"hypergraph", io::hypergraph_json(h)}, {"axiom", f}});
    }
  });
  io::Json report{{"checked", checked}, {"mismatches", details.size()}};
  if (!details.empty()) {
    report["details"] = std::move(details);
    throw VerificationFailure(std::move(report));
  }
  return report;
}

inline io::Json execute(const JobSpec& job, std::istream& in) {
  if (job.command == "verify-theorem") return verify_theorem_job(job, in);
  if (job.command == "verify-hopf") return verify_hopf_job(job, in);
  if (job.command == "family") {
    const Hypergraph h = materialize_family(job);
    if (job.then.empty()) return io::hypergraph_json(h);
    if (job.then == "verify-theorem" || job.then == "verify-hopf" || job.then == "family") {
      JobSpec chained = job;
      chained.command = job.then;
      chained.then.clear();
      std::istringstream doc(io::hypergraph_json(h).dump());
      chained.input = "-";
      chained.strict = true;
      return execute(chained, doc);
    }
    return run_on(job.then, h, job);
  }
  return run_on(job.command, load_input(job, in), job);
}

inline void emit(const JobSpec& job, const io::Json& doc, std::ostream& out) {
  if (job.output == "-") {
    out << doc.dump() << '\n';
    return;
  }
  std::ofstream file(job.output);
  if (!file) throw InputError("cannot open output file '" + job.output + "'");
  file << doc.dump() << '\n';
}

/// Entry point shared by the binary and the tests.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasisymmetric invariants and f-polynomials of hypergraphic polytopes"};
  JobSpec job;
  app.add_option("command", job.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("input", job.input,
                 "Input JSON file ('-' for stdin); for `family`, the family name "
                 "(complete|uniform|pitman-stanley|graph|complex)");
  app.add_flag("--strict", job.strict, "Reject inputs with missing singletons instead of adding them");
  app.add_option("--guard-n", job.guard_n, "Override the vertex-count guard")->check(CLI::PositiveNumber);
  app.add_option("--threads", job.threads, "Worker threads for flag sweeps")->check(CLI::PositiveNumber);
  app.add_option("--q", job.q, "Evaluate polynomials at this integer q");
  app.add_option("--seed", job.seed, "Seed for randomized suites");
  app.add_option("-o,--output", job.output, "Output file ('-' for stdout)");
  app.add_option("--n", job.n, "Vertex count for `family` (dimension for pitman-stanley) and `--random`");
  app.add_option("--k", job.k, "Edge size for the uniform family");
  app.add_option("--edges", job.edges_json, "JSON edge pairs (graph) or facets (complex)");
  app.add_option("--then", job.then, "Command applied to the materialized family")
      ->check(CLI::IsMember(kCommands));
  app.add_option("--exhaustive", job.exhaustive, "Verify every hypergraph on this many vertices")
      ->check(CLI::Range(1, 4));
  app.add_option("--random", job.random_count, "Verify this many seeded random hypergraphs on --n vertices")
      ->check(CLI::NonNegativeNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (job.random_count > 0 && job.n < 1) {
    err << "error: --random needs --n\n";
    return kUsage;
  }

  try {
    emit(job, execute(job, in), out);
    return kOk;
  } catch (const VerificationFailure& e) {
    emit(job, e.report(), out);
    err << "error: verification failed\n";
    return kVerificationFailed;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hgq::cli
