#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "linknet/core.hpp"
#include "linknet/coupling.hpp"
#include "linknet/derived.hpp"
#include "linknet/error.hpp"
#include "linknet/normalize.hpp"
#include "linknet/pajek.hpp"

namespace linknet::cli {

namespace {

/// Library error annotated with the input it came from.
class InputError : public Error {
 public:
  using Error::Error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kAbsentPairsNote =
    "pairs absent from this network share no references: their distance is undefined (maximal)";

std::string fixed5(double v) {
  if (std::isnan(v)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

struct Options {
  std::string output = "-";
  bool arcs = false;
  std::uint64_t guard = kDefaultGuard;

  std::vector<std::string> inputs;
  bool transpose_a = false;
  bool transpose_b = false;
  std::size_t top = 10;
  bool fractional = false;
  std::string side;
  std::string variant;
  bool raw = false;
  std::string measure;
  std::string dissim;
  bool normalized = false;
  std::string loops = "keep";
  std::string loops_out;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  ExplosionGuard guard() const { return {opt_.guard}; }

  std::string slurp(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can be read only once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError(path + ": cannot open file");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  SparseNetwork network(const std::string& path) {
    const std::string text = slurp(path);
    try {
      return pajek::read_net(text);
    } catch (const Error& e) {
      throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
  }

  std::string net(const SparseNetwork& n) const {
    return pajek::write_net(n, opt_.arcs ? pajek::LinkStyle::arcs : pajek::LinkStyle::automatic);
  }

 private:
  const Options& opt_;
  std::istream& in_;
  bool stdin_used_ = false;
};

void write_file(const std::string& path, const std::string& payload) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError(path + ": cannot write file");
    f << payload;
    if (!f.flush()) throw InputError(path + ": write failed");
  }
  std::filesystem::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// Commands. Each returns the complete output text.
// ---------------------------------------------------------------------------

std::string cmd_norm1(Session& s, const Options& o) {
  const SparseNetwork n = s.network(o.inputs.at(0));
  if (!n.one_mode()) throw NotOneMode("norm1 expects a one-mode network; use norm2");
  return s.net(normalize_rows(n));
}

std::string cmd_norm2(Session& s, const Options& o) {
  return s.net(normalize_rows(s.network(o.inputs.at(0))));
}

std::string cmd_norm2p(Session& s, const Options& o) {
  return s.net(normalize_newman(s.network(o.inputs.at(0))));
}

std::string cmd_multiply(Session& s, const Options& o) {
  SparseNetwork a = s.network(o.inputs.at(0));
  SparseNetwork b = s.network(o.inputs.at(1));
  if (o.transpose_a) a = transpose(a);
  if (o.transpose_b) b = transpose(b);
  return s.net(multiply(a, b, s.guard()));
}

std::string cmd_decompose(Session& s, const Options& o) {
  SparseNetwork a = s.network(o.inputs.at(0));
  SparseNetwork b = s.network(o.inputs.at(1));
  if (o.transpose_a) a = transpose(a);
  if (o.transpose_b) b = transpose(b);
  const auto predicted = predicted_operations(a, b);
  if (predicted > o.guard) throw ExplosionAborted(predicted, o.guard);

  struct Row {
    Index pivot;
    std::size_t rows;
    std::size_t cols;
    double total;
  };
  std::vector<Row> rows;
  const OuterDecomposition terms(
      a, b, o.fractional ? TermScaling::fractional : TermScaling::raw);
  for (const OuterTerm& t : terms) {
    rows.push_back({t.pivot, t.row_profile.nnz(), t.col_profile.nnz(), t.total_weight()});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& x, const Row& y) { return x.total > y.total; });
  if (o.top > 0 && rows.size() > o.top) rows.resize(o.top);

  const NodeSetPtr pivots = b.rows();
  std::string out = "pivot\tlabel\trow_nodes\tcol_nodes\ttotal\n";
  for (const Row& r : rows) {
    out += std::to_string(r.pivot + 1) + "\t" + pivots->label(r.pivot) + "\t" +
           std::to_string(r.rows) + "\t" + std::to_string(r.cols) + "\t" + fixed5(r.total) + "\n";
  }
  return out;
}

std::string cmd_project(Session& s, const Options& o) {
  const auto side = o.side == "rows" ? ProjectionSide::rows : ProjectionSide::cols;
  return s.net(project(s.network(o.inputs.at(0)), side, s.guard()));
}

std::string cmd_coauth(Session& s, const Options& o) {
  static const std::map<std::string, CoauthorshipVariant> variants{
      {"first", CoauthorshipVariant::first},
      {"second", CoauthorshipVariant::second},
      {"third", CoauthorshipVariant::third},
      {"fourth", CoauthorshipVariant::fourth}};
  return s.net(coauthorship(s.network(o.inputs.at(0)), variants.at(o.variant), s.guard()));
}

std::string cmd_selfsuff(Session& s, const Options& o) {
  const SparseNetwork wa = s.network(o.inputs.at(0));
  const SelfSufficiency r = self_sufficiency(wa);
  const WeightVector indeg = in_degrees(wa);
  std::string out = "author\tworks\tselfsufficiency\tcollaborativeness\n";
  for (Index a = 0; a < wa.col_count(); ++a) {
    out += wa.cols()->label(a) + "\t" + pajek::format_number(indeg[a]) + "\t" +
           fixed5(r.selfsufficiency[a]) + "\t" + fixed5(r.collaborativeness[a]) + "\n";
  }
  return out;
}

std::string cmd_link_through(Session& s, const Options& o) {
  const SparseNetwork wa = s.network(o.inputs.at(0));
  const SparseNetwork through = s.network(o.inputs.at(1));
  return s.net(link_through(wa, through, !o.raw, s.guard()));
}

std::string cmd_bico(Session& s, const Options& o) {
  return s.net(bi_coupling(s.network(o.inputs.at(0)), s.guard()));
}

std::string cmd_bicon(Session& s, const Options& o) {
  const SparseNetwork ci = s.network(o.inputs.at(0));
  if (o.measure.empty()) {
    if (!o.dissim.empty()) throw UsageError("--dissim requires --measure");
    return s.net(bi_coupling_asym(ci, s.guard()));
  }
  const MeasureKind kind = *measure_from_code(o.measure);
  const SparseNetwork sim = bi_coupling_measure(ci, kind, s.guard());
  if (o.dissim.empty()) return s.net(sim);

  static const std::map<std::string, DissimilarityTransform> transforms{
      {"1-s", DissimilarityTransform::one_minus},
      {"inv", DissimilarityTransform::reciprocal_minus_one},
      {"log", DissimilarityTransform::negative_log}};
  const PairTable dis = to_dissimilarity(sim, transforms.at(o.dissim));
  return pajek::write_pairs(dis, std::string(measure_name(kind)) + " dissimilarity (" +
                                     o.dissim + ")\n" + kAbsentPairsNote);
}

std::string cmd_cocit(Session& s, const Options& o) {
  const SparseNetwork ci = s.network(o.inputs.at(0));
  return s.net(o.normalized ? co_citation_normalized(ci, s.guard()) : co_citation(ci, s.guard()));
}

std::string cmd_fold(Session& s, const Options& o) {
  static const std::map<std::string, LoopPolicy> policies{
      {"keep", LoopPolicy::keep}, {"drop", LoopPolicy::drop}, {"extract", LoopPolicy::extract}};
  const LoopPolicy policy = policies.at(o.loops);
  if (!o.loops_out.empty() && policy != LoopPolicy::extract) {
    throw UsageError("--loops-out requires --loops extract");
  }
  const FoldResult r = fold_to_undirected(s.network(o.inputs.at(0)), policy);
  if (!o.loops_out.empty()) write_file(o.loops_out, pajek::write_vec(*r.loops));
  return s.net(r.network);
}

std::string cmd_stats(Session& s, const Options& o) {
  const SparseNetwork n = s.network(o.inputs.at(0));
  const WeightVector out_deg = out_degrees(n);
  const WeightVector in_deg = in_degrees(n);
  auto max_of = [](const WeightVector& v) {
    double m = 0;
    for (double x : v.values()) m = std::max(m, x);
    return m;
  };
  const double cells = static_cast<double>(n.row_count()) * static_cast<double>(n.col_count());
  const double links = static_cast<double>(n.nnz());

  std::string out = "metric\tvalue\n";
  auto add = [&out](const std::string& k, const std::string& v) { out += k + "\t" + v + "\n"; };
  add("mode", n.one_mode() ? "one-mode" : "two-mode");
  add("rows", std::to_string(n.row_count()));
  add("cols", std::to_string(n.col_count()));
  add("links", std::to_string(n.nnz()));
  add("total_weight", fixed5(total_weight(n)));
  add("density", fixed5(cells > 0 ? links / cells : 0.0));
  add("max_outdeg", pajek::format_number(max_of(out_deg)));
  add("mean_outdeg", fixed5(n.row_count() > 0 ? links / static_cast<double>(n.row_count()) : 0.0));
  add("max_indeg", pajek::format_number(max_of(in_deg)));
  add("mean_indeg", fixed5(n.col_count() > 0 ? links / static_cast<double>(n.col_count()) : 0.0));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sparse linked-network analysis over Pajek files", "linknet"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("-o,--output", opt.output, "Output file, '-' for standard output");
  app.add_flag("--arcs", opt.arcs, "Write every network with *Arcs");
  app.add_option("--guard", opt.guard, "Maximum predicted multiply operations per product")
      ->envname("LINKNET_GUARD");

  using Command = std::string (*)(Session&, const Options&);
  std::map<CLI::App*, Command> commands;
  auto add = [&](const char* name, const char* help, Command fn, std::size_t n_inputs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", opt.inputs, "Input Pajek file(s), '-' for standard input")
        ->required()
        ->expected(static_cast<int>(n_inputs));
    commands[sub] = fn;
    return sub;
  };

  add("norm1", "Row-normalize a one-mode network", cmd_norm1, 1);
  add("norm2", "Row-normalize a two-mode network", cmd_norm2, 1);
  add("norm2p", "Newman normalization of a binary two-mode network", cmd_norm2p, 1);

  auto* mul = add("multiply", "Product of two compatible networks", cmd_multiply, 2);
  mul->add_flag("--transpose-a", opt.transpose_a, "Transpose the first factor");
  mul->add_flag("--transpose-b", opt.transpose_b, "Transpose the second factor");

  auto* dec = add("decompose", "Report the largest outer product terms", cmd_decompose, 2);
  dec->add_flag("--transpose-a", opt.transpose_a, "Transpose the first factor");
  dec->add_flag("--transpose-b", opt.transpose_b, "Transpose the second factor");
  dec->add_option("--top", opt.top, "Number of terms to report, 0 for all");
  dec->add_flag("--fractional", opt.fractional, "Scale every term to total weight 1");

  add("project", "One-mode projection of a two-mode network", cmd_project, 1)
      ->add_option("--side", opt.side, "rows (WA*WA^T) or cols (WA^T*WA)")
      ->required()
      ->check(CLI::IsMember({"rows", "cols"}));

  add("coauth", "Coauthorship network from an authorship network", cmd_coauth, 1)
      ->add_option("--variant", opt.variant, "first, second, third or fourth")
      ->required()
      ->check(CLI::IsMember({"first", "second", "third", "fourth"}));

  add("selfsuff", "Selfsufficiency and collaborativeness of authors (TSV)", cmd_selfsuff, 1);

  add("link-through", "Link authors through a works network", cmd_link_through, 2)
      ->add_flag("--raw", opt.raw, "Use the unnormalized authorship network");

  add("bico", "Bibliographic coupling network", cmd_bico, 1);

  auto* bicon = add("bicon", "Normalized bibliographic coupling", cmd_bicon, 1);
  bicon->add_option("--measure", opt.measure, "a, m, M, g, h or j")
      ->check(CLI::IsMember({"a", "m", "M", "g", "h", "j"}));
  bicon->add_option("--dissim", opt.dissim, "1-s, inv or log")
      ->check(CLI::IsMember({"1-s", "inv", "log"}));

  add("cocit", "Co-citation network", cmd_cocit, 1)
      ->add_flag("--normalized", opt.normalized, "Fractional co-citation");

  auto* fold = add("fold", "Fold a symmetric one-mode network into edges", cmd_fold, 1);
  fold->add_option("--loops", opt.loops, "keep, drop or extract")
      ->check(CLI::IsMember({"keep", "drop", "extract"}));
  fold->add_option("--loops-out", opt.loops_out, "Vector file receiving the extracted loops");

  add("stats", "Summary statistics (TSV)", cmd_stats, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session session(opt, in);
  try {
    const std::string payload = commands.at(chosen)(session, opt);
    if (opt.output == "-") {
      out << payload;
    } else {
      write_file(opt.output, payload);
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "linknet " << chosen->get_name() << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const ExplosionAborted& e) {
    err << "linknet " << chosen->get_name() << ": " << e.what() << "\n";
    return kExplosionAborted;
  } catch (const Error& e) {
    err << "linknet " << chosen->get_name() << ": " << e.what() << "\n";
    return kDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "linknet " << chosen->get_name() << ": " << e.what() << "\n";
    return kDataError;
  }
}

}  // namespace linknet::cli
