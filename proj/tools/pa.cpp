// pa: construct, verify and export the simple permutoassociahedra PA_n.
//
// Exit status: 0 success, 1 verification failure, 2 usage, IO or cap errors.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pa/brackets.hpp"
#include "pa/check.hpp"
#include "pa/export.hpp"
#include "pa/geometry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common {
  int n = 0;
  std::optional<int> max_n;

  pa::EnumerationLimits limits() const {
    pa::EnumerationLimits l = pa::EnumerationLimits::from_environment();
    if (max_n) {
      pa::check_dimension(*max_n);
      l.max_n = *max_n;
    }
    return l;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n", c.n, "dimension of the polytope")->required()->check(CLI::Range(1, pa::kMaxN));
  sub->add_option("--max-n", c.max_n, "raise the enumeration cap (default 6, or PA_MAX_N)");
}

// Writes to `path`, or to stdout when no path was given.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    pa::write_file_atomic(path, content);
  }
}

std::string dump(const pa::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and export the simple permutoassociahedra PA_n"};
  app.require_subcommand(1);

  Common common;

  std::string hrep_path;
  std::string vrep_path;
  auto* generate = app.add_subcommand("generate", "write the H- and/or V-representation");
  add_common(generate, common);
  generate->add_option("--hrep", hrep_path, "cdd .ine output");
  generate->add_option("--vrep", vrep_path, "vertex JSON output");

  bool perturb = false;
  std::string report_path;
  auto* check = app.add_subcommand("check", "verify the realization; exit 1 on any failure");
  add_common(check, common);
  check->add_flag("--perturb", perturb, "drop epsilon from every kappa (negative control)");
  check->add_option("--report", report_path, "JSON report output (default stdout)");

  int dim = 0;
  bool classify = false;
  std::string faces_path;
  auto* faces = app.add_subcommand("faces", "list the faces of one dimension");
  add_common(faces, common);
  faces->add_option("--dim", dim, "face dimension")->required();
  faces->add_flag("--classify", classify, "attach coherence diagram types (dim 2)");
  faces->add_option("--out", faces_path, "JSON output (default stdout)");

  std::string dot_path;
  auto* graph = app.add_subcommand("graph", "write the rewrite graph");
  add_common(graph, common);
  graph->add_option("--dot", dot_path, "DOT output (default stdout)");

  std::string parse_text;
  std::string bracketing_path;
  auto* bracketing = app.add_subcommand("bracketing", "look up the vertex of a complete bracketing");
  add_common(bracketing, common);
  bracketing->add_option("--parse", parse_text, "bracketing such as \"((2*3)*(0*1))\"")->required();
  bracketing->add_option("--out", bracketing_path, "JSON output (default stdout)");

  std::string off_path;
  auto* exporter = app.add_subcommand("export", "write a mesh (n = 3 only)");
  add_common(exporter, common);
  exporter->add_option("--off", off_path, "OFF output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const pa::EnumerationLimits limits = common.limits();
    pa::check_enumeration(common.n, limits);

    if (generate->parsed()) {
      if (hrep_path.empty() && vrep_path.empty()) {
        std::cerr << "generate: give --hrep and/or --vrep\n";
        return kExitUsage;
      }
      if (!hrep_path.empty()) emit(hrep_path, pa::hrep_ine(pa::h_representation(common.n)));
      if (!vrep_path.empty()) emit(vrep_path, dump(pa::vrep_json(common.n, limits)));
      return kExitOk;
    }
    if (check->parsed()) {
      pa::CheckOptions options;
      options.perturb = perturb;
      options.limits = limits;
      const pa::CheckReport report = pa::run_check(common.n, options);
      emit(report_path, dump(report.to_json()));
      return report.ok() ? kExitOk : kExitFailure;
    }
    if (faces->parsed()) {
      emit(faces_path, dump(pa::faces_json(common.n, dim, classify, limits)));
      return kExitOk;
    }
    if (graph->parsed()) {
      emit(dot_path, pa::graph_dot(pa::build_graph(common.n, limits), common.n));
      return kExitOk;
    }
    if (bracketing->parsed()) {
      const pa::Bracketing b = pa::parse_bracketing(parse_text, common.n);
      emit(bracketing_path, dump(pa::bracketing_record(b)));
      return kExitOk;
    }
    if (exporter->parsed()) {
      if (common.n != 3) {
        std::cerr << "export --off: only n = 3 is supported\n";
        return kExitUsage;
      }
      emit(off_path, pa::off_mesh(common.n));
      return kExitOk;
    }
  } catch (const pa::ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pa::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
