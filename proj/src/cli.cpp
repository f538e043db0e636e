#include "proxigraph/cli.hpp"

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "proxigraph/compute.hpp"
#include "proxigraph/service.hpp"

namespace proxigraph {
namespace {

enum class OutputFormat { Ipe, Svg, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string extension(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return {};
  std::string ext = path.substr(dot + 1);
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

PointFormat input_format(const std::string& name, const std::string& path) {
  const std::string f = name.empty() ? extension(path) : name;
  if (f == "csv" || f == "txt") return PointFormat::Csv;
  if (f == "json") return PointFormat::Json;
  if (f == "ipe" || f == "xml") return PointFormat::IpeXml;
  if (name.empty()) throw UsageError("cannot infer input format of '" + path + "'; pass --input-format");
  throw UsageError("unknown input format '" + name + "'");
}

OutputFormat output_format(const std::string& name, const std::string& path) {
  const std::string f = name.empty() ? extension(path) : name;
  if (f == "ipe" || f == "xml") return OutputFormat::Ipe;
  if (f == "svg") return OutputFormat::Svg;
  if (f == "json") return OutputFormat::Json;
  if (name.empty()) throw UsageError("cannot infer output format of '" + path + "'; pass --output-format");
  throw UsageError("unknown output format '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

/// Errors about the invocation rather than the data.
bool is_usage(ErrorKind kind) {
  return kind == ErrorKind::UnknownAlgorithm || kind == ErrorKind::MissingParameter ||
         kind == ErrorKind::InvalidParameter;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

Service* g_running = nullptr;

extern "C" void on_signal(int) {
  if (g_running) g_running->stop();
}

int serve(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"proxigraph compute service", "proxigraph serve"};
  ServiceOptions options;
  std::optional<int> port;
  app.add_option("--bind", options.bind, "listen address");
  app.add_option("--port", port, "listen port (default $PROXIGRAPH_PORT or 8080)");
  app.add_option("--cors-origin", options.cors_origin, "allowed cross-origin requester");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "proxigraph serve: " << first_line(e.what()) << '\n';
    return kExitUsage;
  }
  if (port) {
    options.port = *port;
  } else if (const char* env = std::getenv("PROXIGRAPH_PORT")) {
    try {
      options.port = std::stoi(env);
    } catch (const std::exception&) {
      err << "proxigraph serve: bad PROXIGRAPH_PORT '" << env << "'\n";
      return kExitUsage;
    }
  }

  Service service(options);
  const int bound = service.bind();
  if (bound < 0) {
    err << "proxigraph serve: cannot bind " << options.bind << ':' << options.port << '\n';
    return kExitDataError;
  }
  err << "listening on " << options.bind << ':' << bound << std::endl;
  g_running = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  service.run();
  g_running = nullptr;
  return kExitOk;
}

struct NumericFlag {
  const char* flag;
  const char* param;
  const char* help;
};

constexpr NumericFlag kFlags[] = {
    {"--k", "k", "neighbor or cluster count"},
    {"--epsilon", "epsilon", "distance threshold"},
    {"--sectors", "sectors", "Yao cone count"},
    {"--offset", "offset", "Yao sector origin in degrees"},
    {"--min-pts", "min_pts", "density neighborhood size"},
    {"--min-cluster-size", "min_cluster_size", "smallest HDBSCAN cluster"},
    {"--bandwidth", "bandwidth", "mean shift window radius"},
    {"--merge-tol", "merge_tol", "mean shift mode merge distance"},
    {"--target", "target", "linkage cluster count"},
    {"--seed", "seed", "random seed"},
    {"--max-iter", "max_iter", "iteration limit"},
};

int compute_command(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"Proximity graphs and clusterings of planar point sets", "proxigraph"};
  std::string algorithm, input, output, in_format, out_format;
  IpeOptions ipe;
  app.add_option("algorithm", algorithm, "algorithm id (see 'proxigraph --list')")->required();
  app.add_option("--input", input, "point file")->required();
  app.add_option("--output", output, "result file")->required();
  app.add_option("--input-format", in_format, "csv, json or ipe (default: from extension)");
  app.add_option("--output-format", out_format, "ipe, svg or json (default: from extension)");
  app.add_option("--ipe-version", ipe.version, "Ipe file format version");
  app.add_option("--mark-size", ipe.mark_size, "Ipe mark size");

  std::vector<std::pair<const NumericFlag*, double>> values(std::size(kFlags));
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < std::size(kFlags); ++i) {
    values[i].first = &kFlags[i];
    options.push_back(app.add_option(kFlags[i].flag, values[i].second, kFlags[i].help));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "proxigraph: " << first_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (!find_algorithm(algorithm)) throw UsageError("unknown algorithm '" + algorithm + "'");
    const PointFormat pf = input_format(in_format, input);
    const OutputFormat of = output_format(out_format, output);

    Params params;
    for (std::size_t i = 0; i < options.size(); ++i)
      if (options[i]->count() > 0) params[values[i].first->param] = values[i].second;

    const PointSet ps = parse_points(read_file(input), pf);
    const ComputeResult result = compute(ps, algorithm, params);
    switch (of) {
      case OutputFormat::Json: write_file(output, result.json()); break;
      case OutputFormat::Ipe: write_file(output, write_ipe(result.document(), ipe)); break;
      case OutputFormat::Svg: write_file(output, write_svg(result.document())); break;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "proxigraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "proxigraph: " << e.name() << ": " << first_line(e.what()) << '\n';
    return is_usage(e.kind()) ? kExitUsage : kExitDataError;
  } catch (const std::exception& e) {
    err << "proxigraph: " << first_line(e.what()) << '\n';
    return kExitDataError;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "proxigraph: missing algorithm; try 'proxigraph --help'\n";
    return kExitUsage;
  }
  if (args[0] == "serve") return serve({args.begin() + 1, args.end()}, err);
  if (args[0] == "--list") {
    for (const auto& info : algorithm_catalog()) {
      out << info.id;
      for (const auto& p : info.params) {
        std::string flag = p.name;
        for (auto& c : flag)
          if (c == '_') c = '-';
        out << (p.required ? " --" : " [--") << flag << (p.required ? "" : "]");
      }
      out << '\n';
    }
    return kExitOk;
  }
  return compute_command(args, err);
}

}  // namespace proxigraph
