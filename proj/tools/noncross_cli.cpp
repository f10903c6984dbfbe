// Command-line front end for libnoncross. Talks to the library exclusively
// through the C API in noncross.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "noncross.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { ncx_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

int report_error(ncx_status s) {
  std::cerr << "error (" << ncx_status_name(s) << "): " << ncx_last_error()
            << "\n";
  switch (s) {
    case NCX_ERROR_PARSE:
    case NCX_ERROR_INVALID:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

unsigned env_bound() {
  const char* v = std::getenv("NONCROSS_BRUTE_BOUND");
  if (!v) return 0;
  char* end = nullptr;
  unsigned long b = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0') {
    std::cerr << "warning: ignoring malformed NONCROSS_BRUTE_BOUND\n";
    return 0;
  }
  return static_cast<unsigned>(b);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

int cmd_count(const std::string& family, unsigned n, const std::string& method,
              unsigned bound, bool structured) {
  Owned out;
  ncx_status s = ncx_count(family.c_str(), n, method.c_str(), bound, &out.p);
  if (s != NCX_OK) return report_error(s);
  if (structured) {
    json rec{{"command", "count"},
             {"family", family},
             {"n", n},
             {"method", method},
             {"value", out.str()}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << out.str() << "\n";
  }
  return kExitOk;
}

int cmd_seq(const std::string& family, unsigned upto, const std::string& method,
            unsigned bound, bool structured) {
  Owned out;
  ncx_status s = ncx_seq(family.c_str(), upto, method.c_str(), bound, &out.p);
  if (s != NCX_OK) return report_error(s);
  if (!structured) {
    std::cout << out.str();
    return kExitOk;
  }
  for (const std::string& line : split_lines(out.str())) {
    auto space = line.find(' ');
    json rec{{"command", "seq"},
             {"family", family},
             {"method", method},
             {"n", std::stoul(line.substr(0, space))},
             {"value", line.substr(space + 1)}};
    std::cout << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& family, unsigned n, bool structured) {
  ncx_enum* e = nullptr;
  ncx_status s = ncx_enum_open(family.c_str(), n, &e);
  if (s != NCX_OK) return report_error(s);
  char* item = nullptr;
  unsigned long index = 0;
  while (ncx_enum_next(e, &item)) {
    Owned owned{item};
    if (structured) {
      json rec{{"command", "enumerate"},
               {"family", family},
               {"n", n},
               {"index", index},
               {"partition", owned.str()}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << owned.str() << "\n";
    }
    ++index;
  }
  ncx_enum_close(e);
  return kExitOk;
}

int cmd_transform(const std::string& terms, const std::string& input_file,
                  bool inverse, unsigned max_terms, bool structured) {
  std::string text = terms;
  if (text.empty()) {
    if (input_file.empty() || input_file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(input_file);
      if (!in) {
        std::cerr << "error: cannot open " << input_file << "\n";
        return kExitUsage;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
  }
  const char* style = structured ? "pairs" : nullptr;
  Owned out;
  ncx_status s =
      ncx_transform(text.c_str(), inverse ? 1 : 0, style, max_terms, &out.p);
  if (s != NCX_OK) return report_error(s);
  if (!structured) {
    std::cout << out.str();
    return kExitOk;
  }
  for (const std::string& line : split_lines(out.str())) {
    auto space = line.find(' ');
    json rec{{"command", "transform"},
             {"direction", inverse ? "inverse" : "forward"},
             {"k", std::stoul(line.substr(0, space))},
             {"term", line.substr(space + 1)}};
    std::cout << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_bijection(const std::string& direction, const std::string& path,
                  const std::string& labels, const std::string& partition,
                  bool trace, bool structured) {
  Owned out;
  if (direction == "forward") {
    if (path.empty()) {
      std::cerr << "error: forward direction needs --path and --labels\n";
      return kExitUsage;
    }
    ncx_status s = ncx_bijection_forward(path.c_str(), labels.c_str(),
                                         trace ? 1 : 0, &out.p);
    if (s != NCX_OK) return report_error(s);
    if (structured) {
      auto lines = split_lines(out.str());
      json rec{{"command", "bijection"},
               {"direction", "forward"},
               {"path", path},
               {"labels", labels},
               {"partition", lines.back()}};
      if (trace) {
        lines.pop_back();
        rec["trace"] = lines;
      }
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << out.str();
    }
    return kExitOk;
  }
  if (partition.empty()) {
    std::cerr << "error: inverse direction needs --partition\n";
    return kExitUsage;
  }
  ncx_status s =
      ncx_bijection_inverse(partition.c_str(), trace ? 1 : 0, &out.p);
  if (s != NCX_OK) return report_error(s);
  if (structured) {
    auto lines = split_lines(out.str());
    json rec{{"command", "bijection"},
             {"direction", "inverse"},
             {"partition", partition},
             {"path", lines[lines.size() - 2]},
             {"labels", lines.back()}};
    if (trace) {
      lines.resize(lines.size() - 2);
      rec["trace"] = lines;
    }
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << out.str();
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned max_n, bool structured) {
  Owned report;
  ncx_status s = ncx_verify(suite.c_str(), max_n, &report.p);
  if (s != NCX_OK && s != NCX_ERROR_CHECK) return report_error(s);
  if (!structured) {
    std::cout << report.str();
  } else {
    for (const std::string& line : split_lines(report.str())) {
      auto space = line.find(' ');
      std::string rest = line.substr(space + 1);
      auto colon = rest.find(": ");
      json rec{{"command", "verify"},
               {"suite", suite},
               {"status", line.substr(0, space)},
               {"check", colon == std::string::npos ? rest : rest.substr(0, colon)},
               {"detail", colon == std::string::npos ? "" : rest.substr(colon + 2)}};
      std::cout << rec.dump() << "\n";
    }
  }
  return s == NCX_OK ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "noncross: exact counting and enumeration of the eight partition "
      "families over {1..n}, the peak-labeled Dyck path bijection, and the "
      "noncrossing partition transform"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(ncx_version()); });

  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "structured"}))
      ->capture_default_str();

  const std::vector<std::string> family_codes = {"ss",    "sl",    "ls",
                                                 "ll",    "ss-nc", "sl-nc",
                                                 "ls-nc", "ll-nc"};
  const unsigned bound_default = env_bound();

  std::string family, method = "auto";
  unsigned n = 0, upto = 0, bound = bound_default;

  CLI::App* count = app.add_subcommand("count", "Count one family at one n");
  count->add_option("--family", family, "Family code")
      ->required()
      ->check(CLI::IsMember(family_codes));
  count->add_option("--n", n, "Ground set size")->required()->check(CLI::PositiveNumber);
  count->add_option("--method", method, "auto, closed, recurrence or bruteforce")
      ->check(CLI::IsMember({"auto", "closed", "recurrence", "bruteforce"}))
      ->capture_default_str();
  count->add_option("--bound", bound,
                    "Brute-force cap (also NONCROSS_BRUTE_BOUND)");

  CLI::App* seq = app.add_subcommand("seq", "Counts for n = 1..upto");
  seq->add_option("--family", family, "Family code")
      ->required()
      ->check(CLI::IsMember(family_codes));
  seq->add_option("--upto", upto, "Largest n")->required()->check(CLI::PositiveNumber);
  seq->add_option("--method", method, "auto, closed, recurrence or bruteforce")
      ->check(CLI::IsMember({"auto", "closed", "recurrence", "bruteforce"}))
      ->capture_default_str();
  seq->add_option("--bound", bound, "Brute-force cap (also NONCROSS_BRUTE_BOUND)");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List every member of a family");
  enumerate->add_option("--family", family, "Family code")
      ->required()
      ->check(CLI::IsMember(family_codes));
  enumerate->add_option("--n", n, "Ground set size")
      ->required()
      ->check(CLI::PositiveNumber);

  std::string terms, input_file;
  bool inverse = false;
  unsigned max_terms = 0;
  CLI::App* transform = app.add_subcommand(
      "transform", "Apply the noncrossing partition transform to a sequence");
  transform->add_option("--terms", terms, "Inline sequence, e.g. 1,1,2,6");
  transform->add_option("--input", input_file,
                        "Sequence file ('-' or omitted reads stdin)");
  transform->add_flag("--inverse", inverse, "Apply the inverse transform");
  transform->add_option("--max-terms", max_terms,
                        "Compute indices 0..N only (0 keeps the input length)");

  std::string direction = "forward", path, labels, partition;
  bool trace = false;
  CLI::App* bijection = app.add_subcommand(
      "bijection",
      "Map a peak-labeled Dyck path to a set of lists, or back");
  bijection->add_option("--direction", direction, "forward or inverse")
      ->check(CLI::IsMember({"forward", "inverse"}))
      ->capture_default_str();
  bijection->add_option("--path", path, "Path over U and D, e.g. UUDUDD");
  bijection->add_option("--labels", labels, "Comma-separated peak labels");
  bijection->add_option("--partition", partition,
                        "Set of lists, e.g. 1|3,6,8|4|5,2|7|9");
  bijection->add_flag("--trace", trace, "Show the intermediate tables");

  std::string suite = "all";
  unsigned max_n = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the cross-validation checks");
  verify->add_option("--suite", suite,
                     "counts, bijection, transform, termcounts or all")
      ->check(CLI::IsMember({"counts", "bijection", "transform", "termcounts", "all"}))
      ->capture_default_str();
  verify->add_option("--max-n", max_n,
                     "Cap the sweep ranges (0 keeps the defaults)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool structured = format == "structured";
  if (count->parsed()) return cmd_count(family, n, method, bound, structured);
  if (seq->parsed()) return cmd_seq(family, upto, method, bound, structured);
  if (enumerate->parsed()) return cmd_enumerate(family, n, structured);
  if (transform->parsed())
    return cmd_transform(terms, input_file, inverse, max_terms, structured);
  if (bijection->parsed())
    return cmd_bijection(direction, path, labels, partition, trace, structured);
  if (verify->parsed()) return cmd_verify(suite, max_n, structured);
  return kExitUsage;
}
