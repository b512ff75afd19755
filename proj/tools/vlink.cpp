#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vlink/json_report.hpp"

namespace {

using vlink::json;

struct Options {
  std::string format = "json";
  int budget_states = 100000;
  int budget_depth = 64;
  bool enable_r3 = false;
  bool enable_r2_insertion = false;
  int cap = 16;
  int lambda_cap = 20;
  std::uint64_t seed = 0;
  bool require_exact = false;

  vlink::MoveBudget budget() const {
    return {budget_states, budget_depth, enable_r3, enable_r2_insertion};
  }
  vlink::SearchCaps caps() const { return {cap, lambda_cap}; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw vlink::Error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Batch mode: blank-line-separated diagrams.
std::vector<std::string> split_chunks(const std::string& text) {
  std::vector<std::string> chunks;
  std::istringstream lines(text);
  std::string line, cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t\r\n") != std::string::npos) chunks.push_back(cur);
    cur.clear();
  };
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      cur += line;
      cur += '\n';
    }
  }
  flush();
  if (chunks.empty()) chunks.push_back("");
  return chunks;
}

int worker_count() {
  const char* env = std::getenv("VLINK_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) throw vlink::SyntaxError("malformed integer list: " + text);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw vlink::SyntaxError("malformed integer list: " + text);
    }
    if (pos != cur.size()) throw vlink::SyntaxError("malformed integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw vlink::SyntaxError("empty integer list");
  return out;
}

void print_doc(const json& doc, const Options& opts) {
  if (opts.format == "text") {
    if (doc.is_array()) {
      for (const auto& item : doc) {
        for (const auto& [key, value] : item.items())
          std::cout << key << ": " << value.dump() << "\n";
        std::cout << "\n";
      }
    } else {
      for (const auto& [key, value] : doc.items())
        std::cout << key << ": " << value.dump() << "\n";
    }
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

// Runs fn over every chunk (in parallel waves when VLINK_THREADS > 1, output
// order fixed by input order) and prints one document or a batch array.
int run_per_diagram(const std::string& input, const Options& opts,
                    const std::function<json(const vlink::Diagram&, bool&)>& fn) {
  std::vector<std::string> chunks = split_chunks(read_input(input));
  std::vector<json> docs(chunks.size());
  std::vector<char> exhausted(chunks.size(), 0);
  int threads = worker_count();
  for (std::size_t base = 0; base < chunks.size(); base += threads) {
    std::vector<std::future<void>> wave;
    std::size_t end = std::min(chunks.size(), base + threads);
    for (std::size_t i = base; i < end; ++i)
      wave.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&, i] {
                                  bool ex = false;
                                  docs[i] = fn(vlink::parse_gauss_code(chunks[i]), ex);
                                  exhausted[i] = ex ? 1 : 0;
                                }));
    for (auto& f : wave) f.get(); // rethrows input errors
  }
  print_doc(chunks.size() == 1 ? docs[0] : json(docs), opts);
  bool any_exhausted = std::any_of(exhausted.begin(), exhausted.end(), [](char c) { return c; });
  return (opts.require_exact && any_exhausted) ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual-link invariants, unknotting-index bounds and exact search"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--budget-states", opts.budget_states, "Move-search state cap")
      ->capture_default_str();
  app.add_option("--budget-depth", opts.budget_depth, "Move-sequence length cap")
      ->capture_default_str();
  app.add_flag("--enable-r3", opts.enable_r3, "Explore R3 moves in simplification");
  app.add_flag("--enable-r2-insertion", opts.enable_r2_insertion,
               "Explore R2 chord-pair insertions in simplification");
  app.add_option("--cap", opts.cap, "Crossing-count cap for the exact search")
      ->capture_default_str();
  app.add_option("--lambda-cap", opts.lambda_cap, "Linking-crossing cap for Lambda enumeration")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for randomized operations")->capture_default_str();
  app.add_flag("--require-exact", opts.require_exact,
               "Exit with status 2 when a result is budget-limited");

  std::string input = "-";
  std::string params_text;

  auto* invariants = app.add_subcommand("invariants", "Span, linking numbers, writhes, warping");
  invariants->add_option("input", input, "Gauss-code file or - for stdin");

  auto* bounds = app.add_subcommand("bounds", "Lower/upper unknotting-index bounds");
  bounds->add_option("input", input, "Gauss-code file or - for stdin");

  auto* search = app.add_subcommand("search", "Exact dictionary-ordered unknotting-index search");
  search->add_option("input", input, "Gauss-code file or - for stdin");

  auto* simplify_cmd = app.add_subcommand("simplify", "Reidemeister simplification");
  simplify_cmd->add_option("input", input, "Gauss-code file or - for stdin");

  auto* pretzel_cmd = app.add_subcommand("pretzel", "Pretzel-link generation and verification");
  pretzel_cmd->require_subcommand(1);
  pretzel_cmd->fallthrough();
  auto* pgen = pretzel_cmd->add_subcommand("gen", "Generate a labeled pretzel diagram");
  pgen->add_option("params", params_text, "Comma-separated twist counts, e.g. 7,5,9,11")
      ->required();
  std::string virtualize_text;
  pgen->add_option("--virtualize", virtualize_text, "Comma-separated labels to virtualize");

  auto* pformula = pretzel_cmd->add_subcommand("formula", "Closed-form unknotting index");
  std::string thm31_p, thm32_p, cor33_p, k_even_text, k_odd_text;
  int k = 0, k1 = 0;
  pformula->add_option("--thm31", thm31_p, "Parameters for the odd family");
  pformula->add_option("--thm32", thm32_p, "Parameters for the even family");
  pformula->add_option("--cor33", cor33_p, "Two parameters with even sum");
  pformula->add_option("--k", k, "Virtualized label count");
  pformula->add_option("--k1", k1, "Virtualized even-label count");
  pformula->add_option("--k-even", k_even_text, "Per-strand even-label counts");
  pformula->add_option("--k-odd", k_odd_text, "Per-strand odd-label counts");

  auto* pverify = pretzel_cmd->add_subcommand("verify", "Exhaustive family verification");
  pverify->add_option("params", params_text, "Comma-separated twist counts")->required();
  bool all_subsets = false;
  long max_subsets = 1024;
  pverify->add_flag("--all-subsets", all_subsets, "Check every virtualization subset");
  pverify->add_option("--max-subsets", max_subsets, "Subset-count cap")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Independent brute-force cross-checks");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* lemma22 = oracle->add_subcommand("lemma22", "Minimal span-killing virtualizations");
  lemma22->add_option("input", input, "Gauss-code file or - for stdin");
  auto* thm26 = oracle->add_subcommand("thm26", "Brute-force ell vs closed form");
  thm26->add_option("input", input, "Gauss-code file or - for stdin");

  try {
    app.parse(argc, argv);

    if (*invariants)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool&) {
        return vlink::invariants_json(d);
      });
    if (*bounds)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool&) {
        return vlink::bounds_json(vlink::bound_report(d));
      });
    if (*search)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool& exhausted) {
        vlink::SearchResult r = vlink::unknotting_index(d, opts.budget(), opts.caps());
        exhausted = (r.kind == vlink::SearchResult::Kind::Interval);
        return vlink::search_json(r);
      });
    if (*simplify_cmd)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool& exhausted) {
        vlink::SimplifyResult r = vlink::simplify(d, opts.budget());
        exhausted = r.budget_exhausted;
        return vlink::simplify_json(r);
      });
    if (*pgen) {
      vlink::LabeledPretzel lp = vlink::pretzel(parse_int_list(params_text));
      json doc = vlink::pretzel_json(lp);
      if (!virtualize_text.empty()) {
        std::vector<int> labels = parse_int_list(virtualize_text);
        vlink::Diagram dv =
            vlink::virtualize_labels(lp, std::set<int>(labels.begin(), labels.end()));
        doc["virtualized"] = vlink::invariants_json(dv);
      }
      print_doc(doc, opts);
      return 0;
    }
    if (*pformula) {
      int chosen = (!thm31_p.empty()) + (!thm32_p.empty()) + (!cor33_p.empty());
      if (chosen != 1)
        throw vlink::Error("pass exactly one of --thm31, --thm32, --cor33");
      vlink::UnknottingIndex u;
      if (!thm31_p.empty()) {
        u = vlink::thm31_index(parse_int_list(thm31_p), k, k1);
      } else if (!cor33_p.empty()) {
        std::vector<int> p = parse_int_list(cor33_p);
        if (p.size() != 2) throw vlink::Error("--cor33 takes exactly two parameters");
        u = vlink::cor33_index(p[0], p[1], k, k1);
      } else {
        if (k_even_text.empty() || k_odd_text.empty())
          throw vlink::Error("--thm32 requires --k-even and --k-odd");
        u = vlink::thm32_index(parse_int_list(thm32_p), parse_int_list(k_even_text),
                               parse_int_list(k_odd_text));
      }
      // The closed forms always give whole move counts.
      print_doc(json{{"m", u.m}, {"n", u.n.doubled() / 2}}, opts);
      return 0;
    }
    if (*pverify) {
      std::vector<int> p = parse_int_list(params_text);
      long cap = all_subsets ? (1L << 30) : max_subsets;
      vlink::FamilyReport report = vlink::verify_family(p, cap, opts.budget(), opts.caps());
      print_doc(vlink::family_report_json(report), opts);
      return report.ok() ? 0 : 1;
    }
    if (*lemma22)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool&) {
        int span = vlink::total_span(d);
        int mv = vlink::min_virtualizations_to_zero_span(d, opts.caps());
        return json{{"total_span", span}, {"min_virtualizations", mv}, {"match", span == mv}};
      });
    if (*thm26)
      return run_per_diagram(input, opts, [&](const vlink::Diagram& d, bool&) {
        if (d.component_count() != 2)
          throw vlink::NotApplicable("the ell oracle needs a 2-component diagram");
        vlink::HalfInteger brute = vlink::ell_bruteforce(d, opts.caps());
        vlink::HalfInteger closed =
            vlink::HalfInteger::from_doubled(vlink::pair_ell_doubled(d, 0, 1));
        return json{{"ell_bruteforce", vlink::to_json(brute)},
                    {"ell_closed_form", vlink::to_json(closed)},
                    {"match", brute == closed}};
      });
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const vlink::Error& e) {
    std::cerr << "vlink: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "vlink: " << e.what() << "\n";
    return 1;
  }
}
