#pragma once

// svn-corona command line: gen, phi, color, verify, oracle, table, selftest.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svn/closed_form.hpp"
#include "svn/construct.hpp"
#include "svn/grid.hpp"
#include "svn/io.hpp"
#include "svn/oracle.hpp"

namespace svn::cli {

enum Exit : int { ok = 0, verification_failed = 1, unsupported = 2, budget_exceeded = 3, bad_arguments = 4 };

struct BadArguments : Error {
  using Error::Error;
};

struct Range {
  int lo = 0, hi = -1;
};

inline Range parse_range(const std::string& text) {
  try {
    std::size_t used = 0;
    Range r;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw BadArguments("");
      const auto rest = text.substr(dots + 2);
      r.hi = std::stoi(rest, &used);
      if (used != rest.size()) throw BadArguments("");
    } else {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw BadArguments("");
    }
    if (r.lo > r.hi) throw BadArguments("");
    return r;
  } catch (const std::exception&) {
    throw BadArguments("bad range '" + text + "', expected <lo>..<hi> or <value>");
  }
}

inline FamilySpec family_arg(const std::string& text) {
  const auto spec = parse_family(text);
  if (!spec) throw BadArguments("bad family '" + text + "', expected <path|cycle|star|complete>:<size>");
  validate(*spec);
  return *spec;
}

inline FamilyKind kind_arg(const std::string& text) {
  const auto kind = parse_kind(text);
  if (!kind) throw BadArguments("bad family kind '" + text + "'");
  return *kind;
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadArguments("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadArguments(path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw BadArguments("cannot write " + path);
  file << text;
}

inline Graph corona_arg(const FamilySpec& left, const FamilySpec& right) {
  if (left.kind == FamilyKind::Complete && left.size == 1)
    throw BadArguments("left operand complete:1 has no edges; the corona is not defined here");
  return svn_corona(left, right);
}

inline SearchBudget budget_arg(std::optional<int> seconds, std::optional<std::size_t> max_vertices,
                               SearchBudget budget) {
  if (seconds) {
    if (*seconds <= 0) throw BadArguments("--budget-seconds must be positive");
    budget.time_limit = std::chrono::seconds(*seconds);
  }
  if (max_vertices) budget.max_vertices = *max_vertices;
  return budget;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + '"';
}

inline int selftest(std::ostream& out, const SearchBudget& oracle_budget) {
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  const auto pairs = construction_grid();
  int repaired = 0;
  for (const auto& [left, right] : pairs) {
    const auto entry = run_construction(left, right);
    if (entry.repaired) ++repaired;
    if (!entry.ok()) {
      ++failures;
      out << "FAIL construct " << to_string(left) << " " << to_string(right) << ": " << entry.note << "\n";
    }
  }
  out << "construct: " << pairs.size() << " pairs, " << repaired << " repaired, " << failures << " failed\n";

  auto report = [&](const OracleCheck& check) {
    if (!check.ok()) ++failures;
    out << (check.ok() ? "PASS" : "FAIL") << " oracle " << check.name << " expected " << check.expected;
    if (check.result) out << " got " << check.result->phi;
    if (!check.error.empty()) out << " (" << check.error << ")";
    out << "\n";
  };
  for (const auto& c : small_oracle_cases())
    report(run_oracle(to_string(c.left) + " " + to_string(c.right), svn_corona(c.left, c.right), c.expected,
                      oracle_budget));
  for (auto kind : all_kinds)
    for (int size = std::max(2, minimum_size(kind)); size <= 6; ++size) {
      const FamilySpec spec{kind, size};
      report(run_oracle(to_string(spec), build_family(spec), static_cast<std::size_t>(family_phi(spec)),
                        oracle_budget));
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << (failures ? "selftest FAILED: " : "selftest passed: ") << failures << " failures in " << std::fixed
      << std::setprecision(2) << seconds << " s\n";
  return failures ? verification_failed : ok;
}

/// Runs one command line; all output goes to `out` and `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"SVN corona products: generation, b-chromatic colorings and verification", "svn-corona"};
  app.require_subcommand(1);

  std::string left, right, out_path, dot_path, graph_path, coloring_path, n_range, t_range;
  std::string format = "csv";
  bool subdivision = false;
  std::optional<int> budget_seconds;
  std::optional<std::size_t> max_vertices;

  auto* gen = app.add_subcommand("gen", "Build a family graph, its subdivision, or a corona; write graph JSON");
  gen->add_option("--left", left, "Left operand <kind>:<size>; star size counts leaves")->required();
  gen->add_option("--right", right, "Right operand <kind>:<size>");
  gen->add_flag("--subdivision", subdivision, "Emit S(left) instead of the family graph");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* phi = app.add_subcommand("phi", "Print the closed-form b-chromatic number and its branch");
  phi->add_option("--left", left)->required();
  phi->add_option("--right", right)->required();

  auto* color = app.add_subcommand("color", "Construct and verify an optimal b-chromatic coloring");
  color->add_option("--left", left)->required();
  color->add_option("--right", right)->required();
  color->add_option("--out", out_path, "Coloring JSON output (default stdout)");
  color->add_option("--graph-out", graph_path, "Also write the graph JSON here");
  color->add_option("--dot", dot_path, "Graphviz DOT output");
  color->add_option("--budget-seconds", budget_seconds, "Time budget for repair search");

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("--coloring", coloring_path, "Coloring JSON")->required();
  verify->add_option("--graph", graph_path, "Graph JSON (default: rebuilt from the coloring's left/right)");

  auto* oracle = app.add_subcommand("oracle", "Exact b-chromatic number by exhaustive search");
  oracle->add_option("--graph", graph_path, "Graph JSON");
  oracle->add_option("--left", left);
  oracle->add_option("--right", right);
  oracle->add_flag("--subdivision", subdivision);
  oracle->add_option("--budget-seconds", budget_seconds, "Time budget (default 120)");
  oracle->add_option("--max-vertices", max_vertices, "Largest order attempted (default 20)");
  oracle->add_option("--out", out_path, "Write the witness coloring JSON here");

  auto* table = app.add_subcommand("table", "Sweep n and t; print phi with branch labels");
  table->add_option("--left", left, "Left family kind")->required();
  table->add_option("--right", right, "Right family kind")->required();
  table->add_option("--n", n_range, "Left sizes, <lo>..<hi>")->required();
  table->add_option("--t", t_range, "Right sizes, <lo>..<hi>")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}));

  auto* self = app.add_subcommand("selftest", "Construction grid and oracle checks; nonzero exit on failure");
  self->add_option("--budget-seconds", budget_seconds, "Oracle budget per instance (default 120)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_arguments;
  }

  try {
    if (*gen) {
      const auto l = family_arg(left);
      Graph g;
      if (!right.empty()) {
        if (subdivision) throw BadArguments("--subdivision and --right are exclusive");
        g = corona_arg(l, family_arg(right));
      } else {
        g = subdivision ? svn::subdivision(build_family(l)) : build_family(l);
      }
      write_text(out_path, graph_to_json(g).dump() + "\n", out);
      return ok;
    }

    if (*phi) {
      const auto result = phi_closed_form(family_arg(left), family_arg(right));
      if (!result.supported) {
        out << "unsupported (" << result.branch << ")\n";
        return unsupported;
      }
      out << *result.value << " (" << result.branch << ")\n";
      return ok;
    }

    if (*color) {
      const auto l = family_arg(left), r = family_arg(right);
      corona_arg(l, r);
      const auto result = construct_coloring(l, r, budget_arg(budget_seconds, std::nullopt, default_repair_budget()));
      auto doc = coloring_to_json(result.coloring);
      doc["left"] = to_string(l);
      doc["right"] = to_string(r);
      doc["branch"] = result.branch;
      doc["repaired"] = result.repaired;
      doc["repair_note"] = result.repair_note;
      doc["report"] = report_to_json(result.report);
      write_text(out_path, doc.dump() + "\n", out);
      if (!graph_path.empty()) write_text(graph_path, graph_to_json(result.graph).dump() + "\n", out);
      if (!dot_path.empty())
        write_text(dot_path, to_dot(result.graph, result.coloring, result.report, to_string(l) + " x " + to_string(r)),
                   out);
      if (!out_path.empty() && out_path != "-")
        out << result.coloring.k << " colors (" << result.branch << (result.repaired ? ", repaired" : "")
            << "), verified\n";
      return ok;
    }

    if (*verify) {
      const auto doc = read_json(coloring_path);
      const auto c = coloring_from_json(doc);
      Graph g;
      if (!graph_path.empty())
        g = graph_from_json(read_json(graph_path));
      else if (doc.contains("left") && doc.contains("right"))
        g = corona_arg(family_arg(doc["left"].get<std::string>()), family_arg(doc["right"].get<std::string>()));
      else
        throw BadArguments("--graph is required when the coloring names no left/right pair");
      try {
        const auto report = verify_b_coloring(g, c);
        out << report_to_json(report).dump() << "\n";
        return report.is_b_coloring() ? ok : verification_failed;
      } catch (const ArityMismatch& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
      } catch (const InvalidColoring& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
      }
    }

    if (*oracle) {
      Graph g;
      if (!graph_path.empty())
        g = graph_from_json(read_json(graph_path));
      else if (!left.empty() && !right.empty())
        g = corona_arg(family_arg(left), family_arg(right));
      else if (!left.empty())
        g = subdivision ? svn::subdivision(build_family(family_arg(left))) : build_family(family_arg(left));
      else
        throw BadArguments("oracle needs --graph or --left");
      SearchBudget defaults;
      const auto result = exact_b_chromatic(g, budget_arg(budget_seconds, max_vertices, defaults));
      out << result.phi << " (chi " << result.chi << ")\n";
      if (!out_path.empty()) write_text(out_path, coloring_to_json(result.witness).dump() + "\n", out);
      return ok;
    }

    if (*table) {
      const auto lk = kind_arg(left), rk = kind_arg(right);
      const auto ns = parse_range(n_range), ts = parse_range(t_range);
      const bool markdown = format == "markdown";
      out << (markdown ? "| n | t | phi | branch |\n|---|---|---|---|\n" : "n,t,phi,branch\n");
      for (int n = ns.lo; n <= ns.hi; ++n)
        for (int t = ts.lo; t <= ts.hi; ++t) {
          std::string value, branch;
          try {
            const auto result = phi_closed_form({lk, n}, {rk, t});
            value = result.value ? std::to_string(*result.value) : "unsupported";
            branch = result.branch;
          } catch (const OutOfTheoremRange& e) {
            value = "unsupported";
            branch = e.what();
          }
          if (markdown)
            out << "| " << n << " | " << t << " | " << value << " | " << branch << " |\n";
          else
            out << n << ',' << t << ',' << value << ',' << csv_field(branch) << "\n";
        }
      return ok;
    }

    if (*self) {
      SearchBudget defaults;
      return selftest(out, budget_arg(budget_seconds, std::nullopt, defaults));
    }
  } catch (const BadArguments& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const SizeTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const OutOfTheoremRange& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (bounds " << e.lower() << ".." << e.upper() << ")\n";
    return budget_exceeded;
  } catch (const ConstructionInvalid& e) {
    err << "verification failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }
  return bad_arguments;
}

}  // namespace svn::cli
