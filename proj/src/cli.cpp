#include "rcc/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc/error.hpp"
#include "rcc/oracle.hpp"
#include "rcc/region_change.hpp"

namespace rcc::cli {

using Json = nlohmann::ordered_json;

namespace {

template <typename Fn>
Output guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {e.is_input_error() ? 1 : 2, "", std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {2, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

Output theorem_violation(const Diagram& d, const std::string& what) {
  return {2, "", "theorem violation: " + what + "\ncounterexample:\n" + format_pd_code(d.to_pd())};
}

// Region R_k is row k of the incidence matrix (black rows first).
std::vector<int> region_labels(const IncidenceMatrix& im, const RegionSet& regions) {
  std::vector<int> labels;
  for (std::size_t f : regions.ones()) labels.push_back(im.row_of_region[f] + 1);
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::string join_prefixed(const std::vector<int>& ids, const char* prefix) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) s += ' ';
    s += prefix + std::to_string(ids[k]);
  }
  return s;
}

std::vector<int> one_based(const std::vector<std::size_t>& ids) {
  std::vector<int> out;
  for (std::size_t i : ids) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> one_based(const std::vector<int>& ids) {
  std::vector<int> out;
  for (int i : ids) out.push_back(i + 1);
  return out;
}

Json linking_table(const Diagram& d) {
  Json table = Json::array();
  for (int i = 0; i < d.component_count(); ++i) {
    for (int j = i + 1; j < d.component_count(); ++j) {
      table.push_back({{"i", i + 1}, {"j", j + 1}, {"lk", d.linking_number(i, j)}});
    }
  }
  return table;
}

std::string text_linking_table(const Diagram& d) {
  std::ostringstream out;
  for (int i = 0; i < d.component_count(); ++i) {
    for (int j = i + 1; j < d.component_count(); ++j) {
      out << "  lk(K" << i + 1 << ",K" << j + 1 << ") = " << d.linking_number(i, j) << '\n';
    }
  }
  return out.str();
}

Output emit(const Json& j, Format format, const std::string& text) {
  if (format == Format::Json) return {0, j.dump(2) + "\n", ""};
  return {0, text, ""};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Malformed, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Output info_report(const Diagram& d, Format format) {
  return guarded([&]() -> Output {
    const Checkerboard cb = checkerboard(d);
    const IncidenceMatrix im = incidence_matrix(d, cb);
    const int c = d.crossing_count();
    const int rank = static_cast<int>(gf2::rank(im.matrix));
    const int n_rank = c - rank + 1;
    if (n_rank != d.component_count()) {
      return theorem_violation(d, "c - rank + 1 = " + std::to_string(n_rank) + " but traversal finds " +
                                      std::to_string(d.component_count()) + " components");
    }

    Json j;
    j["crossings"] = c;
    j["regions"] = d.region_count();
    j["black"] = cb.black_count();
    j["white"] = cb.white_count();
    j["components_traversal"] = d.component_count();
    j["components_rank"] = n_rank;
    j["rank"] = rank;
    j["nullspace_dimension"] = c - rank;
    Json signs = Json::array();
    for (int p = 0; p < c; ++p) signs.push_back(d.crossing_sign(p));
    j["crossing_signs"] = signs;
    Json regions = Json::array();
    std::ostringstream region_text;
    for (int row = 0; row < d.region_count(); ++row) {
      const int f = im.region_of_row[row];
      const auto boundary = one_based(d.regions()[f].boundary_crossings);
      const bool black = row < im.black_rows;
      regions.push_back({{"id", row + 1}, {"color", black ? "black" : "white"}, {"outer", f == d.outer_region()},
                         {"boundary", boundary}});
      region_text << "  R" << row + 1 << (black ? " black " : " white ") << (f == d.outer_region() ? "(outer) " : "")
                  << join_prefixed(boundary, "P") << '\n';
    }
    j["region_list"] = regions;
    j["incidence_matrix"] = Json::array();
    for (std::size_t r = 0; r < im.matrix.rows(); ++r) j["incidence_matrix"].push_back(im.matrix.row(r).to_string());
    j["linking_numbers"] = linking_table(d);

    std::ostringstream text;
    text << "crossings: " << c << '\n'
         << "regions: " << d.region_count() << " (black " << cb.black_count() << ", white " << cb.white_count() << ")\n"
         << "components: " << d.component_count() << " by traversal, " << n_rank << " by c - rank + 1\n"
         << "rank: " << rank << '\n'
         << "nullspace dimension: " << c - rank << '\n'
         << "crossing signs:";
    for (int p = 0; p < c; ++p) text << " P" << p + 1 << (d.crossing_sign(p) > 0 ? "+" : "-");
    text << "\nregions (row order of the incidence matrix):\n" << region_text.str() << "incidence matrix:\n";
    for (std::size_t r = 0; r < im.matrix.rows(); ++r) text << "  " << im.matrix.row(r).to_string() << '\n';
    if (d.component_count() > 1) text << "linking numbers:\n" << text_linking_table(d);
    return emit(j, format, text.str());
  });
}

Output solve_report(const Diagram& d, const std::vector<int>& crossing_ids, Format format) {
  return guarded([&]() -> Output {
    const int c = d.crossing_count();
    CrossingSet target(c);
    for (int id : crossing_ids) {
      if (id < 1 || id > c) throw Error(ErrorCode::UnknownCrossing, "crossing " + std::to_string(id) + " is not in 1.." + std::to_string(c));
      target.set(id - 1);
    }
    const IncidenceMatrix im = incidence_matrix(d);
    const auto witness = solve_regions(d, target);
    const auto violations = parity_violations(d, target);
    if (witness.has_value() != violations.empty()) {
      return theorem_violation(d, "solver and parity criterion disagree on target " + target.to_string());
    }

    Json j;
    j["target"] = one_based(target.ones());
    j["achievable"] = witness.has_value();
    std::ostringstream text;
    text << "target: " << join_prefixed(one_based(target.ones()), "P") << '\n';
    if (witness) {
      if (flipped_crossings(d, *witness) != target) return theorem_violation(d, "witness does not reproduce the target");
      const auto labels = region_labels(im, *witness);
      j["regions"] = labels;
      text << "witness regions: " << (labels.empty() ? std::string("(none)") : join_prefixed(labels, "R")) << '\n';
    } else {
      j["parity_violations"] = one_based(violations);
      text << "unachievable: odd number of targeted inter-component crossings on "
           << join_prefixed(one_based(violations), "K") << '\n';
    }
    return emit(j, format, text.str());
  });
}

Output unknot_report(const Diagram& d, Format format) {
  return guarded([&]() -> Output {
    const int n = d.component_count();
    const bool feasible = unknottable_by_rcc(d);
    std::string criterion;
    std::string reason;
    if (n == 1) {
      criterion = "knot";
      reason = "knot diagram: every crossing change is realizable";
    } else if (n == 2) {
      criterion = "two-component linking parity";
      reason = d.linking_number(0, 1) % 2 == 0 ? "lk even" : "lk odd";
    } else {
      criterion = "per-component linking parity sums (derived)";
      reason = feasible ? "every component has even total linking with the others"
                        : "some component has odd total linking with the others";
    }

    const CrossingSet target = descending_target(d);
    const auto plan = solve_regions(d, target);
    if (plan.has_value() != feasible) {
      return theorem_violation(d, "linking-parity verdict disagrees with solvability of the descending target");
    }

    Json j;
    j["components"] = n;
    j["feasible"] = feasible;
    j["criterion"] = criterion;
    j["reason"] = reason;
    j["linking_numbers"] = linking_table(d);
    j["linking_parity_row_sums"] = linking_parity_row_sums(d);
    j["descending_target"] = one_based(target.ones());

    std::ostringstream text;
    text << "components: " << n << '\n' << "criterion: " << criterion << '\n';
    if (n > 1) text << "linking numbers:\n" << text_linking_table(d);
    text << (feasible ? "feasible: " : "infeasible: ") << reason << '\n';
    text << "descending target: " << join_prefixed(one_based(target.ones()), "P") << '\n';
    if (plan) {
      if (flipped_crossings(d, *plan) != target) return theorem_violation(d, "plan does not reproduce the descending target");
      const Diagram after = apply_rcc(d, *plan);
      const bool descending = is_descending(after);
      if (!descending) return theorem_violation(d, "applying the plan did not produce a descending diagram");
      const IncidenceMatrix im = incidence_matrix(d);
      const auto labels = region_labels(im, *plan);
      j["plan"] = labels;
      j["descending_after_plan"] = descending;
      text << "plan regions: " << (labels.empty() ? std::string("(none)") : join_prefixed(labels, "R")) << '\n'
           << "after plan: descending\n";
    }
    return emit(j, format, text.str());
  });
}

Output graph_report(const PlaneGraph& g, const GraphOptions& options) {
  return guarded([&]() -> Output {
    const Diagram d = medial_diagram(g);
    const PlaneGraph g_dual = dual(g);
    const int c = g.edge_count();
    const int rank = static_cast<int>(incidence_rank(d));
    const int n_rank = c - rank + 1;
    const bool knot = is_knot_graph(g);
    const bool even = even_degree_test(g);
    if (n_rank != d.component_count()) {
      return theorem_violation(d, "c - rank + 1 disagrees with traversal on the medial diagram");
    }
    if (even && knot) return theorem_violation(d, "all degrees even yet the graph represents a knot");
    if (knot != (d.component_count() == 1)) return theorem_violation(d, "rank test disagrees with traversal");

    Json j;
    j["edges"] = c;
    j["vertices"] = g.vertex_count();
    j["dual_vertices"] = g_dual.vertex_count();
    j["components_rank"] = n_rank;
    j["components_traversal"] = d.component_count();
    j["rank"] = rank;
    j["knot"] = knot;
    j["even_degrees"] = even;

    std::ostringstream text;
    text << "edges: " << c << '\n'
         << "vertices: " << g.vertex_count() << " (dual " << g_dual.vertex_count() << ")\n"
         << "components: " << n_rank << " by c - rank + 1, " << d.component_count() << " by traversal\n"
         << "rank: " << rank << '\n'
         << "knot: " << (knot ? "yes" : "no") << '\n'
         << "all degrees of G and G' even: " << (even ? "yes (multi-component)" : "no") << '\n';
    if (options.pd) {
      j["pd"] = format_pd_code(d.to_pd());
      text << "medial PD code:\n" << format_pd_code(d.to_pd());
    }
    if (options.dot) {
      j["dot_G"] = to_dot(g, "G");
      j["dot_G_dual"] = to_dot(g_dual, "G_dual");
      text << to_dot(g, "G") << to_dot(g_dual, "G_dual");
    }
    return emit(j, options.format, text.str());
  });
}

Output cmd_info(const std::string& pd_path, Format format) {
  return guarded([&] { return info_report(parse_pd(read_file(pd_path)), format); });
}

Output cmd_solve(const std::string& pd_path, const std::vector<int>& crossing_ids, Format format) {
  return guarded([&] { return solve_report(parse_pd(read_file(pd_path)), crossing_ids, format); });
}

Output cmd_unknot(const std::string& pd_path, Format format) {
  return guarded([&] { return unknot_report(parse_pd(read_file(pd_path)), format); });
}

Output cmd_graph(const std::string& graph_path, const GraphOptions& options) {
  return guarded([&] { return graph_report(parse_plane_graph(read_file(graph_path)), options); });
}

Output cmd_check(std::uint64_t seed, int trials, int max_crossings) {
  return guarded([&]() -> Output {
    if (trials < 0) throw Error(ErrorCode::IndexMismatch, "trial count must be non-negative");
    if (max_crossings < 1) throw Error(ErrorCode::IndexMismatch, "max crossings must be at least 1");
    Output result;
    std::ostringstream out;
    std::ostringstream err;
    int failures = 0;
    int skipped = 0;
    for (int t = 0; t < trials; ++t) {
      const oracle::TrialRecord r = oracle::run_trial(seed, static_cast<std::uint64_t>(t), max_crossings);
      Json line;
      line["trial"] = r.trial;
      line["seed"] = r.seed;
      line["c"] = r.crossings;
      line["n_traversal"] = r.n_traversal;
      line["n_rank"] = r.n_rank;
      line["rank"] = r.rank;
      line["enumerated"] = r.enumerated;
      line["pass"] = r.pass;
      if (!r.enumerated && r.pass) {
        line["notice"] = "enumeration skipped: c + 2 exceeds the budget";
        ++skipped;
      }
      if (!r.pass) {
        line["counterexample"] = r.failure;
        err << "trial " << r.trial << " failed: " << r.failure << '\n';
        ++failures;
      }
      out << line.dump() << '\n';
    }
    if (skipped > 0) err << skipped << " trial(s) skipped brute-force enumeration (budget 2^" << oracle::kMaxEnumeratedRegions << ")\n";
    err << trials - failures << "/" << trials << " trials passed\n";
    result.exit_code = failures == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  });
}

}  // namespace rcc::cli
