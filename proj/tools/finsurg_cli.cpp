// finsurg: exact d-invariant calculator and finite-surgery obstruction
// scanner for dihedral Seifert fibered spaces.
//
// Subcommands: dedekind, dinv, surgery, classify, realize, scan, selftest.
// Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.

#include "finsurg/errors.hpp"
#include "finsurg/nemethi.hpp"
#include "finsurg/numtheory.hpp"
#include "finsurg/obstruct.hpp"
#include "finsurg/rational.hpp"
#include "finsurg/seifert.hpp"
#include "finsurg/selftest.hpp"
#include "finsurg/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using finsurg::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct OutputOptions {
  std::string format = "table";
  std::string out_file;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_file, "Write output to FILE instead of standard output");
}

void emit(const OutputOptions& opts, const std::string& text) {
  if (opts.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + opts.out_file + "'");
  out << text;
}

ordered_json envelope(const std::string& command, ordered_json inputs, ordered_json results) {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["format_version"] = "1";
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += "\"";
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ",";
    row += csv_field(fields[i]);
  }
  row += "\n";
  return row;
}

ordered_json spinc_json(const finsurg::SpincVector& v) {
  return ordered_json::array({v.a0, v.a1, v.a2, v.a3});
}

finsurg::TorusKnot parse_torus_knot(const std::string& text) {
  // "T(r,s)", whitespace-insensitive
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 6 || (s[0] != 'T' && s[0] != 't') || s[1] != '(' || s.back() != ')')
    throw std::invalid_argument("cannot parse torus knot '" + text + "' (expected T(r,s))");
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("cannot parse torus knot '" + text + "' (expected T(r,s))");
  try {
    long long r = std::stoll(s.substr(2, comma - 2));
    long long sv = std::stoll(s.substr(comma + 1, s.size() - comma - 2));
    return {r, sv};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse torus knot '" + text + "'");
  }
}

finsurg::AlexanderPoly parse_alexander(const std::string& text) {
  // Comma-separated integers a_g, ..., a_0.
  std::vector<long long> top_down;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      top_down.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse Alexander coefficients '" + text + "'");
    }
  }
  if (top_down.empty())
    throw std::invalid_argument("cannot parse Alexander coefficients '" + text + "'");
  finsurg::AlexanderPoly poly;
  poly.coeffs.assign(top_down.rbegin(), top_down.rend());
  return poly;
}

// ---- dedekind ----------------------------------------------------------

int run_dedekind(long long p, long long q, const OutputOptions& opts) {
  const Rational value = finsurg::dedekind_sum(p, q);
  if (opts.format == "json") {
    ordered_json results{{"p", p}, {"q", q}, {"value", value.str()}};
    emit(opts, dump(envelope("dedekind", {{"p", p}, {"q", q}}, results)));
  } else if (opts.format == "csv") {
    emit(opts, csv_row({"p", "q", "value"}) +
                   csv_row({std::to_string(p), std::to_string(q), value.str()}));
  } else {
    emit(opts, value.str() + "\n");
  }
  return kExitOk;
}

// ---- dinv --------------------------------------------------------------

struct DinvData {
  long long m = 0, n = 0;
  bool lens = false;
  long long lens_p = 0, lens_q = 0;
  std::vector<std::pair<std::string, Rational>> rows;  // label, d
  ordered_json entries = ordered_json::array();
};

DinvData compute_dinv(long long m, long long n) {
  DinvData data;
  data.m = m;
  data.n = n;
  if (std::llabs(n) == 1) {
    if (m < 1) throw std::invalid_argument("dinv: m must be positive");
    data.lens = true;
    data.lens_p = 4 * m;
    data.lens_q = n > 0 ? 2 * m + 1 : 2 * m - 1;  // Y_1 = L(4m, 2m+1)
    for (long long i = 0; i < data.lens_p; ++i) {
      Rational d = finsurg::lens_d(data.lens_p, data.lens_q, i);
      data.entries.push_back({{"i", i}, {"d", d.str()}});
      data.rows.emplace_back(std::to_string(i), std::move(d));
    }
    return data;
  }
  const finsurg::DInvariantTable table = finsurg::d_table(m, n);
  for (const auto& [v, d] : table.entries) {
    data.entries.push_back({{"vector", spinc_json(v)}, {"d", d.str()}});
    data.rows.emplace_back(finsurg::spinc_str(v), d);
  }
  return data;
}

int run_dinv(long long m, long long n, const OutputOptions& opts) {
  const DinvData data = compute_dinv(m, n);
  if (opts.format == "json") {
    ordered_json results;
    results["m"] = m;
    results["n"] = n;
    if (data.lens) results["lens"] = ordered_json{{"p", data.lens_p}, {"q", data.lens_q}};
    results["entries"] = data.entries;
    emit(opts, dump(envelope("dinv", {{"m", m}, {"n", n}}, results)));
  } else if (opts.format == "csv") {
    std::string text = csv_row({"m", "n", "spinc", "d"});
    for (const auto& [label, d] : data.rows)
      text += csv_row({std::to_string(m), std::to_string(n), label, d.str()});
    emit(opts, text);
  } else {
    std::ostringstream out;
    out << "# d-invariants of Y_n for m=" << m << ", n=" << n;
    if (data.lens)
      out << " (lens space L(" << data.lens_p << "," << data.lens_q << "))";
    out << "\n";
    for (const auto& [label, d] : data.rows) out << label << "\t" << d.str() << "\n";
    emit(opts, out.str());
  }
  return kExitOk;
}

// ---- surgery -------------------------------------------------------------

int run_surgery(const std::string& knot_text, bool unknot, const std::string& alex_text,
                long long p, long long q, std::optional<long long> index,
                const OutputOptions& opts) {
  const int sources = int(!knot_text.empty()) + int(unknot) + int(!alex_text.empty());
  if (sources != 1)
    throw std::invalid_argument("surgery: specify exactly one of --knot, --unknot, --alex");

  std::string knot_label;
  std::vector<std::pair<long long, Rational>> values;

  auto eval_range = [&](auto&& f) {
    if (index) {
      values.emplace_back(*index, f(*index));
    } else {
      for (long long i = 0; i < p; ++i) values.emplace_back(i, f(i));
    }
  };

  if (unknot) {
    knot_label = "U";
    if (p < 1) throw std::invalid_argument("surgery: p must be positive");
    eval_range([&](long long i) { return finsurg::lens_d(p, q, i); });
  } else {
    finsurg::SurgerySpec spec;
    if (!knot_text.empty()) {
      const finsurg::TorusKnot tk = parse_torus_knot(knot_text);
      knot_label = "T(" + std::to_string(tk.r) + "," + std::to_string(tk.s) + ")";
      spec.knot = tk;
    } else {
      const finsurg::AlexanderPoly poly = parse_alexander(alex_text);
      std::string joined;
      for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it)
        joined += (joined.empty() ? "" : ",") + std::to_string(*it);
      knot_label = "Alex[" + joined + "]";
      spec.knot = poly;
    }
    spec.p = p;
    spec.q = q;
    eval_range([&](long long i) { return finsurg::surgery_d(spec, i); });
  }

  if (opts.format == "json") {
    ordered_json inputs{{"knot", knot_label}, {"p", p}, {"q", q}};
    if (index) inputs["i"] = *index;
    ordered_json results;
    results["knot"] = knot_label;
    results["p"] = p;
    results["q"] = q;
    if (index) {
      results["i"] = *index;
      results["d"] = values.front().second.str();
    } else {
      ordered_json entries = ordered_json::array();
      for (const auto& [i, d] : values) entries.push_back({{"i", i}, {"d", d.str()}});
      results["entries"] = std::move(entries);
    }
    emit(opts, dump(envelope("surgery", inputs, results)));
  } else if (opts.format == "csv") {
    std::string text = csv_row({"knot", "p", "q", "i", "d"});
    for (const auto& [i, d] : values)
      text += csv_row({knot_label, std::to_string(p), std::to_string(q), std::to_string(i),
                       d.str()});
    emit(opts, text);
  } else if (index) {
    emit(opts, values.front().second.str() + "\n");
  } else {
    std::ostringstream out;
    out << "# d-invariants of " << p << "/" << q << "-surgery on " << knot_label << "\n";
    for (const auto& [i, d] : values) out << i << "\t" << d.str() << "\n";
    emit(opts, out.str());
  }
  return kExitOk;
}

// ---- classify -------------------------------------------------------------

int run_classify(const std::string& text, const OutputOptions& opts) {
  const finsurg::SeifertPresentation input = finsurg::parse_presentation(text);
  const finsurg::SeifertPresentation normal = finsurg::normalize(input);
  const finsurg::EllipticType type = finsurg::classify_elliptic(normal);
  const Rational h1 = finsurg::h1_order(normal);
  const Rational e = finsurg::euler_number(normal);

  ordered_json mult = ordered_json::array();
  for (const auto& f : normal.fibers) mult.push_back(f.alpha);

  if (opts.format == "json") {
    ordered_json results;
    results["input"] = finsurg::format_presentation(input);
    results["normalized"] = finsurg::format_presentation(normal);
    results["type"] = finsurg::elliptic_tag_name(type.tag);
    results["multiplicities"] = mult;
    results["h1"] = h1.str();
    results["cyclic_h1"] = type.cyclic_h1;
    results["euler"] = e.str();
    emit(opts, dump(envelope("classify", {{"presentation", text}}, results)));
  } else if (opts.format == "csv") {
    emit(opts,
         csv_row({"input", "normalized", "type", "h1", "cyclic_h1", "euler"}) +
             csv_row({finsurg::format_presentation(input), finsurg::format_presentation(normal),
                      finsurg::elliptic_tag_name(type.tag), h1.str(),
                      type.cyclic_h1 ? "true" : "false", e.str()}));
  } else {
    std::ostringstream out;
    out << "input:      " << finsurg::format_presentation(input) << "\n";
    out << "normalized: " << finsurg::format_presentation(normal) << "\n";
    out << "type:       " << finsurg::elliptic_tag_name(type.tag) << "\n";
    out << "|H1|:       " << h1.str() << (h1.is_zero() ? " (infinite)" : "") << "\n";
    out << "cyclic H1:  " << (type.cyclic_h1 ? "yes" : "no") << "\n";
    out << "euler e:    " << e.str() << "\n";
    emit(opts, out.str());
  }
  return kExitOk;
}

// ---- realize ---------------------------------------------------------------

int run_realize(long long m, long long n, const OutputOptions& opts) {
  if (n == 0) throw std::invalid_argument("realize: n must be nonzero");
  std::optional<finsurg::Realization> rec = finsurg::oriented_realization(m, n);

  if (opts.format == "json") {
    ordered_json results;
    results["m"] = m;
    results["n"] = n;
    results["found"] = rec.has_value();
    if (rec) {
      results["knot"] = rec->unknot ? "U" : "T(" + std::to_string(rec->r) + ",2)";
      results["p"] = rec->mirrored ? -rec->p : rec->p;
      results["q"] = rec->q;
      results["mirrored"] = rec->mirrored;
      results["spec"] = finsurg::realization_str(*rec);
    }
    emit(opts, dump(envelope("realize", {{"m", m}, {"n", n}}, results)));
  } else if (opts.format == "csv") {
    std::string text = csv_row({"m", "n", "found", "realization"});
    text += csv_row({std::to_string(m), std::to_string(n), rec ? "true" : "false",
                     rec ? finsurg::realization_str(*rec) : ""});
    emit(opts, text);
  } else {
    emit(opts, (rec ? finsurg::realization_str(*rec) : std::string("none")) + "\n");
  }
  return kExitOk;
}

// ---- scan -----------------------------------------------------------------

std::pair<long long, long long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("scan: range must look like lo..hi");
  try {
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("scan: cannot parse range '" + text + "'");
  }
}

std::string report_witness_vector(const finsurg::ObstructionReport& rep) {
  return rep.witness_vector ? finsurg::spinc_str(*rep.witness_vector) : "";
}

int run_scan(long long m, const std::string& range_text, unsigned workers,
             const OutputOptions& opts) {
  const auto [lo, hi] = parse_range(range_text);
  const finsurg::ScanResult res = finsurg::scan(m, lo, hi, workers);
  const finsurg::ScanSummary& s = res.summary;

  auto summary_text = [&] {
    std::ostringstream out;
    out << "N*(" << m << ") = " << s.n_star << "; 16m = " << s.threshold_16m
        << "; within 16m: " << (s.within_16m ? "yes" : "no") << "; obstructed "
        << s.count_obstructed << ", realized " << s.count_realized << ", undetermined "
        << s.count_undetermined << ", excluded " << s.count_excluded << ", invalid "
        << s.count_invalid;
    return out.str();
  };

  if (opts.format == "json") {
    ordered_json reports = ordered_json::array();
    for (const finsurg::ObstructionReport& rep : res.reports) {
      ordered_json j;
      j["n"] = rep.n;
      j["verdict"] = finsurg::verdict_name(rep.verdict);
      if (rep.d_min) j["d_min"] = rep.d_min->str();
      if (rep.d_max) j["d_max"] = rep.d_max->str();
      if (rep.witness_vector) j["witness_vector"] = spinc_json(*rep.witness_vector);
      if (rep.witness_d) j["witness_d"] = rep.witness_d->str();
      if (rep.bound_violated) j["bound_violated"] = *rep.bound_violated;
      if (rep.realization) j["realization"] = finsurg::realization_str(*rep.realization);
      reports.push_back(std::move(j));
    }
    ordered_json summary;
    summary["n_star"] = s.n_star;
    summary["threshold_16m"] = s.threshold_16m;
    summary["within_16m"] = s.within_16m;
    summary["counts"] =
        ordered_json{{"obstructed", s.count_obstructed}, {"realized", s.count_realized},
                     {"undetermined", s.count_undetermined}, {"excluded", s.count_excluded},
                     {"invalid", s.count_invalid}};
    ordered_json results;
    results["m"] = m;
    results["range"] = ordered_json{{"lo", lo}, {"hi", hi}};
    results["reports"] = std::move(reports);
    results["summary"] = std::move(summary);
    emit(opts, dump(envelope("scan", {{"m", m}, {"range", range_text}}, results)));
  } else if (opts.format == "csv") {
    std::string text = csv_row({"m", "n", "verdict", "d_min", "d_max", "witness_vector",
                                "bound_violated", "realization"});
    for (const finsurg::ObstructionReport& rep : res.reports)
      text += csv_row({std::to_string(m), std::to_string(rep.n),
                       finsurg::verdict_name(rep.verdict),
                       rep.d_min ? rep.d_min->str() : "", rep.d_max ? rep.d_max->str() : "",
                       report_witness_vector(rep),
                       rep.bound_violated ? *rep.bound_violated : "",
                       rep.realization ? finsurg::realization_str(*rep.realization) : ""});
    text += "# " + summary_text() + "\n";
    emit(opts, text);
  } else {
    std::ostringstream out;
    out << "# scan m=" << m << " over n in [" << lo << ", " << hi << "]\n";
    for (const finsurg::ObstructionReport& rep : res.reports) {
      out << rep.n << "\t" << finsurg::verdict_name(rep.verdict);
      if (rep.d_min) out << "\td in [" << rep.d_min->str() << ", " << rep.d_max->str() << "]";
      if (rep.bound_violated)
        out << "\tviolates " << *rep.bound_violated << " bound at " << report_witness_vector(rep)
            << " (d = " << rep.witness_d->str() << ")";
      if (rep.realization) out << "\t" << finsurg::realization_str(*rep.realization);
      out << "\n";
    }
    out << summary_text() << "\n";
    emit(opts, out.str());
  }
  return kExitOk;
}

// ---- selftest --------------------------------------------------------------

int run_selftest(const std::string& suite, const OutputOptions& opts) {
  const auto results = finsurg::selftest::run(suite);
  bool all_passed = true;

  if (opts.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id},
                     {"suite", r.suite},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail}});
      all_passed = all_passed && r.passed;
    }
    ordered_json inputs;
    if (!suite.empty()) inputs["suite"] = suite;
    emit(opts, dump(envelope("selftest", inputs, ordered_json{{"checks", arr}})));
  } else {
    std::ostringstream out;
    int passed = 0;
    for (const auto& r : results) {
      out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.suite << "/" << r.name
          << ": " << r.detail << "\n";
      passed += r.passed ? 1 : 0;
      all_passed = all_passed && r.passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    emit(opts, out.str());
  }
  return all_passed ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact d-invariants of dihedral Seifert fibered spaces and L-space knot "
               "surgeries, with a finite-surgery obstruction scanner"};
  app.require_subcommand(1);

  // dedekind
  long long ded_p = 0, ded_q = 0;
  OutputOptions ded_opts;
  CLI::App* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(p, q)");
  dedekind->add_option("p", ded_p, "first argument")->required();
  dedekind->add_option("q", ded_q, "positive modulus")->required();
  add_output_options(dedekind, ded_opts);

  // dinv
  long long dinv_m = 0, dinv_n = 0;
  OutputOptions dinv_opts;
  CLI::App* dinv = app.add_subcommand("dinv", "d-invariant table of the dihedral manifold Y_n");
  dinv->add_option("--m", dinv_m, "|H1| = 4m")->required();
  dinv->add_option("--n", dinv_n, "family index (nonzero, odd, coprime to 2m)")->required();
  add_output_options(dinv, dinv_opts);

  // surgery
  std::string surgery_knot, surgery_alex;
  bool surgery_unknot = false;
  long long surgery_p = 0, surgery_q = 1;
  long long surgery_i_value = 0;
  OutputOptions surgery_opts;
  CLI::App* surgery = app.add_subcommand("surgery", "d-invariants of p/q-surgery on a knot");
  surgery->add_option("--knot", surgery_knot, "torus knot, e.g. T(3,2)");
  surgery->add_flag("--unknot", surgery_unknot, "use the unknot (lens spaces)");
  surgery->add_option("--alex", surgery_alex, "Alexander coefficients a_g,...,a_0");
  surgery->add_option("--p", surgery_p, "surgery coefficient numerator")->required();
  surgery->add_option("--q", surgery_q, "surgery coefficient denominator (default 1)");
  CLI::Option* surgery_i = surgery->add_option("--i", surgery_i_value, "single Spin^c index");
  add_output_options(surgery, surgery_opts);

  // classify
  std::string classify_text;
  OutputOptions classify_opts;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a Seifert presentation \"(b; w/a, ...)\"");
  classify->add_option("presentation", classify_text, "e.g. \"(-1; 1/2, 1/2, 3/5)\"")->required();
  add_output_options(classify, classify_opts);

  // realize
  long long realize_m = 0, realize_n = 0;
  OutputOptions realize_opts;
  CLI::App* realize = app.add_subcommand("realize", "torus-knot surgery description of Y_n");
  realize->add_option("--m", realize_m, "|H1| = 4m")->required();
  realize->add_option("--n", realize_n, "family index")->required();
  add_output_options(realize, realize_opts);

  // scan
  long long scan_m = 0;
  std::string scan_range;
  unsigned scan_workers = std::max(1u, std::thread::hardware_concurrency());
  OutputOptions scan_opts;
  CLI::App* scan = app.add_subcommand("scan", "obstruction verdicts for a range of n");
  scan->add_option("--m", scan_m, "|H1| = 4m")->required();
  scan->add_option("--range", scan_range, "inclusive range lo..hi, e.g. -50..50")->required();
  scan->add_option("--workers", scan_workers, "worker thread count");
  add_output_options(scan, scan_opts);

  // selftest
  std::string selftest_suite;
  OutputOptions selftest_opts;
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  selftest->add_option("--suite", selftest_suite, "run only the named suite");
  add_output_options(selftest, selftest_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dedekind->parsed()) return run_dedekind(ded_p, ded_q, ded_opts);
    if (dinv->parsed()) return run_dinv(dinv_m, dinv_n, dinv_opts);
    if (surgery->parsed())
      return run_surgery(surgery_knot, surgery_unknot, surgery_alex, surgery_p, surgery_q,
                         surgery_i->count() ? std::optional<long long>(surgery_i_value)
                                            : std::nullopt,
                         surgery_opts);
    if (classify->parsed()) return run_classify(classify_text, classify_opts);
    if (realize->parsed()) return run_realize(realize_m, realize_n, realize_opts);
    if (scan->parsed()) return run_scan(scan_m, scan_range, scan_workers, scan_opts);
    if (selftest->parsed()) return run_selftest(selftest_suite, selftest_opts);
  } catch (const finsurg::consistency_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const finsurg::search_exhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
