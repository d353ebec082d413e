#include "quartic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "quartic/enumeration.hpp"
#include "quartic/errors.hpp"
#include "quartic/reduction.hpp"
#include "quartic/resolvent.hpp"
#include "quartic/table.hpp"
#include "quartic/thue_solver.hpp"
#include "quartic/verify.hpp"

namespace quartic {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<std::string, Command>> kCommands = {
    {"invariants", Command::Invariants}, {"hessian", Command::Hessian},     {"reduce", Command::Reduce},
    {"enumerate", Command::Enumerate},   {"solve", Command::Solve},         {"resolvent", Command::Resolvent},
    {"verify", Command::Verify},         {"report-table", Command::ReportTable},
};

bool needs_form(Command c) {
  return c == Command::Invariants || c == Command::Hessian || c == Command::Reduce || c == Command::Solve ||
         c == Command::Resolvent;
}

std::string form_json(const QuarticForm& f) { return f.to_string(); }

Json map_json(const UnimodularMap& m) { return Json::array({m.m.get_str(), m.l.get_str(), m.p.get_str(), m.q.get_str()}); }

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Binary quartic forms with J = 0: invariants, reduction, Thue equations, verification.", "quartic"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string form_text, h_text = "1", format = "human";
  std::vector<std::string> suites = {"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  app.add_option("--form", form_text, "Form literal [a0,a1,a2,a3,a4]");
  app.add_option("--h", h_text, "Right-hand side h > 0")->capture_default_str();
  app.add_option("--bound", cfg.height_bound, "Height bound for solutions")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--Imax", cfg.I_max, "Largest invariant I to enumerate")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--coeff-bound", cfg.coeff_bound, "Coefficient box for enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--precision", cfg.precision_bits, "Working precision in bits")->check(CLI::Range(32L, 1L << 20))->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}))->capture_default_str();
  app.add_option("--suite", cfg.suite, "Verification suite")->check(CLI::IsMember(suites))->capture_default_str();
  app.add_flag("--inequality", cfg.inequality, "solve |F| <= h over coprime pairs");

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, cmd] : kCommands) subs.emplace_back(app.add_subcommand(name), cmd);
  subs[0].first->description("I, J and D");
  subs[1].first->description("Hessian coefficients A0..A4");
  subs[2].first->description("Reduced equivalent form and the map to it");
  subs[3].first->description("Class representatives with 0 < I <= Imax");
  subs[4].first->description("Solutions of |F(x, y)| = h inside the height bound");
  subs[5].first->description("Resolvent forms, grid identities and omega association");
  subs[6].first->description("Run verification suites");
  subs[7].first->description("Reproduce and diff the class table for I <= Imax");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) cfg.command = cmd;

  cfg.output_format = format == "structured" ? OutputFormat::Structured : OutputFormat::Human;
  try {
    cfg.h = Int(h_text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--h: not an integer: " + h_text);
  }
  if (cfg.h <= 0) throw UsageError("--h must be positive");
  if (!form_text.empty()) {
    try {
      cfg.form = QuarticForm::parse(form_text);
    } catch (const Error& e) {
      throw UsageError(std::string("--form: ") + e.what());
    }
  }
  if (needs_form(cfg.command) && !cfg.form) throw UsageError("this command needs --form");
  if (cfg.form && cfg.form->is_zero()) throw UsageError("--form: the zero form is not allowed");
  return cfg;
}

namespace {

int cmd_invariants(const RunConfig& c, std::ostream& out) {
  InvariantTriple t = invariants(*c.form);
  if (c.output_format == OutputFormat::Structured) {
    out << Json{{"form", form_json(*c.form)}, {"I", t.I.get_str()}, {"J", t.J.get_str()}, {"D", t.D.get_str()}}.dump()
        << "\n";
  } else {
    out << "form " << c.form->to_string() << "\nI = " << t.I << "\nJ = " << t.J << "\nD = " << t.D << "\n";
  }
  return 0;
}

int cmd_hessian(const RunConfig& c, std::ostream& out) {
  HessianCoefficients H = hessian(*c.form);
  if (c.output_format == OutputFormat::Structured) {
    Json a = Json::array();
    for (const auto& v : H.A) a.push_back(v.get_str());
    out << Json{{"form", form_json(*c.form)}, {"A", a}}.dump() << "\n";
  } else {
    out << "form " << c.form->to_string() << "\n";
    for (int i = 0; i < 5; ++i) out << "A" << i << " = " << H.A[static_cast<std::size_t>(i)] << "\n";
    out << "H = " << H.as_binary().to_string() << "\n";
  }
  return 0;
}

int cmd_reduce(const RunConfig& c, std::ostream& out) {
  ReductionResult r = reduce(*c.form);
  ReductionResult n = normalize_small_A4(r.reduced_form);
  auto A = hessian(n.reduced_form).A;
  if (c.output_format == OutputFormat::Structured) {
    out << Json{{"form", form_json(*c.form)},
                {"reduced", form_json(r.reduced_form)},
                {"map", map_json(r.map)},
                {"normalized", form_json(n.reduced_form)},
                {"normalized_map", map_json(n.map)},
                {"A3", A[3].get_str()},
                {"A4", A[4].get_str()}}
               .dump()
        << "\n";
  } else {
    out << "form     " << c.form->to_string() << "\nreduced  " << r.reduced_form.to_string() << "  via "
        << r.map.to_string() << "\n";
    out << "A3 A4 != 0 representative " << n.reduced_form.to_string() << "  via " << n.map.to_string() << "  (A3 = " << A[3]
        << ", A4 = " << A[4] << ")\n";
  }
  return 0;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  EnumerationStats st;
  auto classes = enumerate_forms(c.I_max, c.coeff_bound, &st);
  if (c.output_format == OutputFormat::Structured) {
    for (const auto& cls : classes)
      out << Json{{"I", cls.invariant_I.get_str()},
                  {"representative", form_json(cls.representative)},
                  {"reduced_forms_seen", cls.reduced_forms.size()}}
                 .dump()
          << "\n";
  } else {
    out << classes.size() << " classes with 0 < I <= " << c.I_max << " (coefficients within " << c.coeff_bound
        << ", " << st.accepted << " forms accepted of " << st.j_zero << " with J = 0)\n";
    for (const auto& cls : classes)
      out << "  I = " << cls.invariant_I << "  " << cls.representative.to_string() << "  (" << cls.reduced_forms.size()
          << " reduced forms)\n";
  }
  return 0;
}

bool resolvent_applies(const QuarticForm& f) {
  return invariant_J(f) == 0 && invariant_I(f) > 0 && is_irreducible(f) && real_root_count(f) == 4;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const QuarticForm& f = *c.form;
  auto sols = c.inequality ? solve_inequality(f, c.h, c.height_bound) : solve_equation(f, c.h, c.height_bound);
  bool omegas = false;
  if (resolvent_applies(f)) {
    populate_omegas(f, sols, c.precision_bits);
    omegas = true;
  }
  auto opt_str = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  if (c.output_format == OutputFormat::Structured) {
    out << "x,y,value,primitive,omega,threshold\n";
    for (const auto& s : sols) {
      std::string thr = s.y_threshold_met ? (*s.y_threshold_met ? "true" : "false") : "";
      out << s.x << "," << s.y << "," << s.value << "," << (s.primitive ? "true" : "false") << ","
          << opt_str(s.omega_index) << "," << thr << "\n";
    }
    return 0;
  }
  out << "form " << f.to_string() << ", " << (c.inequality ? "0 < |F| <= " : "|F| = ") << c.h << ", max(|x|,|y|) <= "
      << c.height_bound << " ((x,y) and (-x,-y) identified)\n";
  if (!c.inequality) {
    long plus = 0, minus = 0;
    for (const auto& s : sols) (s.value > 0 ? plus : minus)++;
    auto tally = [](long n) {
      if (n == 0) return std::string("no solution");
      return std::to_string(n) + (n == 1 ? " solution" : " solutions");
    };
    out << "F = " << c.h << ": " << tally(plus) << "\n";
    out << "F = -" << c.h << ": " << tally(minus) << "\n";
  } else {
    out << sols.size() << " coprime solutions\n";
  }
  static const char* names[] = {"1", "i", "-1", "-i"};
  for (const auto& s : sols) {
    out << "  (" << s.x << ", " << s.y << ")  F = " << s.value;
    if (!s.primitive) out << "  not primitive";
    if (s.omega_index) out << "  omega = " << names[*s.omega_index];
    out << "\n";
  }
  if (omegas && !sols.empty()) {
    Census cs = census(sols);
    out << "omega census " << cs.counts[0] << " " << cs.counts[1] << " " << cs.counts[2] << " " << cs.counts[3]
        << (cs.within_bounds ? "" : "  (exceeds 3 per omega or 12 in total)") << "\n";
  }
  return 0;
}

int cmd_resolvent(const RunConfig& c, std::ostream& out) {
  const QuarticForm& f = *c.form;
  ResolventBasis b = resolvent_basis(f, c.precision_bits);
  GridReport g = grid_check(b, 10);
  auto sols = solve_equation(f, c.h, c.height_bound);
  Real tol = two_pow(-64, c.precision_bits);
  bool ok = g.max_diagonal_residual < tol && g.max_c62_residual < tol && g.max_w_residual < tol;
  if (c.output_format == OutputFormat::Structured) {
    out << Json{{"form", form_json(f)},
                {"normalized", form_json(b.normalized.reduced_form)},
                {"map", map_json(b.normalized.map)},
                {"A4", b.A4.get_str()},
                {"rho", Json::array({b.rho.re.to_string(30), b.rho.im.to_string(30)})},
                {"scale", Json::array({b.scale.re.to_string(30), b.scale.im.to_string(30)})},
                {"diagonal_residual", g.max_diagonal_residual.to_string(6)},
                {"c62_residual", g.max_c62_residual.to_string(6)},
                {"w_residual", g.max_w_residual.to_string(6)}}
               .dump()
        << "\n";
    for (const auto& s : sols) {
      ResolventSample sm = z_value(b, s.x, s.y);
      out << Json{{"x", s.x.get_str()},
                  {"y", s.y.get_str()},
                  {"xi", Json::array({sm.xi.re.to_string(20), sm.xi.im.to_string(20)})},
                  {"z", Json::array({sm.z.re.to_string(20), sm.z.im.to_string(20)})},
                  {"omega", omega_index(sm)},
                  {"gap_lemma", gap_lemma_check(sm).holds}}
                 .dump()
          << "\n";
    }
  } else {
    out << "form " << f.to_string() << "  normalized " << b.normalized.reduced_form.to_string() << " via "
        << b.normalized.map.to_string() << "  A4 = " << b.A4 << "\n";
    out << "xi(x, y) = scale (x - rho y), rho = " << b.rho.re.to_string(20) << " + " << b.rho.im.to_string(20)
        << " i\n";
    out << "grid 21x21: diagonal " << g.max_diagonal_residual.to_string(4) << ", |xi eta| vs H "
        << g.max_c62_residual.to_string(4) << ", |xi eta| vs W " << g.max_w_residual.to_string(4) << "\n";
    for (const auto& s : sols) {
      ResolventSample sm = z_value(b, s.x, s.y);
      out << "  (" << s.x << ", " << s.y << ")  |xi| = " << sm.xi.abs().to_string(10) << "  z = " << sm.z.re.to_string(10)
          << " + " << sm.z.im.to_string(10) << " i  omega index " << omega_index(sm)
          << (gap_lemma_check(sm).holds ? "" : "  gap lemma FAILS") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  VerifyOptions opt;
  opt.precision_bits = c.precision_bits;
  opt.I_max = c.I_max;
  opt.coeff_bound = c.coeff_bound;
  opt.height_bound = std::min(c.height_bound, 100L);
  auto findings = run_suite(c.suite, opt);
  long pass = 0, warn = 0, fail = 0;
  for (const auto& f : findings) {
    (f.verdict == Verdict::Pass ? pass : f.verdict == Verdict::Warn ? warn : fail)++;
    if (c.output_format == OutputFormat::Structured) {
      out << Json{{"suite", f.suite},
                  {"name", f.name},
                  {"verdict", verdict_name(f.verdict)},
                  {"expected", f.expected},
                  {"computed", f.computed}}
                 .dump()
          << "\n";
    } else {
      out << "[" << verdict_name(f.verdict) << "] " << f.suite << ": " << f.name;
      if (f.verdict != Verdict::Pass) out << "\n       expected " << f.expected << "\n       computed " << f.computed;
      out << "\n";
    }
  }
  if (c.output_format == OutputFormat::Human)
    out << pass << " passed, " << warn << " warnings, " << fail << " failed\n";
  return fail ? 1 : 0;
}

int cmd_report_table(const RunConfig& c, std::ostream& out) {
  TableOptions opt{c.I_max, c.coeff_bound, c.height_bound, c.precision_bits};
  TableReport rep = build_table(opt);
  static const char* names[] = {"1", "i", "-1", "-i"};
  for (const auto& row : rep.rows) {
    if (c.output_format == OutputFormat::Structured) {
      Json sols = Json::array();
      for (const auto& s : row.solutions)
        sols.push_back({{"x", s.x.get_str()},
                        {"y", s.y.get_str()},
                        {"value", s.value.get_str()},
                        {"omega", s.omega_index ? Json(*s.omega_index) : Json()}});
      out << Json{{"I", row.cls.invariant_I.get_str()},
                  {"representative", form_json(row.cls.representative)},
                  {"published", row.published ? Json(form_json(*row.published)) : Json()},
                  {"solutions", row.solutions.size()},
                  {"census", row.census.counts},
                  {"list", sols},
                  {"status", row.problems.empty() ? "ok" : "mismatch"},
                  {"problems", row.problems}}
                 .dump()
          << "\n";
      continue;
    }
    out << "I = " << row.cls.invariant_I << "  representative " << row.cls.representative.to_string();
    if (row.published) out << "  published " << row.published->to_string();
    out << "  solutions " << row.solutions.size() << "  census " << row.census.counts[0] << " " << row.census.counts[1]
        << " " << row.census.counts[2] << " " << row.census.counts[3] << "  "
        << (row.problems.empty() ? "ok" : "MISMATCH") << "\n";
    for (const auto& s : row.solutions) {
      out << "    (" << s.x << ", " << s.y << ")  F = " << s.value;
      if (s.omega_index) out << "  omega = " << names[*s.omega_index];
      out << "\n";
    }
    for (const auto& p : row.problems) out << "    problem: " << p << "\n";
  }
  for (const auto& p : rep.problems) {
    if (c.output_format == OutputFormat::Structured)
      out << Json{{"problem", p}}.dump() << "\n";
    else
      out << "problem: " << p << "\n";
  }
  if (c.output_format == OutputFormat::Human)
    out << (rep.matches() ? "table matches the published table" : "table DIFFERS from the published table") << "\n";
  return rep.matches() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Invariants: return cmd_invariants(c, out);
      case Command::Hessian: return cmd_hessian(c, out);
      case Command::Reduce: return cmd_reduce(c, out);
      case Command::Enumerate: return cmd_enumerate(c, out);
      case Command::Solve: return cmd_solve(c, out);
      case Command::Resolvent: return cmd_resolvent(c, out);
      case Command::Verify: return cmd_verify(c, out);
      case Command::ReportTable: return cmd_report_table(c, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedBranch& e) {
    err << "unsupported form: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateForm& e) {
    err << "degenerate form: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "outside the domain: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'quartic --help' for the list of commands and flags\n";
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace quartic
