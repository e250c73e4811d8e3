#include "lacuna/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "lacuna/adelberg.hpp"
#include "lacuna/stirling.hpp"

namespace lacuna::cli {

namespace {

using Tuple = std::map<std::string, std::int64_t>;

bool uses_prime_p(SweepTarget target) { return target != SweepTarget::identity33; }

std::int64_t at(const Tuple& t, const char* name) { return t.at(name); }

CongruenceParams congruence_params(const Tuple& t) {
  return {at(t, "p"), at(t, "m"), at(t, "l"), at(t, "s")};
}

ClassicalParams classical_params(const Tuple& t) {
  const auto get = [&](const char* name) {
    const auto it = t.find(name);
    return it == t.end() ? std::int64_t{0} : it->second;
  };
  return {get("p"), get("s"), get("h"), get("l"), get("q")};
}

// Whether a tuple lies inside the target's domain; outside tuples are
// skipped unless the sweep is strict.
bool admissible(const SweepSpec& spec, const Tuple& t) {
  const auto p = at(t, "p");
  switch (spec.target) {
    case SweepTarget::cong1:
      return at(t, "m") > at(t, "l") && at(t, "l") >= 0 && at(t, "s") >= 0;
    case SweepTarget::cong1n:
      return at(t, "n") > 0 && at(t, "n") % p != 0 && at(t, "l") >= 0;
    case SweepTarget::cong2:
      return at(t, "m") >= 0 && at(t, "l") >= 0 && at(t, "s") > 0 && at(t, "s") < p;
    case SweepTarget::cong3:
      return at(t, "l") >= 0 && at(t, "m") >= at(t, "l") && at(t, "s") > 0 && at(t, "s") < p;
    case SweepTarget::identity33:
      return p >= 1 && at(t, "k") >= 0 && at(t, "n") >= p - 1;
    case SweepTarget::cor34:
      return at(t, "k") >= 0 && at(t, "n") >= p - 1;
    case SweepTarget::classical: {
      const auto c = classical_params(t);
      return c.s > 0 && c.s < p && c.h >= 0 && c.h < p && c.l >= 0 && c.q >= 0;
    }
    case SweepTarget::rewrite: {
      const auto m = at(t, "m");
      const auto l = at(t, "l");
      const auto r = at(t, "r");
      if (m < 0 || l < 0 || r < 0) return false;
      return spec.rewrite_form == RewriteForm::fleck_like ? m < (p - 1) * (l + 1) : r < p;
    }
  }
  return false;
}

CongruenceReport evaluate(const SweepSpec& spec, const Tuple& t) {
  switch (spec.target) {
    case SweepTarget::cong1:
      return cong1_report(congruence_params(t));
    case SweepTarget::cong1n:
      return cong1_n_report(at(t, "p"), at(t, "n"), at(t, "l"));
    case SweepTarget::cong2:
      return cong2_report(congruence_params(t));
    case SweepTarget::cong3:
      return cong3_report(congruence_params(t));
    case SweepTarget::identity33:
      return identity33_report(at(t, "p"), at(t, "n"), at(t, "k"));
    case SweepTarget::cor34:
      return cor34_report(at(t, "p"), at(t, "n"), at(t, "k"));
    case SweepTarget::classical:
      return classical_check(spec.classical_kind, classical_params(t));
    case SweepTarget::rewrite:
      return lacunary_rewrite_check(spec.rewrite_form, at(t, "p"), at(t, "m"), at(t, "l"),
                                    at(t, "r"));
  }
  throw std::logic_error("unknown sweep target");
}

std::string target_name(const SweepSpec& spec) {
  switch (spec.target) {
    case SweepTarget::cong1: return "cong1";
    case SweepTarget::cong1n: return "cong1_n";
    case SweepTarget::cong2: return "cong2";
    case SweepTarget::cong3: return "cong3";
    case SweepTarget::identity33: return "identity33";
    case SweepTarget::cor34: return "cor34";
    case SweepTarget::classical:
      switch (spec.classical_kind) {
        case ClassicalKind::glaisher: return "glaisher";
        case ClassicalKind::fleck: return "fleck";
        case ClassicalKind::wan: return "wan";
        case ClassicalKind::suntauraso: return "suntauraso";
      }
      break;
    case SweepTarget::rewrite:
      return spec.rewrite_form == RewriteForm::fleck_like ? "rewrite1" : "rewrite2";
  }
  return "unknown";
}

std::string optional_rational(const std::optional<Rational>& q) {
  return q ? to_string(*q) : std::string("-");
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange range{};
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = to_int64(parse_integer(text));
    } else {
      range.lo = to_int64(parse_integer(text.substr(0, dots)));
      range.hi = to_int64(parse_integer(text.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + text + "'");
  }
  if (range.lo > range.hi) throw std::invalid_argument("empty range '" + text + "'");
  return range;
}

std::vector<std::string> sweep_parameters(const SweepSpec& spec) {
  switch (spec.target) {
    case SweepTarget::cong1:
    case SweepTarget::cong2:
    case SweepTarget::cong3:
      return {"p", "m", "l", "s"};
    case SweepTarget::cong1n:
      return {"p", "n", "l"};
    case SweepTarget::identity33:
    case SweepTarget::cor34:
      return {"p", "n", "k"};
    case SweepTarget::classical:
      switch (spec.classical_kind) {
        case ClassicalKind::glaisher: return {"p", "s", "h", "l"};
        case ClassicalKind::fleck: return {"p", "s", "h", "q"};
        case ClassicalKind::wan: return {"p", "s", "h", "l", "q"};
        case ClassicalKind::suntauraso: return {"p", "s", "h", "q"};
      }
      break;
    case SweepTarget::rewrite:
      return {"p", "m", "l", "r"};
  }
  return {};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const auto names = sweep_parameters(spec);
  std::vector<IntRange> ranges;
  for (const auto& name : names) {
    const auto it = spec.ranges.find(name);
    if (it == spec.ranges.end()) throw std::invalid_argument("missing range flag --" + name);
    ranges.push_back(it->second);
  }
  if (spec.strict && uses_prime_p(spec.target)) {
    for (auto p = ranges[0].lo; p <= ranges[0].hi; ++p)
      if (!is_prime(p)) throw std::invalid_argument("--p range contains composite " + std::to_string(p));
  }

  // Enumerate tuples in lexicographic order, first parameter outermost.
  std::vector<Tuple> tuples;
  std::vector<std::int64_t> current;
  for (const auto& r : ranges) current.push_back(r.lo);
  bool done = names.empty();
  while (!done) {
    Tuple t;
    for (std::size_t i = 0; i < names.size(); ++i) t[names[i]] = current[i];
    const bool prime_ok = !uses_prime_p(spec.target) || is_prime(current[0]);
    if (prime_ok && (spec.strict || admissible(spec, t))) tuples.push_back(std::move(t));
    for (std::size_t i = names.size();;) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (current[i] < ranges[i].hi) {
        ++current[i];
        break;
      }
      current[i] = ranges[i].lo;
    }
  }

  std::vector<SweepRow> rows(tuples.size());
  const auto work = [&](std::size_t idx) {
    SweepRow& row = rows[idx];
    for (const auto& name : names) row.params.emplace_back(name, tuples[idx].at(name));
    try {
      row.report = evaluate(spec, tuples[idx]);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };
  const unsigned jobs = std::max(1U, spec.jobs);
  if (jobs == 1 || rows.size() < 2) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) work(i);
      });
    }
  }
  return rows;
}

void write_rows(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out) {
  const std::string name = target_name(spec);
  if (spec.format == OutputFormat::json) {
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["congruence"] = name;
      for (const auto& [key, value] : row.params) j[key] = value;
      if (!row.report) {
        j["error"] = row.error;
      } else {
        const auto& r = *row.report;
        j["lhs_sum"] = to_string(r.lhs_sum);
        j["target"] = to_string(r.target);
        j["modulus"] = to_string(r.modulus);
        j["holds"] = r.holds;
        j["quotient"] = r.quotient ? nlohmann::ordered_json(to_string(*r.quotient)) : nullptr;
        if (r.predicted_quotient) j["predicted_quotient"] = to_string(*r.predicted_quotient);
      }
      out << j.dump() << '\n';
    }
    return;
  }
  out << "congruence";
  for (const auto& param : sweep_parameters(spec)) out << '\t' << param;
  out << "\tlhs_sum\ttarget\tmodulus\tholds\tquotient\tpredicted_quotient\n";
  for (const auto& row : rows) {
    out << name;
    for (const auto& [key, value] : row.params) out << '\t' << value;
    if (!row.report) {
      out << "\terror: " << row.error << '\n';
      continue;
    }
    const auto& r = *row.report;
    out << '\t' << to_string(r.lhs_sum) << '\t' << to_string(r.target) << '\t'
        << to_string(r.modulus) << '\t' << (r.holds ? "true" : "false") << '\t'
        << optional_rational(r.quotient) << '\t' << optional_rational(r.predicted_quotient) << '\n';
  }
}

void emit_tables(int which, std::ostream& out) {
  if (which != 1 && which != 2) throw std::invalid_argument("table must be 1 or 2");
  const std::int64_t last = which == 1 ? 4 : 3;
  for (std::int64_t u = 0; u <= last; ++u) {
    const MultiPoly poly = which == 1 ? b_poly(u) : a_poly(u);
    out << u << '\t' << poly.to_string() << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Stirling numbers, Adelberg polynomials and lacunary binomial congruences",
               "lacuna"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format = "tsv";
  unsigned jobs = 1;
  bool strict = false;
  app.add_option("--format", format, "Output format for sweeps and tables")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1U, 256U));
  app.add_flag("--strict", strict, "Reject composite values in prime-valued ranges");

  // stirling
  auto* stirling = app.add_subcommand("stirling", "Stirling number of the first or second kind");
  int kind = 1;
  std::int64_t modulus = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  stirling->add_option("--kind", kind, "1 = cycle, 2 = partition")->required()->check(CLI::IsMember({1, 2}));
  auto* mod_opt = stirling->add_option("--mod", modulus, "Reduce modulo P");
  stirling->add_option("N", n)->required();
  stirling->add_option("K", k)->required();

  // adelberg
  auto* adelberg = app.add_subcommand("adelberg", "Adelberg polynomials");
  adelberg->require_subcommand(1);
  std::string family = "B";
  std::int64_t u = 0;
  std::int64_t ex = 0;
  std::int64_t ey = 0;
  std::int64_t em = 0;
  auto* poly_cmd = adelberg->add_subcommand("poly", "Print the expanded polynomial");
  poly_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"A", "B"}));
  poly_cmd->add_option("--u", u)->required()->check(CLI::NonNegativeNumber);
  auto* eval_cmd = adelberg->add_subcommand("eval", "Evaluate at integer arguments");
  eval_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"A", "B"}));
  eval_cmd->add_option("--u", u)->required()->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--x", ex);
  eval_cmd->add_option("--y", ey)->required();
  eval_cmd->add_option("--m", em)->required();

  // table
  auto* table = app.add_subcommand("table", "Print the expanded B (1) or A (2) table");
  int which = 1;
  table->add_option("which", which)->required()->check(CLI::IsMember({1, 2}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->require_subcommand(1);
  std::map<std::string, std::string> range_text;
  const auto add_ranges = [&](CLI::App* cmd, std::initializer_list<const char*> names) {
    for (const char* name : names)
      cmd->add_option(std::string("--") + name, range_text[name], "Range a..b or single value");
  };
  SweepSpec spec;
  std::map<CLI::App*, SweepTarget> targets;
  const auto add_target = [&](const char* name, SweepTarget target,
                              std::initializer_list<const char*> params) {
    auto* cmd = verify->add_subcommand(name);
    cmd->set_help_flag("--help", "Print this help message and exit");
    add_ranges(cmd, params);
    targets[cmd] = target;
    return cmd;
  };
  add_target("cong1", SweepTarget::cong1, {"p", "m", "l", "s"});
  add_target("cong1n", SweepTarget::cong1n, {"p", "n", "l"});
  add_target("cong2", SweepTarget::cong2, {"p", "m", "l", "s"});
  add_target("cong3", SweepTarget::cong3, {"p", "m", "l", "s"});
  add_target("identity33", SweepTarget::identity33, {"p", "n", "k"});
  add_target("cor34", SweepTarget::cor34, {"p", "n", "k"});
  std::string classical_kind = "glaisher";
  add_target("classical", SweepTarget::classical, {"p", "s", "h", "l", "q"})
      ->add_option("--kind", classical_kind)
      ->required()
      ->check(CLI::IsMember({"glaisher", "fleck", "wan", "suntauraso"}));
  int form = 1;
  add_target("rewrite", SweepTarget::rewrite, {"p", "m", "l", "r"})
      ->add_option("--form", form)
      ->required()
      ->check(CLI::IsMember({1, 2}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (stirling->parsed()) {
      if (mod_opt->count() > 0) {
        if (modulus < 1) {
          err << "usage error: --mod must be positive\n";
          return 2;
        }
        if (kind == 1) {
          out << stirling1_mod_p(n, k, modulus) << '\n';
        } else {
          out << to_string(floor_mod(stirling2(n, k), Integer(static_cast<long>(modulus)))) << '\n';
        }
      } else {
        out << to_string(kind == 1 ? stirling1(n, k) : stirling2(n, k)) << '\n';
      }
      return 0;
    }
    if (poly_cmd->parsed()) {
      out << (family == "A" ? a_poly(u) : b_poly(u)).to_string() << '\n';
      return 0;
    }
    if (eval_cmd->parsed()) {
      out << to_string(family == "A" ? a_value(u, ex, ey, em) : b_value(u, ey, em)) << '\n';
      return 0;
    }
    if (table->parsed()) {
      emit_tables(which, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  for (const auto& [cmd, target] : targets) {
    if (!cmd->parsed()) continue;
    spec.target = target;
    spec.format = format == "json" ? OutputFormat::json : OutputFormat::tsv;
    spec.jobs = jobs;
    spec.strict = strict;
    spec.rewrite_form = form == 1 ? RewriteForm::fleck_like : RewriteForm::adelberg_like;
    if (classical_kind == "fleck") spec.classical_kind = ClassicalKind::fleck;
    if (classical_kind == "wan") spec.classical_kind = ClassicalKind::wan;
    if (classical_kind == "suntauraso") spec.classical_kind = ClassicalKind::suntauraso;
    std::vector<SweepRow> rows;
    try {
      for (const auto& [name, text] : range_text)
        if (!text.empty()) spec.ranges[name] = parse_range(text);
      rows = run_sweep(spec);
    } catch (const std::invalid_argument& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
    write_rows(spec, rows, out);
    const bool all_hold = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok(); });
    return all_hold ? 0 : 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace lacuna::cli
