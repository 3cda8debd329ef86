#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelian3/asymptotics.hpp"
#include "abelian3/rank2.hpp"
#include "abelian3/typecounts.hpp"
#include "abelian3/verify.hpp"

namespace abelian3::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::text;
}

// 128-bit integers become JSON numbers when they fit 64 bits, otherwise
// decimal strings.
json big(u128 v) {
  if (v <= std::numeric_limits<u64>::max()) return static_cast<u64>(v);
  return to_string(v);
}

json big(i128 v) {
  if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max()) {
    return static_cast<i64>(v);
  }
  return to_string(v);
}

std::string format_double(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Flattens a JSON value into one CSV cell: scalar arrays are space-joined,
// string arrays "; "-joined, and nested arrays rendered as tuples.
std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::vector<std::string> parts;
  bool strings = false;
  for (const auto& e : v) {
    if (e.is_array()) {
      std::vector<std::string> inner;
      for (const auto& x : e) inner.push_back(csv_cell(x));
      parts.push_back("(" + join(inner, ",") + ")");
    } else {
      strings = strings || e.is_string();
      parts.push_back(csv_cell(e));
    }
  }
  return join(parts, strings ? "; " : " ");
}

std::string csv_quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

// Writes records as text lines, JSON lines or RFC 4180 CSV.
class Sink {
 public:
  Sink(std::ostream& out, Format format, bool quiet)
      : out_(out), format_(format), quiet_(quiet) {}

  Format format() const { return format_; }

  // CSV columns; defaults to the keys of the first record.
  void columns(std::vector<std::string> cols) { columns_ = std::move(cols); }

  // Informational text line, dropped by --quiet and by json/csv.
  void note(const std::string& line) {
    if (format_ == Format::text && !quiet_) out_ << line << '\n';
  }

  void record(const json& rec, const std::string& text) {
    switch (format_) {
      case Format::text:
        out_ << text << '\n';
        break;
      case Format::json:
        out_ << rec.dump() << '\n';
        break;
      case Format::csv: {
        if (columns_.empty()) {
          for (const auto& item : rec.items()) columns_.push_back(item.key());
        }
        if (!header_written_) {
          write_row(columns_);
          header_written_ = true;
        }
        std::vector<std::string> cells;
        for (const auto& c : columns_) {
          cells.push_back(rec.contains(c) ? csv_cell(rec[c]) : "");
        }
        write_row(cells);
        break;
      }
    }
  }

 private:
  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << csv_quote(cells[i]);
    }
    out_ << "\r\n";
  }

  std::ostream& out_;
  Format format_;
  bool quiet_;
  bool header_written_ = false;
  std::vector<std::string> columns_;
};

json coefficients_json(const IntPolynomial& poly) {
  json arr = json::array();
  for (i64 c : poly.coefficients()) arr.push_back(c);
  return arr;
}

std::string tuple(const std::vector<u64>& xs) {
  std::vector<std::string> parts;
  for (u64 x : xs) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

// "2,1" -> {2, 1}; "" and "()" give the empty partition.
Partition parse_partition(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; }),
             text.end());
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const u128 value = parse_u128(piece);
    if (value > std::numeric_limits<unsigned>::max()) {
      throw std::invalid_argument("partition part too large: " + piece);
    }
    if (value != 0) parts.push_back(static_cast<unsigned>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (unsigned x : p.parts()) arr.push_back(x);
  return arr;
}

std::string partition_text(const Partition& p) {
  std::vector<u64> parts(p.parts().begin(), p.parts().end());
  return tuple(parts);
}

struct Globals {
  std::string format = "text";
  bool quiet = false;
};

// --- count -----------------------------------------------------------------

struct CountArgs {
  u64 m = 1, n = 1, r = 1;
  std::string order;
  bool cyclic = false;
};

int cmd_count(const CountArgs& a, Sink& sink) {
  const Group3 g{a.m, a.n, a.r};
  json rec;
  rec["m"] = a.m;
  rec["n"] = a.n;
  rec["r"] = a.r;
  u128 count = 0;
  if (!a.order.empty()) {
    const u128 delta = parse_u128(a.order);
    count = count_by_order(g, delta);
    rec["kind"] = "order";
    rec["order"] = big(delta);
  } else if (a.cyclic) {
    count = count_cyclic(g);
    rec["kind"] = "cyclic";
    rec["order"] = nullptr;
  } else {
    count = count_total(g);
    rec["kind"] = "total";
    rec["order"] = nullptr;
  }
  rec["count"] = big(count);
  sink.record(rec, to_string(count));
  return kOk;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  u64 m = 1, n = 1, r = 1;
  bool elements = false;
};

int cmd_enumerate(const EnumerateArgs& a, Sink& sink) {
  const Group3 g{a.m, a.n, a.r};
  require_valid(g);
  u64 bound = 0;
  if (a.elements) {
    bound = element_bound_from_env();
    require_materializable(g, bound);
  }
  sink.columns({"a", "b", "c", "t", "w", "z", "basis", "order", "elements"});
  u64 count = 0;
  for_each_sextuple(g, [&](const Sextuple& sx) {
    const SubgroupBasis3 basis = materialize(sx, g);
    json rec;
    rec["a"] = sx.a;
    rec["b"] = sx.b;
    rec["c"] = sx.c;
    rec["t"] = sx.t;
    rec["w"] = sx.w;
    rec["z"] = sx.z;
    rec["basis"] = json::array({json::array({basis.a, 0, 0}),
                                json::array({basis.s, basis.b, 0}),
                                json::array({basis.u, basis.v, basis.c})});
    rec["order"] = big(basis.order());
    std::string text = "sextuple " + tuple({sx.a, sx.b, sx.c, sx.t, sx.w, sx.z}) +
                       " basis " + tuple({basis.a, 0, 0}) + " " +
                       tuple({basis.s, basis.b, 0}) + " " +
                       tuple({basis.u, basis.v, basis.c}) + " order " +
                       to_string(basis.order());
    if (a.elements) {
      const ElementSet set = subgroup_elements(basis, bound);
      json elems = json::array();
      for (const auto& e : set.elements) elems.push_back(json::array({e[0], e[1], e[2]}));
      rec["elements"] = std::move(elems);
      text += " elements " + describe(set);
    }
    sink.record(rec, text);
    ++count;
  });
  sink.note(std::to_string(count) + " subgroups");
  return kOk;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  int which = 1;
  u64 limit = 0;  // 0: the published range
};

int cmd_table(const TableArgs& a, Sink& sink) {
  if (a.which == 1) {
    const u64 limit = a.limit ? a.limit : 50;
    const auto s = sieve_s(limit);
    sink.columns({"n", "s"});
    sink.note("n & s(n)");
    for (u64 n = 1; n <= limit; ++n) {
      json rec;
      rec["n"] = n;
      rec["s"] = big(s[n]);
      sink.record(rec, std::to_string(n) + " & " + to_string(s[n]));
    }
  } else if (a.which == 2) {
    const u64 limit = a.limit ? a.limit : 10;
    sink.columns({"nu", "polynomial"});
    sink.note("nu & s(p^nu)");
    for (unsigned nu = 1; nu <= limit; ++nu) {
      const IntPolynomial poly = symbolic_count(nu, nu, nu);
      json rec;
      rec["nu"] = nu;
      rec["polynomial"] = to_string(poly);
      rec["coefficients"] = coefficients_json(poly);
      sink.record(rec, std::to_string(nu) + " & " + to_string(poly));
    }
  } else {
    const u64 limit = a.limit ? a.limit : 4;
    sink.columns({"nu1", "nu2", "nu3", "polynomial"});
    sink.note("nu1 & nu2 & nu3 & s(p^nu1,p^nu2,p^nu3)");
    for (unsigned nu3 = 1; nu3 <= limit; ++nu3) {
      for (unsigned nu2 = 1; nu2 <= nu3; ++nu2) {
        for (unsigned nu1 = 1; nu1 <= nu2; ++nu1) {
          const IntPolynomial poly = symbolic_count(nu1, nu2, nu3);
          json rec;
          rec["nu1"] = nu1;
          rec["nu2"] = nu2;
          rec["nu3"] = nu3;
          rec["polynomial"] = to_string(poly);
          rec["coefficients"] = coefficients_json(poly);
          sink.record(rec, std::to_string(nu1) + " & " + std::to_string(nu2) + " & " +
                               std::to_string(nu3) + " & " + to_string(poly));
        }
      }
    }
  }
  return kOk;
}

// --- poly ------------------------------------------------------------------

struct PolyArgs {
  std::vector<unsigned> count_nu;
  std::string count_order;
  unsigned general_nu = 1;
  unsigned gauss_r = 0, gauss_k = 0;
  unsigned h_nu = 1;
  unsigned hrec_nu = 1;
  std::string eval;
};

void emit_polynomial(Sink& sink, const std::string& kind, const std::vector<unsigned>& args,
                     const IntPolynomial& poly, const std::string& eval) {
  json rec;
  rec["kind"] = kind;
  json arr = json::array();
  for (unsigned x : args) arr.push_back(x);
  rec["arguments"] = std::move(arr);
  rec["polynomial"] = to_string(poly);
  rec["coefficients"] = coefficients_json(poly);
  std::string text = to_string(poly);
  if (!eval.empty()) {
    const bool negative = eval.front() == '-';
    const u128 magnitude = parse_u128(negative ? eval.substr(1) : eval);
    if (magnitude > static_cast<u128>(std::numeric_limits<i64>::max())) {
      throw std::invalid_argument("--eval value out of range: " + eval);
    }
    const i128 p = negative ? -static_cast<i128>(magnitude) : static_cast<i128>(magnitude);
    const i128 value = poly.evaluate(p);
    rec["p"] = big(p);
    rec["value"] = big(value);
    text += "\np = " + to_string(p) + ": " + to_string(value);
  }
  sink.record(rec, text);
}

// --- type-count ------------------------------------------------------------

struct TypeCountArgs {
  std::string lambda;
  std::string mu;
  bool has_mu = false;
  unsigned size = 0;
  bool has_size = false;
  std::string eval;
};

int cmd_type_count(const TypeCountArgs& a, Sink& sink) {
  const Partition lambda = parse_partition(a.lambda);
  std::vector<Partition> mus;
  if (a.has_mu) {
    mus.push_back(parse_partition(a.mu));
  } else {
    for (const auto& mu : sub_partitions(lambda)) {
      if (!a.has_size || mu.size() == a.size) mus.push_back(mu);
    }
  }
  sink.columns({"kind", "lambda", "mu", "size", "polynomial", "coefficients", "p", "value"});

  i128 p = 0;
  if (!a.eval.empty()) {
    const u128 v = parse_u128(a.eval);
    if (v > static_cast<u128>(std::numeric_limits<i64>::max())) {
      throw std::invalid_argument("--eval value out of range: " + a.eval);
    }
    p = static_cast<i128>(v);
  }
  auto emit = [&](const std::string& kind, const Partition* mu, unsigned size,
                  const IntPolynomial& poly) {
    json rec;
    rec["kind"] = kind;
    rec["lambda"] = partition_json(lambda);
    rec["mu"] = mu ? partition_json(*mu) : json(nullptr);
    rec["size"] = size;
    rec["polynomial"] = to_string(poly);
    rec["coefficients"] = coefficients_json(poly);
    std::string text = (mu ? "mu = " + partition_text(*mu) : std::string("sum")) + ": " +
                       to_string(poly);
    if (!a.eval.empty()) {
      const i128 value = poly.evaluate(p);
      rec["p"] = big(p);
      rec["value"] = big(value);
      text += " (p = " + to_string(p) + ": " + to_string(value) + ")";
    }
    sink.record(rec, text);
  };

  sink.note("lambda = " + partition_text(lambda));
  IntPolynomial total;
  for (const auto& mu : mus) {
    const IntPolynomial poly = type_count(lambda, mu);
    total += poly;
    emit("type", &mu, mu.size(), poly);
  }
  if (a.has_size) emit("sum", nullptr, a.size, total);
  return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(u64 max_order, Sink& sink, const Hooks& hooks) {
  const u64 bound = element_bound_from_env();
  if (max_order > bound) {
    throw std::length_error("--max-order " + std::to_string(max_order) +
                            " exceeds the element bound " + std::to_string(bound) +
                            " (set ABELIAN3_ELEMENT_BOUND to raise it)");
  }
  const VerifyReport report = verify_up_to(max_order, hooks.params);
  sink.columns({"kind", "max_order", "groups_checked", "subgroups_compared", "failures",
                "passed", "m", "n", "r", "problems", "missing", "unexpected"});

  for (const auto& f : report.failures) {
    json rec;
    rec["kind"] = "failure";
    rec["m"] = f.group.m;
    rec["n"] = f.group.n;
    rec["r"] = f.group.r;
    rec["problems"] = f.problems;
    json missing = json::array(), unexpected = json::array();
    for (const auto& s : f.missing) missing.push_back(describe(s));
    for (const auto& s : f.unexpected) unexpected.push_back(describe(s));
    rec["missing"] = missing;
    rec["unexpected"] = unexpected;
    std::string text = "FAIL " + to_string(f.group) + ": " + join(f.problems, "; ");
    for (const auto& s : f.missing) text += "\n  missing    " + describe(s);
    for (const auto& s : f.unexpected) text += "\n  unexpected " + describe(s);
    sink.record(rec, text);
  }

  json summary;
  summary["kind"] = "summary";
  summary["max_order"] = report.max_order;
  summary["groups_checked"] = report.groups_checked;
  summary["subgroups_compared"] = report.subgroups_compared;
  summary["failures"] = report.failures.size();
  summary["passed"] = report.passed();
  const std::string range = "groups with mnr <= " + std::to_string(max_order);
  const std::string text =
      report.passed()
          ? "PASS: " + std::to_string(report.groups_checked) + " " + range + ", " +
                std::to_string(report.subgroups_compared) + " subgroups compared"
          : "FAIL: " + std::to_string(report.failures.size()) + " of " +
                std::to_string(report.groups_checked) + " " + range + " differ";
  sink.record(summary, text);
  return report.passed() ? kOk : kVerificationFailure;
}

// --- asymptotic ------------------------------------------------------------

struct AsymptoticArgs {
  std::vector<u64> xs{1000, 10000, 100000, 1000000};
  u64 prime_limit = 100000;
  unsigned tail_terms = 16;
  u64 memory_budget_mib = 1024;
};

int cmd_asymptotic(const AsymptoticArgs& a, Sink& sink) {
  for (u64 x : a.xs) {
    if (x < 2) throw std::invalid_argument("x values must be >= 2");
  }
  const u64 largest = std::max(a.prime_limit, *std::max_element(a.xs.begin(), a.xs.end()));
  const u128 needed = static_cast<u128>(largest) * kSieveBytesPerEntry;
  const u128 budget = static_cast<u128>(a.memory_budget_mib) << 20;
  if (needed > budget) {
    throw std::length_error("sieving to " + std::to_string(largest) + " needs about " +
                            to_string(needed >> 20) + " MiB, above the memory budget of " +
                            std::to_string(a.memory_budget_mib) + " MiB");
  }
  const DirichletValues h3 = H3_and_H3prime(a.prime_limit, a.tail_terms);
  const auto reports = asymptotic_reports(a.xs, h3);

  sink.note("H(3)  = " + format_double("%.15g", h3.H3) + " +/- " +
            format_double("%.2g", h3.H3_error));
  sink.note("H'(3) = " + format_double("%.15g", h3.H3prime) + " +/- " +
            format_double("%.2g", h3.H3prime_error));
  sink.note("x exact_sum main_term relative_error error_exponent_estimate");
  for (const auto& r : reports) {
    json rec;
    rec["x"] = r.x;
    rec["exact_sum"] = to_string(r.exact_sum);
    rec["main_term"] = r.main_term;
    rec["relative_error"] = r.relative_error;
    rec["error_exponent_estimate"] = r.error_exponent_estimate;
    rec["H3"] = h3.H3;
    rec["H3_error"] = h3.H3_error;
    rec["H3prime"] = h3.H3prime;
    rec["H3prime_error"] = h3.H3prime_error;
    rec["prime_limit"] = a.prime_limit;
    sink.record(rec, std::to_string(r.x) + " " + to_string(r.exact_sum) + " " +
                         format_double("%.12e", r.main_term) + " " +
                         format_double("%.6e", r.relative_error) + " " +
                         format_double("%.4f", r.error_exponent_estimate));
  }
  return kOk;
}

}  // namespace

u64 element_bound_from_env() {
  const char* raw = std::getenv("ABELIAN3_ELEMENT_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultElementBound;
  const u128 v = parse_u128(raw);
  if (v == 0 || v > std::numeric_limits<u64>::max()) {
    throw std::invalid_argument(std::string("ABELIAN3_ELEMENT_BOUND must be a positive "
                                            "64-bit integer, got '") + raw + "'");
  }
  return static_cast<u64>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Subgroups of the finite abelian groups Z_m x Z_n x Z_r", "abelian3"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "abelian3 0.1.0");

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("-q,--quiet", globals.quiet, "Suppress headers and summaries in text output");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Number of subgroups of Z_m x Z_n x Z_r");
  count->add_option("m", count_args.m)->required()->check(CLI::PositiveNumber);
  count->add_option("n", count_args.n)->required()->check(CLI::PositiveNumber);
  count->add_option("r", count_args.r)->required()->check(CLI::PositiveNumber);
  auto* order_opt =
      count->add_option("--order", count_args.order, "Count only subgroups of this order");
  auto* cyclic_flag = count->add_flag("--cyclic", count_args.cyclic, "Count cyclic subgroups");
  order_opt->excludes(cyclic_flag);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List every subgroup with its basis");
  enumerate->add_option("m", enum_args.m)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("n", enum_args.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("r", enum_args.r)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--elements", enum_args.elements,
                      "Also list the elements (bounded by ABELIAN3_ELEMENT_BOUND)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Regenerate table 1, 2 or 3");
  table->add_option("which", table_args.which)->required()->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--limit", table_args.limit, "Largest n (table 1) or nu (tables 2, 3)")
      ->check(CLI::PositiveNumber);

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Polynomials in p");
  poly->require_subcommand(1);
  poly->add_option("--eval", poly_args.eval, "Also evaluate at this integer p");
  auto* poly_count = poly->add_subcommand("count", "s(p^nu1, p^nu2, p^nu3)");
  poly_count->add_option("nu", poly_args.count_nu, "nu1 nu2 nu3")->required()->expected(3);
  poly_count->add_option("--order", poly_args.count_order,
                         "Only subgroups of order p^k (give k)");
  auto* poly_general = poly->add_subcommand("general", "Closed form of s(p^nu, p^nu, p^nu)");
  poly_general->add_option("nu", poly_args.general_nu)->required()->check(CLI::PositiveNumber);
  auto* poly_gauss = poly->add_subcommand("gaussian", "Gaussian binomial [r k]_p");
  poly_gauss->add_option("r", poly_args.gauss_r)->required();
  poly_gauss->add_option("k", poly_args.gauss_k)->required();
  auto* poly_h = poly->add_subcommand("h", "h(p^nu) = (3nu-1) p + 3nu + 1");
  poly_h->add_option("nu", poly_args.h_nu)->required()->check(CLI::PositiveNumber);
  auto* poly_hrec =
      poly->add_subcommand("h-recurrence", "h(p^nu) from s(p^nu) - 2p^2 s(p^(nu-1)) + ...");
  poly_hrec->add_option("nu", poly_args.hrec_nu)->required()->check(CLI::PositiveNumber);

  TypeCountArgs type_args;
  auto* type_cmd = app.add_subcommand("type-count", "Subgroups of type mu in a p-group of type lambda");
  type_cmd->add_option("--lambda", type_args.lambda, "Type of the group, e.g. 2,1")->required();
  auto* mu_opt = type_cmd->add_option("--mu", type_args.mu, "Type of the subgroups, e.g. 1,1");
  auto* size_opt =
      type_cmd->add_option("--size", type_args.size, "All types mu with |mu| = k, and their sum");
  mu_opt->excludes(size_opt);
  type_cmd->add_option("--eval", type_args.eval, "Also evaluate at this p");

  u64 max_order = 120;
  auto* verify = app.add_subcommand("verify", "Compare the enumeration with brute force");
  verify->add_option("--max-order", max_order, "Check every group with mnr <= N")
      ->check(CLI::PositiveNumber);

  AsymptoticArgs asym_args;
  auto* asym = app.add_subcommand("asymptotic", "Partial sums of s(n) against the main term");
  asym->add_option("--x-values", asym_args.xs, "Comma-separated x values")->delimiter(',');
  asym->add_option("--prime-limit", asym_args.prime_limit, "Euler product cut-off (>= 100)")
      ->check(CLI::Range(u64{100}, std::numeric_limits<u64>::max()));
  asym->add_option("--tail-terms", asym_args.tail_terms, "Series terms for the prime tail (>= 4)")
      ->check(CLI::Range(4u, 64u));
  asym->add_option("--memory-budget", asym_args.memory_budget_mib, "Sieve memory budget in MiB")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  type_args.has_mu = mu_opt->count() > 0;
  type_args.has_size = size_opt->count() > 0;

  Sink sink(out, parse_format(globals.format), globals.quiet);
  try {
    if (*count) return cmd_count(count_args, sink);
    if (*enumerate) return cmd_enumerate(enum_args, sink);
    if (*table) return cmd_table(table_args, sink);
    if (*poly) {
      const std::string& eval = poly_args.eval;
      if (*poly_count) {
        const auto& nu = poly_args.count_nu;
        if (!poly_args.count_order.empty()) {
          const u128 k = parse_u128(poly_args.count_order);
          if (k > nu[0] + nu[1] + nu[2]) throw std::invalid_argument("order exponent exceeds nu1+nu2+nu3");
          emit_polynomial(sink, "count_by_order", {nu[0], nu[1], nu[2], static_cast<unsigned>(k)},
                          symbolic_count_by_order(nu[0], nu[1], nu[2], static_cast<unsigned>(k)),
                          eval);
        } else {
          emit_polynomial(sink, "count", nu, symbolic_count(nu[0], nu[1], nu[2]), eval);
        }
      } else if (*poly_general) {
        emit_polynomial(sink, "general", {poly_args.general_nu},
                        general_form(poly_args.general_nu), eval);
      } else if (*poly_gauss) {
        emit_polynomial(sink, "gaussian", {poly_args.gauss_r, poly_args.gauss_k},
                        gaussian_binomial(poly_args.gauss_r, poly_args.gauss_k), eval);
      } else if (*poly_h) {
        emit_polynomial(sink, "h", {poly_args.h_nu}, h_closed_form(poly_args.h_nu), eval);
      } else {
        emit_polynomial(sink, "h-recurrence", {poly_args.hrec_nu},
                        h_recurrence(poly_args.hrec_nu), eval);
      }
      return kOk;
    }
    if (*type_cmd) return cmd_type_count(type_args, sink);
    if (*verify) return cmd_verify(max_order, sink, hooks);
    if (*asym) return cmd_asymptotic(asym_args, sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace abelian3::cli
