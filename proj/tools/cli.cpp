#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "expcong/expcong.h"

namespace expcong::cli {

namespace {

using json = nlohmann::json;

enum class Format { Plain, Json, Csv };

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct ContextDeleter {
  void operator()(expcong_context* c) const { expcong_context_destroy(c); }
};
using ContextPtr = std::unique_ptr<expcong_context, ContextDeleter>;

template <typename T, void (*Destroy)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Destroy(p); }
};
using PartitionPtr = std::unique_ptr<expcong_partition, HandleDeleter<expcong_partition, expcong_partition_destroy>>;
using ExpSumPtr =
    std::unique_ptr<expcong_expsum_report, HandleDeleter<expcong_expsum_report, expcong_expsum_report_destroy>>;
using VerifyPtr =
    std::unique_ptr<expcong_verify_report, HandleDeleter<expcong_verify_report, expcong_verify_report_destroy>>;

int exit_code_for(expcong_status status) {
  switch (status) {
    case EXPCONG_ERR_RESOURCE: return kResourceCap;
    case EXPCONG_ERR_INVARIANT:
    case EXPCONG_ERR_INTERNAL: return kVerificationFailure;
    default: return kUsageError;
  }
}

void check(expcong_status status, const expcong_context* ctx) {
  if (status == EXPCONG_OK) return;
  throw Failure(exit_code_for(status), std::string(expcong_status_string(status)) + ": " + expcong_last_error(ctx));
}

template <typename T>
T parse_integer(const std::string& text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Failure(kUsageError, std::string("invalid ") + what + ": '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Failure(kUsageError, std::string("invalid ") + what + ": '" + text + "'");
  }
}

template <typename T>
std::pair<T, T> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  std::pair<T, T> r;
  if (dots == std::string::npos) {
    r.first = r.second = parse_integer<T>(text, what);
  } else {
    r.first = parse_integer<T>(text.substr(0, dots), what);
    r.second = parse_integer<T>(text.substr(dots + 2), what);
  }
  if (r.second < r.first) throw Failure(kUsageError, std::string("empty ") + what + ": '" + text + "'");
  return r;
}

std::pair<double, double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text, "s"), 0.0};
  return {parse_double(text.substr(0, comma), "Re(s)"), parse_double(text.substr(comma + 1), "Im(s)")};
}

json complex_json(double re, double im) { return json::array({re, im}); }

std::string signed_value(int v) { return v > 0 ? "+1" : (v < 0 ? "-1" : "0"); }

json record(const std::string& command, json inputs, json result, const std::string& ref) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["paper_ref"] = ref;
  return j;
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string join_residues(const uint64_t* data, std::size_t size) {
  std::string s;
  for (std::size_t i = 0; i < size; ++i) {
    if (i) s += ' ';
    s += std::to_string(data[i]);
  }
  return s;
}

struct Options {
  Format format = Format::Plain;
  unsigned jobs = 1;
  std::optional<uint64_t> max_n;
};

// ---- commands --------------------------------------------------------------

struct SymbolArgs {
  std::string a, n, k;
  bool explain = false;
};

int cmd_symbol(expcong_context* ctx, const Options& opt, const SymbolArgs& args, std::ostream& out) {
  const auto a = parse_integer<int64_t>(args.a, "a");
  const auto n = parse_integer<uint64_t>(args.n, "n");
  const auto k = parse_integer<uint64_t>(args.k, "k");
  int value = 0;
  uint64_t residue = 0;
  check(expcong_symbol(ctx, a, n, k, &value, &residue), ctx);
  const char* branch = value > 0 ? "a^k = 1" : (value < 0 ? "a^k = -1" : "a^k not +-1");

  switch (opt.format) {
    case Format::Json: {
      json result{{"value", value}};
      if (args.explain) {
        result["residue"] = residue;
        result["branch"] = branch;
      }
      out << record("symbol", {{"a", a}, {"n", n}, {"k", k}}, result, "Definition: exponential congruence symbol")
          << "\n";
      break;
    }
    case Format::Csv:
      out << (args.explain ? "a,n,k,value,residue\n" : "a,n,k,value\n");
      out << a << ',' << n << ',' << k << ',' << value;
      if (args.explain) out << ',' << residue;
      out << "\n";
      break;
    case Format::Plain:
      out << "value: " << signed_value(value) << "\n";
      if (args.explain) out << "residue: " << residue << "\nbranch: " << branch << "\n";
      break;
  }
  return kSuccess;
}

struct PartitionArgs {
  std::string n, k;
  bool counts = false;
};

int cmd_partition(expcong_context* ctx, const Options& opt, const PartitionArgs& args, std::ostream& out) {
  const auto n = parse_integer<uint64_t>(args.n, "n");
  const auto k = parse_integer<uint64_t>(args.k, "k");
  expcong_partition* raw = nullptr;
  check(expcong_partition_create(ctx, n, k, &raw), ctx);
  const PartitionPtr part(raw);

  auto list = [&](expcong_class c) {
    const uint64_t* d = expcong_partition_data(part.get(), c);
    return std::vector<uint64_t>(d, d + expcong_partition_size(part.get(), c));
  };
  const auto plus = list(EXPCONG_CLASS_PLUS);
  const auto minus = list(EXPCONG_CLASS_MINUS);
  const auto zero = list(EXPCONG_CLASS_ZERO);
  const uint64_t non_units = expcong_partition_non_units(part.get());

  switch (opt.format) {
    case Format::Json: {
      json result{{"count_plus", plus.size()},
                  {"count_minus", minus.size()},
                  {"count_zero", zero.size()},
                  {"non_units", non_units}};
      if (!args.counts) {
        result["r_plus"] = plus;
        result["r_minus"] = minus;
        result["r_zero"] = zero;
      }
      out << record("partition", {{"n", n}, {"k", k}, {"counts", args.counts}}, result,
                    "Theorem: partition of residue classes")
          << "\n";
      break;
    }
    case Format::Csv:
      if (args.counts) {
        out << "n,k,count_plus,count_minus,count_zero,non_units\n";
        out << n << ',' << k << ',' << plus.size() << ',' << minus.size() << ',' << zero.size() << ',' << non_units
            << "\n";
      } else {
        out << "residue,class\n";
        for (uint64_t a : plus) out << a << ",+1\n";
        for (uint64_t a : minus) out << a << ",-1\n";
        for (uint64_t a : zero) out << a << ",0\n";
      }
      break;
    case Format::Plain:
      if (args.counts) {
        out << plus.size() << '/' << minus.size() << '/' << zero.size() << "\n";
        out << "non-units: " << non_units << "\n";
      } else {
        out << "R+1: {" << join_residues(plus.data(), plus.size()) << "}\n";
        out << "R-1: {" << join_residues(minus.data(), minus.size()) << "}\n";
        out << "R0: {" << join_residues(zero.data(), zero.size()) << "}\n";
        out << "non-units: " << non_units << "\n";
      }
      break;
  }
  return kSuccess;
}

int cmd_count(expcong_context* ctx, const Options& opt, const std::string& p_text, const std::string& k_text,
              std::ostream& out) {
  const auto p = parse_integer<uint64_t>(p_text, "p");
  const auto k = parse_integer<uint64_t>(k_text, "k");
  expcong_prime_count_report r{};
  check(expcong_prime_counts(ctx, p, k, &r), ctx);
  switch (opt.format) {
    case Format::Json:
      out << record("count", {{"p", p}, {"k", k}},
                    {{"m", r.m},
                     {"g", r.g},
                     {"count_plus", r.count_plus},
                     {"count_minus", r.count_minus},
                     {"minus_solvable", static_cast<bool>(r.minus_solvable)}},
                    "Corollary: counting residues for prime modulus")
          << "\n";
      break;
    case Format::Csv:
      out << "p,k,m,g,count_plus,count_minus,minus_solvable\n";
      out << p << ',' << k << ',' << r.m << ',' << r.g << ',' << r.count_plus << ',' << r.count_minus << ','
          << (r.minus_solvable ? "true" : "false") << "\n";
      break;
    case Format::Plain:
      out << "gcd(k, p-1): " << r.g << "\ncount(+1): " << r.count_plus << "\ncount(-1): " << r.count_minus
          << "\n-1 solvable: " << (r.minus_solvable ? "yes" : "no") << "\n";
      break;
  }
  return kSuccess;
}

struct ScanArgs {
  std::string n_range, k_range;
  bool primes = false;
};

int cmd_scan(expcong_context* ctx, const Options& opt, const ScanArgs& args, std::ostream& out, std::ostream& err) {
  const auto [n_lo, n_hi] = parse_range<uint64_t>(args.n_range, "n range");
  const auto [k_lo, k_hi] = parse_range<uint64_t>(args.k_range, "k range");
  if (n_lo < 2 || k_lo < 1) throw Failure(kUsageError, "scan needs n >= 2 and k >= 1");

  static const std::vector<std::string> kColumns = {
      "n", "k", "phi", "count_plus", "count_minus", "count_zero", "non_units", "orthogonality_sum", "index_two",
      "formula_plus", "formula_minus", "formula_ok"};
  if (opt.format == Format::Csv) out << csv_join(kColumns) << "\n";
  if (opt.format == Format::Plain) out << "n k phi +1 -1 0 sum index2 formula\n";

  uint64_t records = 0, violations = 0;
  for (uint64_t n = n_lo; n <= n_hi; ++n) {
    int prime = 0;
    check(expcong_is_prime(ctx, n, &prime), ctx);
    const bool odd_prime = prime && n > 2;
    if (args.primes && !odd_prime) continue;
    for (uint64_t k = k_lo; k <= k_hi; ++k) {
      expcong_partition* raw = nullptr;
      check(expcong_partition_create(ctx, n, k, &raw), ctx);
      const PartitionPtr part(raw);
      const auto plus = expcong_partition_size(part.get(), EXPCONG_CLASS_PLUS);
      const auto minus = expcong_partition_size(part.get(), EXPCONG_CLASS_MINUS);
      const auto zero = expcong_partition_size(part.get(), EXPCONG_CLASS_ZERO);
      int64_t orth = 0;
      check(expcong_orthogonality_sum(ctx, n, k, &orth), ctx);
      expcong_index_two_report idx{};
      check(expcong_index_two_check(ctx, n, k, &idx), ctx);

      std::optional<expcong_prime_count_report> formula;
      bool formula_ok = true;
      if (odd_prime) {
        expcong_prime_count_report r{};
        check(expcong_prime_counts(ctx, n, k, &r), ctx);
        formula = r;
        formula_ok = r.count_plus == plus && r.count_minus == minus;
        violations += !formula_ok;
      }
      ++records;

      switch (opt.format) {
        case Format::Json: {
          json result{{"phi", plus + minus + zero},
                      {"count_plus", plus},
                      {"count_minus", minus},
                      {"count_zero", zero},
                      {"non_units", expcong_partition_non_units(part.get())},
                      {"orthogonality_sum", orth},
                      {"index_two", static_cast<bool>(idx.holds)}};
          if (formula) {
            result["formula_plus"] = formula->count_plus;
            result["formula_minus"] = formula->count_minus;
            result["formula_ok"] = formula_ok;
          }
          out << record("scan", {{"n", n}, {"k", k}}, result,
                        "Corollary: counting residues for prime modulus; Theorem: orthogonality relation")
              << "\n";
          break;
        }
        case Format::Csv:
          out << csv_join({std::to_string(n), std::to_string(k), std::to_string(plus + minus + zero),
                           std::to_string(plus), std::to_string(minus), std::to_string(zero),
                           std::to_string(expcong_partition_non_units(part.get())), std::to_string(orth),
                           idx.holds ? "true" : "false", formula ? std::to_string(formula->count_plus) : "",
                           formula ? std::to_string(formula->count_minus) : "",
                           formula ? (formula_ok ? "true" : "false") : ""})
              << "\n";
          break;
        case Format::Plain:
          out << n << ' ' << k << ' ' << plus + minus + zero << ' ' << plus << ' ' << minus << ' ' << zero << ' '
              << orth << ' ' << (idx.holds ? "yes" : "no") << ' '
              << (formula ? (formula_ok ? "ok" : "VIOLATION") : "-") << "\n";
          break;
      }
    }
  }
  err << "scan: " << records << " records, " << violations << " counting-formula violations\n";
  return violations == 0 ? kSuccess : kVerificationFailure;
}

struct ExpSumArgs {
  std::string n, k, m_range;
};

int cmd_expsum(expcong_context* ctx, const Options& opt, const ExpSumArgs& args, std::ostream& out) {
  const auto n = parse_integer<uint64_t>(args.n, "n");
  const auto k = parse_integer<uint64_t>(args.k, "k");
  const auto [m_lo, m_hi] = parse_range<int64_t>(args.m_range, "m range");
  expcong_expsum_report* raw = nullptr;
  check(expcong_exp_sum_bound_check(ctx, n, k, m_lo, m_hi, &raw), ctx);
  const ExpSumPtr report(raw);
  expcong_expsum_summary sum{};
  expcong_expsum_report_summary(report.get(), &sum);

  json rows = json::array();
  if (opt.format == Format::Csv) out << "m,re,im,abs,bound\n";
  if (opt.format == Format::Plain) out << "m re im |S| bound\n";
  for (std::size_t i = 0; i < expcong_expsum_report_rows(report.get()); ++i) {
    int64_t m = 0;
    double re = 0, im = 0, mag = 0;
    check(expcong_expsum_report_row(report.get(), i, &m, &re, &im, &mag), ctx);
    switch (opt.format) {
      case Format::Json: rows.push_back({{"m", m}, {"S", complex_json(re, im)}, {"abs", mag}}); break;
      case Format::Csv:
        out << m << ',' << fmt_double(re) << ',' << fmt_double(im) << ',' << fmt_double(mag) << ',' << sum.bound
            << "\n";
        break;
      case Format::Plain:
        out << m << ' ' << fmt_double(re) << ' ' << fmt_double(im) << ' ' << fmt_double(mag) << ' ' << sum.bound
            << "\n";
        break;
    }
  }
  if (opt.format == Format::Json) {
    out << record("expsum", {{"n", n}, {"k", k}, {"m_first", m_lo}, {"m_last", m_hi}},
                  {{"bound", sum.bound},
                   {"phi", sum.phi},
                   {"max_ratio", sum.max_ratio},
                   {"worst_m", sum.worst_m},
                   {"all_within", static_cast<bool>(sum.all_within)},
                   {"rows", rows}},
                  "Theorem: weighted exponential sum; Theorem: bound on symbolic exponential sum")
        << "\n";
  } else if (opt.format == Format::Plain) {
    out << "max |S|/bound: " << fmt_double(sum.max_ratio) << " at m=" << sum.worst_m
        << (sum.all_within ? " (within bound)" : " (BOUND EXCEEDED)") << "\n";
  }
  return sum.all_within ? kSuccess : kVerificationFailure;
}

struct LSeriesArgs {
  std::string s, n, k, terms;
  std::optional<uint64_t> euler_cutoff;
  bool completed = false;
};

int cmd_lseries(expcong_context* ctx, const Options& opt, const LSeriesArgs& args, std::ostream& out) {
  const auto [s_re, s_im] = parse_complex(args.s);
  const auto n = parse_integer<uint64_t>(args.n, "n");
  const auto k = parse_integer<uint64_t>(args.k, "k");
  const auto terms = parse_integer<uint64_t>(args.terms, "M");
  expcong_series_sample sample{};
  check(expcong_l_series_partial(ctx, s_re, s_im, n, k, terms, &sample), ctx);

  std::optional<expcong_euler_comparison> euler;
  if (args.euler_cutoff) {
    expcong_euler_comparison c{};
    check(expcong_euler_product_comparison(ctx, s_re, s_im, n, k, *args.euler_cutoff, terms, &c), ctx);
    euler = c;
  }
  std::optional<double> completed;
  if (args.completed) {
    if (s_im != 0.0) throw Failure(kUsageError, "--completed supports real s only");
    double factor = 0;
    check(expcong_gamma_factor(ctx, s_re, &factor), ctx);
    completed = factor * sample.sum_re;
  }

  switch (opt.format) {
    case Format::Json: {
      json result{{"s", complex_json(sample.s_re, sample.s_im)},
                  {"terms", sample.terms},
                  {"partial_sum", complex_json(sample.sum_re, sample.sum_im)},
                  {"tail_bound", sample.tail_bound}};
      if (euler) {
        result["euler_product"] = complex_json(euler->euler_re, euler->euler_im);
        result["euler_cutoff"] = *args.euler_cutoff;
        result["discrepancy"] = euler->discrepancy;
        result["combined_bound"] = euler->combined_bound;
        result["totally_multiplicative"] = static_cast<bool>(euler->totally_multiplicative);
        result["within_bound"] = static_cast<bool>(euler->within_bound);
      }
      if (completed) result["completed"] = *completed;
      json inputs{{"s", complex_json(s_re, s_im)}, {"n", n}, {"k", k}, {"M", terms}};
      out << record("lseries", inputs, result, "Theorem: Dirichlet series representation") << "\n";
      break;
    }
    case Format::Csv: {
      std::vector<std::string> head = {"s_re", "s_im", "terms", "sum_re", "sum_im", "tail_bound"};
      std::vector<std::string> row = {fmt_double(sample.s_re),   fmt_double(sample.s_im),
                                      std::to_string(sample.terms), fmt_double(sample.sum_re),
                                      fmt_double(sample.sum_im), fmt_double(sample.tail_bound)};
      if (euler) {
        head.insert(head.end(), {"euler_re", "euler_im", "discrepancy", "combined_bound", "within_bound"});
        row.insert(row.end(), {fmt_double(euler->euler_re), fmt_double(euler->euler_im), fmt_double(euler->discrepancy),
                               fmt_double(euler->combined_bound), euler->within_bound ? "true" : "false"});
      }
      if (completed) {
        head.emplace_back("completed");
        row.push_back(fmt_double(*completed));
      }
      out << csv_join(head) << "\n" << csv_join(row) << "\n";
      break;
    }
    case Format::Plain:
      out << "partial sum: " << fmt_double(sample.sum_re) << " + " << fmt_double(sample.sum_im) << "i\n";
      out << "tail bound: " << fmt_double(sample.tail_bound) << "\n";
      if (euler) {
        out << "euler product: " << fmt_double(euler->euler_re) << " + " << fmt_double(euler->euler_im) << "i\n";
        out << "discrepancy: " << fmt_double(euler->discrepancy) << " (bound " << fmt_double(euler->combined_bound)
            << (euler->totally_multiplicative ? ", totally multiplicative" : ", chi vanishes on some units") << ")\n";
      }
      if (completed) out << "completed value: " << fmt_double(*completed) << "\n";
      break;
  }
  return kSuccess;
}

struct VerifyArgs {
  bool all = false;
  bool quick = false;
  bool list = false;
  std::vector<std::string> theorems;
};

int cmd_verify(expcong_context* ctx, const Options& opt, const VerifyArgs& args, std::ostream& out,
               std::ostream& err) {
  if (args.list) {
    for (std::size_t i = 0; i < expcong_theorem_count(); ++i) {
      const char* id = nullptr;
      const char* ref = nullptr;
      int expected = 0;
      expcong_theorem_info(i, &id, &ref, &expected);
      out << id << "\t" << ref << (expected ? " [expected failure]" : "") << "\n";
    }
    return kSuccess;
  }
  if (!args.all && args.theorems.empty()) throw Failure(kUsageError, "verify needs --all or --theorem ID");

  std::vector<const char*> ids;
  if (!args.all)
    for (const auto& t : args.theorems) ids.push_back(t.c_str());
  expcong_verify_report* raw = nullptr;
  check(expcong_verify_run(ctx, ids.empty() ? nullptr : ids.data(), ids.size(), args.quick ? 1 : 0, &raw), ctx);
  const VerifyPtr report(raw);

  json theorems = json::array();
  if (opt.format == Format::Csv) out << "id,passed,expected_failure,checks,reference\n";
  const expcong_verify_entry* first_failure = nullptr;
  std::vector<expcong_verify_entry> entries(expcong_verify_report_count(report.get()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    check(expcong_verify_report_entry(report.get(), i, &entries[i]), ctx);
    const auto& e = entries[i];
    if (!e.passed && first_failure == nullptr) first_failure = &entries[i];
    switch (opt.format) {
      case Format::Json:
        theorems.push_back({{"id", e.id},
                            {"reference", e.reference},
                            {"checks", e.checks},
                            {"passed", static_cast<bool>(e.passed)},
                            {"expected_failure", static_cast<bool>(e.expected_failure)},
                            {"detail", e.detail}});
        break;
      case Format::Csv:
        out << e.id << ',' << (e.passed ? "true" : "false") << ',' << (e.expected_failure ? "true" : "false") << ','
            << e.checks << ",\"" << e.reference << "\"\n";
        break;
      case Format::Plain:
        out << (e.passed ? "PASS" : "FAIL") << "  " << e.id << "  [" << e.checks << " checks]  " << e.reference;
        if (e.expected_failure) out << "  (expected counterexample)";
        if (*e.detail) out << "\n      " << e.detail;
        out << "\n";
        break;
    }
  }
  const bool all_passed = expcong_verify_report_all_passed(report.get()) != 0;
  if (opt.format == Format::Json) {
    json inputs{{"all", args.all}, {"quick", args.quick}, {"theorems", args.theorems}};
    out << record("verify", inputs, {{"all_passed", all_passed}, {"theorems", theorems}}, "all theorem suites")
        << "\n";
  }
  if (first_failure) {
    err << "verification failed: " << first_failure->id << ": " << first_failure->detail << "\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_max_n) {
  CLI::App app{"Exponential congruence symbol (a/n)_k: evaluation, partitions, sums and verification", "expcong"};
  app.require_subcommand(1);

  Options opt;
  std::string format = "plain";
  std::optional<uint64_t> max_n;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads (1 gives the reference summation order)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--max-n", max_n, "Enumeration cap (overrides EXPCONG_MAX_N)");

  SymbolArgs symbol_args;
  auto* symbol_cmd = app.add_subcommand("symbol", "Evaluate (a/n)_k");
  symbol_cmd->add_option("a", symbol_args.a)->required();
  symbol_cmd->add_option("n", symbol_args.n)->required();
  symbol_cmd->add_option("k", symbol_args.k)->required();
  symbol_cmd->add_flag("--explain", symbol_args.explain, "Show a^k mod n and the branch taken");

  PartitionArgs partition_args;
  auto* partition_cmd = app.add_subcommand("partition", "List R+1, R-1 and R0 for (n, k)");
  partition_cmd->add_option("n", partition_args.n)->required();
  partition_cmd->add_option("k", partition_args.k)->required();
  partition_cmd->add_flag("--counts", partition_args.counts, "Print class sizes only");

  std::string count_p, count_k;
  auto* count_cmd = app.add_subcommand("count", "Closed-form counts for an odd prime modulus");
  count_cmd->add_option("p", count_p)->required();
  count_cmd->add_option("k", count_k)->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Counts, orthogonality and index-two flags over (n, k) ranges");
  scan_cmd->add_option("n_range", scan_args.n_range, "n or lo..hi")->required();
  scan_cmd->add_option("k_range", scan_args.k_range, "k or lo..hi")->required();
  scan_cmd->add_flag("--primes", scan_args.primes, "Restrict n to odd primes");

  ExpSumArgs expsum_args;
  auto* expsum_cmd = app.add_subcommand("expsum", "Weighted exponential sums S(m)");
  expsum_cmd->add_option("n", expsum_args.n)->required();
  expsum_cmd->add_option("k", expsum_args.k)->required();
  expsum_cmd->add_option("m_range", expsum_args.m_range, "m or lo..hi")->required();

  LSeriesArgs lseries_args;
  auto* lseries_cmd = app.add_subcommand("lseries", "Truncated Dirichlet series of chi_k");
  lseries_cmd->add_option("s", lseries_args.s, "re or re,im with re > 1")->required();
  lseries_cmd->add_option("n", lseries_args.n)->required();
  lseries_cmd->add_option("k", lseries_args.k)->required();
  lseries_cmd->add_option("M", lseries_args.terms, "Number of terms")->required();
  lseries_cmd->add_option("--euler", lseries_args.euler_cutoff, "Compare with the Euler product over p <= P");
  lseries_cmd->add_flag("--completed", lseries_args.completed,
                        "Also print pi^{-s/2} Gamma(s/2) L(s) (real s, exploratory)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_flag("--all", verify_args.all, "Run every suite");
  verify_cmd->add_option("--theorem", verify_args.theorems, "Suite id (repeatable)");
  verify_cmd->add_flag("--quick", verify_args.quick, "Reduced scale");
  verify_cmd->add_flag("--list", verify_args.list, "List suite ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    opt.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Plain);
    if (max_n)
      opt.max_n = *max_n;
    else if (env_max_n && !env_max_n->empty())
      opt.max_n = parse_integer<uint64_t>(*env_max_n, "EXPCONG_MAX_N");

    expcong_context* raw = nullptr;
    if (expcong_context_create(&raw) != EXPCONG_OK) throw Failure(kResourceCap, "cannot allocate context");
    const ContextPtr ctx(raw);
    check(expcong_context_set_jobs(ctx.get(), opt.jobs), ctx.get());
    if (opt.max_n) check(expcong_context_set_max_n(ctx.get(), *opt.max_n), ctx.get());

    if (symbol_cmd->parsed()) return cmd_symbol(ctx.get(), opt, symbol_args, out);
    if (partition_cmd->parsed()) return cmd_partition(ctx.get(), opt, partition_args, out);
    if (count_cmd->parsed()) return cmd_count(ctx.get(), opt, count_p, count_k, out);
    if (scan_cmd->parsed()) return cmd_scan(ctx.get(), opt, scan_args, out, err);
    if (expsum_cmd->parsed()) return cmd_expsum(ctx.get(), opt, expsum_args, out);
    if (lseries_cmd->parsed()) return cmd_lseries(ctx.get(), opt, lseries_args, out);
    if (verify_cmd->parsed()) return cmd_verify(ctx.get(), opt, verify_args, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.what() << "\n";
    return f.code();
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace expcong::cli
