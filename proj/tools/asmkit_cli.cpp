// asmkit command-line front end: enumerate, count, check, eval.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asmkit/combinatorics.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/expansion.hpp"
#include "asmkit/kernels.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/text.hpp"
#include "asmkit/verify.hpp"

namespace {

using namespace asmkit;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Writes to the --output file when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file " + path);
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string asm_line(const Asm& a) {
  std::string s = a.to_string();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& c : s)
    if (c == '\n') c = '/';
  return s;
}

/// Trapezoid width: --k when given, the full triangle otherwise.
int resolve_k(const std::string& family, int n, const std::optional<int>& k) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (family == "asm") {
    if (k && *k != n) throw UsageError("asm takes no --k other than n");
    return n;
  }
  int kk = k.value_or(n);
  if (kk < 1 || kk > n) throw UsageError("shape needs n >= k >= 1");
  return kk;
}

Integer count_by(const std::string& family, int k, int n, const std::string& method) {
  bool magog = family == "magog";
  if (method == "brute") {
    if (family == "asm") return count_asm(n);
    return magog ? count_magog(k, n) : count_gog(k, n);
  }
  if (method == "ct") {
    if (k > kMaxVars) throw UsageError("the ct method supports k <= " + std::to_string(kMaxVars));
    RationalFunction f = magog ? magog_total(k, n) : gog_total(k, n);
    std::vector<int> order = natural_order(k);
    Rational v = is_admissible(f) ? ct_fast(f, order) : ct_iterated(f, order);
    if (v.get_den() != 1) throw std::logic_error("non-integral constant term");
    return v.get_num();
  }
  if (magog) {
    DiscreteTable x = tabulate_X(k, n);
    Integer total = 0;
    for (const auto& a : land_of_magog_points(k, n)) total += x.at(n, a);
    return total;
  }
  // Gog trapezoids of height n are the points below (n, ..., n) one row further down
  DiscreteTable y = tabulate_Y(k, n + 1);
  return y.at(n + 1, std::vector<int>(static_cast<std::size_t>(k), n));
}

/// "x1,x3,x2" -> {0, 2, 1}.
std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || item[0] != 'x') throw UsageError("order entries look like x1,x2");
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item.substr(1), &used);
      if (used != item.size() - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad order entry " + item);
    }
    if (v < 1 || v > kMaxVars) throw UsageError("order variable out of range: " + item);
    order.push_back(v - 1);
  }
  return order;
}

std::string read_expression(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_signs(const std::vector<std::string>& items) {
  std::vector<int> eps;
  for (const auto& s : items) {
    if (s == "+" || s == "1" || s == "+1")
      eps.push_back(1);
    else if (s == "-" || s == "-1")
      eps.push_back(-1);
    else
      throw UsageError("eps entries are + or -");
  }
  return eps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration, constant terms and identity checks for ASM counting"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write results to this file instead of stdout");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List asm, gog or magog objects, or count them");
  std::string en_family, en_format = "text";
  int en_n = 0;
  std::optional<int> en_k;
  en->add_option("family", en_family, "asm, gog or magog")->required()->check(CLI::IsMember({"asm", "gog", "magog"}));
  en->add_option("--n", en_n, "Size n")->required();
  en->add_option("--k", en_k, "Trapezoid width k (default n)");
  en->add_option("--format", en_format, "text or count")->check(CLI::IsMember({"text", "count"}));

  // count
  auto* co = app.add_subcommand("count", "Count objects by brute force, constant term or recurrence");
  std::string co_family, co_method = "brute";
  int co_n = 0;
  std::optional<int> co_k;
  co->add_option("family", co_family, "asm, gog or magog")->required()->check(CLI::IsMember({"asm", "gog", "magog"}));
  co->add_option("--n", co_n, "Size n")->required();
  co->add_option("--k", co_k, "Trapezoid width k (default n)");
  co->add_option("--method", co_method, "brute, ct or recurrence")
      ->check(CLI::IsMember({"brute", "ct", "recurrence"}));

  // check
  auto* ch = app.add_subcommand("check", "Run one registered check, or all of them");
  std::string ch_id, ch_format = "human", ch_filter = "*";
  std::optional<int> ch_k, ch_n, ch_R, ch_i;
  std::vector<int> ch_a;
  std::vector<std::string> ch_eps;
  int ch_max_k = 4, ch_max_n = 5;
  unsigned ch_threads = 1;
  bool ch_heavy = false, ch_corrupt = false, ch_timings = false, ch_list = false;
  ch->add_option("id", ch_id, "Check id, or all");
  ch->add_option("--k", ch_k, "Parameter k");
  ch->add_option("--n", ch_n, "Parameter n");
  ch->add_option("--R", ch_R, "Parameter R (one-based)");
  ch->add_option("--i", ch_i, "Parameter i (one-based)");
  ch->add_option("--a", ch_a, "Border vector a, comma separated")->delimiter(',');
  ch->add_option("--eps", ch_eps, "Signs, comma separated + and -")->delimiter(',');
  ch->add_option("--max-k", ch_max_k, "Upper bound on k for default grids");
  ch->add_option("--max-n", ch_max_n, "Upper bound on n for default grids");
  ch->add_option("--filter", ch_filter, "Shell pattern on ids for check all");
  ch->add_option("--format", ch_format, "human or jsonl")->check(CLI::IsMember({"human", "jsonl"}));
  ch->add_option("--threads", ch_threads, "Worker threads");
  ch->add_flag("--heavy", ch_heavy, "Include the k = 3 residue checks");
  ch->add_flag("--timings", ch_timings, "Show elapsed milliseconds in the human table");
  ch->add_flag("--corrupt-phi", ch_corrupt, "Mutation hook: perturb Phi_k");
  ch->add_flag("--list", ch_list, "List registered ids and exit");

  // eval
  auto* ev = app.add_subcommand("eval", "Constant term or iterated residue of a rational function");
  std::string ev_input, ev_mode = "ct", ev_order;
  ev->add_option("input", ev_input, "Expression, or a file holding one")->required();
  ev->add_option("--mode", ev_mode, "ct or res")->check(CLI::IsMember({"ct", "res"}));
  ev->add_option("--order", ev_order, "Variable order, e.g. x1,x2; the last is extracted first");

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
    Sink sink(output);
    std::ostream& out = sink.out();

    if (*en) {
      int k = resolve_k(en_family, en_n, en_k);
      if (en_format == "count") {
        out << count_by(en_family, k, en_n, "brute").get_str() << "\n";
      } else if (en_family == "asm") {
        for_each_asm(en_n, [&](const Asm& a) {
          out << asm_line(a) << "\n";
          return true;
        });
      } else {
        auto print = [&](const GelfandArray& g) {
          out << g.to_string() << "\n";
          return true;
        };
        if (en_family == "gog")
          for_each_gog(k, en_n, print);
        else
          for_each_magog(k, en_n, print);
      }
      return kExitOk;
    }

    if (*co) {
      int k = resolve_k(co_family, co_n, co_k);
      out << count_by(co_family, k, co_n, co_method).get_str() << "\n";
      return kExitOk;
    }

    if (*ch) {
      if (ch_list) {
        for (const auto& info : registered_checks()) {
          std::string params;
          for (const auto& p : info.params) params += (params.empty() ? "" : ",") + p;
          out << info.id << "(" << params << "): " << info.summary << "\n";
        }
        return kExitOk;
      }
      if (ch_id.empty()) throw UsageError("check needs an id or all");
      VerifyOptions opts;
      opts.heavy = ch_heavy;
      opts.corrupt_phi = ch_corrupt;
      opts.threads = std::max(1u, ch_threads);
      std::vector<CheckResult> results;
      if (ch_id == "all") {
        if (ch_max_k < 1 || ch_max_n < 1) throw UsageError("bounds must be at least 1");
        results = run_all(ch_max_k, ch_max_n, ch_filter, opts);
      } else {
        check_info(ch_id);
        CheckParams p;
        p.k = ch_k;
        p.n = ch_n;
        p.R = ch_R;
        p.i = ch_i;
        p.a = ch_a;
        p.eps = parse_signs(ch_eps);
        if (p == CheckParams{} && !check_info(ch_id).params.empty()) {
          for (const auto& q : default_grid(ch_id, ch_max_k, ch_max_n, ch_heavy))
            results.push_back(run_check(ch_id, q, opts));
        } else {
          results.push_back(run_check(ch_id, p, opts));
        }
      }
      if (ch_format == "jsonl")
        for (const auto& r : results) out << format_record(r) << "\n";
      else
        out << format_human(results, ch_timings);
      bool failed = std::any_of(results.begin(), results.end(),
                                [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
      return failed ? kExitFail : kExitOk;
    }

    if (*ev) {
      RationalFunction f = parse_rational_function(read_expression(ev_input));
      std::vector<int> order;
      if (!ev_order.empty()) {
        order = parse_order(ev_order);
      } else {
        int top = 0;
        for (int v = 0; v < kMaxVars; ++v)
          if (f.uses_var(v)) top = v + 1;
        order = natural_order(std::max(top, 1));
      }
      Rational v;
      if (ev_mode == "res")
        v = res_iterated(f, order);
      else
        v = is_admissible(f) ? ct_fast(f, order) : ct_iterated(f, order);
      out << to_string(v) << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RegistryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}
