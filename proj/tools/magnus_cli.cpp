// Command-line front end: group-expression evaluation, Magnus-property checks,
// structural invariants, claim verification and raw classification searches.

#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magnus/classify.hpp"
#include "magnus/expr.hpp"
#include "magnus/magnus.hpp"
#include "magnus/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

int run(int argc, char** argv) {
  CLI::App app{"finite group engine for Magnus-property verification"};
  app.require_subcommand(1);

  std::string expr_text, claim_id;
  bool json = false;
  std::uint32_t qmax = 64;
  std::uint32_t search_q = 0;
  int jobs = 0;

  CLI::App* check = app.add_subcommand("check", "MP/SMP verdict for a group expression");
  check->add_option("expr", expr_text, "group expression")->required();
  check->add_flag("--json", json, "machine-readable report");

  CLI::App* invariants =
      app.add_subcommand("invariants", "structural invariants of a group expression");
  invariants->add_option("expr", expr_text, "group expression")->required();
  invariants->add_flag("--json", json, "machine-readable report");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("claim", claim_id, "claim identifier")->required();
  verify->add_option("--qmax", qmax, "classification sweep bound (default 64)");
  verify->add_option("--jobs", jobs, "worker threads (default: library choice)");
  verify->add_flag("--json", json, "machine-readable report");

  CLI::App* search = app.add_subcommand("search", "raw classification search cells");
  CLI::App* gammal1 = search->add_subcommand("gammal1", "one GammaL(1,q) cell");
  gammal1->add_option("--q", search_q, "prime power q")->required();
  gammal1->add_flag("--json", json, "machine-readable report");
  search->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) {
      auto ast = magnus::parse_expr(expr_text);
      std::string canonical = magnus::print_expr(*ast);
      magnus::Group g = magnus::eval_expr(*ast);
      const magnus::MagnusReport& r = magnus::magnus_status(g);
      if (json)
        std::cout << magnus::magnus_report_json(canonical, g, r).dump(1) << "\n";
      else
        std::cout << magnus::magnus_report_text(canonical, g, r);
      return kExitPass;
    }
    if (invariants->parsed()) {
      auto ast = magnus::parse_expr(expr_text);
      std::string canonical = magnus::print_expr(*ast);
      magnus::Group g = magnus::eval_expr(*ast);
      if (json)
        std::cout << magnus::invariants_json(canonical, g).dump(1) << "\n";
      else
        std::cout << magnus::invariants_text(canonical, g);
      return kExitPass;
    }
    if (verify->parsed()) {
      auto ids = magnus::claim_ids();
      if (std::find(ids.begin(), ids.end(), claim_id) == ids.end()) {
        std::cerr << "unknown claim '" << claim_id << "'; known claims:\n";
        for (const auto& id : ids) std::cerr << "  " << id << "\n";
        return kExitUsage;
      }
      magnus::VerifyOptions opt;
      opt.qmax = qmax;
      opt.jobs = jobs;
      magnus::ClaimReport rep = magnus::verify_claim(claim_id, opt);
      if (json)
        std::cout << magnus::claim_report_json(rep).dump(1) << "\n";
      else
        std::cout << magnus::claim_report_text(rep);
      switch (rep.status) {
        case magnus::ClaimReport::Status::pass: return kExitPass;
        case magnus::ClaimReport::Status::fail: return kExitClaimFailed;
        case magnus::ClaimReport::Status::inconclusive: return kExitResourceCap;
      }
    }
    if (gammal1->parsed()) {
      auto rows = magnus::gammal1_search(search_q);
      if (json)
        std::cout << magnus::search_rows_json(search_q, rows).dump(1) << "\n";
      else
        std::cout << magnus::search_rows_text(search_q, rows);
      return kExitPass;
    }
  } catch (const magnus::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.resource_cap()) return kExitResourceCap;
    switch (e.code()) {
      case magnus::errc::syntax_error:
      case magnus::errc::arity_error:
      case magnus::errc::unknown_atom:
      case magnus::errc::bad_parameter:
      case magnus::errc::io_error:
      case magnus::errc::not_prime_power:
        return kExitUsage;
      default:
        return kExitClaimFailed;
    }
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
