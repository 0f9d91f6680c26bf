#include "nilid/cli.hpp"

#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for ostream
#include <sstream>   // for stringstream
#include <string>    // for string

#include <CLI11.hpp>

#include "nilid/errors.hpp"
#include "nilid/exact_lp.hpp"
#include "nilid/identity_solver.hpp"
#include "nilid/oracle.hpp"
#include "nilid/serialization.hpp"
#include "nilid/subgroup.hpp"

namespace nilid::cli {

  using nlohmann::json;

  namespace {

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw io::InputError("cannot read " + path);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << text)) {
        throw io::InputError("cannot write " + path);
      }
    }

    struct Loaded {
      io::InstanceFile file;
      ProblemInstance  problem;
    };

    Loaded load_instance(std::string const& path, std::size_t max_n) {
      std::string text = read_file(path);
      try {
        auto file = io::parse_instance(text);
        if (file.n > max_n) {
          throw io::InputError("/n: dimension " + std::to_string(file.n)
                               + " exceeds --max-n " + std::to_string(max_n));
        }
        auto problem = io::to_problem(file);
        return {std::move(file), std::move(problem)};
      } catch (io::InputError const& e) {
        throw io::InputError(path + ": " + e.what());
      }
    }

    void emit(std::string const& out_path, std::ostream& out,
              std::string const& text) {
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
    }

    struct SolveArgs {
      std::string input, certificates, out;
      std::size_t max_n = 12;
    };

    int cmd_solve(SolveArgs const& a, std::ostream& out) {
      auto loaded  = load_instance(a.input, a.max_n);
      auto outcome = find_invertible_subset(loaded.problem);
      if (!a.certificates.empty()) {
        write_file(a.certificates, io::dump(io::bundle_to_json(outcome.bundle)));
      }
      emit(a.out, out, io::dump(io::result_document(outcome)));
      return outcome.invertible.empty() ? kNotReachable : kReachable;
    }

    struct VerifyArgs {
      std::string input, certificates, claimed, out;
      std::size_t max_n = 12;
    };

    int cmd_verify(VerifyArgs const& a, std::ostream& out) {
      auto        loaded = load_instance(a.input, a.max_n);
      std::string cert_text = read_file(a.certificates);
      CertificateBundle bundle;
      try {
        bundle = io::bundle_from_json(io::parse_json(cert_text));
      } catch (io::InputError const& e) {
        throw io::InputError(a.certificates + ": " + e.what());
      }
      std::vector<std::size_t> claimed;
      try {
        claimed = io::parse_claimed(read_file(a.claimed));
      } catch (io::InputError const& e) {
        throw io::InputError(a.claimed + ": " + e.what());
      }
      auto report = verify_bundle(loaded.problem, bundle, claimed);
      json doc    = {{"verified", report.ok()},
                     {"code", verify_code_name(report.code)}};
      if (!report.ok()) {
        doc["round"]  = report.round;
        doc["detail"] = report.detail;
      }
      emit(a.out, out, io::dump(doc));
      return report.ok() ? kReachable : kCertificateFail;
    }

    struct OracleArgs {
      std::string input, mode = "reach", out;
      std::size_t depth        = 4;
      std::size_t max_n        = 12;
      std::size_t max_elements = oracle::kDefaultMaxElements;
    };

    json word_json(GenWord const& w) {
      json word = json::array();
      for (auto const& l : w.letters) {
        word.push_back({l.generator, to_string(l.exponent)});
      }
      return word;
    }

    int cmd_oracle(OracleArgs const& a, std::ostream& out) {
      if (a.depth < 1) {
        throw io::InputError("--depth must be at least 1");
      }
      if (a.mode == "lp") {
        json           doc = io::parse_json(read_file(a.input));
        ExponentMatrix m;
        if (doc.is_object() && doc.contains("exponent_matrix")) {
          try {
            auto const& em = doc["exponent_matrix"];
            if (em.is_array()) {
              std::vector<std::vector<Integer>> rows;
              for (auto const& row : em) {
                rows.emplace_back();
                for (auto const& x : row) {
                  rows.back().push_back(parse_integer(
                      x.is_string() ? x.get<std::string>() : x.dump()));
                }
              }
              std::size_t cols = rows.empty() ? 0 : rows.front().size();
              m = ExponentMatrix::from_rows(std::move(rows), cols);
            } else {
              m = io::matrix_from_json(em, "/exponent_matrix");
            }
          } catch (std::exception const& e) {
            throw io::InputError(a.input + ": /exponent_matrix: " + e.what());
          }
        } else {
          auto loaded = load_instance(a.input, a.max_n);
          if (loaded.problem.generators.empty()) {
            m = ExponentMatrix(0, {});
          } else {
            std::vector<std::size_t> idx(loaded.problem.generators.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
              idx[i] = i;
            }
            m = exponent_matrix(subgroup_relations(loaded.problem.generators, idx),
                                idx);
          }
        }
        bool simplex = std::holds_alternative<Feasible>(solve_feasibility(m));
        bool fm      = oracle::fourier_motzkin_feasible(m);
        json doc_out = {{"mode", "lp"},
                        {"simplex", simplex ? "feasible" : "infeasible"},
                        {"fourier_motzkin", fm ? "feasible" : "infeasible"},
                        {"agree", simplex == fm}};
        emit(a.out, out, io::dump(doc_out));
        return simplex == fm ? kReachable : kCertificateFail;
      }
      auto loaded = load_instance(a.input, a.max_n);
      auto const& gens = loaded.problem.generators;
      if (a.mode == "reach") {
        json sizes = json::array();
        if (!gens.empty()) {
          auto reach = oracle::bfs_products(gens, a.depth, a.max_elements);
          for (auto s : reach.sizes()) {
            sizes.push_back(s);
          }
        }
        emit(a.out, out,
             io::dump({{"mode", "reach"}, {"depth", a.depth}, {"sizes", sizes}}));
        return kReachable;
      }
      if (a.mode == "witness") {
        json witnesses = json::array();
        if (!gens.empty()) {
          auto reach = oracle::bfs_products(gens, a.depth, a.max_elements);
          for (std::size_t i = 0; i < gens.size(); ++i) {
            auto w = reach.witness(inverse(gens[i]));
            if (w) {
              witnesses.push_back({{"generator", i}, {"word", word_json(*w)}});
            } else {
              witnesses.push_back({{"generator", i}, {"inconclusive", true}});
            }
          }
        }
        emit(a.out, out,
             io::dump({{"mode", "witness"}, {"depth", a.depth},
                       {"witnesses", witnesses}}));
        return kReachable;
      }
      throw io::InputError("--mode must be reach, witness or lp");
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Identity problem and A_inv for finite subsets of UT(n, Z)",
                 "nilid"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto*     s = app.add_subcommand("solve", "compute A_inv and decide the "
                                              "identity problem");
    s->add_option("input", solve.input, "instance file")->required();
    s->add_option("--certificates", solve.certificates,
                  "write the certificate bundle here");
    s->add_option("--out", solve.out, "write the result here instead of stdout");
    s->add_option("--max-n", solve.max_n, "largest accepted dimension");

    VerifyArgs verify;
    auto*      v = app.add_subcommand("verify", "re-check a certificate bundle");
    v->add_option("input", verify.input, "instance file")->required();
    v->add_option("certificates", verify.certificates, "bundle from solve")
        ->required();
    v->add_option("claimed", verify.claimed, "result document from solve")
        ->required();
    v->add_option("--out", verify.out, "write the report here instead of stdout");
    v->add_option("--max-n", verify.max_n, "largest accepted dimension");

    OracleArgs orc;
    auto*      o = app.add_subcommand("oracle", "brute-force cross-checks");
    o->add_option("input", orc.input, "instance file (or matrix file for lp)")
        ->required();
    o->add_option("--depth", orc.depth, "search depth");
    o->add_option("--mode", orc.mode, "reach, witness or lp")
        ->check(CLI::IsMember({"reach", "witness", "lp"}));
    o->add_option("--max-elements", orc.max_elements, "BFS element budget");
    o->add_option("--out", orc.out, "write the report here instead of stdout");
    o->add_option("--max-n", orc.max_n, "largest accepted dimension");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : kInputError;
    }

    try {
      if (*s) {
        return cmd_solve(solve, out);
      }
      if (*v) {
        return cmd_verify(verify, out);
      }
      return cmd_oracle(orc, out);
    } catch (io::InputError const& e) {
      err << "nilid: " << e.what() << "\n";
      return kInputError;
    } catch (ResourceError const& e) {
      err << "nilid: resource limit: " << e.what() << "\n";
      return kResourceLimit;
    } catch (std::exception const& e) {
      err << "nilid: " << e.what() << "\n";
      return kInputError;
    }
  }

}  // namespace nilid::cli
