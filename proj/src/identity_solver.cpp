#include "nilid/identity_solver.hpp"

#include <algorithm>  // for sort, is_sorted
#include <numeric>    // for iota
#include <string>     // for to_string

#include "nilid/errors.hpp"
#include "nilid/exact_lp.hpp"
#include "nilid/expression.hpp"

namespace nilid {

  void ProblemInstance::validate() const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i].dim() != n) {
        throw DimensionError("generator " + std::to_string(i) + " is "
                             + std::to_string(generators[i].dim()) + "x"
                             + std::to_string(generators[i].dim())
                             + ", expected " + std::to_string(n));
      }
    }
  }

  SolveOutcome find_invertible_subset(ProblemInstance const& inst) {
    inst.validate();
    SolveOutcome out;
    out.bundle.generator_count = inst.generators.size();
    std::vector<std::size_t> indices(inst.generators.size());
    std::iota(indices.begin(), indices.end(), std::size_t(0));

    while (!indices.empty()) {
      RoundCertificate round;
      round.indices   = indices;
      round.relations = subgroup_relations(inst.generators, indices);
      round.matrix    = exponent_matrix(round.relations, indices);
      auto lp         = solve_maximal_support(round.matrix);
      if (auto* inf = std::get_if<Infeasible>(&lp)) {
        round.outcome = Terminal{std::move(inf->u)};
        out.bundle.rounds.push_back(std::move(round));
        out.invertible = indices;
        break;
      }
      auto&                    v = std::get<Feasible>(lp).v;
      std::vector<std::size_t> next;
      for (std::size_t c = 0; c < indices.size(); ++c) {
        if (v[c] == 0) {
          next.push_back(indices[c]);
        }
      }
      round.outcome = Removal{std::move(v)};
      out.bundle.rounds.push_back(std::move(round));
      indices = std::move(next);
    }
    out.bundle.result = out.invertible;
    return out;
  }

  bool decide_identity(ProblemInstance const& inst) {
    return !find_invertible_subset(inst).invertible.empty();
  }

  char const* verify_code_name(VerifyCode c) noexcept {
    switch (c) {
      case VerifyCode::ok:
        return "ok";
      case VerifyCode::generator_count_mismatch:
        return "generator_count_mismatch";
      case VerifyCode::bad_first_round:
        return "bad_first_round";
      case VerifyCode::bad_indices:
        return "bad_indices";
      case VerifyCode::relation_uses_foreign_generator:
        return "relation_uses_foreign_generator";
      case VerifyCode::relation_not_identity:
        return "relation_not_identity";
      case VerifyCode::matrix_mismatch:
        return "matrix_mismatch";
      case VerifyCode::removal_not_feasible:
        return "removal_not_feasible";
      case VerifyCode::removal_bookkeeping:
        return "removal_bookkeeping";
      case VerifyCode::terminal_not_farkas:
        return "terminal_not_farkas";
      case VerifyCode::terminal_not_last:
        return "terminal_not_last";
      case VerifyCode::result_mismatch:
        return "result_mismatch";
      case VerifyCode::claimed_mismatch:
        return "claimed_mismatch";
      case VerifyCode::malformed:
        return "malformed";
    }
    return "unknown";
  }

  namespace {

    VerifyReport fail(VerifyCode code, std::size_t round, std::string detail) {
      return {code, round, std::move(detail)};
    }

    VerifyReport check_round(ProblemInstance const&  inst,
                             RoundCertificate const& rc, std::size_t k) {
      auto const& rels = rc.relations;
      for (auto r : rels.relations) {
        if (r >= rels.pool.size()) {
          return fail(VerifyCode::malformed, k,
                      "relation refers to missing node " + std::to_string(r));
        }
        for (auto g : rels.pool.generators_used(r)) {
          if (!std::binary_search(rc.indices.begin(), rc.indices.end(), g)) {
            return fail(VerifyCode::relation_uses_foreign_generator, k,
                        "relation uses generator " + std::to_string(g));
          }
        }
      }
      ExprEvaluator eval(rels.pool, inst.generators, inst.n);
      for (std::size_t r = 0; r < rels.relations.size(); ++r) {
        if (!eval.value(rels.relations[r]).is_identity()) {
          return fail(VerifyCode::relation_not_identity, k,
                      "relation " + std::to_string(r)
                          + " does not evaluate to the identity");
        }
      }
      ExponentMatrix expected = exponent_matrix(rels, rc.indices);
      if (!(expected == rc.matrix)) {
        return fail(VerifyCode::matrix_mismatch, k,
                    "M is not the signed-occurrence matrix of the relations");
      }
      return {};
    }

  }  // namespace

  VerifyReport verify_bundle(ProblemInstance const&          inst,
                             CertificateBundle const&        bundle,
                             std::vector<std::size_t> const& claimed) {
    try {
      inst.validate();
      if (bundle.generator_count != inst.generators.size()) {
        return fail(VerifyCode::generator_count_mismatch, 0,
                    "bundle is for " + std::to_string(bundle.generator_count)
                        + " generators, instance has "
                        + std::to_string(inst.generators.size()));
      }
      std::vector<std::size_t> expected(inst.generators.size());
      std::iota(expected.begin(), expected.end(), std::size_t(0));
      if (!expected.empty() && bundle.rounds.empty()) {
        return fail(VerifyCode::bad_first_round, 0, "no rounds recorded");
      }
      std::vector<std::size_t> final_indices;
      for (std::size_t k = 0; k < bundle.rounds.size(); ++k) {
        auto const& rc = bundle.rounds[k];
        if (expected.empty()) {
          return fail(VerifyCode::removal_bookkeeping, k,
                      "round recorded after the index set became empty");
        }
        if (rc.indices != expected) {
          return fail(k == 0 ? VerifyCode::bad_first_round
                             : VerifyCode::bad_indices,
                      k, "index set does not follow from the previous round");
        }
        if (auto r = check_round(inst, rc, k); !r.ok()) {
          return r;
        }
        if (auto const* t = std::get_if<Terminal>(&rc.outcome)) {
          if (t->u.size() != rc.matrix.rows()
              || !verify_farkas(rc.matrix, t->u)) {
            return fail(VerifyCode::terminal_not_farkas, k,
                        "u does not satisfy M^t u >= 1");
          }
          if (k + 1 != bundle.rounds.size()) {
            return fail(VerifyCode::terminal_not_last, k,
                        "terminal round is not the last one");
          }
          final_indices = rc.indices;
          expected.clear();
          continue;
        }
        auto const& v = std::get<Removal>(rc.outcome).v;
        if (v.size() != rc.matrix.cols() || !verify_feasible(rc.matrix, v)) {
          return fail(VerifyCode::removal_not_feasible, k,
                      "v is not a point of {Mv = 0, sum v = 1, v >= 0}");
        }
        std::vector<std::size_t> next;
        for (std::size_t c = 0; c < v.size(); ++c) {
          if (v[c] == 0) {
            next.push_back(rc.indices[c]);
          }
        }
        expected = std::move(next);
        final_indices.clear();
      }
      if (!expected.empty()) {
        return fail(VerifyCode::removal_bookkeeping, bundle.rounds.size(),
                    "bundle stops before the index set is settled");
      }
      if (bundle.result != final_indices) {
        return fail(VerifyCode::result_mismatch, bundle.rounds.size(),
                    "recorded result differs from the certified index set");
      }
      if (claimed != final_indices) {
        return fail(VerifyCode::claimed_mismatch, bundle.rounds.size(),
                    "claimed result differs from the certified index set");
      }
      return {};
    } catch (std::exception const& e) {
      return fail(VerifyCode::malformed, 0, e.what());
    }
  }

}  // namespace nilid
