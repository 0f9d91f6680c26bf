#include "nilid/expression.hpp"

#include <algorithm>  // for sort, unique
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string

#include "nilid/errors.hpp"

namespace nilid {

  namespace {
    // Children with at most this many factors are spliced into a parent that
    // uses them to the first power, so that cancellations across the seam
    // are seen by append_reduced.
    constexpr std::size_t kSpliceLimit = 4;
  }  // namespace

  ExprPool::ExprPool() : nodes_(1) {}

  ExprPool ExprPool::from_nodes(std::vector<std::vector<ExprFactor>> nodes) {
    if (nodes.empty() || !nodes.front().empty()) {
      throw std::invalid_argument("expression node 0 must be the empty product");
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      for (auto const& f : nodes[k]) {
        if (f.exponent == 0) {
          throw std::invalid_argument("expression node " + std::to_string(k)
                                      + " has a zero exponent");
        }
        if (f.base.kind == ExprBase::Kind::node && f.base.id >= k) {
          throw std::invalid_argument("expression node " + std::to_string(k)
                                      + " references node "
                                      + std::to_string(f.base.id));
        }
      }
    }
    ExprPool pool;
    pool.nodes_ = std::move(nodes);
    return pool;
  }

  NodeId ExprPool::push(std::vector<ExprFactor> node) {
    if (node.empty()) {
      return empty_node();
    }
    if (node.size() == 1 && node.front().exponent == 1
        && node.front().base.kind == ExprBase::Kind::node) {
      return static_cast<NodeId>(node.front().base.id);
    }
    nodes_.push_back(std::move(node));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  void ExprPool::append_reduced(std::vector<ExprFactor>& out,
                                ExprFactor                f) const {
    if (f.exponent == 0) {
      return;
    }
    if (f.base.kind == ExprBase::Kind::node) {
      auto const& child = nodes_.at(f.base.id);
      if (child.empty()) {
        return;
      }
      if (child.size() == 1) {
        append_reduced(out, {child.front().base, child.front().exponent * f.exponent});
        return;
      }
      if (child.size() <= kSpliceLimit && (f.exponent == 1 || f.exponent == -1)) {
        if (f.exponent == 1) {
          for (auto const& c : child) {
            append_reduced(out, c);
          }
        } else {
          for (auto it = child.rbegin(); it != child.rend(); ++it) {
            append_reduced(out, {it->base, -it->exponent});
          }
        }
        return;
      }
    }
    if (!out.empty() && out.back().base == f.base) {
      out.back().exponent += f.exponent;
      if (out.back().exponent == 0) {
        out.pop_back();
      }
      return;
    }
    out.push_back(std::move(f));
  }

  NodeId ExprPool::generator(std::size_t g) {
    return push({ExprFactor{{ExprBase::Kind::generator, g}, Integer(1)}});
  }

  NodeId ExprPool::word(GenWord const& w) {
    std::vector<ExprFactor> node;
    for (auto const& l : w.letters) {
      append_reduced(node, {{ExprBase::Kind::generator, l.generator}, l.exponent});
    }
    return push(std::move(node));
  }

  NodeId ExprPool::power(NodeId x, Integer const& k) {
    std::vector<ExprFactor> node;
    append_reduced(node, {{ExprBase::Kind::node, x}, k});
    return push(std::move(node));
  }

  NodeId ExprPool::product(
      std::initializer_list<std::pair<NodeId, Integer>> parts) {
    std::vector<ExprFactor> node;
    for (auto const& [x, k] : parts) {
      append_reduced(node, {{ExprBase::Kind::node, x}, k});
    }
    return push(std::move(node));
  }

  NodeId ExprPool::product(std::span<ExprFactor const> factors) {
    std::vector<ExprFactor> node;
    for (auto const& f : factors) {
      if (f.base.kind == ExprBase::Kind::node && f.base.id >= nodes_.size()) {
        throw IndexError("expression node " + std::to_string(f.base.id)
                         + " does not exist");
      }
      append_reduced(node, f);
    }
    return push(std::move(node));
  }

  namespace {
    std::vector<bool> reachable(std::vector<std::vector<ExprFactor>> const& nodes,
                                std::vector<NodeId> const& roots) {
      std::vector<bool> mark(nodes.size(), false);
      for (auto r : roots) {
        mark.at(r) = true;
      }
      for (std::size_t k = nodes.size(); k-- > 0;) {
        if (!mark[k]) {
          continue;
        }
        for (auto const& f : nodes[k]) {
          if (f.base.kind == ExprBase::Kind::node) {
            mark[f.base.id] = true;
          }
        }
      }
      return mark;
    }
  }  // namespace

  ExprPool ExprPool::extract(std::vector<NodeId>& roots) const {
    auto                mark = reachable(nodes_, roots);
    std::vector<NodeId> remap(nodes_.size(), 0);
    ExprPool            out;
    for (std::size_t k = 1; k < nodes_.size(); ++k) {
      if (!mark[k]) {
        continue;
      }
      std::vector<ExprFactor> node = nodes_[k];
      for (auto& f : node) {
        if (f.base.kind == ExprBase::Kind::node) {
          f.base.id = remap[f.base.id];
        }
      }
      out.nodes_.push_back(std::move(node));
      remap[k] = static_cast<NodeId>(out.nodes_.size() - 1);
    }
    for (auto& r : roots) {
      r = remap[r];
    }
    return out;
  }

  std::vector<std::size_t> ExprPool::generators_used(NodeId x) const {
    auto                     mark = reachable(nodes_, {x});
    std::vector<std::size_t> gens;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!mark[k]) {
        continue;
      }
      for (auto const& f : nodes_[k]) {
        if (f.base.kind == ExprBase::Kind::generator) {
          gens.push_back(f.base.id);
        }
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }

  GenWord ExprPool::expand(NodeId x, std::size_t max_letters) const {
    // Expanded letter counts first, so the guard fires before any work.
    std::vector<Integer> length(x + 1);
    for (std::size_t k = 0; k <= x; ++k) {
      for (auto const& f : nodes_.at(k)) {
        Integer base_len = f.base.kind == ExprBase::Kind::generator
                               ? Integer(1)
                               : length[f.base.id];
        length[k] += base_len * abs(f.exponent);
      }
    }
    if (length[x] > max_letters) {
      throw ResourceError("expanding expression node " + std::to_string(x)
                          + " needs " + to_string(length[x]) + " letters");
    }
    std::vector<GenWord> memo(x + 1);
    std::vector<bool>    done(x + 1, false);
    auto                 mark = reachable(nodes_, {x});
    for (std::size_t k = 0; k <= x; ++k) {
      if (!mark[k]) {
        continue;
      }
      GenWord w;
      for (auto const& f : nodes_[k]) {
        if (f.base.kind == ExprBase::Kind::generator) {
          w.letters.push_back({f.base.id, f.exponent});
          continue;
        }
        GenWord const& child = memo[f.base.id];
        GenWord        piece = f.exponent < 0 ? word_inverse(child) : child;
        for (Integer i = 0; i < abs(f.exponent); ++i) {
          w.letters.insert(w.letters.end(), piece.letters.begin(),
                           piece.letters.end());
        }
      }
      memo[k] = free_reduce(w);
    }
    return memo[x];
  }

  ExprEvaluator::ExprEvaluator(ExprPool const&           pool,
                               std::span<MatrixUT const> gens,
                               std::size_t               n)
      : pool_(&pool), gens_(gens), n_(n), memo_(pool.size()) {
    for (auto const& g : gens_) {
      if (g.dim() != n_) {
        throw DimensionError("generators do not share dimension "
                             + std::to_string(n_));
      }
    }
  }

  MatrixUT const& ExprEvaluator::value(NodeId x) {
    if (x >= pool_->size()) {
      throw IndexError("expression node " + std::to_string(x)
                       + " does not exist");
    }
    // The pool may have grown since construction.
    memo_.resize(pool_->size());
    if (memo_[x]) {
      return *memo_[x];
    }
    // Children have smaller ids; fill everything needed bottom-up.
    std::vector<NodeId> stack{x};
    std::vector<NodeId> order;
    std::vector<bool>   seen(memo_.size(), false);
    while (!stack.empty()) {
      NodeId k = stack.back();
      stack.pop_back();
      if (seen[k] || memo_[k]) {
        continue;
      }
      seen[k] = true;
      order.push_back(k);
      for (auto const& f : pool_->factors(k)) {
        if (f.base.kind == ExprBase::Kind::node) {
          stack.push_back(static_cast<NodeId>(f.base.id));
        } else if (f.base.id >= gens_.size()) {
          throw IndexError("expression uses generator "
                           + std::to_string(f.base.id) + " but only "
                           + std::to_string(gens_.size()) + " are given");
        }
      }
    }
    std::sort(order.begin(), order.end());
    for (NodeId k : order) {
      MatrixUT acc(n_);
      for (auto const& f : pool_->factors(k)) {
        MatrixUT const& b = f.base.kind == ExprBase::Kind::generator
                                ? gens_[f.base.id]
                                : *memo_[f.base.id];
        acc = mul(acc, power(b, f.exponent));
      }
      memo_[k] = std::move(acc);
    }
    return *memo_[x];
  }

  ExponentSums::ExponentSums(ExprPool const& pool, std::size_t generator_count)
      : pool_(&pool), count_(generator_count), memo_(pool.size()) {}

  std::vector<Integer> const& ExponentSums::of(NodeId x) {
    if (x >= pool_->size()) {
      throw IndexError("expression node " + std::to_string(x)
                       + " does not exist");
    }
    // The pool may have grown since construction.
    memo_.resize(pool_->size());
    if (memo_[x]) {
      return *memo_[x];
    }
    for (std::size_t k = 0; k <= x; ++k) {
      if (memo_[k]) {
        continue;
      }
      std::vector<Integer> sums(count_);
      for (auto const& f : pool_->factors(static_cast<NodeId>(k))) {
        if (f.base.kind == ExprBase::Kind::generator) {
          if (f.base.id >= count_) {
            throw IndexError("expression uses generator "
                             + std::to_string(f.base.id) + " outside [0, "
                             + std::to_string(count_) + ")");
          }
          sums[f.base.id] += f.exponent;
        } else {
          auto const& child = *memo_[f.base.id];
          for (std::size_t g = 0; g < count_; ++g) {
            if (child[g] != 0) {
              mpz_addmul(sums[g].get_mpz_t(), child[g].get_mpz_t(),
                         f.exponent.get_mpz_t());
            }
          }
        }
      }
      memo_[k] = std::move(sums);
    }
    return *memo_[x];
  }

}  // namespace nilid
