#include "nilid/subgroup.hpp"

#include <algorithm>  // for sort, adjacent_find
#include <deque>      // for deque
#include <stdexcept>  // for invalid_argument, logic_error
#include <string>     // for to_string

#include "nilid/errors.hpp"

namespace nilid {

  InducedSequence::InducedSequence(std::size_t n)
      : n_(n), slots_(malcev_length(n)) {}

  std::vector<std::size_t> InducedSequence::pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < slots_.size(); ++p) {
      if (slots_[p]) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::size_t InducedSequence::size() const {
    return pivots().size();
  }

  void InducedSequence::set_slot(std::size_t pivot, TrackedElement t) {
    auto lead = leading_coordinate(t.elem);
    if (!lead || lead->first != pivot || lead->second <= 0) {
      throw std::invalid_argument("slot " + std::to_string(pivot)
                                  + " needs an element with positive leading "
                                    "coordinate at that pivot");
    }
    slots_.at(pivot) = Slot{std::move(t), lead->second};
  }

  SiftResult sift(InducedSequence const& seq, TrackedElement const& t,
                  ExprPool& pool) {
    if (t.elem.dim() != seq.dim()) {
      throw DimensionError("sift: element of dimension "
                           + std::to_string(t.elem.dim())
                           + " against a sequence in dimension "
                           + std::to_string(seq.dim()));
    }
    SiftResult out{t, {}};
    while (true) {
      auto lead = leading_coordinate(out.residual.elem);
      if (!lead) {
        break;
      }
      auto const& [p, x] = *lead;
      auto const& slot   = seq.slot(p);
      if (!slot) {
        break;
      }
      Integer c;
      mpz_fdiv_q(c.get_mpz_t(), x.get_mpz_t(), slot->pivot_value.get_mpz_t());
      if (c == 0) {
        break;
      }
      out.residual.elem = mul(power(slot->tracked.elem, -c), out.residual.elem);
      out.residual.expr
          = pool.product({{slot->tracked.expr, -c}, {out.residual.expr, Integer(1)}});
      out.exponents[p] += c;
    }
    return out;
  }

  namespace {

    TrackedElement conjugate(TrackedElement const& by, Integer const& e,
                             TrackedElement const& x, ExprPool& pool) {
      MatrixUT byp = power(by.elem, e);
      MatrixUT bym = power(by.elem, -e);
      return {mul(mul(bym, x.elem), byp),
              pool.product({{by.expr, -e}, {x.expr, Integer(1)}, {by.expr, e}})};
    }

    class SequenceBuilder {
     public:
      SequenceBuilder(std::size_t n, ExprPool& pool) : seq_(n), pool_(pool) {}

      void insert(TrackedElement const& t) {
        queue_.push_back(t);
        drain();
      }

      bool queue_residual(TrackedElement const& t) {
        auto r = sift(seq_, t, pool_);
        if (r.residual.elem.is_identity()) {
          return false;
        }
        queue_.push_back(std::move(r.residual));
        return true;
      }

      void drain() {
        while (!queue_.empty()) {
          TrackedElement t = std::move(queue_.front());
          queue_.pop_front();
          place(t);
        }
      }

      InducedSequence const& sequence() const {
        return seq_;
      }

     private:
      //! Right multiplication by a slot at q > p leaves coordinates < q
      //! alone and shifts coordinate q by a multiple of its pivot value, so
      //! every occupied coordinate past p can be brought into [0, a_q).
      TrackedElement reduce_tail(TrackedElement t, std::size_t p) const {
        auto pivots = seq_.pivots();
        for (auto q : pivots) {
          if (q <= p) {
            continue;
          }
          auto const& slot = *seq_.slot(q);
          Integer     c;
          mpz_fdiv_q(c.get_mpz_t(),
                     malcev_coordinates(t.elem).coords[q].get_mpz_t(),
                     slot.pivot_value.get_mpz_t());
          if (c != 0) {
            t.elem = mul(t.elem, power(slot.tracked.elem, -c));
            t.expr = pool_.product({{t.expr, Integer(1)}, {slot.tracked.expr, -c}});
          }
        }
        return t;
      }

      //! Keeps the sequence fully reduced, which bounds the entries of the
      //! slots (and of everything sifted through them).
      void normalize() {
        auto pivots = seq_.pivots();
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
          seq_.set_slot(*it, reduce_tail(seq_.slot(*it)->tracked, *it));
        }
      }

      void place(TrackedElement const& t) {
        auto r = sift(seq_, t, pool_).residual;
        auto lead = leading_coordinate(r.elem);
        if (!lead) {
          return;
        }
        auto [p, b] = *lead;
        auto const& slot = seq_.slot(p);
        if (!slot) {
          if (b < 0) {
            r = {inverse(r.elem), pool_.inverse(r.expr)};
          }
          seq_.set_slot(p, std::move(r));
          normalize();
          return;
        }
        // Sifting left b in (0, a): combine to the gcd at this pivot.
        TrackedElement old = slot->tracked;
        Integer const& a   = slot->pivot_value;
        Integer        g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        TrackedElement combined{mul(power(old.elem, x), power(r.elem, y)),
                                pool_.product({{old.expr, x}, {r.expr, y}})};
        seq_.set_slot(p, std::move(combined));
        normalize();
        queue_.push_back(std::move(old));
        queue_.push_back(std::move(r));
      }

      InducedSequence            seq_;
      ExprPool&                  pool_;
      std::deque<TrackedElement> queue_;
    };

  }  // namespace

  InducedSequence induced_sequence(std::span<TrackedElement const> gens,
                                   std::size_t n, ExprPool& pool) {
    for (auto const& g : gens) {
      if (g.elem.dim() != n) {
        throw DimensionError("induced_sequence: generators do not share "
                             "dimension "
                             + std::to_string(n));
      }
    }
    SequenceBuilder builder(n, pool);
    for (auto const& g : gens) {
      builder.insert(g);
    }
    while (true) {
      bool changed = false;
      for (auto const& g : gens) {
        changed |= builder.queue_residual(g);
      }
      auto const& seq    = builder.sequence();
      auto        pivots = seq.pivots();
      // Snapshot the slots: queueing does not modify them, but keep the pass
      // well defined regardless.
      std::vector<TrackedElement> slots;
      for (auto p : pivots) {
        slots.push_back(seq.slot(p)->tracked);
      }
      for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::size_t j = i + 1; j < slots.size(); ++j) {
          for (int e : {1, -1}) {
            changed |= builder.queue_residual(
                conjugate(slots[i], Integer(e), slots[j], pool));
          }
        }
      }
      if (!changed) {
        break;
      }
      builder.drain();
    }
    return builder.sequence();
  }

  RelationSet RelationSet::from_words(std::vector<GenWord> const& words) {
    RelationSet rs;
    for (auto const& w : words) {
      rs.relations.push_back(rs.pool.word(w));
    }
    return rs;
  }

  RelationSet subgroup_relations(std::span<MatrixUT const>    gens,
                                 std::span<std::size_t const> indices) {
    if (indices.empty()) {
      throw std::invalid_argument("subgroup_relations needs at least one "
                                  "generator");
    }
    std::size_t n = 0;
    for (auto i : indices) {
      if (i >= gens.size()) {
        throw IndexError("generator index " + std::to_string(i)
                         + " out of range");
      }
      if (n == 0) {
        n = gens[i].dim();
      } else if (gens[i].dim() != n) {
        throw DimensionError("subgroup_relations: generators do not share "
                             "dimension");
      }
    }
    RelationSet                 out;
    ExprPool&                   pool = out.pool;
    std::vector<TrackedElement> tracked;
    for (auto i : indices) {
      tracked.push_back({gens[i], pool.generator(i)});
    }
    InducedSequence seq = induced_sequence(tracked, n, pool);

    auto add = [&](SiftResult const& r, char const* what) {
      if (!r.residual.elem.is_identity()) {
        throw std::logic_error(std::string("subgroup_relations: ") + what
                               + " does not sift to the identity");
      }
      NodeId rel = pool.inverse(r.residual.expr);
      if (!pool.is_empty(rel)) {
        out.relations.push_back(rel);
      }
    };
    for (auto const& t : tracked) {
      add(sift(seq, t, pool), "an input generator");
    }
    auto pivots = seq.pivots();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t j = i + 1; j < pivots.size(); ++j) {
        auto const& sp = seq.slot(pivots[i])->tracked;
        auto const& sq = seq.slot(pivots[j])->tracked;
        for (int e : {1, -1}) {
          TrackedElement c = conjugate(sp, Integer(e), sq, pool);
          // residual = (sift word)^-1 * conjugate; use it directly.
          auto r = sift(seq, c, pool);
          if (!r.residual.elem.is_identity()) {
            throw std::logic_error("subgroup_relations: a conjugate does not "
                                   "sift to the identity");
          }
          if (!pool.is_empty(r.residual.expr)) {
            out.relations.push_back(r.residual.expr);
          }
        }
      }
    }
    out.pool = pool.extract(out.relations);
    return out;
  }

  RelationSet subgroup_relations(std::span<MatrixUT const> gens) {
    std::vector<std::size_t> idx(gens.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      idx[i] = i;
    }
    return subgroup_relations(gens, idx);
  }

  ExponentMatrix exponent_matrix(RelationSet const&           rels,
                                 std::span<std::size_t const> indices) {
    std::vector<std::size_t> columns(indices.begin(), indices.end());
    std::sort(columns.begin(), columns.end());
    if (std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
      throw std::invalid_argument("exponent_matrix: repeated generator index");
    }
    std::size_t count = columns.empty() ? 0 : columns.back() + 1;
    for (auto r : rels.relations) {
      for (auto g : rels.pool.generators_used(r)) {
        if (!std::binary_search(columns.begin(), columns.end(), g)) {
          throw IndexError("relation uses generator " + std::to_string(g)
                           + " which is not in the index set");
        }
      }
    }
    ExponentMatrix m(rels.relations.size(), columns);
    ExponentSums   sums(rels.pool, count);
    for (std::size_t r = 0; r < rels.relations.size(); ++r) {
      auto const& s = sums.of(rels.relations[r]);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        m.at(r, c) = s[columns[c]];
      }
    }
    return m;
  }

}  // namespace nilid
