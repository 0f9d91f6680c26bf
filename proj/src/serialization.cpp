#include "nilid/serialization.hpp"

#include <string>  // for to_string

#include "nilid/errors.hpp"
#include "nilid/expression.hpp"

namespace nilid::io {

  using nlohmann::json;

  namespace {

    [[noreturn]] void bad(std::string const& where, std::string const& what) {
      throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
    }

    Integer integer_field(json const& j, std::string const& where) {
      if (j.is_string()) {
        try {
          return parse_integer(j.get<std::string>());
        } catch (std::invalid_argument const& e) {
          bad(where, e.what());
        }
      }
      if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
      }
      bad(where, "expected a decimal integer string");
    }

    Rational rational_field(json const& j, std::string const& where) {
      if (!j.is_string()) {
        return Rational(integer_field(j, where));
      }
      try {
        return parse_rational(j.get<std::string>());
      } catch (std::invalid_argument const& e) {
        bad(where, e.what());
      }
    }

    std::size_t index_field(json const& j, std::string const& where) {
      if (!j.is_number_unsigned()) {
        bad(where, "expected a nonnegative integer");
      }
      return j.get<std::size_t>();
    }

    json const& member(json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        bad(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        bad(where, std::string("missing \"") + key + "\"");
      }
      return *it;
    }

    json const& array(json const& j, std::string const& where) {
      if (!j.is_array()) {
        bad(where, "expected an array");
      }
      return j;
    }

    std::vector<std::size_t> index_list(json const& j, std::string const& where) {
      std::vector<std::size_t> out;
      auto const&              a = array(j, where);
      for (std::size_t k = 0; k < a.size(); ++k) {
        out.push_back(index_field(a[k], where + "/" + std::to_string(k)));
      }
      return out;
    }

    std::pair<std::size_t, std::size_t> line_col(std::string const& text,
                                                 std::size_t        byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

  }  // namespace

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      auto [line, col] = line_col(text, e.byte);
      throw InputError("line " + std::to_string(line) + ", column "
                       + std::to_string(col) + ": " + e.what());
    }
  }

  std::string dump(json const& doc) {
    return doc.dump(2) + "\n";
  }

  InstanceFile parse_instance(std::string const& text) {
    json         doc = parse_json(text);
    InstanceFile inst;
    inst.n = index_field(member(doc, "n", ""), "/n");
    if (inst.n == 0) {
      bad("/n", "dimension must be at least 1");
    }
    auto const& gens = array(member(doc, "generators", ""), "/generators");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::string where = "/generators/" + std::to_string(g);
      auto const& spec  = gens[g];
      if (!spec.is_object() || spec.size() != 1) {
        bad(where, "expected {\"matrix\": ...} or {\"word\": ...}");
      }
      if (spec.contains("matrix")) {
        std::string m_where = where + "/matrix";
        auto const& m       = array(spec["matrix"], m_where);
        MatrixSpec  ms;
        if (m.size() == inst.n * inst.n && (m.empty() || !m[0].is_array())) {
          for (std::size_t r = 0; r < inst.n; ++r) {
            ms.rows.emplace_back();
            for (std::size_t c = 0; c < inst.n; ++c) {
              ms.rows.back().push_back(integer_field(
                  m[r * inst.n + c], m_where + "/" + std::to_string(r * inst.n + c)));
            }
          }
        } else if (m.size() == inst.n) {
          for (std::size_t r = 0; r < inst.n; ++r) {
            std::string r_where = m_where + "/" + std::to_string(r);
            auto const& row     = array(m[r], r_where);
            if (row.size() != inst.n) {
              bad(r_where, "expected " + std::to_string(inst.n) + " entries");
            }
            ms.rows.emplace_back();
            for (std::size_t c = 0; c < inst.n; ++c) {
              ms.rows.back().push_back(
                  integer_field(row[c], r_where + "/" + std::to_string(c)));
            }
          }
        } else {
          bad(m_where, "expected " + std::to_string(inst.n * inst.n)
                           + " row-major entries or " + std::to_string(inst.n)
                           + " rows");
        }
        inst.generators.emplace_back(std::move(ms));
      } else if (spec.contains("word")) {
        std::string w_where = where + "/word";
        auto const& w       = array(spec["word"], w_where);
        WordSpec    ws;
        for (std::size_t f = 0; f < w.size(); ++f) {
          std::string f_where = w_where + "/" + std::to_string(f);
          auto const& fac     = array(w[f], f_where);
          if (fac.size() != 3) {
            bad(f_where, "expected [i, j, k]");
          }
          ElementaryFactor e{index_field(fac[0], f_where + "/0"),
                             index_field(fac[1], f_where + "/1"),
                             integer_field(fac[2], f_where + "/2")};
          if (e.i < 1 || e.i >= e.j || e.j > inst.n) {
            bad(f_where, "factor e_ij needs 1 <= i < j <= " + std::to_string(inst.n));
          }
          ws.factors.push_back(std::move(e));
        }
        inst.generators.emplace_back(std::move(ws));
      } else {
        bad(where, "expected {\"matrix\": ...} or {\"word\": ...}");
      }
    }
    // Surface unitriangularity problems at parse time.
    (void) to_problem(inst);
    return inst;
  }

  std::string emit_instance(InstanceFile const& inst) {
    json gens = json::array();
    for (auto const& g : inst.generators) {
      if (auto const* m = std::get_if<MatrixSpec>(&g)) {
        json flat = json::array();
        for (auto const& row : m->rows) {
          for (auto const& x : row) {
            flat.push_back(to_string(x));
          }
        }
        gens.push_back({{"matrix", flat}});
      } else {
        json word = json::array();
        for (auto const& f : std::get<WordSpec>(g).factors) {
          word.push_back({f.i, f.j, to_string(f.k)});
        }
        gens.push_back({{"word", word}});
      }
    }
    return dump({{"n", inst.n}, {"generators", gens}});
  }

  ProblemInstance to_problem(InstanceFile const& inst) {
    ProblemInstance p{inst.n, {}};
    for (std::size_t g = 0; g < inst.generators.size(); ++g) {
      std::string where = "/generators/" + std::to_string(g);
      try {
        if (auto const* m = std::get_if<MatrixSpec>(&inst.generators[g])) {
          p.generators.push_back(MatrixUT::from_rows(m->rows));
        } else {
          MatrixUT x(inst.n);
          for (auto const& f : std::get<WordSpec>(inst.generators[g]).factors) {
            x = mul(x, elementary(inst.n, f.i, f.j, f.k));
          }
          p.generators.push_back(std::move(x));
        }
      } catch (std::exception const& e) {
        bad(where, e.what());
      }
    }
    return p;
  }

  json result_document(SolveOutcome const& out) {
    return {{"a_inv", out.invertible},
            {"identity_reachable", !out.invertible.empty()},
            {"rounds", out.bundle.rounds.size()}};
  }

  std::vector<std::size_t> parse_claimed(std::string const& text) {
    json doc = parse_json(text);
    return index_list(member(doc, "a_inv", ""), "/a_inv");
  }

  json matrix_to_json(ExponentMatrix const& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_string(m.at(r, c)));
      }
      entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"columns", m.columns()}, {"entries", entries}};
  }

  ExponentMatrix matrix_from_json(json const& doc, std::string const& where) {
    auto columns = index_list(member(doc, "columns", where), where + "/columns");
    std::size_t rows = index_field(member(doc, "rows", where), where + "/rows");
    auto const& entries = array(member(doc, "entries", where), where + "/entries");
    if (entries.size() != rows) {
      bad(where + "/entries", "expected " + std::to_string(rows) + " rows");
    }
    ExponentMatrix m(rows, std::move(columns));
    for (std::size_t r = 0; r < rows; ++r) {
      std::string r_where = where + "/entries/" + std::to_string(r);
      auto const& row     = array(entries[r], r_where);
      if (row.size() != m.cols()) {
        bad(r_where, "expected " + std::to_string(m.cols()) + " entries");
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = integer_field(row[c], r_where + "/" + std::to_string(c));
      }
    }
    return m;
  }

  json bundle_to_json(CertificateBundle const& bundle) {
    json rounds = json::array();
    for (auto const& rc : bundle.rounds) {
      json nodes = json::array();
      for (auto const& node : rc.relations.pool.nodes()) {
        json factors = json::array();
        for (auto const& f : node) {
          factors.push_back({f.base.kind == ExprBase::Kind::generator ? "g" : "n",
                             f.base.id, to_string(f.exponent)});
        }
        nodes.push_back(std::move(factors));
      }
      json outcome;
      if (auto const* t = std::get_if<Terminal>(&rc.outcome)) {
        json u = json::array();
        for (auto const& x : t->u) {
          u.push_back(to_string(x));
        }
        outcome = {{"kind", "terminal"}, {"u", u}};
      } else {
        json v = json::array();
        for (auto const& x : std::get<Removal>(rc.outcome).v) {
          v.push_back(to_string(x));
        }
        outcome = {{"kind", "removal"}, {"v", v}};
      }
      rounds.push_back({{"indices", rc.indices},
                        {"relations",
                         {{"nodes", nodes}, {"roots", rc.relations.relations}}},
                        {"matrix", matrix_to_json(rc.matrix)},
                        {"outcome", outcome}});
    }
    return {{"format", "nilid-certificates/1"},
            {"generator_count", bundle.generator_count},
            {"rounds", rounds},
            {"result", bundle.result}};
  }

  CertificateBundle bundle_from_json(json const& doc) {
    CertificateBundle b;
    auto const&       fmt = member(doc, "format", "");
    if (!fmt.is_string() || fmt.get<std::string>() != "nilid-certificates/1") {
      bad("/format", "unsupported certificate format");
    }
    b.generator_count
        = index_field(member(doc, "generator_count", ""), "/generator_count");
    b.result = index_list(member(doc, "result", ""), "/result");
    auto const& rounds = array(member(doc, "rounds", ""), "/rounds");
    for (std::size_t k = 0; k < rounds.size(); ++k) {
      std::string      where = "/rounds/" + std::to_string(k);
      auto const&      r     = rounds[k];
      RoundCertificate rc;
      rc.indices = index_list(member(r, "indices", where), where + "/indices");
      std::string rel_where = where + "/relations";
      auto const& rel       = member(r, "relations", where);
      auto const& nodes = array(member(rel, "nodes", rel_where), rel_where + "/nodes");
      std::vector<std::vector<ExprFactor>> raw;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string n_where = rel_where + "/nodes/" + std::to_string(i);
        auto const& node    = array(nodes[i], n_where);
        raw.emplace_back();
        for (std::size_t f = 0; f < node.size(); ++f) {
          std::string f_where = n_where + "/" + std::to_string(f);
          auto const& fac     = array(node[f], f_where);
          if (fac.size() != 3 || !fac[0].is_string()) {
            bad(f_where, "expected [\"g\"|\"n\", id, exponent]");
          }
          auto kind = fac[0].get<std::string>();
          if (kind != "g" && kind != "n") {
            bad(f_where, "factor kind must be \"g\" or \"n\"");
          }
          raw.back().push_back(
              {{kind == "g" ? ExprBase::Kind::generator : ExprBase::Kind::node,
                index_field(fac[1], f_where + "/1")},
               integer_field(fac[2], f_where + "/2")});
        }
      }
      try {
        rc.relations.pool = ExprPool::from_nodes(std::move(raw));
      } catch (std::invalid_argument const& e) {
        bad(rel_where + "/nodes", e.what());
      }
      for (auto id : index_list(member(rel, "roots", rel_where), rel_where + "/roots")) {
        rc.relations.relations.push_back(static_cast<NodeId>(id));
      }
      rc.matrix = matrix_from_json(member(r, "matrix", where), where + "/matrix");
      std::string o_where = where + "/outcome";
      auto const& o       = member(r, "outcome", where);
      auto const& kind    = member(o, "kind", o_where);
      if (kind == "terminal") {
        Terminal    t;
        auto const& u = array(member(o, "u", o_where), o_where + "/u");
        for (std::size_t i = 0; i < u.size(); ++i) {
          t.u.push_back(integer_field(u[i], o_where + "/u/" + std::to_string(i)));
        }
        rc.outcome = std::move(t);
      } else if (kind == "removal") {
        Removal     rm;
        auto const& v = array(member(o, "v", o_where), o_where + "/v");
        for (std::size_t i = 0; i < v.size(); ++i) {
          rm.v.push_back(rational_field(v[i], o_where + "/v/" + std::to_string(i)));
        }
        rc.outcome = std::move(rm);
      } else {
        bad(o_where + "/kind", "expected \"removal\" or \"terminal\"");
      }
      b.rounds.push_back(std::move(rc));
    }
    return b;
  }

}  // namespace nilid::io
