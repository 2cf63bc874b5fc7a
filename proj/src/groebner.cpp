#include "flatband/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

namespace flatband {

bool term_greater(const TermKey& a, const TermKey& b) {
  if (a.pos != b.pos) return a.pos < b.pos;  // lower component index wins
  int64_t da = ivec_total(a.exp), db = ivec_total(b.exp);
  if (da != db) return da > db;
  // grevlex tie-break: rightmost nonzero entry of a-b negative => a greater
  for (size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  }
  return false;
}

void ModVec::add_term(int pos, const IntVec& exp, const NFElem& c) {
  if (c.is_zero()) return;
  assert(pos >= 0 && pos < rank_);
  assert(static_cast<int>(exp.size()) == dim_);
  TermKey key{pos, exp};
  auto [it, inserted] = t_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ModVec ModVec::operator+(const ModVec& o) const {
  assert(rank_ == o.rank_);
  ModVec r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.pos, k.exp, c);
  return r;
}

ModVec ModVec::operator-(const ModVec& o) const {
  assert(rank_ == o.rank_);
  ModVec r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.pos, k.exp, -c);
  return r;
}

ModVec ModVec::scaled(const NFElem& c) const {
  ModVec r(rank_, dim_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

ModVec ModVec::axpy_monomial(const NFElem& c, const IntVec& e, const ModVec& g) const {
  ModVec r = *this;
  for (const auto& [k, v] : g.t_) r.add_term(k.pos, ivec_add(k.exp, e), -(c * v));
  return r;
}

ModVec ModVec::monic() const {
  if (is_zero()) throw std::invalid_argument("monic of zero module element");
  return scaled(leading_coeff().inverse());
}

Laurent<NFElem> ModVec::component(int pos) const {
  Laurent<NFElem> r(dim_);
  for (const auto& [k, v] : t_)
    if (k.pos == pos) r.add_term(k.exp, v);
  return r;
}

ModVec ModVec::from_components(const std::vector<Laurent<NFElem>>& comps) {
  if (comps.empty()) throw std::invalid_argument("empty component list");
  ModVec r(static_cast<int>(comps.size()), comps[0].dim());
  for (size_t i = 0; i < comps.size(); ++i)
    for (const auto& [e, c] : comps[i].terms()) r.add_term(static_cast<int>(i), e, c);
  return r;
}

std::vector<Laurent<NFElem>> ModVec::to_components() const {
  std::vector<Laurent<NFElem>> out(static_cast<size_t>(rank_), Laurent<NFElem>(dim_));
  for (const auto& [k, v] : t_) out[static_cast<size_t>(k.pos)].add_term(k.exp, v);
  return out;
}

int32_t ModVec::sup_norm() const {
  int32_t m = 0;
  for (const auto& [k, v] : t_) {
    (void)v;
    m = std::max(m, ivec_sup_norm(k.exp));
  }
  return m;
}

std::string ModVec::to_string() const {
  std::string s = "(";
  auto comps = to_components();
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + ")";
}

namespace {

bool exp_divides(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec exp_lcm(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// c * z^e * f
ModVec mono_times(const ModVec& f, const NFElem& c, const IntVec& e) {
  ModVec r(f.rank(), f.dim());
  for (const auto& [k, v] : f.terms()) r.add_term(k.pos, ivec_add(k.exp, e), v * c);
  return r;
}

}  // namespace

ModVec normal_form(const ModVec& f, const std::vector<ModVec>& divisors,
                   std::vector<Laurent<NFElem>>* quotients) {
  for (const ModVec& g : divisors)
    if (!g.is_zero() && g.rank() != f.rank())
      throw std::invalid_argument("normal_form: ambient rank mismatch");
  if (quotients) quotients->assign(divisors.size(), Laurent<NFElem>(f.dim()));
  ModVec rem(f.rank(), f.dim());
  ModVec p = f;
  while (!p.is_zero()) {
    cancel::checkpoint();
    const TermKey lt = p.leading_term();
    const NFElem lc = p.leading_coeff();
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      const ModVec& g = divisors[k];
      if (g.is_zero()) continue;
      const TermKey& glt = g.leading_term();
      if (glt.pos != lt.pos || !exp_divides(glt.exp, lt.exp)) continue;
      NFElem c = lc / g.leading_coeff();
      IntVec e = ivec_sub(lt.exp, glt.exp);
      p = p.axpy_monomial(c, e, g);
      if (quotients) (*quotients)[k].add_term(e, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt.pos, lt.exp, lc);
      ModVec tail(p.rank(), p.dim());
      bool first = true;
      for (const auto& [k, v] : p.terms()) {
        if (first) {
          first = false;
          continue;
        }
        tail.add_term(k.pos, k.exp, v);
      }
      p = std::move(tail);
    }
  }
  return rem;
}

ModVec normal_form(const ModVec& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.gens, nullptr);
}

namespace {

using PolyVec = std::vector<Laurent<NFElem>>;

// Buchberger run recording everything Schreyer lifting needs: the working
// basis (monic, append-only), a trace of each basis element in terms of the
// input generators, and one syzygy of the working basis per processed S-pair.
// No pair-skipping criteria are applied; that keeps the recorded relations a
// complete generating set of Syz(basis).
struct TraceRun {
  std::vector<ModVec> basis;
  std::vector<PolyVec> trace;  // basis[k] == sum_i trace[k][i] * input[i]
  std::vector<std::vector<std::pair<size_t, Laurent<NFElem>>>> relations;
};

TraceRun buchberger_trace(const std::vector<ModVec>& input, int dim) {
  TraceRun run;
  for (size_t i = 0; i < input.size(); ++i) {
    if (input[i].is_zero()) continue;
    NFElem inv_lc = input[i].leading_coeff().inverse();
    run.basis.push_back(input[i].monic());
    PolyVec tr(input.size(), Laurent<NFElem>(dim));
    tr[i] = Laurent<NFElem>::constant(dim, inv_lc);
    run.trace.push_back(std::move(tr));
  }

  // normal selection strategy: lowest lcm total degree first, ties by index
  std::set<std::tuple<int64_t, size_t, size_t>> queue;
  auto push_pairs_for = [&](size_t s) {
    const TermKey& lts = run.basis[s].leading_term();
    for (size_t k = 0; k < s; ++k) {
      const TermKey& ltk = run.basis[k].leading_term();
      if (ltk.pos != lts.pos) continue;
      IntVec lcm = exp_lcm(ltk.exp, lts.exp);
      queue.insert({ivec_total(lcm), k, s});
    }
  };
  for (size_t s = 1; s < run.basis.size(); ++s) push_pairs_for(s);

  while (!queue.empty()) {
    cancel::checkpoint();
    auto [deg, i, j] = *queue.begin();
    (void)deg;
    queue.erase(queue.begin());
    const TermKey lti = run.basis[i].leading_term();
    const TermKey ltj = run.basis[j].leading_term();
    IntVec lcm = exp_lcm(lti.exp, ltj.exp);
    IntVec ui = ivec_sub(lcm, lti.exp);
    IntVec uj = ivec_sub(lcm, ltj.exp);
    NFElem one = run.basis[i].leading_coeff();  // == 1, reuse for field context
    ModVec spoly =
        mono_times(run.basis[i], one, ui) - mono_times(run.basis[j], one, uj);
    PolyVec quot;
    ModVec rem = normal_form(spoly, run.basis, &quot);

    // relation over the working basis: z^ui e_i - z^uj e_j - sum quot_k e_k
    // (- lc(rem) e_new when the remainder joins the basis)
    std::map<size_t, Laurent<NFElem>> rel;
    auto rel_add = [&](size_t idx, const Laurent<NFElem>& p) {
      auto it = rel.find(idx);
      if (it == rel.end())
        rel.emplace(idx, p);
      else
        it->second = it->second + p;
    };
    rel_add(i, Laurent<NFElem>::monomial(dim, ui, one));
    rel_add(j, -Laurent<NFElem>::monomial(dim, uj, one));
    for (size_t k = 0; k < quot.size(); ++k)
      if (!quot[k].is_zero()) rel_add(k, -quot[k]);

    if (!rem.is_zero()) {
      NFElem lc = rem.leading_coeff();
      NFElem inv = lc.inverse();
      PolyVec tr(input.size(), Laurent<NFElem>(dim));
      for (size_t l = 0; l < input.size(); ++l) {
        Laurent<NFElem> acc = run.trace[i][l].shifted(ui) - run.trace[j][l].shifted(uj);
        for (size_t k = 0; k < quot.size(); ++k) {
          if (quot[k].is_zero() || run.trace[k][l].is_zero()) continue;
          acc = acc - quot[k] * run.trace[k][l];
        }
        tr[l] = acc.scaled(inv);
      }
      size_t new_index = run.basis.size();
      run.basis.push_back(rem.scaled(inv));
      run.trace.push_back(std::move(tr));
      rel_add(new_index, -Laurent<NFElem>::constant(dim, lc));
      push_pairs_for(new_index);
    }

    std::vector<std::pair<size_t, Laurent<NFElem>>> rel_list;
    for (auto& [idx, p] : rel)
      if (!p.is_zero()) rel_list.emplace_back(idx, std::move(p));
    run.relations.push_back(std::move(rel_list));
  }
  return run;
}

// smallest leading term first
bool lt_less(const ModVec& a, const ModVec& b) {
  return term_greater(b.leading_term(), a.leading_term());
}

GroebnerBasis reduce_basis(const std::vector<ModVec>& working, int rank, int dim) {
  GroebnerBasis gb;
  gb.ambient_rank = rank;
  gb.dim = dim;
  std::vector<ModVec> sorted = working;
  std::sort(sorted.begin(), sorted.end(), lt_less);
  // minimal: drop anything whose leading term an earlier kept one divides
  for (const ModVec& g : sorted) {
    bool redundant = false;
    for (const ModVec& h : gb.gens) {
      const TermKey& a = h.leading_term();
      const TermKey& b = g.leading_term();
      if (a.pos == b.pos && exp_divides(a.exp, b.exp)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gb.gens.push_back(g);
  }
  // tail reduction to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gb.gens.size(); ++i) {
      std::vector<ModVec> others;
      others.reserve(gb.gens.size() - 1);
      for (size_t k = 0; k < gb.gens.size(); ++k)
        if (k != i) others.push_back(gb.gens[k]);
      ModVec reduced = normal_form(gb.gens[i], others, nullptr);
      if (!(reduced == gb.gens[i])) {
        gb.gens[i] = reduced.monic();
        changed = true;
      }
    }
  }
  // deterministic presentation: descending leading terms
  std::sort(gb.gens.begin(), gb.gens.end(),
            [](const ModVec& a, const ModVec& b) { return lt_less(b, a); });
  return gb;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<ModVec>& gens) {
  int rank = 0, dim = 0;
  for (const auto& g : gens) {
    if (g.rank() > 0) {
      rank = g.rank();
      dim = g.dim();
      break;
    }
  }
  if (rank == 0) throw std::invalid_argument("buchberger: no nonzero generators");
  TraceRun run = buchberger_trace(gens, dim);
  return reduce_basis(run.basis, rank, dim);
}

ModVec modvec_poly_mul(const ModVec& f, const Laurent<NFElem>& p) {
  ModVec r(f.rank(), f.dim());
  for (const auto& [e, c] : p.terms()) r = r + mono_times(f, c, e);
  return r;
}

std::vector<ModVec> syzygies(const std::vector<ModVec>& gens, const FieldPtr& field_hint) {
  if (gens.empty()) throw std::invalid_argument("syzygies of empty generator list");
  const size_t r0 = gens.size();
  int rank = 0;
  int dim = gens[0].dim();
  FieldPtr field = field_hint;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      rank = g.rank();
      dim = g.dim();
      if (!field) field = g.leading_coeff().field();
    }
  }
  if (!field) field = rational_field();
  std::vector<ModVec> out;
  const IntVec zero_exp(static_cast<size_t>(dim), 0);
  if (rank == 0) {
    // all generators are zero: every unit vector is a syzygy
    for (size_t i = 0; i < r0; ++i) {
      ModVec e(static_cast<int>(r0), dim);
      e.add_term(static_cast<int>(i), zero_exp, NFElem::one(field));
      out.push_back(std::move(e));
    }
    return out;
  }

  TraceRun run = buchberger_trace(gens, dim);

  auto emit = [&](const PolyVec& w) {
    ModVec s(static_cast<int>(r0), dim);
    for (size_t l = 0; l < r0; ++l)
      for (const auto& [e, c] : w[l].terms()) s.add_term(static_cast<int>(l), e, c);
    if (s.is_zero()) return;
    for (const auto& prev : out)
      if (prev == s) return;
    out.push_back(std::move(s));
  };

  // columns of I - A*B: f_i reduces to zero against the basis; its quotients
  // pulled back through the trace give a syzygy of the inputs
  for (size_t i = 0; i < r0; ++i) {
    PolyVec quot;
    ModVec rem = normal_form(gens[i], run.basis, &quot);
    if (!rem.is_zero())
      throw EngineError("generator fails to reduce to zero against its own basis");
    PolyVec w(r0, Laurent<NFElem>(dim));
    w[i] = Laurent<NFElem>::constant(dim, NFElem::one(field));
    for (size_t k = 0; k < quot.size(); ++k) {
      if (quot[k].is_zero()) continue;
      for (size_t l = 0; l < r0; ++l) {
        if (run.trace[k][l].is_zero()) continue;
        w[l] = w[l] - quot[k] * run.trace[k][l];
      }
    }
    emit(w);
  }

  // images of the recorded basis syzygies through the trace
  for (const auto& rel : run.relations) {
    PolyVec w(r0, Laurent<NFElem>(dim));
    for (const auto& [k, p] : rel) {
      for (size_t l = 0; l < r0; ++l) {
        if (run.trace[k][l].is_zero()) continue;
        w[l] = w[l] + p * run.trace[k][l];
      }
    }
    emit(w);
  }

  // exactness guard: every emitted syzygy must annihilate the generators
  for (const ModVec& s : out) {
    ModVec acc(rank, dim);
    auto comps = s.to_components();
    for (size_t l = 0; l < r0; ++l) {
      if (comps[l].is_zero() || gens[l].is_zero()) continue;
      acc = acc + modvec_poly_mul(gens[l], comps[l]);
    }
    if (!acc.is_zero()) throw EngineError("emitted syzygy fails exact verification");
  }
  return out;
}

ModVec matrix_column(const PolyMatrix<NFElem>& m, int col) {
  ModVec v(m.rows, m.dim);
  for (int i = 0; i < m.rows; ++i)
    for (const auto& [e, c] : m.at(i, col).terms()) v.add_term(i, e, c);
  return v;
}

std::vector<Laurent<NFElem>> apply_matrix(const PolyMatrix<NFElem>& m, const ModVec& v,
                                          const FieldPtr& field) {
  (void)field;
  std::vector<Laurent<NFElem>> out(static_cast<size_t>(m.rows), Laurent<NFElem>(m.dim));
  auto comps = v.to_components();
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j).is_zero() || comps[static_cast<size_t>(j)].is_zero()) continue;
      out[static_cast<size_t>(i)] =
          out[static_cast<size_t>(i)] + m.at(i, j) * comps[static_cast<size_t>(j)];
    }
  return out;
}

std::vector<ModVec> minimize_generators(std::vector<ModVec> gens) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const ModVec& g) { return g.is_zero(); }),
             gens.end());
  for (size_t i = gens.size(); i-- > 0;) {
    if (gens.size() == 1) break;
    cancel::checkpoint();
    std::vector<ModVec> others;
    others.reserve(gens.size() - 1);
    for (size_t k = 0; k < gens.size(); ++k)
      if (k != i) others.push_back(gens[k]);
    GroebnerBasis gb = buchberger(others);
    if (normal_form(gens[i], gb).is_zero())
      gens.erase(gens.begin() + static_cast<long>(i));
  }
  return gens;
}

std::vector<ModVec> kernel_of_map(const PolyMatrix<NFElem>& m, const FieldPtr& field) {
  if (m.rows <= 0 || m.cols <= 0)
    throw std::invalid_argument("kernel_of_map: empty matrix");
  for (const auto& e : m.entries) {
    IntVec mn = e.min_exponents();
    for (int32_t x : mn)
      if (x < 0)
        throw std::invalid_argument("kernel_of_map requires polynomial entries");
  }
  std::vector<ModVec> cols;
  cols.reserve(static_cast<size_t>(m.cols));
  for (int j = 0; j < m.cols; ++j) cols.push_back(matrix_column(m, j));
  std::vector<ModVec> kernel = minimize_generators(syzygies(cols, field));
  for (const ModVec& v : kernel) {
    for (const auto& row : apply_matrix(m, v, field))
      if (!row.is_zero()) throw EngineError("kernel generator fails M*v == 0");
  }
  return kernel;
}

}  // namespace flatband
