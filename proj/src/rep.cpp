#include "gldirac/rep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gldirac {

namespace {

std::string entry_witness(const AlgebraContext& g, int id, int r, int c) {
  auto [k, l] = g.unit_of(id);
  std::ostringstream os;
  os << "E(" << k << ',' << l << ") at entry (" << r << ',' << c << ')';
  return os.str();
}

void note(ValidationReport& rep, bool& flag, const std::string& msg) {
  flag = false;
  if (rep.failures.size() < 16) rep.failures.push_back(msg);
}

}  // namespace

ModuleData trivial_module(const AlgebraContext& g) {
  ModuleData v;
  v.label = "triv";
  v.dim = 1;
  v.parity = {0};
  v.weights = {Weight::zero(g.size())};
  v.action.assign(g.dim(), RatMatrix(1, 1));
  v.gram = RatMatrix::identity(1);
  return v;
}

ModuleData natural_module(const AlgebraContext& g) {
  ModuleData v;
  v.label = "nat";
  v.dim = g.size();
  for (int c = 1; c <= g.size(); ++c) {
    v.parity.push_back(c <= g.m() ? 0 : 1);
    Weight w = Weight::zero(g.size());
    w.e[c - 1] = 1;
    v.weights.push_back(w);
  }
  v.action.assign(g.dim(), RatMatrix(v.dim, v.dim));
  for (int id = 0; id < g.dim(); ++id) {
    auto [k, l] = g.unit_of(id);
    v.action[id].set(k - 1, l - 1, 1);
  }
  v.gram = RatMatrix::identity(v.dim);
  return v;
}

ModuleData dual_module(const AlgebraContext& g, const ModuleData& a) {
  ModuleData v;
  v.label = "dual(" + a.label + ")";
  v.dim = a.dim;
  v.parity = a.parity;
  v.g0_only = a.g0_only;
  for (const Weight& w : a.weights) v.weights.push_back(Weight::zero(g.size()) - w);
  v.action.assign(g.dim(), RatMatrix(v.dim, v.dim));
  for (int id = 0; id < g.dim(); ++id) {
    const int pid = g.parity_id(id);
    for (int r = 0; r < v.dim; ++r)
      for (const auto& [c, val] : a.action[id].row(r)) {
        // (X f)(v) = -(-1)^{|X||f|} f(X v) on the graded dual basis.
        const int sgn = (pid && a.parity[r]) ? -1 : 1;
        v.action[id].set(c, r, -val * sgn);
      }
  }
  // Parity-signed inverse Gram keeps contravariance for the same gram pairing.
  RatMatrix ginv;
  if (!solve(a.gram, RatMatrix::identity(a.dim), &ginv))
    throw std::invalid_argument("dual_module: gram is singular");
  RatMatrix p(v.dim, v.dim);
  for (int i = 0; i < v.dim; ++i) p.set(i, i, a.parity[i] ? -1 : 1);
  v.gram = p * ginv;
  return v;
}

ModuleData tensor_module(const AlgebraContext& g, const ModuleData& a, const ModuleData& b) {
  ModuleData v;
  v.label = "tensor(" + a.label + "," + b.label + ")";
  v.dim = a.dim * b.dim;
  v.g0_only = a.g0_only || b.g0_only;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      v.parity.push_back((a.parity[i] + b.parity[j]) % 2);
      v.weights.push_back(a.weights[i] + b.weights[j]);
    }
  v.action.assign(g.dim(), RatMatrix(v.dim, v.dim));
  for (int id = 0; id < g.dim(); ++id) {
    const int pid = g.parity_id(id);
    RatMatrix& m = v.action[id];
    // A (x) I part.
    for (int r = 0; r < a.dim; ++r)
      for (const auto& [c, val] : a.action[id].row(r))
        for (int j = 0; j < b.dim; ++j) m.add_to(r * b.dim + j, c * b.dim + j, val);
    // Signed I (x) B part.
    for (int i = 0; i < a.dim; ++i) {
      const int sgn = (pid && a.parity[i]) ? -1 : 1;
      for (int r = 0; r < b.dim; ++r)
        for (const auto& [c, val] : b.action[id].row(r))
          m.add_to(i * b.dim + r, i * b.dim + c, Rat(sgn) * val);
    }
  }
  v.gram = RatMatrix::kronecker(a.gram, b.gram);
  return v;
}

ModuleData character_module(const AlgebraContext& g, const Weight& w) {
  if (static_cast<int>(w.e.size()) != g.size())
    throw std::invalid_argument("character_module: weight length");
  for (int k = 2; k <= g.m(); ++k)
    if (w.e[k - 1] != w.e[0])
      throw std::invalid_argument("character_module: not constant on the first block");
  for (int k = g.m() + 2; k <= g.size(); ++k)
    if (w.e[k - 1] != w.e[g.m()])
      throw std::invalid_argument("character_module: not constant on the second block");
  ModuleData v;
  std::ostringstream os;
  os << "char" << weight_str(w, g.m());
  v.label = os.str();
  v.dim = 1;
  v.g0_only = true;
  v.parity = {0};
  v.weights = {w};
  v.action.assign(g.dim(), RatMatrix(1, 1));
  for (int k = 1; k <= g.size(); ++k)
    v.action[g.unit_id(k, k)].set(0, 0, w.e[k - 1]);
  v.gram = RatMatrix::identity(1);
  return v;
}

namespace {

ModuleData parse_rec(const AlgebraContext& g, const std::string& s, std::size_t& pos);

void skip_ws(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
}

void expect(const std::string& s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw std::invalid_argument(std::string("parse_module: expected '") + c +
                                "' at offset " + std::to_string(pos));
  ++pos;
}

ModuleData parse_rec(const AlgebraContext& g, const std::string& s, std::size_t& pos) {
  skip_ws(s, pos);
  auto starts = [&](const char* word) {
    return s.compare(pos, std::string(word).size(), word) == 0;
  };
  if (starts("triv")) {
    pos += 4;
    return trivial_module(g);
  }
  if (starts("nat")) {
    pos += 3;
    return natural_module(g);
  }
  if (starts("dual")) {
    pos += 4;
    expect(s, pos, '(');
    ModuleData inner = parse_rec(g, s, pos);
    expect(s, pos, ')');
    return dual_module(g, inner);
  }
  if (starts("tensor")) {
    pos += 6;
    expect(s, pos, '(');
    ModuleData a = parse_rec(g, s, pos);
    expect(s, pos, ',');
    ModuleData b = parse_rec(g, s, pos);
    expect(s, pos, ')');
    return tensor_module(g, a, b);
  }
  throw std::invalid_argument("parse_module: unknown token at offset " +
                              std::to_string(pos) + " in '" + s + "'");
}

}  // namespace

ModuleData parse_module(const AlgebraContext& g, const std::string& spec) {
  std::size_t pos = 0;
  ModuleData v = parse_rec(g, spec, pos);
  skip_ws(spec, pos);
  if (pos != spec.size())
    throw std::invalid_argument("parse_module: trailing input in '" + spec + "'");
  return v;
}

ValidationReport validate_module(const AlgebraContext& g, const ModuleData& v) {
  ValidationReport rep;
  if (static_cast<int>(v.action.size()) != g.dim() ||
      static_cast<int>(v.parity.size()) != v.dim ||
      static_cast<int>(v.weights.size()) != v.dim)
    throw std::invalid_argument("validate_module: malformed module data");

  auto relevant = [&](int id) { return !v.g0_only || g.is_even_id(id); };

  // Representation property on basis pairs.
  for (int a = 0; a < g.dim() && rep.representation; ++a) {
    if (!relevant(a)) continue;
    for (int b = 0; b < g.dim() && rep.representation; ++b) {
      if (!relevant(b)) continue;
      const int sgn = (g.parity_id(a) && g.parity_id(b)) ? -1 : 1;
      RatMatrix lhs = v.act(a) * v.act(b) - (v.act(b) * v.act(a)).scaled(sgn);
      RatMatrix rhs(v.dim, v.dim);
      for (const auto& [id, c] : g.bracket(a, b).c) {
        if (!relevant(id)) continue;  // character twists drop odd brackets
        rhs = rhs + v.act(id).scaled(c);
      }
      if (lhs != rhs)
        note(rep, rep.representation,
             "representation property fails for pair " + entry_witness(g, a, 0, 0) +
                 " x " + entry_witness(g, b, 0, 0));
    }
  }

  // Cartan action must be diagonal with the labelled weights.
  for (int k = 1; k <= g.size() && rep.weights_consistent; ++k) {
    const RatMatrix& h = v.act(g.unit_id(k, k));
    for (int r = 0; r < v.dim && rep.weights_consistent; ++r) {
      for (const auto& [c, val] : h.row(r))
        if (r != c)
          note(rep, rep.weights_consistent,
               "Cartan action not diagonal: " + entry_witness(g, g.unit_id(k, k), r, c));
      if (h.get(r, r) != v.weights[r].e[k - 1])
        note(rep, rep.weights_consistent,
             "weight label mismatch at coordinate " + std::to_string(r));
    }
  }

  // Action parity matches generator parity.
  for (int id = 0; id < g.dim() && rep.parity_consistent; ++id) {
    if (!relevant(id)) continue;
    const int pid = g.parity_id(id);
    for (int r = 0; r < v.dim && rep.parity_consistent; ++r)
      for (const auto& [c, val] : v.act(id).row(r))
        if ((v.parity[r] ^ v.parity[c]) != pid)
          note(rep, rep.parity_consistent, "parity violation: " + entry_witness(g, id, r, c));
  }
  return rep;
}

ValidationReport validate_unitary(const AlgebraContext& g, const ModuleData& v) {
  ValidationReport rep = validate_module(g, v);

  if (v.gram != v.gram.transpose())
    note(rep, rep.gram_symmetric, "gram not symmetric");

  for (int id = 0; id < g.dim() && rep.contravariant; ++id) {
    if (v.g0_only && !g.is_even_id(id)) continue;
    auto [k, l] = g.unit_of(id);
    const int adjId = g.unit_id(l, k);
    if (v.gram * v.act(id) != v.act(adjId).transpose() * v.gram)
      note(rep, rep.contravariant,
           "contravariance fails for " + entry_witness(g, id, 0, 0));
  }

  for (int r = 0; r < v.dim && rep.gram_weight_blocked; ++r)
    for (const auto& [c, val] : v.gram.row(r))
      if (v.weights[r] != v.weights[c])
        note(rep, rep.gram_weight_blocked,
             "gram couples distinct weights at (" + std::to_string(r) + "," +
                 std::to_string(c) + ")");

  if (rep.gram_symmetric) {
    std::vector<Rat> pivots = symmetric_pivots(v.gram);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (pivots[i] <= 0) {
        note(rep, rep.positive_definite,
             "gram pivot " + std::to_string(i) + " is " + rat_str(pivots[i]));
        break;
      }
  } else {
    rep.positive_definite = false;
  }
  return rep;
}

namespace {
RatMatrix casimir_from_terms(const std::vector<CasimirTerm>& terms, const ModuleData& v) {
  RatMatrix omega(v.dim, v.dim);
  for (const CasimirTerm& t : terms)
    omega = omega + (v.act(t.left) * v.act(t.right)).scaled(t.coeff);
  return omega;
}
}  // namespace

RatMatrix casimir_matrix(const AlgebraContext& g, const ModuleData& v) {
  return casimir_from_terms(g.casimir_terms(), v);
}

RatMatrix casimir_even_matrix(const AlgebraContext& g, const ModuleData& v) {
  return casimir_from_terms(g.casimir_even_terms(), v);
}

std::vector<std::pair<Rat, int>> casimir_eigenvalues(const AlgebraContext& g,
                                                     const ModuleData& v) {
  return rational_eigenvalues(casimir_matrix(g, v));
}

std::vector<CasimirBlock> split_by_casimir(const AlgebraContext& g, const ModuleData& v) {
  const RatMatrix omega = casimir_matrix(g, v);
  std::vector<CasimirBlock> blocks;
  int total = 0;
  for (const auto& [s, mult] : rational_eigenvalues(omega)) {
    RatMatrix shifted = omega - RatMatrix::identity(v.dim).scaled(s);
    RatMatrix power = RatMatrix::identity(v.dim);
    for (int t = 0; t < mult; ++t) power = power * shifted;
    Subspace espace = kernel(power);
    if (espace.dim() != mult)
      throw std::logic_error("split_by_casimir: generalized eigenspace dimension mismatch");

    // Reassemble with weight-pure columns.
    CasimirBlock blk;
    blk.eigenvalue = s;
    ModuleData& b = blk.module;
    b.label = v.label + "[omega=" + rat_str(s) + "]";
    b.g0_only = v.g0_only;
    RatMatrix basis(v.dim, 0);
    for (const auto& [mu, piece] : weight_split(v.weights, espace)) {
      int par = -1;
      for (int c = 0; c < piece.dim(); ++c) {
        for (int r = 0; r < v.dim; ++r)
          if (piece.basis.get(r, c) != 0) {
            if (par < 0) par = v.parity[r];
            if (par != v.parity[r])
              throw std::logic_error("split_by_casimir: mixed parity inside a weight");
          }
        b.weights.push_back(mu);
      }
      for (int c = 0; c < piece.dim(); ++c) b.parity.push_back(par < 0 ? 0 : par);
      basis = RatMatrix::hstack(basis, piece.basis);
    }
    if (basis.cols() != mult)
      throw std::logic_error("split_by_casimir: weight split lost dimensions");
    blk.embedding = basis;
    b.dim = mult;
    b.action.reserve(g.dim());
    for (int id = 0; id < g.dim(); ++id) {
      RatMatrix restricted;
      if (!solve(basis, v.act(id) * basis, &restricted))
        throw std::logic_error("split_by_casimir: block is not action stable");
      b.action.push_back(restricted);
    }
    b.gram = basis.transpose() * v.gram * basis;
    total += mult;
    blocks.push_back(std::move(blk));
  }
  if (total != v.dim) throw std::logic_error("split_by_casimir: dimensions do not add up");
  return blocks;
}

std::string types_str(const TypeMultiset& t, int m) {
  if (t.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (const TypeEntry& e : t) {
    if (!first) os << "; ";
    first = false;
    os << weight_str(e.hw, m) << 'x' << e.mult;
  }
  return os.str();
}

TypeMultiset shift_types(const TypeMultiset& t, const Weight& by) {
  TypeMultiset out;
  for (const TypeEntry& e : t) out.push_back({e.hw + by, e.mult});
  std::sort(out.begin(), out.end(),
            [](const TypeEntry& a, const TypeEntry& b) { return a.hw < b.hw; });
  return out;
}

Int weyl_dimension(const AlgebraContext& g, const Weight& hw) {
  if (static_cast<int>(hw.e.size()) != g.size())
    throw std::invalid_argument("weyl_dimension: weight length");
  Rat dim = 1;
  auto block = [&](int lo, int hi) {  // coordinates [lo, hi)
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) {
        Rat diff = hw.e[i] - hw.e[j];
        if (diff < 0 || diff.get_den() != 1)
          throw std::invalid_argument("weyl_dimension: weight not dominant integral: " +
                                      weight_str(hw, g.m()));
        dim *= (diff + (j - i)) / Rat(j - i);
      }
  };
  block(0, g.m());
  block(g.m(), g.size());
  if (dim.get_den() != 1)
    throw std::logic_error("weyl_dimension: non-integral dimension");
  return dim.get_num();
}

std::vector<std::pair<Weight, Subspace>> weight_split(
    const std::vector<Weight>& coordWeights, const Subspace& space) {
  if (static_cast<int>(coordWeights.size()) != space.ambient)
    throw std::invalid_argument("weight_split: label count mismatch");
  std::map<Weight, std::vector<int>> rowsOf;
  for (int r = 0; r < space.ambient; ++r) rowsOf[coordWeights[r]].push_back(r);
  std::vector<std::pair<Weight, Subspace>> out;
  int total = 0;
  std::vector<int> allCols(space.dim());
  for (int c = 0; c < space.dim(); ++c) allCols[c] = c;
  for (const auto& [mu, rows] : rowsOf) {
    std::vector<int> offRows;
    offRows.reserve(space.ambient - rows.size());
    std::vector<char> inMu(space.ambient, 0);
    for (int r : rows) inMu[r] = 1;
    for (int r = 0; r < space.ambient; ++r)
      if (!inMu[r]) offRows.push_back(r);
    Subspace coeff = kernel(space.basis.submatrix(offRows, allCols));
    if (coeff.dim() == 0) continue;
    Subspace piece{space.ambient, space.basis * coeff.basis};
    total += piece.dim();
    out.emplace_back(mu, std::move(piece));
  }
  if (total != space.dim())
    throw std::invalid_argument("weight_split: space is not weight homogeneous");
  return out;
}

TypeMultiset decompose_g0(const AlgebraContext& g,
                          const std::vector<Weight>& coordWeights,
                          const ActionMap& act, const Subspace& space,
                          const Subspace* modOut, const Subspace* repsOverride) {
  for (int id : g.g0_ids())
    if (!act.count(id))
      throw std::invalid_argument("decompose_g0: action map missing a g0 generator");

  // Cartan actions must be diagonal and match the labels.
  for (int k = 1; k <= g.size(); ++k) {
    const RatMatrix& h = act.at(g.unit_id(k, k));
    for (int r = 0; r < space.ambient; ++r) {
      for (const auto& [c, val] : h.row(r))
        if (r != c)
          throw std::invalid_argument("decompose_g0: Cartan action not diagonal");
      if (h.get(r, r) != coordWeights[r].e[k - 1])
        throw std::invalid_argument("decompose_g0: coordinate weight labels disagree "
                                    "with the Cartan action");
    }
  }

  // Stability certificates.
  for (int id : g.g0_ids()) {
    if (!in_span(space, act.at(id) * space.basis))
      throw std::logic_error("decompose_g0: space not g0-stable");
    if (modOut && modOut->dim() > 0 && !in_span(*modOut, act.at(id) * modOut->basis))
      throw std::logic_error("decompose_g0: mod-out space not g0-stable");
  }

  const Subspace zero = Subspace::zero(space.ambient);
  auto splitS = weight_split(coordWeights, space);
  std::map<Weight, Subspace> sPiece, mPiece, qPiece;
  for (auto& [mu, piece] : splitS) sPiece.emplace(mu, std::move(piece));
  if (modOut && modOut->dim() > 0) {
    for (auto& [mu, piece] : weight_split(coordWeights, *modOut)) {
      if (!sPiece.count(mu) || !in_span(sPiece.at(mu), piece.basis))
        throw std::invalid_argument("decompose_g0: mod-out not contained in space");
      mPiece.emplace(mu, std::move(piece));
    }
  }
  std::map<Weight, Subspace> rPiece;
  if (repsOverride) {
    for (auto& [mu, piece] : weight_split(coordWeights, *repsOverride))
      rPiece.emplace(mu, std::move(piece));
  }

  for (const auto& [mu, s] : sPiece) {
    const Subspace& m = mPiece.count(mu) ? mPiece.at(mu) : zero;
    if (repsOverride) {
      const Subspace& r = rPiece.count(mu) ? rPiece.at(mu) : zero;
      if (r.dim() != s.dim() - m.dim() || !in_span(s, r.basis) ||
          intersect(r, m).dim() != 0)
        throw std::invalid_argument(
            "decompose_g0: representative override is not a complement");
      qPiece.emplace(mu, r);
    } else {
      qPiece.emplace(mu, quotient_basis(s, m));
    }
  }

  TypeMultiset result;
  Int accounted = 0;
  for (const auto& [mu, q] : qPiece) {
    if (q.dim() == 0) continue;
    RatMatrix stacked(0, q.dim());
    for (int rid : g.even_raising_ids()) {
      const Weight nu = mu + g.root_of(rid);
      RatMatrix img = act.at(rid) * q.basis;
      if (!sPiece.count(nu)) {
        if (!img.is_zero())
          throw std::logic_error("decompose_g0: raising image escapes the weight grading");
        continue;
      }
      const Subspace& qn = qPiece.at(nu);
      const Subspace& mn = mPiece.count(nu) ? mPiece.at(nu) : zero;
      RatMatrix coords;
      if (!solve(RatMatrix::hstack(qn.basis, mn.basis), img, &coords))
        throw std::logic_error("decompose_g0: raising image escapes the space");
      std::vector<int> top(qn.dim());
      for (int i = 0; i < qn.dim(); ++i) top[i] = i;
      std::vector<int> cols(q.dim());
      for (int i = 0; i < q.dim(); ++i) cols[i] = i;
      stacked = RatMatrix::vstack(stacked, coords.submatrix(top, cols));
    }
    const int mult = kernel(stacked).dim();
    if (mult > 0) {
      result.push_back({mu, mult});
      accounted += Int(mult) * weyl_dimension(g, mu);
    }
  }
  const int target = space.dim() - (modOut ? modOut->dim() : 0);
  if (accounted != target)
    throw std::logic_error("decompose_g0: Weyl dimension accounting mismatch (got " +
                           accounted.get_str() + ", expected " + std::to_string(target) +
                           ")");
  std::sort(result.begin(), result.end(),
            [](const TypeEntry& a, const TypeEntry& b) { return a.hw < b.hw; });
  return result;
}

}  // namespace gldirac
