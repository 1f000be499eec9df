#include "cox/centre.hpp"

#include <deque>
#include <sstream>

namespace cox {

namespace {

// Clear denominators row by row; empty rows are dropped.
std::vector<std::vector<Int>> integer_rows(const CommutantSystem<RationalField>& sys) {
  std::vector<std::vector<Int>> out;
  const int n = static_cast<int>(sys.unknowns.size());
  for (const auto& row : sys.rows) {
    if (row.empty()) continue;
    Int lcm = 1;
    for (const auto& [col, c] : row)
      lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(c)));
    std::vector<Int> dense(n, 0);
    for (const auto& [col, c] : row)
      dense[col] = Int(boost::multiprecision::numerator(c)) *
                   (lcm / Int(boost::multiprecision::denominator(c)));
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace

int kernel_dimension(const CommutantSystem<RationalField>& sys) {
  std::vector<std::vector<Int>> m = integer_rows(sys);
  const int n = static_cast<int>(sys.unknowns.size());
  const int rows = static_cast<int>(m.size());
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < n; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return n - rank;
}

std::vector<std::vector<Rational>> kernel_basis(const CommutantSystem<RationalField>& sys) {
  const int n = static_cast<int>(sys.unknowns.size());
  std::vector<std::vector<Rational>> m;
  for (const auto& row : sys.rows) {
    if (row.empty()) continue;
    std::vector<Rational> dense(n, Rational(0));
    for (const auto& [col, c] : row) dense[col] = c;
    m.push_back(std::move(dense));
  }
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = m[rank][col];
    for (int j = col; j < n; ++j) m[rank][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int centre_dimension_at(const Group& g, int N,
                        const DeformationParameters<RationalField>& params,
                        const BallBudget& budget, bool parallel) {
  RationalField ring;
  return kernel_dimension(build_commutant_system(g, N, ring, params, budget, parallel));
}

PropagationResult propagate_vanishing(const Group& g, const Element& w,
                                      const SearchBudget& budget) {
  const TypeClass& tc = g.system().classification();
  if (!tc.irreducible) throw PreconditionError("vanishing propagation requires an irreducible system");
  if (tc.kind == TypeKind::Finite)
    throw PreconditionError("vanishing propagation requires a non-finite system");
  if (w.is_identity()) throw PreconditionError("the identity coefficient never propagates to zero");
  if (tc.kind == TypeKind::Affine && is_translation(g, w))
    throw PreconditionError("translation in affine type");

  struct Node {
    Element elem;
    int parent;
    int gen;
    ExchangeSide side;
  };
  std::vector<Node> nodes{{w, -1, -1, ExchangeSide::Right}};
  std::map<Element, int> visited{{w, 0}};
  std::deque<std::pair<int, int>> queue{{0, 0}};
  bool truncated = false;

  auto emit = [&](int node, int s) {
    ZeroPropagationCertificate cert;
    cert.target = w;
    std::vector<int> chain;
    for (int i = node; i >= 0; i = nodes[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Node& nd = nodes[chain[i]];
      cert.steps.steps.push_back(
          {nd.gen, nodes[chain[i - 1]].elem, nd.elem, 0});
      cert.sides.push_back(nd.side);
    }
    Element last = nodes[node].elem;
    cert.steps.steps.push_back({s, last, g.conjugate_by_generator(last, s), 2});
    cert.sides.push_back(ExchangeSide::Right);
    cert.steps.gain = 2;
    return cert;
  };

  while (!queue.empty()) {
    auto [ni, depth] = queue.front();
    queue.pop_front();
    Element u = nodes[ni].elem;
    for (int s = 0; s < g.rank(); ++s) {
      Element c = g.conjugate_by_generator(u, s);
      if (c.length() > u.length()) return emit(ni, s);
    }
    if (depth >= budget.depth_limit) {
      truncated = true;
      continue;
    }
    for (int s = 0; s < g.rank(); ++s) {
      Element c = g.conjugate_by_generator(u, s);
      if (c.length() != u.length() || c == u) continue;
      ExchangeSide side;
      if (!g.is_right_descent(u, s)) side = ExchangeSide::Right;
      else if (!g.is_left_descent(u, s)) side = ExchangeSide::Left;
      else continue;  // no exchange side available for this flat step
      if (visited.contains(c)) continue;
      if (nodes.size() >= budget.size_limit) return BudgetExceeded{};
      visited.emplace(c, static_cast<int>(nodes.size()));
      nodes.push_back({std::move(c), ni, s, side});
      queue.emplace_back(static_cast<int>(nodes.size()) - 1, depth + 1);
    }
  }
  if (truncated) return BudgetExceeded{};
  Exhausted ex;
  for (const auto& [e, i] : visited) ex.reachable.push_back(e);
  return ex;
}

bool replay_zero_certificate(const Group& g, const ZeroPropagationCertificate& cert,
                             std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  const auto& steps = cert.steps.steps;
  if (steps.empty()) return fail("empty chain");
  if (steps.size() != cert.sides.size()) return fail("side annotations do not match the chain");
  if (!(steps.front().from == cert.target)) return fail("chain does not start at the target");
  const std::size_t L = cert.target.length();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ConjugationStep& st = steps[i];
    if (i > 0 && !(steps[i - 1].to == st.from)) return fail("chain is not connected");
    if (!(g.conjugate_by_generator(st.from, st.generator) == st.to))
      return fail("step is not a generator conjugation");
    bool final_step = i + 1 == steps.size();
    int delta = static_cast<int>(st.to.length()) - static_cast<int>(st.from.length());
    if (final_step) {
      if (delta != 2) return fail("final step does not grow by two");
    } else {
      if (delta != 0) return fail("flat step changes length");
      if (st.from == st.to) return fail("flat step is trivial");
    }
    if (st.from.length() != L) return fail("chain leaves the length level of the target");
  }

  // Free symbolic central element over the ball of the target's length.
  std::vector<Element> ball = g.ball(static_cast<int>(L), {}, /*parallel=*/false);
  GenericPolyRing base = make_generic_ring(g);
  std::vector<std::string> vars;
  for (int i = 0; i < base.num_vars(); ++i) vars.push_back(base.var_name(i));
  std::map<Element, int> var_of;
  for (const Element& u : ball) {
    var_of.emplace(u, static_cast<int>(vars.size()));
    vars.push_back("x" + std::to_string(var_of[u]));
  }
  GenericPolyRing ring(vars);
  DeformationParameters<GenericPolyRing> params;
  int classes = base.num_vars() / 2;
  for (int c = 0; c < classes; ++c)
    params.by_class.emplace_back(ring.variable(2 * c), ring.variable(2 * c + 1));
  HeckeElement<GenericPolyRing> x;
  for (const Element& u : ball) x.coeffs.emplace(u, ring.variable(var_of[u]));

  auto coeff_at = [&](const HeckeElement<GenericPolyRing>& h, const Element& v) {
    auto it = h.coeffs.find(v);
    return it == h.coeffs.end() ? ring.zero() : it->second;
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ConjugationStep& st = steps[i];
    int s = st.generator;
    HeckeElement<GenericPolyRing> ts = t_basis(ring, g.generator(s));
    HeckeElement<GenericPolyRing> diff =
        sub(ring, multiply(g, ring, params, x, ts), multiply(g, ring, params, ts, x));
    bool final_step = i + 1 == steps.size();
    Element v;
    GenericPoly expect;
    GenericPoly xu = ring.variable(var_of.at(st.from));
    if (final_step) {
      if (g.is_right_descent(st.from, s)) return fail("final step compares at a descent");
      v = g.multiply(st.from, g.generator(s));
      expect = xu;
    } else {
      GenericPoly xv = ring.variable(var_of.at(st.to));
      if (cert.sides[i] == ExchangeSide::Right) {
        if (g.is_right_descent(st.from, s)) return fail("right exchange side not available");
        v = g.multiply(st.from, g.generator(s));
        expect = ring.sub(xu, xv);
      } else {
        if (g.is_left_descent(st.from, s)) return fail("left exchange side not available");
        v = g.multiply(g.generator(s), st.from);
        expect = ring.sub(xv, xu);
      }
    }
    if (!ring.equal(coeff_at(diff, v), expect)) {
      std::ostringstream os;
      os << "coefficient identity fails at step " << i << " (comparison point " << g.format(v)
         << "): got " << ring.to_string(coeff_at(diff, v)) << ", expected "
         << ring.to_string(expect);
      return fail(os.str());
    }
  }
  if (error) error->clear();
  return true;
}

CentreReport assert_centre_trivial_up_to(
    const Group& g, int N, const std::vector<DeformationParameters<RationalField>>& points,
    const BallBudget& budget, bool parallel) {
  const TypeClass& tc = g.system().classification();
  if (!tc.irreducible || tc.kind != TypeKind::Indefinite)
    throw PreconditionError("centre triviality assertion requires irreducible indefinite type");
  if (points.size() < 2)
    throw PreconditionError("need at least two rational parameter points");

  CentreReport report;
  report.radius = N;
  report.ok = true;
  RationalField ring;
  for (const auto& p : points) {
    CommutantSystem<RationalField> sys = build_commutant_system(g, N, ring, p, budget, parallel);
    int dim = kernel_dimension(sys);
    report.kernel_dimensions.push_back(dim);
    if (dim != 1) {
      report.ok = false;
      report.failure = "kernel dimension " + std::to_string(dim) + " at a parameter point";
      continue;
    }
    for (const auto& vec : kernel_basis(sys))
      for (std::size_t i = 0; i < vec.size(); ++i)
        if (vec[i] != 0 && !sys.unknowns[i].is_identity()) {
          report.ok = false;
          report.failure = "kernel vector supported outside the identity";
        }
  }

  std::vector<Element> ball = g.ball(N, budget, parallel);
  std::vector<ZeroPropagationCertificate> certs(ball.size());
  std::vector<std::string> errors(ball.size());
  auto run = [&](int i) {
    const Element& w = ball[i];
    if (w.is_identity()) return;
    PropagationResult res = propagate_vanishing(g, w);
    if (auto* cert = std::get_if<ZeroPropagationCertificate>(&res)) {
      std::string err;
      if (replay_zero_certificate(g, *cert, &err))
        certs[i] = std::move(*cert);
      else
        errors[i] = "replay failed for " + g.format(w) + ": " + err;
    } else if (std::holds_alternative<Exhausted>(res)) {
      errors[i] = "no growth step reachable from " + g.format(w);
    } else {
      errors[i] = "search budget exceeded at " + g.format(w);
    }
  };
  const int count = static_cast<int>(ball.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < count; ++i) run(i);
  } else {
    for (int i = 0; i < count; ++i) run(i);
  }
  for (int i = 0; i < count; ++i) {
    if (!errors[i].empty()) {
      report.ok = false;
      if (report.failure.empty()) report.failure = errors[i];
    }
    if (!certs[i].steps.steps.empty()) report.certificates.push_back(std::move(certs[i]));
  }
  return report;
}

}  // namespace cox
