#include <chrono>
#include <iostream>

#include "cox/centre.hpp"

using namespace cox;

namespace {

double seconds(auto fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  int radius = argc > 1 ? std::atoi(argv[1]) : 9;
  CoxeterSystem sys(CoxeterMatrix::from_entries({{1, 4, 4}, {4, 1, 4}, {4, 4, 1}}),
                    {"r", "s", "t"});
  Group g(sys);
  BallBudget budget{10'000'000};

  std::size_t size_serial = 0, size_parallel = 0;
  double ts = seconds([&] { size_serial = g.ball(radius, budget, false).size(); });
  double tp = seconds([&] { size_parallel = g.ball(radius, budget, true).size(); });
  if (size_serial != size_parallel) {
    std::cerr << "ball size mismatch between paths\n";
    return 1;
  }
  std::cout << "ball radius " << radius << " size " << size_serial << "\n";
  report("ball enumeration", ts, tp);

  RationalField ring;
  auto params = rational_params(
      g, {{Rational(3), Rational(2)}, {Rational(3), Rational(2)}, {Rational(3), Rational(2)}});
  int N = std::max(2, radius - 4);
  CommutantSystem<RationalField> a, b;
  double cs = seconds([&] { a = build_commutant_system(g, N, ring, params, budget, false); });
  double cp = seconds([&] { b = build_commutant_system(g, N, ring, params, budget, true); });
  if (a.rows != b.rows) {
    std::cerr << "commutant system mismatch between paths\n";
    return 1;
  }
  std::cout << "commutant system at N=" << N << ": " << a.rows.size() << " equations, "
            << a.unknowns.size() << " unknowns\n";
  report("commutant assembly", cs, cp);

  std::vector<Element> seeds = g.ball(4, budget, true);
  std::vector<UplusSearchResult> rs, rp;
  SearchBudget sb{20, 200'000};
  double ss = seconds([&] { rs = scan_growth_certificates(g, seeds, 4, sb, false); });
  double sp = seconds([&] { rp = scan_growth_certificates(g, seeds, 4, sb, true); });
  if (rs.size() != rp.size()) {
    std::cerr << "scan result count mismatch\n";
    return 1;
  }
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i].index() != rp[i].index()) {
      std::cerr << "scan result kind mismatch at seed " << i << "\n";
      return 1;
    }
  std::cout << "certificate scan over " << seeds.size() << " seeds\n";
  report("certificate scan", ss, sp);
  return 0;
}
