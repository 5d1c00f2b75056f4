#include <chrono>
#include <iostream>
#include "affadm/admset.hpp"
#include "affadm/unitary.hpp"
using namespace affadm;
using Clock = std::chrono::steady_clock;
int main() {
  auto t0 = Clock::now();
  int m = 3;
  Context gu(GroupKind(Family::TypeGU, m));
  std::cout << "GU m=3 walls=" << gu.walls().size() << "\n";
  auto levels = all_valid_levels(gu);
  std::cout << "levels: " << levels.size() << "\n";
  for (int s = 0; s <= m; ++s) {
    Signature sig(2 * m - s, s);
    int pairs = 0, good = 0;
    for (auto& I : levels)
      for (auto& J : levels) {
        if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) continue;
        ++pairs;
        auto a = gu_admissible_set(m, sig, I, J);
        auto f = gu_spin_permissible_set(m, sig, I, J);
        if (a.same_set(f)) ++good;
      }
    std::cout << "s=" << s << " pairs=" << pairs << " good=" << good << "\n";
  }
  std::cout << std::chrono::duration<double>(Clock::now() - t0).count() << "s\n";
  return 0;
}
