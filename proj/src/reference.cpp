#include <stdexcept>

#include "schemelab/reference.hpp"

namespace schemelab::reference {

const std::vector<long>& q2_stable_counts() {
  static const std::vector<long> v{1, 3, 10, 27, 69, 161, 361, 767};
  return v;
}

const std::vector<long>& r2_stable_counts() {
  static const std::vector<long> v{1, 3, 10, 22, 47};
  return v;
}

const std::vector<long>& m22_counts() {
  static const std::vector<long> v{8, 9, 10};
  return v;
}

Commute m22_commute(int i, int j) {
  if (i < 0 || i > 9 || j < 0 || j > 9) throw std::out_of_range("m22_commute: label outside 0..9");
  using C = Commute;
  constexpr C A = C::Always, N = C::Never, S = C::Only6, K = C::Only9;
  static constexpr C table[10][10] = {
      {A, A, A, A, A, A, A, A, A, A},  // 2',2'
      {A, A, A, A, N, N, N, N, A, A},  // 4'
      {A, A, A, A, N, N, N, N, A, A},  // 2~,2'
      {A, A, A, A, S, S, S, S, A, A},  // 4~
      {A, N, N, S, A, S, N, N, K, N},  // 1+,1-,2'
      {A, N, N, S, S, A, N, N, K, N},  // 2~,2~
      {A, N, N, S, N, N, A, N, K, N},  // 3+,1-
      {A, N, N, S, N, N, N, A, K, N},  // 1+,3-
      {A, A, A, A, K, K, K, K, A, A},  // 1+,1-,2~
      {A, A, A, A, N, N, N, N, A, A},  // 1+,1+,1-,1-
  };
  return table[i][j];
}

std::string to_string(Commute c) {
  switch (c) {
    case Commute::Always: return "always";
    case Commute::Never: return "never";
    case Commute::Only6: return "only_at 6";
    case Commute::Only9: return "only_at 9";
  }
  return "never";
}

const std::vector<std::string>& m22_all_p_subschemes() {
  static const std::vector<std::string> v{
      "M1|B5|B6|B7|B8",
      "M1+B5+B6+B7+B8",
      "M1|B5+B6+B7+B8",
  };
  return v;
}

std::vector<std::string> m22_subschemes_only_at(int p) {
  switch (p) {
    case 6:
      return {"M4|M1+M2+M3+M5+M6+M7", "M2+M5|M1+M3+M4+M6+M7", "M1+M2+M6+M7|M3+M5|M4",
              "M1+M3+M4|M2+M5|M6+M7", "M1+M4|M2+M5|M3|M6+M7"};
    case 7:
      return {"M1|B5+B7|B6"};
    case 8:
      return {"M1+B8|B5+B6+B7", "M1|B5+B6+B7|B8", "M1+B8|B5+B7|B6", "M1|B5+B7|B6|B8"};
    case 9:
      // The listed partition omits M5; it closes only with M5 in the second block.
      return {"M1+M2+M6+M7+M9|M3+M4+M5+M8", "M1|B5+B8|B6+B7"};
    case 11:
      return {"M1|B5+B8|B6+B7"};
    case 12:
      return {"M1|B5+B7|B6+B8"};
    default:
      return {};
  }
}

}  // namespace schemelab::reference
