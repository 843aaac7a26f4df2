#pragma once

#include <initializer_list>
#include <tuple>

#include "vkc/gauss_code.hpp"
#include "vkc/gauss_diagram.hpp"

namespace fixture {

inline constexpr const char* kink = "O1+U1+";
inline constexpr const char* trefoil = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* virtual_trefoil = "O1+O2+U1+U2+";

// Hand-traced PD codes. Classical record: (in-under, in-over, out-under, out-over).
inline constexpr const char* trefoil_pd = "X+(2,1,3,4)\nX+(4,3,5,6)\nX+(6,5,1,2)\n";
inline constexpr const char* virtual_trefoil_pd = "X+(2,1,3,4)\nX+(4,3,5,6)\nV(5,6,2,1)\n";
inline constexpr const char* hopf_pd = "X+(2,1,3,4)\nX+(4,3,1,2)\n";

inline vkc::GaussDiagram code(const char* text) { return vkc::parse_gauss_code(text); }

inline vkc::CutSystem cuts(const vkc::GaussDiagram& g, std::initializer_list<std::tuple<int, int, int>> entries) {
  vkc::CutSystem c(g);
  for (auto [circle, gap, count] : entries) c.set({circle, gap}, count);
  return c;
}

}  // namespace fixture
