#pragma once

#include "arknit/algebra.hpp"

// Shared quiver presentations for the test suites.
namespace arknit_test {

// one vertex, no arrows: the prime field itself
inline arknit::QuiverPresentation pres_field(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"pt"};
  return q;
}

// 1 --a--> 2
inline arknit::QuiverPresentation pres_a2(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  return q;
}

// 1 --a--> 2 --b--> 3
inline arknit::QuiverPresentation pres_a3(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  return q;
}

// 1 --a--> 2, 2 --b--> 3, 2 --c--> 4
inline arknit::QuiverPresentation pres_d4(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}};
  return q;
}

// 1 ==x,y==> 2 (two parallel arrows)
inline arknit::QuiverPresentation pres_kronecker(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"1", "2"};
  q.arrows = {{"x", 0, 1}, {"y", 0, 1}};
  return q;
}

// loop x with x^2 = 0 (dual numbers)
inline arknit::QuiverPresentation pres_dual_numbers(std::uint32_t p) {
  arknit::QuiverPresentation q;
  q.characteristic = p;
  q.vertices = {"z"};
  q.arrows = {{"x", 0, 0}};
  q.relations = {{{1, {0, 0}}}};
  return q;
}

}  // namespace arknit_test
