#pragma once

// Shared group fixtures for the test suites.

#include "polytc/pcpresentation.hpp"

#include <memory>

namespace fixtures {

using namespace polytc;

// symmetric group S3 = <a,b | a^2, b^3, b^a = b^2>
inline PcPtr s3() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 3}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, 2}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

inline PcPtr z() {
  return std::make_shared<PcPresentation>(
      IntVec{0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a"});
}

inline PcPtr z2() {
  return std::make_shared<PcPresentation>(
      IntVec{0, 0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

inline PcPtr zn(std::size_t n) {
  return std::make_shared<PcPresentation>(
      IntVec(n, Int(0)), std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{});
}

// Klein bottle group <a,b | b^a = b^-1>
inline PcPtr klein() {
  return std::make_shared<PcPresentation>(
      IntVec{0, 0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, -1}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, -1}}}},
      std::vector<std::string>{"a", "b"});
}

// discrete Heisenberg group <x,y,z | y^x = y z, z central>
inline PcPtr h3() {
  return std::make_shared<PcPresentation>(
      IntVec{0, 0, 0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{
          {{0, 1}, Word{{1, 1}, {2, 1}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{
          {{0, 1}, Word{{1, 1}, {2, -1}}}},
      std::vector<std::string>{"x", "y", "z"});
}

// infinite dihedral group <a,b | a^2, b^a = b^-1>
inline PcPtr dinf() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, -1}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

// Z6 written as abelian <a,b | a^2, b^3>
inline PcPtr z6() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 3}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

inline PcPtr d8() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 4}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, 3}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

inline PcPtr q8() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 4}, std::map<std::size_t, Word>{{0, Word{{1, 2}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, 3}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

// S4 along the chain S4 > A4 > V4 > 1 with a=(12), b=(123), c=(12)(34), d=(13)(24)
inline PcPtr s4() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 3, 2, 2}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{
          {{0, 1}, Word{{1, 2}}},
          {{0, 3}, Word{{2, 1}, {3, 1}}},
          {{1, 2}, Word{{2, 1}, {3, 1}}},
          {{1, 3}, Word{{2, 1}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b", "c", "d"});
}

inline PcPtr z2z4z3() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 4, 3}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b", "c"});
}

// Z x| Z^2 with t acting by the matrix [[2,1],[1,1]] on row vectors
inline PcPtr sol3() {
  return std::make_shared<PcPresentation>(
      IntVec{0, 0, 0}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{
          {{0, 1}, Word{{1, 2}, {2, 1}}}, {{0, 2}, Word{{1, 1}, {2, 1}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{
          {{0, 1}, Word{{1, 1}, {2, -1}}}, {{0, 2}, Word{{1, -1}, {2, 2}}}},
      std::vector<std::string>{"t", "x", "y"});
}

// the seeded inconsistent presentation <a,b | a^2, b^4, b^a = b^2>
inline PcPtr inconsistent() {
  return std::make_shared<PcPresentation>(
      IntVec{2, 4}, std::map<std::size_t, Word>{},
      std::map<std::pair<std::size_t, std::size_t>, Word>{{{0, 1}, Word{{1, 2}}}},
      std::map<std::pair<std::size_t, std::size_t>, Word>{},
      std::vector<std::string>{"a", "b"});
}

}  // namespace fixtures
