#include "expmath/queens/geometry.hpp"

namespace expmath::queens {

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table = {
      {Family::JubinTwoPentagons, "jubin", {"a", "b", "c", "d", "e", "f", "g"}},
      {Family::Rectangle, "rectangle", {"a", "b"}},
      {Family::Parallelogram, "parallelogram", {"a", "b"}},
      {Family::Triangle, "triangle", {"a"}},
      {Family::Hexagon, "hexagon", {"a", "b", "c", "d"}},
      {Family::TwoSquares, "two-squares", {"a", "s"}},
      {Family::TwoTrianglesSame, "two-triangles", {"a", "s"}},
      {Family::TwoTrianglesOpposite, "two-triangles-opposite", {"a"}},
      {Family::SquarePlusTriangle, "square-triangle", {"a", "s"}},
  };
  return table;
}

const FamilyInfo& info(Family f) {
  for (const auto& i : families())
    if (i.family == f) return i;
  throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
  for (const auto& i : families())
    if (i.name == name) return i.family;
  throw std::invalid_argument("unknown configuration family: " + name);
}

}  // namespace expmath::queens
