#pragma once

#include "symstress/framework.hpp"

#include <string>
#include <vector>

namespace symstress::detail {

struct RawFigure {
    std::string name;
    std::vector<Point2> points;
    std::vector<Edge> edges;
};

const std::vector<RawFigure>& raw_figures();

}  // namespace symstress::detail
