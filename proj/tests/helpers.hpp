#pragma once

#include <initializer_list>

#include "liepoisson/lie_core.hpp"

namespace testing {

using liepoisson::Complex;
using liepoisson::Mat;

inline Mat mat(std::initializer_list<std::initializer_list<Complex>> rows)
{
    Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (const auto& v : r)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

inline Mat block_pair(const Mat& a, const Mat& b)
{
    Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

inline const std::vector<liepoisson::SpaceInstance>& instances()
{
    static const std::vector<liepoisson::SpaceInstance> all = {
        liepoisson::SpaceInstance::grass(1, 1), liepoisson::SpaceInstance::grass(2, 1),
        liepoisson::SpaceInstance::grass(2, 2), liepoisson::SpaceInstance::group(2),
        liepoisson::SpaceInstance::group(3)};
    return all;
}

constexpr Complex I{0.0, 1.0};

} // namespace testing
