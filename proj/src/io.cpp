#include "liepoisson/io.hpp"

namespace liepoisson {

namespace {

Json entries(const Mat& m)
{
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    return data;
}

Mat read_entries(const Json& data, int rows, int cols)
{
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw Error("matrix json: data must hold rows*cols entries");
    Mat m(rows, cols);
    std::size_t t = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j, ++t) {
            const Json& e = data[t];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw Error("matrix json: entries must be [re, im]");
            m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    return m;
}

int read_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(std::string("matrix json: missing integer field '") + key + "'");
    return j[key].get<int>();
}

} // namespace

Json plain_matrix_to_json(const Mat& m)
{
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = entries(m);
    return j;
}

Mat plain_matrix_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error("matrix json: expected an object");
    const int rows = read_int(j, "rows"), cols = read_int(j, "cols");
    if (rows <= 0 || cols <= 0)
        throw Error("matrix json: rows and cols must be positive");
    return read_entries(j.at("data"), rows, cols);
}

Json matrix_to_json(const SpaceInstance& inst, const Mat& m)
{
    Json j;
    j["kind"] = inst.is_group() ? "group" : "grass";
    j["p"] = inst.p();
    j["q"] = inst.q();
    j["n"] = inst.block_size();
    const int b = inst.block_size();
    j["rows"] = b;
    j["cols"] = b;
    j["data"] = entries(m.topLeftCorner(b, b));
    if (inst.is_group())
        j["block2"] = entries(m.bottomRightCorner(b, b));
    return j;
}

std::pair<SpaceInstance, Mat> matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error("matrix json: missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    const int rows = read_int(j, "rows"), cols = read_int(j, "cols");
    if (kind == "grass") {
        const int p = read_int(j, "p"), q = read_int(j, "q");
        if (p < 1 || q < 1 || rows != p + q || cols != p + q)
            throw Error("matrix json: grass matrices are (p+q) x (p+q)");
        return {SpaceInstance::grass(p, q), read_entries(j.at("data"), rows, cols)};
    }
    if (kind == "group") {
        const int n = read_int(j, "n");
        if (n < 2 || rows != n || cols != n)
            throw Error("matrix json: group blocks are n x n");
        if (!j.contains("block2"))
            throw Error("matrix json: group matrices need 'block2'");
        Mat m = Mat::Zero(2 * n, 2 * n);
        m.topLeftCorner(n, n) = read_entries(j["data"], n, n);
        m.bottomRightCorner(n, n) = read_entries(j["block2"], n, n);
        return {SpaceInstance::group(n), m};
    }
    throw Error("matrix json: kind must be 'grass' or 'group'");
}

} // namespace liepoisson
