#include "spinkin/json_io.hpp"

#include "spinkin/errors.hpp"

namespace spinkin {

namespace {

// -0.0 prints as "-0.0"; fold it into 0.0 so equal values serialise equally.
double unsigned_zero(double x) { return x + 0.0; }

}  // namespace

Json to_json(Complex z) { return Json::array({unsigned_zero(z.real()), unsigned_zero(z.imag())}); }

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v(k)));
  return out;
}

Json to_json(const Vec3& v) {
  return Json::array({unsigned_zero(v.x()), unsigned_zero(v.y()), unsigned_zero(v.z())});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DimensionError("complex_from_json: expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw DimensionError("matrix_from_json: expected {rows, cols, data}");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  const Json& data = j["data"];
  if (rows < 0 || cols < 0 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(rows * cols)) {
    throw DimensionError("matrix_from_json: data length does not match rows x cols");
  }
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[k++]);
  }
  return m;
}

}  // namespace spinkin
